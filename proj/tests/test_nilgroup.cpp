#include "vest/errors.hpp"
#include "vest/expr.hpp"
#include "vest/nilgroup.hpp"
#include "vest/sampling.hpp"

#include <gtest/gtest.h>

using namespace vest;

namespace {

PolyVector polys(std::initializer_list<const char *> texts)
{
	PolyVector v;
	for (auto t : texts)
		v.push_back(parse_poly(t));
	return v;
}

RatVector unit_vector(int n, int i)
{
	RatVector v(n, Rat(0));
	v[i] = Rat(1);
	return v;
}

GroupCochain cochain(const std::string &group, int p, const char *text)
{
	auto g = group_by_name(group);
	return GroupCochain{g, PolyRep::trivial(g), p, {parse_poly(text)}};
}

PolyVector vf_bracket(const PolyVF &a, const PolyVF &b)
{
	PolyVector r;
	for (size_t k = 0; k < a.components.size(); ++k)
		r.push_back(apply_vf(a, b.components[k]) - apply_vf(b, a.components[k]));
	return r;
}

} // namespace

TEST(GroupLaw, Examples)
{
	auto a = slot_point(1, 2), b = slot_point(2, 2);
	EXPECT_EQ(group_by_name("abelian-2")->product(a, b), polys({"g1_1 + g2_1", "g1_2 + g2_2"}));

	auto h = group_by_name("heisenberg3");
	EXPECT_EQ(h->product(slot_point(1, 3), slot_point(2, 3)),
	          polys({"g1_1 + g2_1", "g1_2 + g2_2", "g1_3 + g2_3 + 1/2*(g1_1*g2_2 - g1_2*g2_1)"}));
	EXPECT_EQ(h->inverse(slot_point(1, 3)), polys({"-g1_1", "-g1_2", "-g1_3"}));
}

TEST(GroupLaw, InvariantsHold)
{
	for (auto &name : registered_groups()) {
		auto g = group_by_name(name);
		int n = g->dim();
		auto a = slot_point(1, n), b = slot_point(2, n), c = slot_point(3, n);
		PolyVector zero(n);
		EXPECT_EQ(g->product(a, zero), a) << name;
		EXPECT_EQ(g->product(zero, a), a) << name;
		EXPECT_EQ(g->product(g->product(a, b), c), g->product(a, g->product(b, c))) << name;
		EXPECT_EQ(g->product(a, g->inverse(a)), zero) << name;
	}
}

TEST(GroupLaw, RejectsBadLaws)
{
	auto h = std::make_shared<LieAlgebra>(LieAlgebra::heisenberg3());
	auto v = [](const char *s) { return MultiPoly::variable(s); };
	PolyVector base{v("x_1") + v("y_1"), v("x_2") + v("y_2"), v("x_3") + v("y_3")};
	EXPECT_NO_THROW(PolyGroup::from_law(h, group_by_name("heisenberg3")->law()));
	// associative, but the coordinates are not exponential
	auto polarized = base;
	polarized[2] += v("x_1") * v("y_2");
	EXPECT_THROW(PolyGroup::from_law(h, polarized), NotAGroupLaw);
	auto skewed = base;
	skewed[2] += v("x_1") * v("y_1") * v("y_2");
	EXPECT_THROW(PolyGroup::from_law(h, skewed), NotAGroupLaw);
	EXPECT_THROW(PolyGroup::from_law(h, {base[0], base[1]}), NotAGroupLaw);
}

TEST(GroupLaw, RejectsNonNilpotentAlgebra)
{
	auto aff = std::make_shared<LieAlgebra>(
	    LieAlgebra::validate("aff", 2, {{0, 1, 1, Rat(1)}, {1, 0, 1, Rat(-1)}}));
	EXPECT_THROW(PolyGroup::from_algebra(aff), NilpotencyClassWrong);
	EXPECT_THROW(group_by_name("sl2"), UnknownInstance);
}

TEST(LeftInvariantFrame, Examples)
{
	auto ab = group_by_name("abelian-2");
	for (int i = 0; i < 2; ++i)
		EXPECT_EQ(ab->left_invariant_vf(unit_vector(2, i)).components,
		          PolyVF::coordinate(ab->fiber_chart(), fiber_var(i + 1)).components);

	auto h = group_by_name("heisenberg3");
	EXPECT_EQ(h->left_invariant_vf(unit_vector(3, 0)).components, polys({"1", "0", "-1/2*y_2"}));
	EXPECT_EQ(h->left_invariant_vf(unit_vector(3, 2)).components, polys({"0", "0", "1"}));
}

TEST(MaurerCartan, Examples)
{
	auto ab = group_by_name("abelian-3");
	for (int i = 0; i < 3; ++i)
		EXPECT_EQ(ab->maurer_cartan(i), PolyForm::differential(ab->fiber_chart(), fiber_var(i + 1)));

	auto h = group_by_name("heisenberg3");
	auto theta3 = parse_form("dy_3 + 1/2*y_2*dy_1 - 1/2*y_1*dy_2", h->fiber_chart());
	EXPECT_EQ(h->maurer_cartan(2), theta3);
	EXPECT_TRUE(contract(theta3, h->left_invariant_vf(unit_vector(3, 0))).is_zero());
}

TEST(MaurerCartan, DualToFrame)
{
	for (auto &name : registered_groups()) {
		auto g = group_by_name(name);
		int n = g->dim();
		for (int i = 0; i < n; ++i)
			for (int j = 0; j < n; ++j) {
				auto pairing = contract(g->maurer_cartan(i), g->left_invariant_vf(unit_vector(n, j)));
				EXPECT_EQ(pairing.coefficient({}), MultiPoly(i == j ? 1 : 0)) << name;
			}
	}
}

TEST(MaurerCartan, StructureEquation)
{
	for (auto &name : registered_groups()) {
		auto g = group_by_name(name);
		const auto &alg = g->algebra();
		int n = g->dim();
		for (int k = 0; k < n; ++k) {
			PolyForm rhs(g->fiber_chart(), 2);
			for (int i = 0; i < n; ++i)
				for (int j = 0; j < n; ++j)
					if (!alg.c(i, j, k).is_zero())
						rhs += wedge(g->maurer_cartan(i), g->maurer_cartan(j))
						           .times(MultiPoly(alg.c(i, j, k) * Rat(-1, 2)));
			EXPECT_EQ(exterior_d(g->maurer_cartan(k)), rhs) << name << " theta" << k + 1;
		}
	}
}

TEST(LeftInvariantFrame, RecoversStructureConstants)
{
	for (auto &name : registered_groups()) {
		auto g = group_by_name(name);
		int n = g->dim();
		for (int i = 0; i < n; ++i)
			for (int j = 0; j < n; ++j) {
				RatVector c(n);
				for (int k = 0; k < n; ++k)
					c[k] = g->algebra().c(i, j, k);
				EXPECT_EQ(vf_bracket(g->left_invariant_vf(unit_vector(n, i)),
				                     g->left_invariant_vf(unit_vector(n, j))),
				          g->left_invariant_vf(c).components)
				    << name;
			}
	}
}

TEST(Scaling, ComposesMultiplicatively)
{
	auto y = fiber_point(3);
	auto t1 = MultiPoly::variable("t1"), t2 = MultiPoly::variable("t2");
	PolyVector outer, both;
	for (auto &c : y) {
		outer.push_back(t1 * (t2 * c));
		both.push_back((t1 * t2) * c);
	}
	EXPECT_EQ(outer, both);
}

TEST(GroupDelta, Examples)
{
	EXPECT_TRUE(group_delta(cochain("abelian-1", 0, "5")).is_zero());

	auto f = cochain("heisenberg3", 1, "g1_3");
	auto expected = parse_poly("g2_3 - (g1_3 + g2_3 + 1/2*(g1_1*g2_2 - g1_2*g2_1)) + g1_3");
	EXPECT_EQ(group_delta(f).value[0], expected);

	EXPECT_TRUE(group_delta(cochain("abelian-1", 1, "g1_1")).is_zero());
}

TEST(GroupDelta, SquaresToZero)
{
	Rng rng(41);
	for (auto &name : registered_groups()) {
		auto g = group_by_name(name);
		std::vector<std::string> reps{"trivial", "adjoint"};
		if (name == "heisenberg3")
			reps.push_back("standard");
		for (auto &rn : reps) {
			auto rep = rep_by_name(g, rn);
			for (int p = 0; p <= 2; ++p) {
				std::vector<std::string> vars;
				for (int s = 1; s <= p; ++s)
					for (int j = 1; j <= g->dim(); ++j)
						vars.push_back(slot_var(s, j));
				PolyVector v;
				for (int c = 0; c < rep->dim(); ++c)
					v.push_back(random_poly(rng, vars, 3, 3));
				GroupCochain f{g, rep, p, v};
				EXPECT_TRUE(group_delta(group_delta(f)).is_zero()) << name << "/" << rn << " " << f.str();
			}
		}
	}
}

TEST(PolyRep, Validation)
{
	auto h = group_by_name("heisenberg3");
	for (auto rn : {"trivial", "adjoint", "standard"}) {
		auto rep = rep_by_name(h, rn);
		auto a = slot_point(1, 3);
		EXPECT_EQ(poly_matmul(rep->at(a), rep->inverse_at(a)), poly_identity(rep->dim())) << rn;
	}
	PolyMatrix not_hom = poly_identity(2);
	not_hom[0][1] = parse_poly("y_1^2");
	EXPECT_THROW(PolyRep::validate(h, "bad", not_hom), NotARepresentation);
	PolyMatrix shifted = poly_identity(2);
	shifted[0][0] = parse_poly("1 + y_1");
	EXPECT_THROW(PolyRep::validate(h, "bad", shifted), NotARepresentation);
	EXPECT_THROW(rep_by_name(group_by_name("abelian-2"), "standard"), UnknownInstance);
}
