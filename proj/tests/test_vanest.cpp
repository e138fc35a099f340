#include "vest/errors.hpp"
#include "vest/expr.hpp"
#include "vest/suites.hpp"
#include "vest/vanest.hpp"

#include <gtest/gtest.h>

using namespace vest;

namespace {

VanEstComplex complex_for(const std::string &group, const std::string &rep = "trivial")
{
	auto g = group_by_name(group);
	return VanEstComplex(g, rep_by_name(g, rep));
}

GroupCochain cochain(const VanEstComplex &cx, int p, const char *text)
{
	return GroupCochain{cx.group_ptr(), cx.rep_ptr(), p, {parse_poly(text)}};
}

CEElement ce(const VanEstComplex &cx, const char *text)
{
	return parse_ce(text, cx.group().algebra_ptr(), cx.vdim());
}

BigradedElement scalar_element(const VanEstComplex &cx, Bidegree b, const char *text)
{
	auto psi = cx.zero(b);
	psi.terms[{}] = {parse_poly(text)};
	return psi;
}

std::string failure(const Report &r)
{
	for (auto &c : r.checks)
		if (!c.ok())
			return c.instance + " " + c.check + " " + (c.bidegree ? c.bidegree->str() : "") + " " +
			       c.counterexample;
	return "";
}

} // namespace

TEST(VanEstOperators, HorizontalHomotopyOnFunctions)
{
	auto cx = complex_for("abelian-1");
	auto inst = cx.instance();
	auto psi = tot_single(Bidegree{0, 0}, scalar_element(cx, {0, 0}, "y_1^2 + 3"));
	EXPECT_TRUE(tot_h(inst, psi).empty());
	auto commutator = tot_h(inst, tot_delta(inst, psi));
	EXPECT_TRUE(tot_equal(commutator, tot_single(Bidegree{0, 0}, scalar_element(cx, {0, 0}, "y_1^2"))))
	    << tot_str(commutator);
}

TEST(VanEstOperators, VerticalHomotopyVanishesOnFunctions)
{
	auto cx = complex_for("heisenberg3");
	auto inst = cx.instance();
	Rng rng(1);
	for (int p = 0; p <= 2; ++p)
		EXPECT_TRUE(tot_k(inst, tot_single(Bidegree{p, 0}, cx.random_element(rng, {p, 0}, 2))).empty());
}

TEST(FrameConvert, Examples)
{
	auto ab = complex_for("abelian-2");
	auto e1 = ab.zero({0, 1});
	e1.terms[{0}] = {parse_poly("y_2")};
	EXPECT_EQ(ab.to_forms(e1)[0], parse_form("y_2*dy_1", ab.group().fiber_chart()));

	auto h = complex_for("heisenberg3");
	auto e3 = h.zero({0, 1});
	e3.terms[{2}] = {MultiPoly(1)};
	EXPECT_EQ(h.to_forms(e3)[0], parse_form("dy_3 + 1/2*y_2*dy_1 - 1/2*y_1*dy_2", h.group().fiber_chart()));
}

TEST(FrameConvert, RoundTrip)
{
	Rng rng(2);
	for (auto &[g, r] : std::vector<std::pair<std::string, std::string>>{
	         {"heisenberg3", "trivial"}, {"heisenberg3", "standard"}, {"filiform4", "adjoint"}}) {
		auto cx = complex_for(g, r);
		for (int q = 0; q <= 2; ++q)
			for (int t = 0; t < 5; ++t) {
				auto psi = cx.random_element(rng, {1, q}, 2);
				EXPECT_EQ(cx.from_forms(1, cx.to_forms(psi)), psi) << g << "/" << r << " " << psi.str();
			}
	}
}

TEST(Nabla, AbelianExamples)
{
	auto cx = complex_for("abelian-1");
	auto f = cochain(cx, 2, "g1_1*g2_1");
	RatVector one{Rat(1)};
	EXPECT_EQ(nabla(1, one, f), cochain(cx, 2, "g1_1 - g2_1"));
	EXPECT_EQ(nabla(2, one, f), cochain(cx, 2, "-g1_1"));
}

TEST(Nabla, DistinctSlotsCommute)
{
	Rng rng(3);
	auto cx = complex_for("heisenberg3", "standard");
	RatVector a{Rat(1), Rat(-1, 2), Rat(2)}, b{Rat(0), Rat(1), Rat(-1)};
	for (int t = 0; t < 5; ++t) {
		auto f = cx.random_cochain(rng, 3, 2);
		for (int i = 0; i <= 3; ++i)
			for (int j = i + 1; j <= 3; ++j)
				EXPECT_EQ(nabla(i, a, nabla(j, b, f)), nabla(j, b, nabla(i, a, f))) << i << " " << j;
	}
}

TEST(VeClosed, Examples)
{
	auto ab1 = complex_for("abelian-1");
	EXPECT_EQ(ve_closed(cochain(ab1, 1, "g1_1")), ce(ab1, "e1"));
	auto h = complex_for("heisenberg3");
	EXPECT_EQ(ve_closed(cochain(h, 1, "g1_3")), ce(h, "e3"));
	auto ab2 = complex_for("abelian-2");
	EXPECT_EQ(ve_closed(cochain(ab2, 2, "1/2*(g1_1*g2_2 - g1_2*g2_1)")), ce(ab2, "e1/\\e2"));
	EXPECT_EQ(ve_closed(cochain(h, 0, "7")), ce(h, "7"));
}

TEST(VeZigzag, MatchesClosedFormula)
{
	Rng rng(4);
	auto cx = complex_for("heisenberg3");
	for (int p = 0; p <= 3; ++p)
		for (int t = 0; t < 4; ++t) {
			auto f = cx.random_cochain(rng, p, 2);
			EXPECT_EQ(ve_zigzag(cx, f), ve_closed(f)) << f.str();
		}
}

TEST(VeZigzag, ClosedCochainsGiveClosedElements)
{
	Rng rng(5);
	auto cx = complex_for("heisenberg3");
	const auto &rep = cx.rep_ptr()->infinitesimal();
	for (int p = 0; p <= 2; ++p) {
		auto f = group_delta(cx.random_cochain(rng, p, 2));
		EXPECT_TRUE(ce_diff(ve_closed(f), rep).is_zero());
	}
}

TEST(GammaMap, Examples)
{
	auto ab = group_by_name("abelian-2");
	auto g1 = gamma_map(*ab, 1);
	EXPECT_EQ(g1[0], parse_poly("t1*g1_1"));
	auto g2 = gamma_map(*ab, 2);
	EXPECT_EQ(g2[1], parse_poly("t1*(g1_2 + t2*g2_2)"));

	auto h = group_by_name("heisenberg3");
	auto gh = gamma_map(*h, 2);
	EXPECT_EQ(gh[2], parse_poly("t1*(g1_3 + t2*g2_3 + 1/2*t2*(g1_1*g2_2 - g1_2*g2_1))"));
}

TEST(GammaMap, EndpointsAreProductAndUnit)
{
	for (auto &name : registered_groups()) {
		auto g = group_by_name(name);
		int n = g->dim();
		for (int p = 1; p <= 3; ++p) {
			auto gamma = gamma_map(*g, p);
			std::map<std::string, MultiPoly> ones, start{{"t1", MultiPoly()}};
			for (int i = 1; i <= p; ++i)
				ones["t" + std::to_string(i)] = MultiPoly(1);
			PolyVector prod = slot_point(1, n);
			for (int s = 2; s <= p; ++s)
				prod = g->product(prod, slot_point(s, n));
			EXPECT_EQ(poly_subst(gamma, ones), prod) << name << " p=" << p;
			EXPECT_TRUE(poly_is_zero({poly_subst(gamma, start)})) << name << " p=" << p;
		}
	}
}

TEST(RClosed, Examples)
{
	auto ab1 = complex_for("abelian-1");
	EXPECT_EQ(r_closed(ab1, ce(ab1, "e1")), cochain(ab1, 1, "g1_1"));
	auto ab2 = complex_for("abelian-2");
	EXPECT_EQ(r_closed(ab2, ce(ab2, "e1/\\e2")), cochain(ab2, 2, "1/2*(g1_1*g2_2 - g1_2*g2_1)"));
	EXPECT_EQ(r_closed(ab2, ce(ab2, "5")), cochain(ab2, 0, "5"));
}

TEST(RClosed, VanishesOnUnits)
{
	auto cx = complex_for("filiform4");
	for (int p = 1; p <= 3; ++p)
		for (auto &alpha : ce_basis(cx, p)) {
			auto f = r_closed(cx, alpha);
			for (int s = 1; s <= p; ++s)
				EXPECT_TRUE(insert_unit(f, s).is_zero()) << alpha.str() << " slot " << s;
		}
}

TEST(RZigzag, MatchesClosedFormulaAndInvertsVe)
{
	for (auto &name : {"abelian-2", "heisenberg3"}) {
		auto cx = complex_for(name);
		for (int p = 0; p <= 3; ++p) {
			auto eq = r_equivalence(cx, p);
			EXPECT_TRUE(eq.ok()) << eq.counterexample;
			auto inv = ve_right_inverse(cx, p);
			EXPECT_TRUE(inv.ok()) << inv.counterexample;
		}
	}
}

TEST(GroupInstance, HeisenbergSuitePasses)
{
	SuiteOptions opt;
	opt.max_p = 2;
	opt.trials = 6;
	auto rep = group_suite(complex_for("heisenberg3"), opt);
	EXPECT_TRUE(rep.ok()) << failure(rep);
}

TEST(GroupInstance, AdjointCoefficientsPass)
{
	SuiteOptions opt;
	opt.max_p = 2;
	opt.trials = 4;
	auto rep = group_suite(complex_for("heisenberg3", "adjoint"), opt);
	EXPECT_TRUE(rep.ok()) << failure(rep);
}
