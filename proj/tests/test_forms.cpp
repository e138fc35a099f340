#include "vest/errors.hpp"
#include "vest/expr.hpp"
#include "vest/forms.hpp"
#include "vest/sampling.hpp"

#include <gtest/gtest.h>

using namespace vest;

namespace {

MultiPoly var(const char *s) { return MultiPoly::variable(s); }

const Chart plane = Chart::make({"x", "y"});
const PolyForm dx = PolyForm::differential(plane, "x");
const PolyForm dy = PolyForm::differential(plane, "y");

PolyForm fn(const Chart &ch, const MultiPoly &f) { return PolyForm::scalar(ch, f); }

PolyForm random_form(Rng &rng, const Chart &ch, int q, int max_deg)
{
	std::vector<std::string> vars = ch.coords.names();
	for (auto &p : ch.params.names())
		vars.push_back(p);
	PolyForm a(ch, q);
	for (int t = 0; t < 3; ++t) {
		IndexSet idx;
		for (int k = 0; k < q; ++k)
			idx.push_back(uniform_int(rng, 0, static_cast<int>(ch.dim()) - 1));
		a.add(idx, random_poly(rng, vars, max_deg, 3));
	}
	return a;
}

const Chart space = Chart::make({"y_1", "y_2", "y_3"}, {"g1_1"});

} // namespace

TEST(FormWedge, Examples)
{
	auto dxdy = wedge(dx, dy);
	EXPECT_EQ(dxdy.degree(), 2);
	EXPECT_EQ(dxdy.coefficient({0, 1}), MultiPoly(1));
	EXPECT_TRUE(wedge(dx, dx).is_zero());
	EXPECT_EQ(wedge(dy.times(var("x")), dx), -dxdy.times(var("x")));
}

TEST(FormWedge, AboveTopDegreeIsZero)
{
	EXPECT_TRUE(wedge(wedge(dx, dy), dx).is_zero());
}

TEST(FormD, Examples)
{
	EXPECT_EQ(exterior_d(dy.times(var("x"))), wedge(dx, dy));
	EXPECT_EQ(exterior_d(fn(plane, var("x") * var("x"))), dx.times(MultiPoly(2) * var("x")));
	EXPECT_TRUE(exterior_d(wedge(dx, dy)).is_zero());
}

TEST(FormPullback, Examples)
{
	Chart line = Chart::make({"t1"}, {"g1_1"});
	Chart fiber = Chart::make({"y_1"});
	auto pulled = pullback(PolyForm::differential(fiber, "y_1"), line,
	                       {{"y_1", var("t1") * var("g1_1")}});
	EXPECT_EQ(pulled, PolyForm::differential(line, "t1").times(var("g1_1")));

	auto area = wedge(dx, dy);
	EXPECT_EQ(pullback(area, plane, {{"x", var("x")}, {"y", var("y")}}), area);
}

TEST(FormPullback, JacobianDeterminant)
{
	Chart square = Chart::make({"t1", "t2"}, {"g1_1", "g1_2", "g2_1", "g2_2"});
	Chart fiber = Chart::make({"y_1", "y_2"});
	auto beta = parse_form("dy_1/\\dy_2", fiber);
	auto pulled = pullback(beta, square,
	                       {{"y_1", parse_poly("t1*(g1_1 + t2*g2_1)")},
	                        {"y_2", parse_poly("t1*(g1_2 + t2*g2_2)")}});
	PolyForm expected(square, 2);
	expected.add({0, 1}, parse_poly("t1*(g1_1*g2_2 - g1_2*g2_1)"));
	EXPECT_EQ(pulled, expected);
	EXPECT_EQ(cube_integrate(pulled), parse_poly("1/2*(g1_1*g2_2 - g1_2*g2_1)"));
}

TEST(FormContract, Examples)
{
	auto ex = PolyVF::coordinate(plane, "x");
	auto ey = PolyVF::coordinate(plane, "y");
	EXPECT_EQ(contract(wedge(dx, dy), ex), dy);
	EXPECT_TRUE(contract(dx, ey).is_zero());
	PolyVF xey{plane, {MultiPoly(), var("x")}};
	EXPECT_EQ(contract(dy, xey), fn(plane, var("x")));
}

TEST(HomotopyT, Examples)
{
	Chart fiber = Chart::make({"y_1", "y_2"});
	for (const char *c : {"y_1", "y_2"})
		EXPECT_EQ(homotopy_T(PolyForm::differential(fiber, c)), fn(fiber, var(c)));
	EXPECT_EQ(homotopy_T(parse_form("y_1*dy_1", fiber)), fn(fiber, parse_poly("1/2*y_1^2")));
	EXPECT_TRUE(homotopy_T(fn(fiber, var("y_1"))).is_zero());
}

TEST(CubeIntegrate, Examples)
{
	Chart one = Chart::make({"t1"});
	Chart two = Chart::make({"t1", "t2"});
	EXPECT_EQ(cube_integrate(PolyForm::differential(one, "t1")), MultiPoly(1));
	EXPECT_EQ(cube_integrate(parse_form("t1*dt1/\\dt2", two)), MultiPoly(Rat(1, 2)));
	EXPECT_EQ(cube_integrate(parse_form("t2*dt2/\\dt1", two)), MultiPoly(Rat(-1, 2)));
	EXPECT_THROW(cube_integrate(PolyForm::differential(two, "t1")), DegreeMismatch);
}

TEST(FormProperties, DSquaredIsZero)
{
	Rng rng(21);
	for (int q = 0; q <= 2; ++q)
		for (int t = 0; t < 20; ++t) {
			auto a = random_form(rng, space, q, 4);
			EXPECT_TRUE(exterior_d(exterior_d(a)).is_zero()) << a.str();
		}
}

TEST(FormProperties, PullbackCommutesWithD)
{
	Rng rng(22);
	Chart target = Chart::make({"t1", "t2"}, {"g1_1"});
	std::vector<std::string> tv{"t1", "t2", "g1_1"};
	for (int q = 0; q <= 2; ++q)
		for (int t = 0; t < 15; ++t) {
			auto a = random_form(rng, space, q, 3);
			std::map<std::string, MultiPoly> phi;
			for (auto &c : space.coords.names())
				phi[c] = random_poly(rng, tv, 2, 3);
			EXPECT_EQ(pullback(exterior_d(a), target, phi), exterior_d(pullback(a, target, phi)));
		}
}

TEST(FormProperties, CartanFormula)
{
	Rng rng(23);
	std::vector<std::string> vars{"y_1", "y_2", "y_3"};
	for (int q = 0; q <= 3; ++q)
		for (int t = 0; t < 15; ++t) {
			auto a = random_form(rng, space, q, 3);
			PolyVF X{space, {}};
			for (int k = 0; k < 3; ++k)
				X.components.push_back(random_poly(rng, vars, 2, 3));
			auto cartan = contract(exterior_d(a), X);
			if (q > 0)
				cartan += exterior_d(contract(a, X));
			EXPECT_EQ(lie_derivative(a, X), cartan);
			if (q > 1) {
				EXPECT_TRUE(contract(contract(a, X), X).is_zero());
			}
		}
}

TEST(FormProperties, HomotopyIdentity)
{
	Rng rng(24);
	std::map<std::string, MultiPoly> origin;
	for (auto &c : space.coords.names())
		origin[c] = MultiPoly();
	for (int q = 0; q <= 3; ++q)
		for (int t = 0; t < 20; ++t) {
			auto a = random_form(rng, space, q, 4);
			PolyForm lhs = homotopy_T(exterior_d(a));
			if (q > 0)
				lhs += exterior_d(homotopy_T(a));
			PolyForm rhs = a;
			if (q == 0)
				rhs -= a.map_coefficients([&](const MultiPoly &c) { return subst(c, origin); });
			EXPECT_EQ(lhs, rhs) << a.str();
			if (q > 0) {
				EXPECT_TRUE(homotopy_T(homotopy_T(a)).is_zero());
				auto at_origin = homotopy_T(a).map_coefficients(
				    [&](const MultiPoly &c) { return subst(c, origin); });
				EXPECT_TRUE(at_origin.is_zero());
			}
		}
}
