#include "vest/errors.hpp"
#include "vest/expr.hpp"
#include "vest/sampling.hpp"

#include <gtest/gtest.h>

using namespace vest;

TEST(ParseExpr, Rationals)
{
	EXPECT_EQ(parse_poly("1/2"), MultiPoly(Rat(1, 2)));
	EXPECT_EQ(parse_poly("-3/6"), MultiPoly(Rat(-1, 2)));
	EXPECT_EQ(parse_poly("2^3*1/4"), MultiPoly(Rat(2)));
	EXPECT_THROW(parse_poly("y_1/2"), ParseError);
}

TEST(ParseExpr, PolynomialRoundTrip)
{
	auto f = parse_poly("g1_1*g2_2 - g1_2*g2_1");
	EXPECT_EQ(parse_poly(f.str()), f);
	EXPECT_EQ(parse_poly("(g1_1 + y_2)^2"), parse_poly("g1_1^2 + 2*g1_1*y_2 + y_2^2"));
	Rng rng(3);
	for (int t = 0; t < 30; ++t) {
		auto p = random_poly(rng, {"m0_1", "m1_2", "t2", "y_3"}, 3, 5);
		EXPECT_EQ(parse_poly(p.str()), p) << p.str();
	}
}

TEST(ParseExpr, ErrorsCarryPositions)
{
	try {
		parse_poly("g1_1 ^");
		FAIL() << "expected ParseError";
	} catch (const ParseError &e) {
		EXPECT_EQ(e.line(), 1);
		EXPECT_EQ(e.column(), 6);
	}
	try {
		parse_poly("# header\ny_1 + )");
		FAIL() << "expected ParseError";
	} catch (const ParseError &e) {
		EXPECT_EQ(e.line(), 2);
	}
	EXPECT_THROW(parse_poly("(y_1"), ParseError);
	EXPECT_THROW(parse_poly("y_1 y_2"), ParseError);
	EXPECT_THROW(parse_poly("1/0"), ParseError);
	EXPECT_THROW(parse_poly("zeta + 1"), UnknownVariable);
	EXPECT_THROW(parse_poly("g0_1"), UnknownVariable);
	EXPECT_THROW(parse_poly("y_0"), UnknownVariable);
	EXPECT_NO_THROW(parse_poly("m0_1 + g12_10"));
}

TEST(ParseExpr, Comments)
{
	EXPECT_EQ(parse_poly("# a cochain\n# more\ng1_1 + 1\n"), parse_poly("1 + g1_1"));
}

TEST(ParseExpr, Forms)
{
	auto w = parse_form("y_1*dy_1/\\dy_2 - dy_2/\\dy_1");
	EXPECT_EQ(w.degree(), 2);
	EXPECT_EQ(w, parse_form("(y_1 + 1)*dy_1/\\dy_2"));
	EXPECT_TRUE(parse_form("dy_1/\\dy_1").is_zero());
	EXPECT_EQ(parse_form(w.str(), w.chart()), w);
	EXPECT_THROW(parse_form("dy_1 + y_1"), DegreeMismatch);
	EXPECT_THROW(parse_poly("dy_1"), ShapeMismatch);
}

TEST(ParseExpr, CEElements)
{
	auto h = std::make_shared<LieAlgebra>(LieAlgebra::heisenberg3());
	auto a = parse_ce("2*e1/\\e3 - 1/2*e2/\\e3", h);
	EXPECT_EQ(a.degree(), 2);
	EXPECT_EQ(a.coefficient({0, 2}), RatVector{Rat(2)});
	EXPECT_EQ(parse_ce("e3/\\e1", h), -parse_ce("e1/\\e3", h));
	EXPECT_EQ(parse_ce(a.str(), h), a);
	EXPECT_THROW(parse_ce("e4", h), ShapeMismatch);
	EXPECT_THROW(parse_ce("y_1*e1", h), ShapeMismatch);

	auto v = parse_ce("[e1, 0, -e1]", h, 3);
	EXPECT_EQ(v.coefficient({0}), (RatVector{Rat(1), Rat(0), Rat(-1)}));
	EXPECT_THROW(parse_ce("[e1, e2]", h, 3), ShapeMismatch);
}

TEST(ParseExpr, Vectors)
{
	auto e = parse_expr("[g1_1, 2*g1_2]");
	EXPECT_EQ(e.width(), 2);
	EXPECT_EQ(e.to_poly_vector(), (std::vector<MultiPoly>{parse_poly("g1_1"), parse_poly("2*g1_2")}));
	EXPECT_THROW(parse_expr("[g1_1] + [g1_1, g1_2]"), ParseError);
}
