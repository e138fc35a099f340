#include "vest/errors.hpp"
#include "vest/expr.hpp"
#include "vest/poly.hpp"
#include "vest/sampling.hpp"

#include <gtest/gtest.h>

using namespace vest;

namespace {

MultiPoly var(const char *s) { return MultiPoly::variable(s); }

const MultiPoly x = var("x"), y = var("y"), t = var("t1");
MultiPoly c(long n, long d = 1) { return MultiPoly(Rat(n, d)); }

std::vector<std::string> xyz{"x", "y", "z"};

} // namespace

TEST(Rat, LowestTerms)
{
	EXPECT_EQ(Rat(2, 4).str(), "1/2");
	EXPECT_EQ(Rat(3, -6).str(), "-1/2");
	EXPECT_EQ(Rat(4, 2).str(), "2");
	EXPECT_EQ(Rat(0, 5).str(), "0");
	EXPECT_THROW(Rat(1, 0), ZeroDenominator);
}

TEST(Rat, ParseRoundTrip)
{
	for (const char *s : {"0", "7", "-3", "1/2", "-22/7", "-123456789012345678901234567890/123456789012345678901234567891"})
		EXPECT_EQ(Rat::parse(s).str(), s);
	EXPECT_EQ(Rat::parse("6/4"), Rat(3, 2));
	EXPECT_THROW(Rat::parse("1/0"), ZeroDenominator);
}

TEST(Rat, ExactArithmetic)
{
	Rat third(1, 3);
	EXPECT_EQ(third + third + third, Rat(1));
	EXPECT_EQ(Rat(1, 2) * Rat(2, 3) / Rat(1, 3), Rat(1));
	EXPECT_EQ(pow(Rat(2, 3), 3), Rat(8, 27));
	EXPECT_LT(Rat(1, 3), Rat(1, 2));
}

TEST(PolyArith, Examples)
{
	EXPECT_TRUE((x + -x).is_zero());
	EXPECT_EQ((x + y) * (x - y), x * x - y * y);
	EXPECT_EQ(scale(Rat(1, 2), c(2) * x), x);
}

TEST(PolyDiff, Examples)
{
	EXPECT_EQ(diff(x * x * y, "x"), c(2) * x * y);
	EXPECT_TRUE(diff(x * x, "y").is_zero());
	EXPECT_EQ(diff(c(1, 3) * pow(x, 3), "x"), x * x);
}

TEST(PolySubst, Examples)
{
	EXPECT_EQ(subst(x * x, {{"x", x + y}}), x * x + c(2) * x * y + y * y);
	EXPECT_TRUE(subst(x * y, {{"x", MultiPoly()}}).is_zero());
	auto f = pow(x, 3) - c(2) * x * y + c(1, 2);
	EXPECT_EQ(subst(f, {}), f);
}

TEST(PolyDefint, Examples)
{
	EXPECT_EQ(defint01(t * t, "t1"), c(1, 3));
	EXPECT_EQ(defint01(t * x, "t1"), c(1, 2) * x);
	EXPECT_EQ(defint01(x, "t1"), x);
	EXPECT_FALSE(defint01(t * x + pow(t, 3) * y, "t1").depends_on("t1"));
}

TEST(PolyEval, Examples)
{
	EXPECT_EQ(eval_rat(x * x + y, {{"x", Rat(2)}, {"y", Rat(1)}}), Rat(5));
	EXPECT_EQ(eval_rat(x, {{"x", Rat(0)}}), Rat(0));
	EXPECT_EQ(eval(x * y, {{"x", Rat(1, 2)}}), c(1, 2) * y);
}

TEST(PolyCanonical, EqualityIgnoresDeclaredVariables)
{
	auto a = x + y - y;
	EXPECT_EQ(a, x);
	EXPECT_EQ(a.trimmed().vars(), x.vars());
}

TEST(PolyCanonical, VariableOrder)
{
	EXPECT_TRUE(var_less("t1", "g1_1"));
	EXPECT_TRUE(var_less("g1_2", "g2_1"));
	EXPECT_TRUE(var_less("g2_1", "m0_1"));
	EXPECT_TRUE(var_less("m3_1", "y_1"));
	EXPECT_TRUE(var_less("g1_2", "g1_10"));
}

TEST(PolyCanonical, SerializationRoundTrip)
{
	Rng rng(5);
	for (int t = 0; t < 50; ++t) {
		auto f = random_poly(rng, {"t1", "g1_1", "g2_3", "y_1"}, 4, 6);
		EXPECT_EQ(parse_poly(f.str()), f) << f.str();
	}
}

TEST(PolyDegreeGuard, OverflowIsReported)
{
	DegreeCapScope cap(6);
	EXPECT_NO_THROW(pow(x + y, 6));
	EXPECT_THROW(pow(x + y, 7), DegreeOverflow);
	EXPECT_THROW(subst(pow(x, 3), {{"x", pow(y, 3)}}), DegreeOverflow);
}

TEST(PolyProperties, RingAxioms)
{
	Rng rng(11);
	for (int t = 0; t < 40; ++t) {
		auto a = random_poly(rng, xyz, 3), b = random_poly(rng, xyz, 3), c = random_poly(rng, xyz, 3);
		EXPECT_EQ((a * b) * c, a * (b * c));
		EXPECT_EQ(a * (b + c), a * b + a * c);
		EXPECT_EQ(a * b, b * a);
		EXPECT_EQ(a + b - b, a);
	}
}

TEST(PolyProperties, MixedPartialsCommute)
{
	Rng rng(12);
	for (int t = 0; t < 40; ++t) {
		auto f = random_poly(rng, xyz, 4);
		EXPECT_EQ(diff(diff(f, "x"), "y"), diff(diff(f, "y"), "x"));
	}
}

TEST(PolyProperties, SubstitutionComposes)
{
	Rng rng(13);
	for (int t = 0; t < 30; ++t) {
		auto f = random_poly(rng, xyz, 3);
		std::map<std::string, MultiPoly> sigma{{"x", random_poly(rng, xyz, 2)}, {"y", random_poly(rng, xyz, 2)}};
		std::map<std::string, MultiPoly> tau{{"x", random_poly(rng, xyz, 2)}, {"z", random_poly(rng, xyz, 2)}};
		// tau after sigma: substitute tau into the images of sigma, keep tau elsewhere
		std::map<std::string, MultiPoly> composed = tau;
		for (auto &[v, g] : sigma)
			composed[v] = subst(g, tau);
		EXPECT_EQ(subst(subst(f, sigma), tau), subst(f, composed));
	}
}

TEST(PolyProperties, IntegralOfDerivative)
{
	Rng rng(14);
	for (int t = 0; t < 40; ++t) {
		auto F = random_poly(rng, {"t1", "x", "y"}, 4);
		auto a = random_poly(rng, {"t1", "x"}, 3), b = random_poly(rng, {"t1", "y"}, 3);
		EXPECT_EQ(defint01(diff(F, "t1"), "t1"),
		          subst(F, {{"t1", MultiPoly(1)}}) - subst(F, {{"t1", MultiPoly()}}));
		EXPECT_EQ(defint01(a + scale(Rat(-1, 2), b), "t1"),
		          defint01(a, "t1") + scale(Rat(-1, 2), defint01(b, "t1")));
	}
}
