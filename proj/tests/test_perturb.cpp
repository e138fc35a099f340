#include "vest/errors.hpp"
#include "vest/matrix_complex.hpp"
#include "vest/suites.hpp"

#include <gtest/gtest.h>

using namespace vest;

namespace {

MatVec random_vec(const MatrixComplex &mc, Bidegree b, Rng &rng)
{
	return mc.sampler().element(b, rng);
}

bool all_ok(const Report &r, std::string *why = nullptr)
{
	for (auto &c : r.checks)
		if (!c.ok()) {
			if (why)
				*why = c.check + " " + (c.bidegree ? c.bidegree->str() : "") + " " + c.counterexample;
			return false;
		}
	return true;
}

} // namespace

TEST(Neumann, TrivialWhenDOrHVanish)
{
	auto mc = MatrixComplex::random(3);
	Rng rng(1);
	for (int p = 0; p <= 3; ++p)
		for (int q = 0; q <= 3; ++q) {
			Bidegree b{p, q};
			auto x = random_vec(mc, b, rng);
			auto no_d = mc.instance();
			no_d.d = [&](Bidegree c, const MatVec &) { return MatVec{{c.p, c.q + 1}, RatVector(mc.dim({c.p, c.q + 1}))}; };
			EXPECT_TRUE(tot_equal(neumann_apply(no_d, Direction::Horizontal, b, x), tot_single(b, x)));
			auto no_h = mc.instance();
			no_h.h = [&](Bidegree c, const MatVec &) { return MatVec{{c.p - 1, c.q}, RatVector(mc.dim({c.p - 1, c.q}))}; };
			EXPECT_TRUE(tot_equal(neumann_apply(no_h, Direction::Horizontal, b, x), tot_single(b, x)));
		}
}

TEST(Neumann, MatchesDenseInverse)
{
	for (std::uint64_t seed : {1, 2, 3}) {
		auto mc = MatrixComplex::random(seed);
		Rng rng(seed);
		for (int p = 0; p <= 3; ++p)
			for (int q = 0; q <= 3; ++q) {
				auto x = random_vec(mc, {p, q}, rng);
				auto series = neumann_apply(mc.instance(), Direction::Horizontal, {p, q}, x);
				EXPECT_TRUE(tot_equal(series, mc.dense_neumann(x))) << tot_str(series);
				EXPECT_LE(series.size(), static_cast<size_t>(p + 1));
			}
	}
}

TEST(Zigzag, DegreeZeroIsProjectionOfInclusion)
{
	auto cx = VanEstComplex(group_by_name("heisenberg3"), PolyRep::trivial(group_by_name("heisenberg3")));
	auto inst = cx.instance();
	Rng rng(5);
	for (int t = 0; t < 5; ++t) {
		auto f = cx.random_cochain(rng, 0, 2);
		EXPECT_EQ(zigzag_xy(inst, 0, f), inst.p_hat(0, inst.j_hat(0, f)));
	}
}

TEST(Zigzag, TraceStepsAreConsistent)
{
	auto g = group_by_name("heisenberg3");
	auto cx = VanEstComplex(g, PolyRep::trivial(g));
	auto inst = cx.instance();
	Rng rng(6);
	auto f = cx.random_cochain(rng, 2, 2);
	ZigzagTrace trace;
	zigzag_xy(inst, 2, f, &trace);
	ASSERT_FALSE(trace.empty());
	EXPECT_EQ(trace.front().op, "j");
	EXPECT_EQ(trace.back().op, "p");
	Bidegree at = trace.front().at;
	for (size_t i = 1; i + 1 < trace.size(); ++i) {
		auto &s = trace[i];
		if (s.op == "h")
			EXPECT_EQ(s.at, (Bidegree{at.p - 1, at.q}));
		else if (s.op == "d")
			EXPECT_EQ(s.at, (Bidegree{at.p, at.q + 1}));
		else
			ADD_FAILURE() << "unexpected step " << s.op;
		at = s.at;
	}
	EXPECT_EQ(trace.back().at, (Bidegree{0, 2}));
}

TEST(VerifyInstance, MatrixPasses)
{
	SuiteOptions opt;
	opt.trials = 10;
	std::string why;
	EXPECT_TRUE(all_ok(matrix_suite(MatrixComplex::random(7), opt), &why)) << why;
}

TEST(VerifyInstance, CorruptedHomotopyIsCaught)
{
	auto mc = MatrixComplex::random(8);
	mc.corrupt_h({1, 0});
	VerifyOptions opt;
	opt.max_p = 3;
	opt.max_q = 3;
	opt.trials = 5;
	auto rep = verify_instance(mc.instance(), mc.sampler(), opt);
	EXPECT_FALSE(rep.ok());
	bool caught = false;
	for (auto &c : rep.checks)
		if (c.check == "h_delta_homotopy" && !c.passed) {
			caught = true;
			EXPECT_FALSE(c.counterexample.empty());
		}
	EXPECT_TRUE(caught);
}

TEST(VerifyInstance, ResultsAreDeterministic)
{
	auto mc = MatrixComplex::random(9);
	mc.corrupt_h({1, 1});
	VerifyOptions opt;
	opt.trials = 4;
	auto a = verify_instance(mc.instance(), mc.sampler(), opt);
	auto b = verify_instance(mc.instance(), mc.sampler(), opt);
	ASSERT_EQ(a.checks.size(), b.checks.size());
	for (size_t i = 0; i < a.checks.size(); ++i)
		EXPECT_EQ(a.checks[i].counterexample, b.checks[i].counterexample);
}

TEST(VerifyInstance, CechSideConditionsFailAsExpected)
{
	SuiteOptions opt;
	opt.trials = 5;
	auto rep = cech_suite(CechComplex(CircleCover::three_arcs()), opt);
	std::string why;
	EXPECT_TRUE(all_ok(rep, &why)) << why;
	int expected = 0;
	for (auto &c : rep.checks)
		if (c.status() == "expected-fail")
			++expected;
	EXPECT_EQ(expected, 3);
}
