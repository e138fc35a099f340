#include "vest/errors.hpp"
#include "vest/cech.hpp"
#include "vest/suites.hpp"

#include <gtest/gtest.h>

using namespace vest;

namespace {

Rat r(long a, long b = 1) { return Rat(a, b); }

CechComplex circle() { return CechComplex(CircleCover::three_arcs()); }

CechForm single(int p, int q, IndexSet idx, const PwPoly &f)
{
	CechForm w;
	w.p = p;
	w.q = q;
	w.add(std::move(idx), f);
	return w;
}

} // namespace

TEST(PwPoly, Operations)
{
	auto h = hat(r(1, 8), r(1, 4), r(1, 2), r(5, 8));
	EXPECT_TRUE(h.continuous());
	EXPECT_EQ(h.integral(), r(3, 8));
	EXPECT_EQ(h.right_value(r(3, 8)), r(1));
	EXPECT_EQ(h.right_value(r(3, 16)), r(1, 2));
	EXPECT_EQ(h.derivative().right_value(r(3, 16)), r(8));
	EXPECT_EQ((h * h).right_value(r(3, 16)), r(1, 4));
	EXPECT_TRUE((h - h).is_zero());
	PwPoly x{{r(0)}, {PwPoly::x()}};
	EXPECT_FALSE(x.continuous());
	EXPECT_EQ(x.integral(), r(1, 2));
	EXPECT_EQ(x.left_value(r(0)), r(1));
}

TEST(PwPoly, WrappingHat)
{
	auto h = hat(r(-1, 8), r(-1, 16), r(1, 16), r(1, 8));
	EXPECT_EQ(h.right_value(r(0)), r(1));
	EXPECT_EQ(h.right_value(r(15, 16)), r(1));
	EXPECT_EQ(h.right_value(r(1, 2)), r(0));
	EXPECT_EQ(h.integral(), r(3, 16));
}

TEST(CircleCover, DefaultCoverIsGood)
{
	auto cov = CircleCover::three_arcs();
	EXPECT_EQ(cov->size(), 3);
	EXPECT_EQ(cov->simplices(1).size(), 3u);
	EXPECT_TRUE(cov->simplices(2).empty());
	PwPoly sum;
	for (int i = 0; i < 3; ++i)
		sum += cov->chi(i);
	EXPECT_EQ(sum, PwPoly(r(1)));
}

TEST(CircleCover, RejectsBadCovers)
{
	auto good = CircleCover::three_arcs();
	std::vector<PwPoly> same(3, good->chi(0));
	EXPECT_THROW(CircleCover::make(good->arcs(), same), InvalidCover);
	EXPECT_THROW(CircleCover::make(good->arcs(), {good->chi(0)}), InvalidCover);
	// supports outside the arcs
	std::vector<PwPoly> rotated{good->chi(1), good->chi(2), good->chi(0)};
	EXPECT_THROW(CircleCover::make(good->arcs(), rotated), InvalidCover);
	// two arcs meeting in two pieces
	std::vector<Arc> arcs{{r(0), r(7, 10)}, {r(1, 2), r(13, 10)}};
	std::vector<PwPoly> pou{hat(r(15, 100), r(2, 10), r(55, 100), r(6, 10)),
	                        hat(r(55, 100), r(6, 10), r(115, 100), r(12, 10))};
	EXPECT_THROW(CircleCover::make(arcs, pou), NonContractibleIntersection);
}

TEST(CechDelta, Examples)
{
	auto cc = circle();
	const auto &cov = cc.cover();
	EXPECT_TRUE(cc.delta(cc.i_hat(CircleForm{0, PwPoly(r(1))})).is_zero());

	auto f0 = on_arc(cov.arcs()[0], PwPoly::x());
	auto df = cc.delta(single(0, 0, {0}, f0));
	EXPECT_EQ(df.component({0, 1}), -restrict_to(f0, cov.domain({0, 1})));
	EXPECT_EQ(df.component({1, 0}), restrict_to(f0, cov.domain({0, 1})));
	EXPECT_TRUE(df.component({1, 2}).is_zero());
}

TEST(CechDelta, SquaresToZero)
{
	auto cc = circle();
	Rng rng(1);
	for (int q = 0; q <= 1; ++q)
		for (int t = 0; t < 10; ++t) {
			auto w = cc.random_element(rng, {0, q}, 2);
			EXPECT_TRUE(cc.delta(cc.delta(w)).is_zero()) << w.str();
		}
}

TEST(CechHomotopy, SupportStaysInTheArc)
{
	auto cc = circle();
	const auto &dom = cc.cover().domain({0, 1});
	auto w = single(1, 1, {0, 1}, on_arc(dom, PwPoly::x() * PwPoly::x() + MultiPoly(1)));
	auto hw = cc.h(w);
	EXPECT_FALSE(hw.is_zero());
	for (auto &[idx, f] : hw.comps)
		EXPECT_EQ(restrict_to(f, dom), f) << idx.size();
}

TEST(CechHomotopy, VerticalGivesBasedPrimitive)
{
	auto cc = circle();
	const auto &arc = cc.cover().arcs()[1];
	auto f = on_arc(arc, PwPoly::x());
	auto kw = cc.k(single(0, 1, {1}, f));
	auto prim = kw.component({1});
	EXPECT_EQ(prim.right_value(circle_mod(cc.cover().basepoint({1}))), r(0));
	EXPECT_EQ(restrict_to(prim.derivative(), arc), f);
}

TEST(Collate, Examples)
{
	auto cc = circle();
	CechCochain ones;
	ones.p = 0;
	for (int i = 0; i < 3; ++i)
		ones.add({i}, r(1));
	EXPECT_EQ(cc.collate(ones), (CircleForm{0, PwPoly(r(1))}));

	CechCochain bump;
	bump.p = 0;
	bump.add({0}, r(1));
	EXPECT_THROW(cc.collate(bump), NotCocycle);
}

TEST(Collate, WindingAndCoboundaries)
{
	auto cc = circle();
	auto c = winding_cocycle(cc);
	EXPECT_EQ(circle_integral(cc.collate(c)), r(1));
	auto w = cech_winding(cc);
	EXPECT_TRUE(w.ok()) << w.counterexample;
	SuiteOptions opt;
	opt.trials = 10;
	auto cb = cech_coboundary(cc, opt);
	EXPECT_TRUE(cb.ok()) << cb.counterexample;
}

TEST(Collate, BackAndForthIsOnlyAHomotopyInverse)
{
	auto cc = circle();
	CircleForm dx{1, PwPoly(r(1))};
	auto back = cc.collate(cc.cech_image(dx));
	EXPECT_NE(back, dx);
	EXPECT_EQ(circle_integral(back - dx), r(0));
	auto res = cech_back_and_forth_witness(cc);
	EXPECT_TRUE(res.ok());
	EXPECT_EQ(res.counterexample.rfind("witness: ", 0), 0u);
}

TEST(Collate, TraceFollowsTheZigzag)
{
	auto cc = circle();
	ZigzagTrace trace;
	cc.collate(winding_cocycle(cc), &trace);
	ASSERT_GE(trace.size(), 3u);
	EXPECT_EQ(trace.front().op, "j");
	EXPECT_EQ(trace.back().op, "p");
}
