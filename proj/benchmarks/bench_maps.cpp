#include "vest/suites.hpp"

#include <benchmark/benchmark.h>

using namespace vest;

namespace {

const std::vector<std::string> group_names{"abelian-2", "abelian-3", "heisenberg3", "filiform4"};

VanEstComplex complex_for(int which)
{
	auto g = group_by_name(group_names[which]);
	return VanEstComplex(g, PolyRep::trivial(g));
}

void BM_VeClosed(benchmark::State &state)
{
	auto cx = complex_for(static_cast<int>(state.range(0)));
	Rng rng(1);
	auto f = cx.random_cochain(rng, static_cast<int>(state.range(1)), 2);
	for (auto _ : state)
		benchmark::DoNotOptimize(ve_closed(f));
	state.SetLabel(group_names[state.range(0)]);
}

void BM_VeZigzag(benchmark::State &state)
{
	auto cx = complex_for(static_cast<int>(state.range(0)));
	Rng rng(1);
	auto f = cx.random_cochain(rng, static_cast<int>(state.range(1)), 2);
	for (auto _ : state)
		benchmark::DoNotOptimize(ve_zigzag(cx, f));
	state.SetLabel(group_names[state.range(0)]);
}

void BM_RClosed(benchmark::State &state)
{
	auto cx = complex_for(static_cast<int>(state.range(0)));
	int p = static_cast<int>(state.range(1));
	auto basis = ce_basis(cx, p);
	for (auto _ : state)
		for (auto &a : basis)
			benchmark::DoNotOptimize(r_closed(cx, a));
	state.SetLabel(group_names[state.range(0)]);
}

void BM_RZigzag(benchmark::State &state)
{
	auto cx = complex_for(static_cast<int>(state.range(0)));
	int p = static_cast<int>(state.range(1));
	auto basis = ce_basis(cx, p);
	for (auto _ : state)
		for (auto &a : basis)
			benchmark::DoNotOptimize(r_zigzag(cx, a));
	state.SetLabel(group_names[state.range(0)]);
}

void BM_PairRoundTrip(benchmark::State &state)
{
	int n = static_cast<int>(state.range(0));
	int p = static_cast<int>(state.range(1));
	auto forms = monomial_forms(n, p, 2);
	for (auto _ : state)
		for (auto &a : forms)
			benchmark::DoNotOptimize(pair_ve(pair_r(a)));
}

void BM_MatrixVerify(benchmark::State &state)
{
	auto mc = MatrixComplex::random(1);
	VerifyOptions vo;
	vo.max_p = 3;
	vo.max_q = 3;
	vo.trials = static_cast<int>(state.range(0));
	for (auto _ : state)
		benchmark::DoNotOptimize(verify_instance(mc.instance(), mc.sampler(), vo).ok());
}

void BM_CechCollate(benchmark::State &state)
{
	CechComplex cc(CircleCover::three_arcs());
	auto c = winding_cocycle(cc);
	for (auto _ : state)
		benchmark::DoNotOptimize(cc.collate(c));
}

} // namespace

BENCHMARK(BM_VeClosed)->ArgsProduct({{0, 1, 2, 3}, {1, 2, 3}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VeZigzag)->ArgsProduct({{2, 3}, {1, 2, 3}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RClosed)->ArgsProduct({{2, 3}, {1, 2, 3}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RZigzag)->ArgsProduct({{2, 3}, {1, 2, 3}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PairRoundTrip)->ArgsProduct({{2, 3}, {1, 2}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MatrixVerify)->Arg(5)->Arg(25)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CechCollate)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
