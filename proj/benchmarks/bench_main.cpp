#include "vogel/configs.hpp"
#include "vogel/identity.hpp"
#include "vogel/qsearch.hpp"

#include <benchmark/benchmark.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace vogel;

static void BM_CanonicalFormPappus(benchmark::State& state) {
    std::mt19937_64 rng(7);
    auto t = pappus_table();
    std::vector<int> pm(t.p);
    std::iota(pm.begin(), pm.end(), 1);
    std::shuffle(pm.begin(), pm.end(), rng);
    for (auto& c : t.columns)
        for (auto& v : c) v = pm[v - 1];
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(t));
}
BENCHMARK(BM_CanonicalFormPappus);

static void BM_EnumerateN3(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_n3(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumerateN3)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_CheckOnLineClassical(benchmark::State& state) {
    const auto q = builtin_q_prop4(2, 5, -7, 3);
    const LinearForm sp(3, -1, 0, Basis::Primed);
    for (auto _ : state) benchmark::DoNotOptimize(check_on_line(q, sp));
}
BENCHMARK(BM_CheckOnLineClassical);

static void BM_CheckOnLineQuantum(benchmark::State& state) {
    const auto q = builtin_q_prop4(2, 5, -7, 3, true);
    const LinearForm sp(3, -1, 0, Basis::Primed);
    for (auto _ : state) benchmark::DoNotOptimize(check_on_line(q, sp));
}
BENCHMARK(BM_CheckOnLineQuantum);

static void BM_SolveQuantumCase(benchmark::State& state) {
    const auto sys = build_system(4, LineSet::FourLines, prop4_perms(),
                                  {{1, 1, 1, 1}, {1, 1, 1, 1}, {-1, -1, -1, -1}});
    for (auto _ : state) benchmark::DoNotOptimize(solve_quantum(sys));
}
BENCHMARK(BM_SolveQuantumCase);

static void BM_SearchK4FourLines(benchmark::State& state) {
    EnumerationOptions o;
    o.k = 4;
    o.lines = LineSet::FourLines;
    o.budget = static_cast<std::uint64_t>(state.range(0));
    std::uint64_t cases = 0;
    for (auto _ : state) {
        const auto r = enumerate(o);
        cases += r.cases;
        benchmark::DoNotOptimize(r);
    }
    state.counters["cases/s"] = benchmark::Counter(static_cast<double>(cases), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_SearchK4FourLines)->Arg(50000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
