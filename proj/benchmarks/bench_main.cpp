#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "diam_ramsey/checker.hpp"
#include "diam_ramsey/constructions.hpp"
#include "diam_ramsey/lemmas.hpp"
#include "diam_ramsey/search.hpp"

using namespace diam_ramsey;

namespace {

Coloring random_coloring(int n, int r, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, r - 1);
    std::vector<Color> v(static_cast<std::size_t>(n));
    for (auto& x : v) x = static_cast<Color>(pick(rng));
    return Coloring(v, r);
}

}  // namespace

static void BM_ExistsSolutionRandom(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int m = std::max(2, n / 40);
    const Coloring c = random_coloring(n, 2, 42);
    const ProblemSpec spec({m, m, m}, 2);
    for (auto _ : state) benchmark::DoNotOptimize(exists_solution(c, spec));
    state.SetComplexityN(n);
}
BENCHMARK(BM_ExistsSolutionRandom)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

static void BM_VerifyLowerBound(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const Coloring c = lower_bound_coloring(m);
    const ProblemSpec spec({m, m, m}, 2);
    for (auto _ : state) benchmark::DoNotOptimize(verify_avoiding(c, spec));
    state.counters["length"] = c.length();
}
BENCHMARK(BM_VerifyLowerBound)->Arg(10)->Arg(100)->Arg(500)->Arg(2000);

static void BM_BruteForceOracle(benchmark::State& state) {
    const Coloring c = random_coloring(18, 2, 7);
    const ProblemSpec spec({3, 3}, 2);
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_exists(c, spec));
}
BENCHMARK(BM_BruteForceOracle);

static void BM_IncrementalPushPop(benchmark::State& state) {
    const ProblemSpec spec({4, 4, 4}, 2);
    const Coloring prefix = lower_bound_coloring(4);
    const auto colors = prefix.to_vector();
    for (auto _ : state) {
        IncrementalChecker inc(spec, prefix.length() + 1);
        for (Color x : colors) benchmark::DoNotOptimize(inc.push(x));
        while (inc.length() > 0) inc.pop();
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(colors.size()));
}
BENCHMARK(BM_IncrementalPushPop);

static void BM_ComputeThreeSets(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    SearchConfig cfg;
    cfg.mode = CertificateMode::value_only;
    std::uint64_t nodes = 0;
    for (auto _ : state) {
        const auto r = compute_f(ProblemSpec({m, m, m}, 2), cfg);
        nodes = r.stats.nodes_expanded;
        benchmark::DoNotOptimize(r.f_value);
    }
    state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_ComputeThreeSets)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_StructureSweep(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(exhaustive_sweep(StructureCheck::small_diameter, m, 1));
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << (3 * m - 2)));
}
BENCHMARK(BM_StructureSweep)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
