#include "oracles.hpp"

#include "equidiv/lattice_search.hpp"
#include "equidiv/tucker_search.hpp"

#include <benchmark/benchmark.h>

using namespace equidiv;

namespace {

struct LatticeCase {
    std::vector<Measure> measures;
    int p;
    Rational delta;
    KuhnRefinement refinement;
};

LatticeCase lattice_case(int p, int n) {
    std::mt19937_64 rng(42);
    auto measures = oracle::random_measures(rng, n);
    const Rational delta = ratio(1, 10) / ((p - 1) * (p - 1));
    const int N = n * (p - 1);
    const ResolutionChoice choice = choose_resolution(measures, N, delta, 8);
    return LatticeCase{std::move(measures), p, delta, KuhnRefinement(Group::cyclic(p), N, choice.resolution)};
}

void BM_LatticeReference(benchmark::State& state) {
    const LatticeCase c = lattice_case(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(scan_lattice_reference(c.refinement, c.measures, c.p, true));
    }
}

void BM_LatticeKernel(benchmark::State& state) {
    const LatticeCase c = lattice_case(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    ScanOptions options;
    options.workers = static_cast<int>(state.range(2));
    options.value_pruning = state.range(3) != 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(scan_lattice(c.refinement, c.measures, c.p, c.delta, options));
    }
}

struct LabeledComplex {
    GComplex complex;
    std::vector<CrossLabel> labels;
};

LabeledComplex labeled_complex(int k, int depth) {
    std::mt19937_64 rng(7);
    GComplex c = build_join_complex(Group::cyclic(k), 2);
    for (int d = 0; d < depth; ++d) c = barycentric_subdivide(c);
    auto labels = oracle::random_equivariant_labels(rng, c, 1);
    return LabeledComplex{std::move(c), std::move(labels)};
}

void BM_FullyLabeledReference(benchmark::State& state) {
    const LabeledComplex c = labeled_complex(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    const Labeling labeling = [&](int v) { return LabelOutcome{false, c.labels[v]}; };
    for (auto _ : state) benchmark::DoNotOptimize(find_fully_labeled_reference(c.complex, labeling, 1));
}

void BM_FullyLabeled(benchmark::State& state) {
    const LabeledComplex c = labeled_complex(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    const Labeling labeling = [&](int v) { return LabelOutcome{false, c.labels[v]}; };
    SearchOptions options;
    options.workers = static_cast<int>(state.range(2));
    options.orbit_pruning = state.range(3) != 0;
    for (auto _ : state) benchmark::DoNotOptimize(find_fully_labeled(c.complex, labeling, 1, options));
}

}  // namespace

// Arguments: p, n.
BENCHMARK(BM_LatticeReference)->Args({2, 2})->Args({3, 1})->Unit(benchmark::kMillisecond);
// Arguments: p, n, workers, value pruning.
BENCHMARK(BM_LatticeKernel)
    ->ArgsProduct({{2}, {2}, {1, 2, 4}, {0, 1}})
    ->ArgsProduct({{3}, {1}, {1, 2, 4}, {0, 1}})
    ->Unit(benchmark::kMillisecond);
// Arguments: k, depth.
BENCHMARK(BM_FullyLabeledReference)->Args({3, 3})->Args({5, 2})->Unit(benchmark::kMillisecond);
// Arguments: k, depth, workers, orbit pruning.
BENCHMARK(BM_FullyLabeled)
    ->ArgsProduct({{3}, {3}, {1, 2, 4}, {0, 1}})
    ->ArgsProduct({{5}, {2}, {1, 2, 4}, {0, 1}})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
