#include <benchmark/benchmark.h>

#include "bmfp/certify.hpp"
#include "bmfp/demo.hpp"
#include "bmfp/picard.hpp"

namespace {

using namespace bmfp;

// Deterministic symmetric table with zero diagonal and entries in [1, 20].
DistanceMatrix synthetic_matrix(int n) {
    DistanceMatrix d(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            d[i][j] = d[j][i] = 1.0 + static_cast<double>((i * i + j * j + 3 * i * j) % 20);
        }
    }
    return d;
}

FiniteBMetricSpace synthetic_space(int n) {
    DistanceMatrix d = synthetic_matrix(n);
    const double s = minimal_coefficient(d);
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    return FiniteBMetricSpace(std::move(labels), std::move(d), s);
}

SelfMap synthetic_map(int n) {
    SelfMap map;
    for (int i = 0; i < n; ++i) {
        map.image.push_back(static_cast<std::size_t>((i * 5 + 3) % n));
    }
    return map;
}

void BM_minimal_coefficient(benchmark::State& state) {
    const DistanceMatrix d = synthetic_matrix(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(minimal_coefficient(d));
    }
}
BENCHMARK(BM_minimal_coefficient)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_validate_axioms(benchmark::State& state) {
    const DistanceMatrix d = synthetic_matrix(static_cast<int>(state.range(0)));
    const double s = minimal_coefficient(d);
    for (auto _ : state) {
        benchmark::DoNotOptimize(validate_axioms(d, s));
    }
}
BENCHMARK(BM_validate_axioms)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_certify_basic(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const FiniteBMetricSpace space = synthetic_space(n);
    const SelfMap map = synthetic_map(n);
    const FunctionSuite suite{ThetaFunction::affine_plus_one(), FcOperator::ratio(1.0),
                              SimulationFunction::scaled_ratio(space.coefficient() + 1.0)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(certify_basic(space, map, suite));
    }
}
BENCHMARK(BM_certify_basic)->Arg(4)->Arg(8)->Arg(16);

void BM_certify_generalized(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const FiniteBMetricSpace space = synthetic_space(n);
    const SelfMap map = synthetic_map(n);
    const FunctionSuite suite{ThetaFunction::affine_plus_one(), FcOperator::ratio(1.0),
                              SimulationFunction::scaled_ratio(space.coefficient() + 1.0)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(certify_generalized(space, map, suite));
    }
}
BENCHMARK(BM_certify_generalized)->Arg(4)->Arg(8)->Arg(16);

void BM_picard_all_seeds(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const FiniteBMetricSpace space = synthetic_space(n);
    const SelfMap map = synthetic_map(n);
    for (auto _ : state) {
        for (const auto& seed : space.points()) {
            benchmark::DoNotOptimize(picard_iterate(space, map, seed));
        }
    }
}
BENCHMARK(BM_picard_all_seeds)->Arg(8)->Arg(32);

void BM_run_demo(benchmark::State& state) {
    const DemoCase which = state.range(0) == 0 ? DemoCase::A : DemoCase::B;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_demo(which));
    }
}
BENCHMARK(BM_run_demo)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
