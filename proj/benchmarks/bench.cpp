#include <benchmark/benchmark.h>

#include "bnmod/index_family.hpp"
#include "bnmod/moduli.hpp"
#include "bnmod/surface_cohomology.hpp"

using namespace bnmod;

static void BM_ProductModelMultiply(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    auto m = make_product_model(g);
    const GradedClass c1 = poincare_c1(3, m);
    GradedClass acc = m->unit();
    for (auto _ : state) {
        acc = exp_truncated(c1) * exp_truncated(c1.scaled(Rational(1, 2)));
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_ProductModelMultiply)->DenseRange(1, 6);

static void BM_EulerTwoRoutes(benchmark::State& state) {
    const ModuliParams p{state.range(0), 2, 0, state.range(0)};
    for (auto _ : state) {
        auto chi = euler_characteristic(p);
        benchmark::DoNotOptimize(chi);
    }
}
BENCHMARK(BM_EulerTwoRoutes)->DenseRange(1, 4);

static void BM_HodgeTable(benchmark::State& state) {
    const ModuliParams p{2, 2, 0, static_cast<long>(state.range(0))};
    for (auto _ : state) {
        auto h = hodge_table(p);
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(BM_HodgeTable)->DenseRange(1, 3);

BENCHMARK_MAIN();
