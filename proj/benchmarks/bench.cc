#include <random>

#include "benchmark/benchmark.h"
#include "braidkit/braid.h"
#include "braidkit/catalog.h"
#include "braidkit/gates.h"
#include "braidkit/polyadic.h"
#include "braidkit/search.h"

using namespace bk;

static void BM_kron_8x8(benchmark::State &state) {
    Matrix a = build("tb.star8.b11", {{"x", 1.2}, {"y", 0.8}});
    for (auto _ : state) {
        benchmark::DoNotOptimize(kron(a, Matrix::identity(4)));
    }
}
BENCHMARK(BM_kron_8x8);

static void BM_char_poly(benchmark::State &state) {
    size_t n = (size_t)state.range(0);
    std::mt19937_64 rng(1);
    std::normal_distribution<double> d;
    Matrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            m(i, j) = {d(rng), d(rng)};
        }
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(char_poly(m));
    }
}
BENCHMARK(BM_char_poly)->Arg(4)->Arg(8)->Arg(16);

static void BM_braid_report(benchmark::State &state) {
    int n = (int)state.range(0);
    Matrix c = build("nb.minkowski", {{"n", n}});
    for (auto _ : state) {
        benchmark::DoNotOptimize(nary_braid_report(c, {n, 2}));
    }
}
BENCHMARK(BM_braid_report)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_ternary_satisfies(benchmark::State &state) {
    Matrix c = build("tb.perm.symm1", {});
    for (auto _ : state) {
        benchmark::DoNotOptimize(satisfies(c, 3, EqKind::full));
    }
}
BENCHMARK(BM_ternary_satisfies);

static void BM_permutation_search_dim8(benchmark::State &state) {
    int threads = (int)state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(permutation_search(8, 3, EqKind::full, threads));
    }
}
BENCHMARK(BM_permutation_search_dim8)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_braid_group_3_8(benchmark::State &state) {
    Matrix c = build("tb.perm.bisymm1", {});
    for (auto _ : state) {
        benchmark::DoNotOptimize(braid_group_check(c, {3, 2}, 8));
    }
}
BENCHMARK(BM_braid_group_3_8)->Unit(benchmark::kMillisecond);

static void BM_closure_suite(benchmark::State &state) {
    for (auto _ : state) {
        for (const auto &law : closure_laws()) {
            benchmark::DoNotOptimize(closure_check(law.id, 20, 7));
        }
    }
}
BENCHMARK(BM_closure_suite)->Unit(benchmark::kMillisecond);

static void BM_transformed_concurrence(benchmark::State &state) {
    GateParams p{0.3, -0.4, 1, 1};
    std::vector<Bloch> q{{1.0, 0.2}, {0.7, 1.1}, {2.0, 0.5}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(transformed_concurrence("u16", p, q));
    }
}
BENCHMARK(BM_transformed_concurrence);
BENCHMARK_MAIN();
