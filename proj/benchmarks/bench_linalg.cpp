#include <benchmark/benchmark.h>

#include "vertexlab/invariants.hpp"

using namespace vtx;

namespace {

static void BM_theorem41_component(benchmark::State& state) {
    LieRepSpec spec = sl2_adjoint();
    FiltrationSpec filt{spec.ghost_algebra(), 1};
    long level = state.range(0), degree = state.range(1);
    for (auto _ : state) {
        Engine eng(filt.algebra);
        auto ops = sl2t_operators(eng, filt, spec, 1);
        ComponentSpec cs;
        cs.max_var_level = 1;
        cs.level = level;
        cs.degree = degree;
        benchmark::DoNotOptimize(invariant_kernel_dim(ops, cs, 3));
    }
}
BENCHMARK(BM_theorem41_component)->Args({1, 4})->Args({2, 6});

static void BM_dense_kernel(benchmark::State& state) {
    int n = int(state.range(0));
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 5));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n + 5; ++j) m[i][j] = Rational((i * 7 + j * 3) % 11 - 5);
    for (auto _ : state) benchmark::DoNotOptimize(rational_matrix_kernel(m));
}
BENCHMARK(BM_dense_kernel)->Arg(30)->Arg(60);

}  // namespace
