#include <benchmark/benchmark.h>

#include "vertexlab/groebner.hpp"

using namespace vtx;

namespace {

static void BM_truncated_ideal_N1(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(build_truncated_ideal(1));
}
BENCHMARK(BM_truncated_ideal_N1);

static void BM_normal_form(benchmark::State& state) {
    GrobnerContext ctx = build_truncated_ideal(1);
    Polynomial f = Polynomial::var(gr_q(3, 3, 0, 1)) * Polynomial::var(gr_t(2, 0)) *
                   Polynomial::var(gr_t(0, 1));
    for (auto _ : state)
        benchmark::DoNotOptimize(normal_form(f, ctx.basis, ctx.order).remainder);
}
BENCHMARK(BM_normal_form);

}  // namespace
