#include <benchmark/benchmark.h>

#include "vertexlab/builders.hpp"

using namespace vtx;

namespace {

static void BM_theta_circle_products(benchmark::State& state) {
    LieRepSpec spec = sl2_adjoint();
    auto thetas = build_thetas(spec);
    for (auto _ : state) {
        Engine eng(spec.ghost_algebra());  // cold cache each round
        State acc{eng.algebra(), {}};
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                for (int n = 0; n < 2; ++n) acc = acc + eng.apply_mode(thetas[a], n, thetas[b]);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_theta_circle_products);

static void BM_script_L_virasoro(benchmark::State& state) {
    LieRepSpec spec = sl2_adjoint();
    for (auto _ : state) {
        Engine eng(spec.ghost_algebra());
        State scrL = build_script_L(spec, eng);
        benchmark::DoNotOptimize(eng.verify_virasoro(scrL, Rational(0)));
    }
}
BENCHMARK(BM_script_L_virasoro);

static void BM_wick_tower(benchmark::State& state) {
    LieRepSpec spec = sl2_adjoint();
    Engine eng(spec.ghost_algebra());
    auto thetas = build_thetas(spec);
    for (auto _ : state) {
        State w = eng.iterated_wick({thetas[0], thetas[1], thetas[2]});
        benchmark::DoNotOptimize(eng.apply_mode(w, 2, w));
    }
}
BENCHMARK(BM_wick_tower);

}  // namespace

BENCHMARK_MAIN();
