#include <benchmark/benchmark.h>

#include "htarea/closed_forms.hpp"
#include "htarea/flags.hpp"
#include "htarea/hilbert.hpp"
#include "htarea/quadrature.hpp"

using namespace htarea;

static void BM_Li2(benchmark::State& state) {
    double x = -3.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(li2(x));
        x = x < 0.99 ? x + 0.01 : -3.0;
    }
}
BENCHMARK(BM_Li2);

static void BM_HyperbolicClosedForm(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(hyperbolic_quad_volume(3.0));
}
BENCHMARK(BM_HyperbolicClosedForm);

static void BM_IntegrandQ0(benchmark::State& state) {
    double x = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(integrand_Q0(x, 0.3));
        x = x < 0.9 ? x + 1e-3 : 0.1;
    }
}
BENCHMARK(BM_IntegrandQ0);

static void BM_DualBallArea(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    std::vector<Vec2> v;
    for (std::size_t i = 0; i < k; ++i) {
        const double th = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(k);
        v.push_back({std::cos(th), std::sin(th)});
    }
    const ConvexPolygon omega(v);
    for (auto _ : state) benchmark::DoNotOptimize(dual_ball_area(omega, {0.1, 0.2}));
}
BENCHMARK(BM_DualBallArea)->Arg(3)->Arg(4)->Arg(8);

static void BM_HtAreaTriangle(benchmark::State& state) {
    const auto pair = polygons_from_flags(triangle_flags(triangle_s_of_t(static_cast<double>(state.range(0)))));
    for (auto _ : state) benchmark::DoNotOptimize(ht_area(pair).value);
}
BENCHMARK(BM_HtAreaTriangle)->Arg(1)->Arg(1000000)->Unit(benchmark::kMillisecond);

static void BM_HtAreaQuadrilateral(benchmark::State& state) {
    const auto pair = polygons_from_flags(normalized_quad_flags(fg_to_normalized({2.0, 0.5, 3.0, 0.7})));
    QuadratureSpec spec;
    spec.strategy = state.range(0) ? Strategy::general_dual_ball : Strategy::closed_form;
    for (auto _ : state) benchmark::DoNotOptimize(ht_area(pair, spec).value);
}
BENCHMARK(BM_HtAreaQuadrilateral)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
