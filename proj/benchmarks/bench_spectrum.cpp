#include <benchmark/benchmark.h>

#include <numbers>
#include <random>

#include "steklov/enumeration.hpp"
#include "steklov/presets.hpp"
#include "steklov/quantumgraph.hpp"
#include "steklov/rootfind.hpp"
#include "steklov/transfer.hpp"
#include "steklov/trigpoly.hpp"

namespace {

using namespace steklov;
constexpr double kPi = std::numbers::pi;

PolygonSpec random_polygon(int n) {
    std::mt19937 rng(12345 + n);
    std::uniform_real_distribution<double> raw(0.3, kPi - 0.2);
    std::uniform_real_distribution<double> len(0.5, 2.0);
    std::vector<double> angles, lengths;
    for (int i = 0; i < n; ++i) {
        angles.push_back(raw(rng));
        lengths.push_back(len(rng));
    }
    return make_polygon(angles, lengths);
}

void BM_transfer_product(benchmark::State& state) {
    const PolygonSpec p = random_polygon(static_cast<int>(state.range(0)));
    double sigma = 0.0;
    for (auto _ : state) {
        sigma += 0.001;
        benchmark::DoNotOptimize(polygon_transfer(p, sigma));
    }
}
BENCHMARK(BM_transfer_product)->Arg(4)->Arg(8)->Arg(16);

void BM_char_poly_build(benchmark::State& state) {
    const PolygonSpec p = random_polygon(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(polygon_char_poly(p));
}
BENCHMARK(BM_char_poly_build)->Arg(4)->Arg(8)->Arg(12);

void BM_char_poly_eval(benchmark::State& state) {
    const RealTrigPoly fp =
        polygon_char_poly(random_polygon(static_cast<int>(state.range(0))));
    double sigma = 0.0;
    for (auto _ : state) {
        sigma += 0.001;
        benchmark::DoNotOptimize(fp.eval(sigma));
    }
}
BENCHMARK(BM_char_poly_eval)->Arg(4)->Arg(8)->Arg(12);

void BM_polygon_spectrum(benchmark::State& state) {
    const PolygonSpec p = random_polygon(static_cast<int>(state.range(0)));
    ScanOptions opts;
    opts.sigma_max = 30.0;
    for (auto _ : state) benchmark::DoNotOptimize(polygon_spectrum(p, opts));
}
BENCHMARK(BM_polygon_spectrum)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_square_spectrum(benchmark::State& state) {
    const PolygonSpec p = preset_polygon("square");
    ScanOptions opts;
    opts.sigma_max = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(polygon_spectrum(p, opts));
}
BENCHMARK(BM_square_spectrum)->Arg(60)->Arg(320)->Unit(benchmark::kMillisecond);

void BM_secular_det(benchmark::State& state) {
    const PolygonSpec p = random_polygon(static_cast<int>(state.range(0)));
    double sigma = 0.0;
    for (auto _ : state) {
        sigma += 0.01;
        benchmark::DoNotOptimize(secular_det(p, sigma));
    }
}
BENCHMARK(BM_secular_det)->Arg(4)->Arg(8)->Arg(16);

void BM_graph_shooting(benchmark::State& state) {
    const PolygonSpec p = random_polygon(4);
    ScanOptions opts;
    for (auto _ : state)
        benchmark::DoNotOptimize(graph_laplacian_spectrum(p, 30.0, opts));
}
BENCHMARK(BM_graph_shooting)->Unit(benchmark::kMillisecond);

void BM_polygon_counting(benchmark::State& state) {
    const PolygonSpec p = random_polygon(6);
    double sigma = 0.0;
    for (auto _ : state) {
        sigma += 0.01;
        benchmark::DoNotOptimize(polygon_counting(p, sigma));
    }
}
BENCHMARK(BM_polygon_counting);

}  // namespace

BENCHMARK_MAIN();
