// Serial reference vs OpenMP kernels. Results are bitwise identical (see
// the unit tests), so only speed differs.

#include "ruledkit/closedinv.hpp"
#include "ruledkit/meshio.hpp"
#include "ruledkit/ruledgeom.hpp"

#include <benchmark/benchmark.h>

#include <numbers>

namespace {

using namespace ruledkit;

std::shared_ptr<const ParametricPath> net() {
    const double p = std::numbers::pi / 8;
    return std::make_shared<BezierCurvePath>(
        BezierPath2({{p, 2 * p}, {p, 3 * p}, {3 * p, 3 * p}, {3 * p, 2 * p}, {3 * p, p}, {p, p}, {p, 2 * p}}));
}

const LiftField& field() {
    static const LiftField f = LiftField::parse("u - v, u + v");
    return f;
}

void BM_ProfileSerial(benchmark::State& state) {
    auto path = net();
    for (auto _ : state) benchmark::DoNotOptimize(profile_serial(*path, field(), static_cast<int>(state.range(0))));
}

void BM_ProfileParallel(benchmark::State& state) {
    auto path = net();
    for (auto _ : state) benchmark::DoNotOptimize(profile(*path, field(), static_cast<int>(state.range(0))));
}

void BM_TessellateSerial(benchmark::State& state) {
    RuledPatch patch{net(), field()};
    for (auto _ : state) benchmark::DoNotOptimize(tessellate_serial(patch, static_cast<int>(state.range(0)), 8));
}

void BM_TessellateParallel(benchmark::State& state) {
    RuledPatch patch{net(), field()};
    for (auto _ : state) benchmark::DoNotOptimize(tessellate(patch, static_cast<int>(state.range(0)), 8));
}

Integrand angle_integrand() {
    auto path = net();
    return [path](double t) { return coordinate_tau(path->sample(t)); };
}

void BM_GaussLegendreSerial(benchmark::State& state) {
    auto f = angle_integrand();
    for (auto _ : state) benchmark::DoNotOptimize(gauss_legendre_serial(f, 0, 1, static_cast<int>(state.range(0))));
}

void BM_GaussLegendreParallel(benchmark::State& state) {
    auto f = angle_integrand();
    for (auto _ : state) benchmark::DoNotOptimize(gauss_legendre(f, 0, 1, static_cast<int>(state.range(0))));
}

} // namespace

BENCHMARK(BM_ProfileSerial)->Arg(256)->Arg(4096);
BENCHMARK(BM_ProfileParallel)->Arg(256)->Arg(4096);
BENCHMARK(BM_TessellateSerial)->Arg(128)->Arg(1024);
BENCHMARK(BM_TessellateParallel)->Arg(128)->Arg(1024);
BENCHMARK(BM_GaussLegendreSerial)->Arg(64)->Arg(1024);
BENCHMARK(BM_GaussLegendreParallel)->Arg(64)->Arg(1024);

BENCHMARK_MAIN();
