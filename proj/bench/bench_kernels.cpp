#include "heis/kernels.hpp"
#include "heis/transforms.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

using namespace heis;

namespace {

struct Fixture {
    ReprParams p{1.0, 1.0};
    GridSpec1D line;
    GridSpec1D gx;
    GridSpec1D gy;
    SampledLine f;
    std::vector<cplx> window;

    explicit Fixture(std::size_t n) : line(GridSpec1D::centered(8.0, 8 * n)), gx(GridSpec1D::centered(6.0, n)),
                                      gy(GridSpec1D::centered(6.0, n)) {
        f = vacuum_gaussian(p, line);
        window.resize(gx.count * line.count);
        for (std::size_t i = 0; i < gx.count; ++i)
            for (std::size_t k = 0; k < line.count; ++k)
                window[i * line.count + k] = gaussian_vacuum_value(p, line.point(k) - gx.point(i));
    }
};

void BM_analysis_parallel(benchmark::State &st) {
    const Fixture fx(static_cast<std::size_t>(st.range(0)));
    for (auto _ : st)
        benchmark::DoNotOptimize(kernels::analysis(fx.f, fx.window, fx.gx, fx.gy, 1.0, 1.0));
}

void BM_analysis_reference(benchmark::State &st) {
    const Fixture fx(static_cast<std::size_t>(st.range(0)));
    for (auto _ : st)
        benchmark::DoNotOptimize(kernels::reference::analysis(fx.f, fx.window, fx.gx, fx.gy, 1.0, 1.0));
}

void BM_synthesis_parallel(benchmark::State &st) {
    const Fixture fx(static_cast<std::size_t>(st.range(0)));
    const PlaneField F = kernels::analysis(fx.f, fx.window, fx.gx, fx.gy, 1.0, 1.0);
    std::vector<cplx> w(fx.line.count * fx.gx.count);
    for (std::size_t k = 0; k < fx.line.count; ++k)
        for (std::size_t i = 0; i < fx.gx.count; ++i)
            w[k * fx.gx.count + i] = fx.window[i * fx.line.count + k];
    for (auto _ : st)
        benchmark::DoNotOptimize(kernels::synthesis(F, w, fx.line, 1.0, 1.0));
}

void BM_synthesis_reference(benchmark::State &st) {
    const Fixture fx(static_cast<std::size_t>(st.range(0)));
    const PlaneField F = kernels::analysis(fx.f, fx.window, fx.gx, fx.gy, 1.0, 1.0);
    std::vector<cplx> w(fx.line.count * fx.gx.count);
    for (std::size_t k = 0; k < fx.line.count; ++k)
        for (std::size_t i = 0; i < fx.gx.count; ++i)
            w[k * fx.gx.count + i] = fx.window[i * fx.line.count + k];
    for (auto _ : st)
        benchmark::DoNotOptimize(kernels::reference::synthesis(F, w, fx.line, 1.0, 1.0));
}

void BM_zak_parallel(benchmark::State &st) {
    const Fixture fx(256);
    const auto n = static_cast<std::size_t>(st.range(0));
    const auto layout = zak_layout(fx.line, n);
    for (auto _ : st)
        benchmark::DoNotOptimize(kernels::zak(fx.f, layout, 1, n, n, 8));
}

void BM_zak_reference(benchmark::State &st) {
    const Fixture fx(256);
    const auto n = static_cast<std::size_t>(st.range(0));
    const auto layout = zak_layout(fx.line, n);
    for (auto _ : st)
        benchmark::DoNotOptimize(kernels::reference::zak(fx.f, layout, 1, n, n, 8));
}

void BM_pretheta_fast(benchmark::State &st) {
    const LatticeParams p{1, 1.0};
    const auto n = static_cast<std::size_t>(st.range(0));
    const TorusField T = vacuum_theta(p, n, n);
    const GridSpec1D g = GridSpec1D::centered(4.0, n);
    for (auto _ : st)
        benchmark::DoNotOptimize(covariant_pre_theta(p, T, g, g, 8));
}

void BM_pretheta_reference(benchmark::State &st) {
    const LatticeParams p{1, 1.0};
    const auto n = static_cast<std::size_t>(st.range(0));
    const TorusField T = vacuum_theta(p, n, n);
    const GridSpec1D g = GridSpec1D::centered(4.0, n);
    for (auto _ : st)
        benchmark::DoNotOptimize(kernels::reference::pre_theta(p, T, g, g, {}));
}

} // namespace

BENCHMARK(BM_analysis_parallel)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_analysis_reference)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_synthesis_parallel)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_synthesis_reference)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_zak_parallel)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_zak_reference)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_pretheta_fast)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_pretheta_reference)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
