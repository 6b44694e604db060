#include "heis/kernels.hpp"
#include "heis/transforms.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

#ifdef HEIS_HAVE_OPENMP
#include <omp.h>
#endif

using namespace heis;

namespace {

std::mt19937_64 rng(2024);

cplx rnd() {
    std::normal_distribution<double> N;
    return {N(rng), N(rng)};
}

SampledLine random_line(const GridSpec1D &g) {
    SampledLine f(g);
    for (auto &v : f.values)
        v = rnd();
    return f;
}

double max_diff(const std::vector<cplx> &a, const std::vector<cplx> &b) {
    REQUIRE(a.size() == b.size());
    double m = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k)
        m = std::max(m, std::abs(a[k] - b[k]));
    return m;
}

double max_mag(const std::vector<cplx> &a) {
    double m = 0.0;
    for (const auto &z : a)
        m = std::max(m, std::abs(z));
    return m;
}

} // namespace

TEST_CASE("analysis matches the serial reference") {
    const GridSpec1D gt = GridSpec1D::centered(4.0, 96), gx = GridSpec1D::centered(3.0, 20),
                     gy = GridSpec1D::centered(2.0, 24);
    const auto f = random_line(gt);
    std::vector<cplx> w(gx.count * gt.count);
    for (auto &z : w)
        z = rnd();
    w[3] = 0.0;
    const auto fast = kernels::analysis(f, w, gx, gy, 1.3, 0.7);
    const auto ref = kernels::reference::analysis(f, w, gx, gy, 1.3, 0.7);
    CHECK(max_diff(fast.values, ref.values) <= 1e-12 * max_mag(ref.values));
}

TEST_CASE("synthesis matches the serial reference") {
    const GridSpec1D gt = GridSpec1D::centered(4.0, 50), gx = GridSpec1D::centered(3.0, 16),
                     gy = GridSpec1D::centered(2.0, 18);
    PlaneField F(gx, gy);
    for (auto &z : F.values)
        z = rnd();
    std::vector<cplx> w(gt.count * gx.count);
    for (auto &z : w)
        z = rnd();
    const auto fast = kernels::synthesis(F, w, gt, 0.8, 1.1);
    const auto ref = kernels::reference::synthesis(F, w, gt, 0.8, 1.1);
    CHECK(max_diff(fast.values, ref.values) <= 1e-12 * max_mag(ref.values));
}

TEST_CASE("Fourier sums match the serial reference") {
    const GridSpec1D g = GridSpec1D::centered(3.0, 64);
    const auto f = random_line(g);
    for (int sign : {-1, 1}) {
        const auto fast = kernels::fourier_sum(f, g, 1.7, sign);
        const auto ref = kernels::reference::fourier_sum(f, g, 1.7, sign);
        REQUIRE(max_diff(fast.values, ref.values) <= 1e-12 * max_mag(ref.values));
    }
}

TEST_CASE("Zak kernels match the serial reference") {
    const GridSpec1D g = GridSpec1D::centered(4.0, 256);
    const auto layout = zak_layout(g, 16);
    CHECK(layout.per_node == 2);
    CHECK(layout.per_unit == 32);
    CHECK(layout.origin_index == 128);
    const auto f = random_line(g);
    for (int m : {1, 3}) {
        const auto fast = kernels::zak(f, layout, m, 16, 12, 3);
        const auto ref = kernels::reference::zak(f, layout, m, 16, 12, 3);
        REQUIRE(max_diff(fast.values, ref.values) <= 1e-12 * max_mag(ref.values));
        std::vector<std::ptrdiff_t> idx(g.count);
        for (std::size_t k = 0; k < g.count; ++k)
            idx[k] = static_cast<std::ptrdiff_t>(k) / 2 - 64;
        const auto a = kernels::izak(fast, GridSpec1D{-4.0, 1.0 / 16.0, 128}, {idx.begin(), idx.begin() + 128});
        const auto b = kernels::reference::izak(fast, GridSpec1D{-4.0, 1.0 / 16.0, 128}, {idx.begin(), idx.begin() + 128});
        REQUIRE(max_diff(a.values, b.values) <= 1e-12 * max_mag(b.values));
    }
}

TEST_CASE("fast pre-theta equals the defining pairing") {
    for (const LatticeParams p : {LatticeParams{1, 1.0}, LatticeParams{2, 1.5}}) {
        const GridSpec1D gx = GridSpec1D::centered(3.0, 12), gy = GridSpec1D::centered(3.0, 12);
        const TorusField f = vacuum_theta(p, 16, 16) + cplx{0.3, -0.2} * act_lattice(p, {0.0, 0.25, 0.5}, vacuum_theta(p, 16, 16));
        const auto fast = covariant_pre_theta(p, f, gx, gy, 8);
        const auto ref = kernels::reference::pre_theta(p, f, gx, gy, {});
        REQUIRE(max_diff(fast.values, ref.values) <= 1e-10 * max_mag(ref.values));
    }
}

TEST_CASE("fast inverse pre-theta equals the defining integral") {
    const LatticeParams p{1, 1.0};
    const GridSpec1D gx = GridSpec1D::centered(3.0, 24), gy = GridSpec1D::centered(3.0, 24);
    const PlaneField F = sample([](double x, double y) { return std::exp(-(x * x + y * y)) * cplx{1.0, x - y}; }, gx, gy);
    const auto fast = contravariant_pre_theta_inverse(p, ReconstructionSpec::theta_vacuum(), F, 8, 8, 8);
    for (std::size_t j = 0; j < 8; j += 3)
        for (std::size_t k = 0; k < 8; k += 2) {
            const cplx direct = pre_theta_inverse_value(p, F, fast.u(j), fast.v(k));
            REQUIRE(std::abs(fast.at(j, k) - direct) <= 1e-10 * max_mag(fast.values));
        }
    const auto custom = contravariant_pre_theta_inverse(
        p, ReconstructionSpec::from(TorusField(vacuum_theta(p, 8, 8))), F, 8, 8);
    CHECK(max_diff(custom.values, fast.values) <= 1e-10 * max_mag(fast.values));
}

#ifdef HEIS_HAVE_OPENMP
TEST_CASE("kernels are independent of the thread count") {
    const GridSpec1D gt = GridSpec1D::centered(4.0, 128), gx = GridSpec1D::centered(3.0, 16),
                     gy = GridSpec1D::centered(2.0, 16);
    const auto f = random_line(gt);
    std::vector<cplx> w(gx.count * gt.count, cplx{0.5, 0.1});
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    const auto one = kernels::analysis(f, w, gx, gy, 1.0, 1.0);
    omp_set_num_threads(4);
    const auto four = kernels::analysis(f, w, gx, gy, 1.0, 1.0);
    omp_set_num_threads(saved);
    CHECK(one.values == four.values);
}
#endif
