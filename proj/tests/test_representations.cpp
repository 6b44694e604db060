#include "heis/errors.hpp"
#include "heis/representations.hpp"
#include "heis/transforms.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace heis;

namespace {

const ReprParams P{1.0, 1.0};
const GridSpec1D G = GridSpec1D::centered(8.0, 512);
const GridSpec1D GX = GridSpec1D::centered(6.0, 96);
const GridSpec1D GY = GridSpec1D::centered(6.0, 96);

SampledLine bump() {
    return sample([](double t) { return std::exp(-kPi * (t - 0.3) * (t - 0.3)) * cplx{1.0, 0.5 * t}; }, G);
}

PlaneField plane_bump() {
    return sample([](double x, double y) { return std::exp(-(x * x + 2 * y * y)) * cplx{1.0 + x, y}; }, GX, GY);
}

TorusField random_torus(int m, unsigned seed = 1) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> N;
    TorusField F(16, 8, m);
    for (auto &v : F.values)
        v = {N(rng), N(rng)};
    return F;
}

double rel(double a, double b) { return a / b; }

} // namespace

TEST_CASE("Schrodinger action") {
    const auto f = bump();
    CHECK(norm(act_schrodinger(P, identity(), f) - f) == 0.0);
    const auto central = act_schrodinger(P, {0.125, 0, 0}, f);
    CHECK(norm(central - std::polar(1.0, kTwoPi * 0.125) * f) < 1e-14);
    const double dx = 5 * G.step;
    const auto shifted = act_schrodinger(P, {0, dx, 0}, f);
    CHECK(shifted[100] == f[95]);
    const HeisenbergElement g1{0.2, 3 * G.step, 0.7}, g2{-0.4, -7 * G.step, 0.35};
    CHECK(rel(norm(act_schrodinger(P, g1, act_schrodinger(P, g2, f)) - act_schrodinger(P, multiply(g1, g2), f)),
              norm(f)) < 1e-12);
    CHECK_THROWS_AS(act_schrodinger(P, {0, 0.5 * G.step, 0}, f), OffGridShift);
    CHECK_NOTHROW(act_schrodinger(P, {0, 0.5 * G.step, 0}, f, ShiftMode::Interpolate));
}

TEST_CASE("momentum action") {
    const auto f = bump();
    const double x = 0.3;
    const auto out = act_schrodinger_momentum(P, {0, x, 0}, f);
    for (std::size_t k = 0; k < f.size(); k += 37)
        REQUIRE(std::abs(out[k] - std::polar(1.0, kTwoPi * x * f.t(k)) * f[k]) < 1e-14);
    const HeisenbergElement g1{0.2, 0.7, 3 * G.step}, g2{-0.4, 0.35, -7 * G.step};
    CHECK(rel(norm(act_schrodinger_momentum(P, g1, act_schrodinger_momentum(P, g2, f)) -
                   act_schrodinger_momentum(P, multiply(g1, g2), f)),
              norm(f)) < 1e-12);
}

TEST_CASE("quasi-regular actions") {
    const auto F = plane_bump();
    CHECK(norm(act_quasi_regular_left(P, {0.25, 0, 0}, F) - cplx{0, 1} * F) < 1e-14);
    CHECK(norm(act_quasi_regular_right(P, {0.25, 0, 0}, F) - cplx{0, -1} * F) < 1e-14);
    const HeisenbergElement g{0.1, 2 * GX.step, -3 * GY.step}, h{-0.3, -GX.step, 5 * GY.step};
    const auto lr = act_quasi_regular_left(P, g, act_quasi_regular_right(P, h, F));
    const auto rl = act_quasi_regular_right(P, h, act_quasi_regular_left(P, g, F));
    CHECK(rel(norm(lr - rl), norm(F)) < 1e-12);
    CHECK(rel(norm(act_quasi_regular_left(P, g, act_quasi_regular_left(P, h, F)) -
                   act_quasi_regular_left(P, multiply(g, h), F)),
              norm(F)) < 1e-12);
    CHECK(rel(norm(act_quasi_regular_right(P, g, act_quasi_regular_right(P, h, F)) -
                   act_quasi_regular_right(P, multiply(g, h), F)),
              norm(F)) < 1e-12);
}

TEST_CASE("lattice action") {
    const LatticeParams L{2, 1.0};
    const auto F = random_torus(2);
    CHECK(norm(act_lattice(L, {0.125, 0, 0}, F) - std::polar(1.0, kTwoPi * 2 * 0.125) * F) < 1e-13);
    // a whole period in x is not trivial: it multiplies by e^{2 pi i m v}
    const auto period = act_lattice(L, {0, 1, 0}, F);
    for (std::size_t j = 0; j < F.nu; ++j)
        for (std::size_t k = 0; k < F.nv; ++k)
            REQUIRE(std::abs(period.at(j, k) - std::polar(1.0, kTwoPi * L.m * F.v(k)) * F.at(j, k)) < 1e-13);
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> I(-40, 40);
    std::uniform_real_distribution<double> U(-1, 1);
    for (int i = 0; i < 10; ++i) {
        const HeisenbergElement g1{U(rng), I(rng) / 16.0, I(rng) / 8.0}, g2{U(rng), I(rng) / 16.0, I(rng) / 8.0};
        REQUIRE(rel(norm(act_lattice(L, g1, act_lattice(L, g2, F)) - act_lattice(L, multiply(g1, g2), F)), norm(F)) <
                1e-12);
        REQUIRE(rel(norm(act_lattice(L, g1, F) - act_lattice_torus(L, g1, F)), norm(F)) < 1e-12);
        REQUIRE(std::abs(norm(act_lattice(L, g1, F)) - norm(F)) < 1e-12 * norm(F));
    }
    CHECK_THROWS_AS(act_lattice(L, {0, 0.01, 0}, F), OffGridShift);
}

TEST_CASE("FSB action is the peeled left action") {
    const auto F = plane_bump();
    CHECK(norm(act_fsb(P, identity(), F) - F) == 0.0);
    const cplx h = P.h();
    CHECK(norm(act_fsb(P, {0.3, 0, 0}, F) - std::exp(cplx{0, 1} * h * 0.3) * F) < 1e-13);
    const HeisenbergElement g{0.2, 3 * GX.step, -2 * GY.step};
    const auto lhs = act_fsb(P, g, peel_fsb(P, F));
    const auto rhs = peel_fsb(P, act_quasi_regular_left(P, g, F));
    CHECK(rel(norm(lhs - rhs), norm(rhs)) < 1e-10);
}

TEST_CASE("peeled Schrodinger and lattice actions are conjugates") {
    const auto f = bump();
    const HeisenbergElement g{0.2, 9 * G.step, 0.4};
    const auto lhs = act_schrodinger_peeled(P, g, peel_schrodinger(P, f));
    const auto rhs = peel_schrodinger(P, act_schrodinger(P, g, f));
    CHECK(rel(norm(lhs - rhs), norm(rhs)) < 1e-10);

    const LatticeParams L{1, 1.5};
    const auto T = random_torus(1, 3);
    for (const HeisenbergElement gl : {HeisenbergElement{0.1, 0.25, 0.5}, HeisenbergElement{-0.3, -1.125, 2.375}}) {
        const auto a = act_lattice_peeled(L, gl, peel_lattice(L, T));
        const auto b = peel_lattice(L, act_lattice(L, gl, T));
        REQUIRE(rel(norm(a - b), norm(b)) < 1e-10);
    }
}

TEST_CASE("peeled torus extension follows the covariance rule") {
    const LatticeParams L{1, 1.0};
    const auto T = peel_lattice(L, random_torus(1, 6));
    const std::ptrdiff_t j = 5, k = 3, n = 2, q = -1;
    const double u = j / 16.0, v = k / 8.0;
    const cplx expect = std::exp(cplx{kPi * L.m / L.kappa * (2 * u * n + n * n), -kTwoPi * L.m * n * v}) *
                        T.at(static_cast<std::size_t>(j), static_cast<std::size_t>(k));
    CHECK(std::abs(peeled_torus_value(L, T, j + n * 16, k + q * 8) - expect) < 1e-10 * std::abs(expect));
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS((ReprParams{-1.0, 1.0}.validate()), ConfigError);
    CHECK_THROWS_AS((LatticeParams{0, 1.0}.validate()), ConfigError);
}
