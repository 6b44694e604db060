#include "heis/errors.hpp"
#include "heis/transforms.hpp"
#include "heis/verify.hpp"

#include <doctest.h>

#include <cmath>

using namespace heis;

namespace {

const ReprParams P{1.0, 1.0};
const LatticeParams L{1, 1.0};
const GridSpec1D G = GridSpec1D::centered(8.0, 2048);
const GridSpec1D GX = GridSpec1D::centered(6.0, 256);
const GridSpec1D GY = GridSpec1D::centered(6.0, 256);

double rel(double a, double b) { return a / b; }

SampledLine probe() {
    return sample([](double t) { return std::exp(-2.0 * (t - 0.3) * (t - 0.3)) * cplx{1.0, 0.4 * t}; }, G);
}

} // namespace

TEST_CASE("pre-FSB of the vacuum at the origin") {
    const auto W = covariant_pre_fsb(P, FiducialSpec::gaussian(), vacuum_gaussian(P, G), GX, GY);
    CHECK(std::abs(W.at(128, 128) - 1.0) < 1e-8);
    const ReprParams q{2.0, 0.5};
    const auto Wq = covariant_pre_fsb(q, FiducialSpec::gaussian(), vacuum_gaussian(q, G), GX, GY);
    // (hbar/kappa)^{1/2} ||phi0||^2 = 1 for every hbar, kappa
    CHECK(std::abs(Wq.at(128, 128) - 1.0) < 1e-8);
}

TEST_CASE("pre-FSB is linear and vanishes on zero") {
    const auto f = probe();
    const auto g = vacuum_gaussian(P, G);
    const auto W = [](const SampledLine &v) { return covariant_pre_fsb(P, FiducialSpec::gaussian(), v, GX, GY); };
    CHECK(norm(W(SampledLine(G))) == 0.0);
    const cplx a{0.3, 1.2}, b{-0.7, 0.1};
    CHECK(norm(W(a * f + b * g) - (a * W(f) + b * W(g))) < 1e-12 * norm(W(f)));
}

TEST_CASE("custom fiducial reproduces the Gaussian fiducial") {
    const auto phi = std::sqrt(P.hbar / P.kappa) * vacuum_gaussian(P, G);
    const auto f = probe();
    const auto a = covariant_pre_fsb(P, FiducialSpec::gaussian(), f, GX, GY);
    const auto b = matrix_coefficient(P, f, SampledLine(phi.grid, phi.values), GX, GY);
    CHECK(norm(a - b) < 1e-13 * norm(a));
    const GridSpec1D off{-6.0 + 1e-3, GX.step, GX.count};
    CHECK_THROWS_AS(matrix_coefficient(P, f, phi, off, GY), GridIncompatible);
    CHECK_THROWS_AS(matrix_coefficient(P, f, vacuum_gaussian(P, GridSpec1D::centered(8.0, 1024)), GX, GY),
                    ShapeMismatch);
}

TEST_CASE("pre-FSB image is covariant under the centre") {
    const auto f = probe();
    const auto W = [](const SampledLine &v) { return covariant_pre_fsb(P, FiducialSpec::gaussian(), v, GX, GY); };
    const auto lhs = W(act_schrodinger(P, {0.37, 0, 0}, f));
    CHECK(norm(lhs - std::polar(1.0, kTwoPi * 0.37) * W(f)) < 1e-12 * norm(lhs));
}

TEST_CASE("Lie annihilation separates images from generic fields") {
    const auto W = covariant_pre_fsb(P, FiducialSpec::gaussian(), probe(), GX, GY);
    CHECK(annihilation_residual(AnnihilationKind::PreFsbLie, P, W, 1e-4).pass);
    const PlaneField noise = sample([](double x, double y) { return cplx{std::exp(-(x * x + y * y) / 4) * std::cos(3 * x * y)}; }, GX, GY);
    const auto r = annihilation_residual(AnnihilationKind::PreFsbLie, P, noise, 1e-4);
    CHECK_FALSE(r.pass);
    CHECK(r.value > 1e-2);
    CHECK(annihilation_residual(AnnihilationKind::PreFsbLie, P, PlaneField(GX, GY), 1e-4).value == 0.0);
}

TEST_CASE("Zak transform") {
    const auto phi0 = vacuum_gaussian(P, G);
    const auto Z = covariant_zak(L, phi0, 128, 128);
    CHECK(std::abs(norm(Z) - norm(phi0)) < 1e-6 * norm(phi0));
    const auto T = vacuum_theta(L, 128, 128);
    CHECK(norm(Z - T) < 1e-8 * norm(T));
    CHECK(norm(covariant_zak(L, SampledLine(G), 128, 128)) == 0.0);

    const auto chi = sample([](double t) { return cplx{t >= 0.0 && t < 1.0 ? 1.0 : 0.0}; }, G);
    const auto Zc = covariant_zak(L, chi, 128, 128);
    for (std::size_t j = 0; j < 128; j += 9)
        for (std::size_t k = 0; k < 128; k += 11)
            REQUIRE(std::abs(Zc.at(j, k) - std::polar(1.0, kTwoPi * Zc.u(j) * Zc.v(k))) < 1e-12);

    const HeisenbergElement g{0.0, 3.0 / 128, 5.0 / 128};
    const auto lhs = covariant_zak(L, act_schrodinger(P, g, phi0), 128, 128);
    CHECK(norm(lhs - act_lattice(L, g, Z)) <= 1e-5 * norm(phi0));
    const HeisenbergElement c{0.37, 0, 0};
    CHECK(norm(covariant_zak(L, act_schrodinger(P, c, phi0), 128, 128) - act_lattice(L, c, Z)) <= 1e-12);
}

TEST_CASE("Zak grid checks and support guard") {
    CHECK_THROWS_AS(zak_layout(GridSpec1D::centered(8.0, 1000), 128), GridIncompatible);
    CHECK_THROWS_AS(zak_layout(GridSpec1D{-7.9, 1.0 / 128, 2048}, 128), GridIncompatible);
    const auto wide = sample([](double t) { return cplx{std::exp(-0.01 * t * t)}; }, G);
    CHECK_THROWS_AS(covariant_zak(L, wide, 128, 128, 2), SupportOverflow);
    CHECK_THROWS_AS(contravariant_zak_inverse(L, TorusField(128, 128, 2), G), IndexMismatch);
    CHECK_THROWS_AS(contravariant_zak_inverse(L, TorusField(128, 128, 1), GridSpec1D{0.001, 1.0 / 128, 16}),
                    GridIncompatible);
}

TEST_CASE("inverse Zak") {
    const auto f = probe();
    const auto Z = covariant_zak(L, f, 128, 128);
    CHECK(norm(contravariant_zak_inverse(L, Z, G) - f) <= 1e-6 * norm(f));
    CHECK(norm(contravariant_zak_inverse(L, TorusField(128, 128, 1), G)) == 0.0);
    CHECK(norm(covariant_zak(L, contravariant_zak_inverse(L, Z, G), 128, 128) - Z) <= 1e-6 * norm(Z));
}

TEST_CASE("pre-theta of the theta vacuum at the origin") {
    const auto T = vacuum_theta(L, 64, 64);
    const auto W = covariant_pre_theta(L, T, GX, GY);
    const cplx v = W.at(128, 128);
    CHECK(std::abs(v.imag()) < 1e-10);
    CHECK(std::abs(v.real() - std::pow(norm(T), 2)) < 1e-10);
    CHECK(norm(covariant_pre_theta(L, TorusField(64, 64, 1), GX, GY)) == 0.0);
}

TEST_CASE("inverse pre-theta") {
    CHECK(norm(contravariant_pre_theta_inverse(L, ReconstructionSpec::theta_vacuum(), PlaneField(GX, GY), 32, 32)) ==
          0.0);
    CHECK_THROWS_AS(contravariant_pre_theta_inverse(L, ReconstructionSpec::gaussian(), PlaneField(GX, GY), 32, 32),
                    ConfigError);
}

TEST_CASE("Fourier pair") {
    const auto f = sample([](double t) { return cplx{std::exp(-kPi * t * t)}; }, G);
    const auto Wf = covariant_fourier_inverse(P, f, G);
    double worst = 0.0, im = 0.0;
    for (std::size_t k = 0; k < G.count; ++k) {
        worst = std::max(worst, std::abs(Wf[k] - std::exp(-kPi * G.point(k) * G.point(k))));
        im = std::max(im, std::abs(Wf[k].imag()));
    }
    CHECK(worst < 1e-8);
    CHECK(im < 1e-10);
    const auto p = probe();
    CHECK(norm(contravariant_fourier(P, covariant_fourier_inverse(P, p, G), G) - p) < 1e-7 * norm(p));
}

TEST_CASE("contravariant pre-FSB") {
    const auto f = probe();
    const auto W = covariant_pre_fsb(P, FiducialSpec::gaussian(), f, GX, GY);
    CHECK(norm(contravariant_pre_fsb_inverse(P, ReconstructionSpec::gaussian(), W, G) - f) < 1e-4 * norm(f));
    CHECK(norm(contravariant_pre_fsb_inverse(P, ReconstructionSpec::gaussian(), PlaneField(GX, GY), G)) == 0.0);
    // a different pair with <phi, psi> = 1
    const auto psi = vacuum_gaussian(P, G);
    CHECK(norm(contravariant_pre_fsb_inverse(P, ReconstructionSpec::from(psi), W, G) - f) < 1e-4 * norm(f));
    CHECK_THROWS_AS(contravariant_pre_fsb_inverse(P, ReconstructionSpec::theta_vacuum(), W, G), ConfigError);
}

TEST_CASE("constant reconstruction vector breaks the lattice contravariant condition") {
    // e^{2 pi i m (t - {x}) [y]} psi(t - {x}) - psi(t - x) at y = 1, 0 < x < 1
    const auto psi = [](double t) { return std::exp(-t * t); };
    const double x = 0.4, t = 0.1;
    const double lhs = std::abs(std::polar(1.0, kTwoPi * (t - x)) * psi(t - x) - psi(t - x));
    CHECK(lhs > 1e-2);
}

TEST_CASE("peelings") {
    const auto f = probe();
    CHECK(norm(peel_schrodinger(P, peel_schrodinger(P, f), PeelDirection::Inverse) - f) < 1e-12 * norm(f));
    const auto e = peel_schrodinger(P, vacuum_gaussian(P, G));
    for (std::size_t k = 700; k < 1350; ++k)
        REQUIRE(std::abs(e[k] - std::pow(2.0, 0.25)) < 1e-12);
    const auto peeled = peel_lattice(L, vacuum_theta(L, 32, 32));
    for (std::size_t j = 0; j < 32; j += 3)
        for (std::size_t k = 0; k < 32; k += 5)
            REQUIRE(std::abs(peeled.at(j, k) - jacobi_theta_series(1, 1.0, cplx{peeled.v(k), peeled.u(j)})) < 1e-12);
    CHECK_THROWS_AS(peel_schrodinger(P, sample([](double) { return cplx{1.0}; }, GridSpec1D::centered(20.0, 64))),
                    OverflowGuard);
}

TEST_CASE("peeled FSB vacuum is constant") {
    const auto W = covariant_pre_fsb(P, FiducialSpec::gaussian(), vacuum_gaussian(P, G), GX, GY);
    CHECK(constancy(P, peel_fsb(P, W), Region::Bulk) < 1e-4);
    const auto F = fsb_transform(P, vacuum_gaussian(P, G), GX, GY);
    CHECK(std::abs(F.at(128, 128) - 1.0) < 1e-8);
}

TEST_CASE("round trips scale by 1/hbar") {
    const ReprParams q{2.0, 1.0};
    const auto f = probe();
    const auto W = covariant_pre_fsb(q, FiducialSpec::gaussian(), f, GX, GY);
    const auto back = contravariant_pre_fsb_inverse(q, ReconstructionSpec::gaussian(), W, G);
    CHECK(norm(back - 0.5 * f) < 1e-4 * norm(f));
    const auto fb = contravariant_fourier(q, covariant_fourier_inverse(q, f, G), G);
    CHECK(norm(fb - 0.5 * f) < 1e-7 * norm(f));
    const auto Z = covariant_zak(LatticeParams{2, 1.0}, f, 128, 128);
    CHECK(norm(contravariant_zak_inverse(LatticeParams{2, 1.0}, Z, G) - f) < 1e-6 * norm(f));
}
