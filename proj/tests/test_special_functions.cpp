#include "heis/errors.hpp"
#include "heis/special_functions.hpp"

#include <doctest.h>

#include <cmath>

using namespace heis;

TEST_CASE("theta at the origin matches the classical value") {
    const double classical = std::pow(kPi, 0.25) / std::tgamma(0.75);
    const cplx v = jacobi_theta_series(1, 1.0, 0.0);
    CHECK(std::abs(v.real() - classical) < 1e-15);
    CHECK(v.imag() == 0.0);
    double brute = 1.0;
    for (int n = 1; n <= 16; ++n)
        brute += 2.0 * std::exp(-kPi * n * n);
    CHECK(std::abs(v.real() - brute) < 1e-15);
    CHECK(std::abs(v.real() - 1.0864348112) < 1e-10);
}

TEST_CASE("truncation bound") {
    const ThetaTruncation t{1e-14};
    const int n = t.nmax(1, 1.0);
    CHECK(n >= 3);
    CHECK(std::exp(-kPi * n * n) < 1e-14);
    CHECK(ThetaTruncation{1e-14}.nmax(1, 16.0) > n);
}

TEST_CASE("periodicity in the real direction") {
    for (int i = 0; i < 100; ++i) {
        const double w = -1.0 + 0.02 * i;
        const cplx a = jacobi_theta_series(2, 1.5, w);
        const cplx b = jacobi_theta_series(2, 1.5, w + 1.0);
        REQUIRE(std::abs(a - b) <= 2e-14);
    }
}

TEST_CASE("doubling the truncation does not move the value") {
    for (double w : {0.0, 0.13, 0.5, 0.77}) {
        const cplx a = jacobi_theta_series(1, 1.0, w, {1e-14});
        const cplx b = jacobi_theta_series(1, 1.0, w, {1e-28});
        CHECK(std::abs(a - b) <= 1e-14);
    }
}

TEST_CASE("conjugation symmetry") {
    const cplx w{0.31, 0.2};
    CHECK(std::abs(std::conj(jacobi_theta_series(1, 1.0, w)) - jacobi_theta_series(1, 1.0, -std::conj(w))) < 1e-14);
}

TEST_CASE("quasi-period in the imaginary direction") {
    for (int m : {1, 2, 3})
        for (double kappa : {0.5, 1.0, 2.0})
            for (double w : {0.0, 0.21, 0.5, 0.9}) {
                const cplx shift{0.0, m / kappa};
                const cplx lhs = jacobi_theta_series(m, kappa, cplx{w} + shift);
                const cplx rhs = std::exp(cplx{kPi * m / kappa, -kTwoPi * w}) * jacobi_theta_series(m, kappa, w);
                REQUIRE(std::abs(lhs - rhs) <= 1e-10 * std::abs(rhs));
            }
}

TEST_CASE("divergence guard") {
    CHECK_THROWS_AS(jacobi_theta_series(1, 1.0, cplx{0.0, 200.0}), DivergenceGuard);
}
