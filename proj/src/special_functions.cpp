#include "heis/special_functions.hpp"

#include "heis/errors.hpp"

#include <cmath>

namespace heis {

int ThetaTruncation::nmax(int m, double kappa) const {
    if (m < 1 || !(kappa > 0.0))
        throw ConfigError("theta series needs m >= 1 and kappa > 0");
    if (!(eps > 0.0) || eps > 1e-6)
        throw ConfigError("theta truncation eps must lie in (0, 1e-6]");
    return static_cast<int>(std::ceil(std::sqrt(kappa * std::log(2.0 / eps) / (kPi * m)))) + 1;
}

namespace {

// Kahan-Neumaier accumulator, one per component
struct Compensated {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            carry += (sum - t) + x;
        else
            carry += (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + carry; }
};

} // namespace

cplx jacobi_theta_series(int m, double kappa, cplx omega, const ThetaTruncation &trunc) {
    const double q = kPi * m / kappa;
    const int widen = static_cast<int>(std::ceil(kappa * std::abs(omega.imag()) / m));
    const int nmax = trunc.nmax(m, kappa) + widen;
    Compensated re, im;
    const auto term = [&](int n) {
        const double dn = n;
        // e^{-q n^2} e^{2 pi i n omega} = e^{-q n^2 - 2 pi n Im(omega)} e^{2 pi i n Re(omega)}
        const double logmod = -q * dn * dn - kTwoPi * dn * omega.imag();
        if (logmod > std::log(1e100))
            throw DivergenceGuard("theta series term exceeds 1e100");
        const cplx t = std::polar(std::exp(logmod), kTwoPi * dn * omega.real());
        re.add(t.real());
        im.add(t.imag());
    };
    for (int n = nmax; n >= 1; --n) {
        term(n);
        term(-n);
    }
    term(0);
    return {re.value(), im.value()};
}

} // namespace heis
