#include "heis/ladders.hpp"

#include "heis/errors.hpp"

#include <cmath>

namespace heis {

namespace {

const double kQuarticRootTwo = std::pow(2.0, 0.25);

} // namespace

cplx diff_at(const cplx *f, std::size_t n, std::ptrdiff_t stride, std::size_t k, double step) {
    const auto at = [&](std::ptrdiff_t j) { return f[j * stride]; };
    const auto i = static_cast<std::ptrdiff_t>(k);
    const auto last = static_cast<std::ptrdiff_t>(n) - 1;
    const std::ptrdiff_t room = std::min(i, last - i);
    if (room >= 3)
        return (-at(i - 3) + 9.0 * at(i - 2) - 45.0 * at(i - 1) + 45.0 * at(i + 1) - 9.0 * at(i + 2) + at(i + 3)) /
               (60.0 * step);
    if (room == 2)
        return (at(i - 2) - 8.0 * at(i - 1) + 8.0 * at(i + 1) - at(i + 2)) / (12.0 * step);
    if (room == 1)
        return (at(i + 1) - at(i - 1)) / (2.0 * step);
    if (n == 2)
        return (at(1) - at(0)) / step;
    if (i == 0)
        return (-3.0 * at(0) + 4.0 * at(1) - at(2)) / (2.0 * step);
    return (3.0 * at(last) - 4.0 * at(last - 1) + at(last - 2)) / (2.0 * step);
}

SampledLine derivative(const SampledLine &f) {
    SampledLine out(f.grid);
    for (std::size_t k = 0; k < f.size(); ++k)
        out[k] = diff_at(f.values.data(), f.size(), 1, k, f.grid.step);
    return out;
}

SampledLine derived_schrodinger(const ReprParams &p, DerivedDirection dir, const SampledLine &f) {
    p.validate();
    switch (dir) {
    case DerivedDirection::S:
        return cplx{0.0, kTwoPi * p.hbar} * f;
    case DerivedDirection::X:
        return cplx{-1.0} * derivative(f);
    case DerivedDirection::Y: {
        SampledLine out(f.grid);
        for (std::size_t k = 0; k < f.size(); ++k)
            out[k] = cplx{0.0, -kTwoPi * p.hbar * f.t(k)} * f[k];
        return out;
    }
    }
    throw Error("unknown derived direction");
}

namespace {

SampledLine ladder(const ReprParams &p, const SampledLine &f, double sign) {
    p.validate();
    const SampledLine df = derivative(f);
    const double norm = 1.0 / std::sqrt(4.0 * kPi * p.hbar * p.kappa);
    SampledLine out(f.grid);
    for (std::size_t k = 0; k < f.size(); ++k)
        out[k] = norm * (kTwoPi * p.hbar * f.t(k) * f[k] + sign * p.kappa * df[k]);
    return out;
}

} // namespace

SampledLine annihilation(const ReprParams &p, const SampledLine &f) { return ladder(p, f, +1.0); }

SampledLine creation(const ReprParams &p, const SampledLine &f) { return ladder(p, f, -1.0); }

double gaussian_vacuum_value(const ReprParams &p, double t) {
    return kQuarticRootTwo * std::exp(-kPi * p.hbar / p.kappa * t * t);
}

SampledLine vacuum_gaussian(const ReprParams &p, const GridSpec1D &grid) {
    p.validate();
    SampledLine out(grid);
    for (std::size_t k = 0; k < grid.count; ++k)
        out[k] = gaussian_vacuum_value(p, grid.point(k));
    return out;
}

cplx theta_vacuum_value(const LatticeParams &p, double u, double v, const ThetaTruncation &trunc) {
    const double n = std::floor(u);
    const double k = std::floor(v);
    const double fu = u - n;
    const double fv = v - k;
    const double m = p.m;
    const cplx omega{m * fv, m * fu / p.kappa};
    const cplx pre = std::polar(kQuarticRootTwo * std::exp(-kPi * m * fu * fu / p.kappa), kTwoPi * m * fu * fv);
    // covariance: Phi(fu + n, fv + k) = e^{2 pi i m fu k} Phi(fu, fv)
    const cplx cov = std::polar(1.0, kTwoPi * m * fu * k);
    return cov * pre * jacobi_theta_series(p.m, p.kappa, omega, trunc);
}

TorusField vacuum_theta(const LatticeParams &p, std::size_t nu, std::size_t nv, const ThetaTruncation &trunc) {
    p.validate();
    TorusField out(nu, nv, p.m);
    for (std::size_t j = 0; j < nu; ++j)
        for (std::size_t k = 0; k < nv; ++k)
            out.at(j, k) = theta_vacuum_value(p, out.u(j), out.v(k), trunc);
    return out;
}

SampledLine hermite_state(const ReprParams &p, int n, const GridSpec1D &grid) {
    if (n < 0 || n > kMaxHermiteOrder)
        throw OrderTooLarge("hermite order must lie in [0, " + std::to_string(kMaxHermiteOrder) + "]");
    SampledLine f = vacuum_gaussian(p, grid);
    for (int j = 1; j <= n; ++j)
        f = (1.0 / std::sqrt(static_cast<double>(j))) * creation(p, f);
    return f;
}

} // namespace heis
