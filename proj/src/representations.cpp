#include "heis/representations.hpp"

#include "heis/errors.hpp"

#include <cmath>
#include <sstream>

namespace heis {

void ReprParams::validate() const {
    if (!(hbar > 0.0) || !std::isfinite(hbar))
        throw ConfigError("hbar must be positive");
    if (!(kappa > 0.0) || !std::isfinite(kappa))
        throw ConfigError("kappa must be positive");
}

void LatticeParams::validate() const {
    if (m < 1)
        throw ConfigError("lattice index m must be >= 1");
    if (!(kappa > 0.0) || !std::isfinite(kappa))
        throw ConfigError("kappa must be positive");
}

std::ptrdiff_t aligned_steps(const GridSpec1D &grid, double shift, const char *axis) {
    auto k = grid.steps_of(shift);
    if (!k) {
        std::ostringstream msg;
        msg << "shift " << axis << "=" << shift << " is not a multiple of the grid step " << grid.step;
        throw OffGridShift(msg.str());
    }
    return *k;
}

std::ptrdiff_t aligned_torus_steps(std::size_t n, double shift, const char *axis) {
    const double r = std::round(shift * static_cast<double>(n));
    if (std::abs(shift - r / static_cast<double>(n)) > 1e-9) {
        std::ostringstream msg;
        msg << "shift " << axis << "=" << shift << " is not a multiple of 1/" << n;
        throw OffGridShift(msg.str());
    }
    return static_cast<std::ptrdiff_t>(r);
}

namespace {

cplx read_line(const SampledLine &f, std::ptrdiff_t k) {
    if (k < 0 || k >= static_cast<std::ptrdiff_t>(f.size()))
        return {};
    return f[static_cast<std::size_t>(k)];
}

// linear interpolation at coordinate t, zero outside the sampled interval
cplx interpolate(const SampledLine &f, double t) {
    const double pos = (t - f.grid.origin) / f.grid.step;
    const double base = std::floor(pos);
    const auto i0 = static_cast<std::ptrdiff_t>(base);
    const double w = pos - base;
    return (1.0 - w) * read_line(f, i0) + w * read_line(f, i0 + 1);
}

cplx read_plane(const PlaneField &F, std::ptrdiff_t ix, std::ptrdiff_t iy) {
    if (ix < 0 || iy < 0 || ix >= static_cast<std::ptrdiff_t>(F.nx()) || iy >= static_cast<std::ptrdiff_t>(F.ny()))
        return {};
    return F.at(static_cast<std::size_t>(ix), static_cast<std::size_t>(iy));
}

// shared body of the two Schrodinger forms: phase(t) * f(t - shift)
template <class Phase>
SampledLine shifted_line(const SampledLine &f, double shift, const char *axis, ShiftMode mode, Phase phase) {
    SampledLine out(f.grid);
    if (mode == ShiftMode::Aligned) {
        const std::ptrdiff_t k0 = aligned_steps(f.grid, shift, axis);
        for (std::size_t k = 0; k < f.size(); ++k)
            out[k] = phase(f.t(k)) * read_line(f, static_cast<std::ptrdiff_t>(k) - k0);
    } else {
        for (std::size_t k = 0; k < f.size(); ++k)
            out[k] = phase(f.t(k)) * interpolate(f, f.t(k) - shift);
    }
    return out;
}

} // namespace

SampledLine act_schrodinger(const ReprParams &p, const HeisenbergElement &g, const SampledLine &f, ShiftMode mode) {
    return shifted_line(f, g.x, "x", mode,
                        [&](double t) { return std::polar(1.0, kTwoPi * p.hbar * (g.s - t * g.y)); });
}

SampledLine act_schrodinger_momentum(const ReprParams &p, const HeisenbergElement &g, const SampledLine &f,
                                     ShiftMode mode) {
    return shifted_line(f, g.y, "y", mode,
                        [&](double l) { return std::polar(1.0, kTwoPi * p.hbar * (g.s + g.x * (l - g.y))); });
}

PlaneField act_quasi_regular_left(const ReprParams &p, const HeisenbergElement &g, const PlaneField &F) {
    const std::ptrdiff_t sx = aligned_steps(F.gx, g.x, "x");
    const std::ptrdiff_t sy = aligned_steps(F.gy, g.y, "y");
    PlaneField out(F.gx, F.gy);
    for (std::size_t i = 0; i < F.nx(); ++i)
        for (std::size_t j = 0; j < F.ny(); ++j) {
            const double yp = F.gy.point(j);
            out.at(i, j) = std::polar(1.0, kTwoPi * p.hbar * (g.s + g.x * (yp - g.y))) *
                           read_plane(F, static_cast<std::ptrdiff_t>(i) - sx, static_cast<std::ptrdiff_t>(j) - sy);
        }
    return out;
}

PlaneField act_quasi_regular_right(const ReprParams &p, const HeisenbergElement &g, const PlaneField &F) {
    const std::ptrdiff_t sx = aligned_steps(F.gx, g.x, "x");
    const std::ptrdiff_t sy = aligned_steps(F.gy, g.y, "y");
    PlaneField out(F.gx, F.gy);
    for (std::size_t i = 0; i < F.nx(); ++i) {
        const double xp = F.gx.point(i);
        for (std::size_t j = 0; j < F.ny(); ++j)
            out.at(i, j) = std::polar(1.0, -kTwoPi * p.hbar * (g.s + xp * g.y)) *
                           read_plane(F, static_cast<std::ptrdiff_t>(i) + sx, static_cast<std::ptrdiff_t>(j) + sy);
    }
    return out;
}

namespace {

void require_index(const LatticeParams &p, const TorusField &F) {
    if (F.m != p.m)
        throw IndexMismatch("torus field index m=" + std::to_string(F.m) + " differs from representation m=" +
                            std::to_string(p.m));
}

} // namespace

TorusField act_lattice(const LatticeParams &p, const HeisenbergElement &g, const TorusField &F) {
    require_index(p, F);
    const std::ptrdiff_t sx = aligned_torus_steps(F.nu, g.x, "x");
    const std::ptrdiff_t sy = aligned_torus_steps(F.nv, g.y, "y");
    TorusField out(F.nu, F.nv, F.m);
    for (std::size_t j = 0; j < F.nu; ++j)
        for (std::size_t k = 0; k < F.nv; ++k) {
            const double v = F.v(k);
            out.at(j, k) = std::polar(1.0, kTwoPi * p.m * (g.s + g.x * (v - g.y))) *
                           torus_value(F, static_cast<std::ptrdiff_t>(j) - sx, static_cast<std::ptrdiff_t>(k) - sy);
        }
    return out;
}

TorusField act_lattice_torus(const LatticeParams &p, const HeisenbergElement &g, const TorusField &F) {
    require_index(p, F);
    const auto nu = static_cast<std::ptrdiff_t>(F.nu);
    const auto nv = static_cast<std::ptrdiff_t>(F.nv);
    const std::ptrdiff_t sx = aligned_torus_steps(F.nu, g.x, "x");
    const std::ptrdiff_t sy = aligned_torus_steps(F.nv, g.y, "y");
    TorusField out(F.nu, F.nv, F.m);
    for (std::ptrdiff_t j = 0; j < nu; ++j)
        for (std::ptrdiff_t k = 0; k < nv; ++k) {
            const double u = F.u(static_cast<std::size_t>(j));
            const std::ptrdiff_t ju = floor_mod(j - sx, nu);       // {u - x}
            const std::ptrdiff_t kv = floor_mod(k - sy, nv);       // {v - y}
            const double whole_v = static_cast<double>(floor_div(k - sy, nv)); // [v - y]
            const double frac_v = static_cast<double>(kv) / static_cast<double>(nv);
            const double phase = g.s + g.x * frac_v + u * whole_v;
            out.at(static_cast<std::size_t>(j), static_cast<std::size_t>(k)) =
                std::polar(1.0, kTwoPi * p.m * phase) * F.at(static_cast<std::size_t>(ju), static_cast<std::size_t>(kv));
        }
    return out;
}

PlaneField act_fsb(const ReprParams &p, const HeisenbergElement &g, const PlaneField &F) {
    const std::ptrdiff_t sx = aligned_steps(F.gx, g.x, "x");
    const std::ptrdiff_t sy = aligned_steps(F.gy, g.y, "y");
    const double c = std::sqrt(p.h() / (2.0 * p.kappa));
    const cplx z{c * g.x, c * p.kappa * g.y};
    const cplx zb = std::conj(z);
    const cplx base = cplx{0.0, p.h() * g.s} + 0.25 * (zb * zb - z * z - 2.0 * z * zb);
    PlaneField out(F.gx, F.gy);
    for (std::size_t i = 0; i < F.nx(); ++i)
        for (std::size_t j = 0; j < F.ny(); ++j) {
            const cplx src = read_plane(F, static_cast<std::ptrdiff_t>(i) - sx, static_cast<std::ptrdiff_t>(j) - sy);
            if (src == cplx{})
                continue;
            const cplx zp{c * F.gx.point(i), c * p.kappa * F.gy.point(j)};
            out.at(i, j) = std::exp(base + zb * zp) * src;
        }
    return out;
}

SampledLine act_schrodinger_peeled(const ReprParams &p, const HeisenbergElement &g, const SampledLine &F) {
    const std::ptrdiff_t k0 = aligned_steps(F.grid, g.x, "x");
    const double a = kPi * p.hbar / p.kappa;
    SampledLine out(F.grid);
    for (std::size_t k = 0; k < F.size(); ++k) {
        const cplx src = read_line(F, static_cast<std::ptrdiff_t>(k) - k0);
        if (src == cplx{})
            continue;
        const double t = F.t(k);
        const cplx expo = cplx{0.0, kTwoPi * p.hbar * g.s} - a * (g.x * g.x - 2.0 * t * cplx{g.x, -p.kappa * g.y});
        out[k] = std::exp(expo) * src;
    }
    return out;
}

cplx peeled_torus_value(const LatticeParams &p, const TorusField &F, std::ptrdiff_t J, std::ptrdiff_t K) {
    const auto nu = static_cast<std::ptrdiff_t>(F.nu);
    const auto nv = static_cast<std::ptrdiff_t>(F.nv);
    const std::ptrdiff_t j = floor_mod(J, nu);
    const std::ptrdiff_t k = floor_mod(K, nv);
    const std::ptrdiff_t n = floor_div(J, nu);
    const cplx value = F.at(static_cast<std::size_t>(j), static_cast<std::size_t>(k));
    if (n == 0)
        return value;
    const double u = static_cast<double>(j) / static_cast<double>(nu);
    const double v = static_cast<double>(k) / static_cast<double>(nv);
    const double dn = static_cast<double>(n);
    const cplx expo{kPi * p.m / p.kappa * (2.0 * u * dn + dn * dn), -kTwoPi * p.m * dn * v};
    return std::exp(expo) * value;
}

TorusField act_lattice_peeled(const LatticeParams &p, const HeisenbergElement &g, const TorusField &F) {
    require_index(p, F);
    const std::ptrdiff_t sx = aligned_torus_steps(F.nu, g.x, "x");
    const std::ptrdiff_t sy = aligned_torus_steps(F.nv, g.y, "y");
    const double m = p.m;
    const cplx w{m * g.y, m * g.x / p.kappa};
    const cplx wb = std::conj(w);
    const cplx base = cplx{0.0, kTwoPi * m * g.s} + kPi * p.kappa / m * 0.25 * (w - wb) * (w - wb);
    TorusField out(F.nu, F.nv, F.m);
    for (std::size_t j = 0; j < F.nu; ++j)
        for (std::size_t k = 0; k < F.nv; ++k) {
            const cplx wp{m * F.v(k), m * F.u(j) / p.kappa};
            const cplx expo = base + kPi * p.kappa / m * w * (std::conj(wp) - wp);
            out.at(j, k) = std::exp(expo) * peeled_torus_value(p, F, static_cast<std::ptrdiff_t>(j) - sx,
                                                                static_cast<std::ptrdiff_t>(k) - sy);
        }
    return out;
}

} // namespace heis
