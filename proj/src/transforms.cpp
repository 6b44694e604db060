#include "heis/transforms.hpp"

#include "heis/errors.hpp"

#include <cmath>
#include <sstream>

namespace heis {

namespace {

constexpr double kPeelLimit = 700.0;

void require_index(const LatticeParams &p, const TorusField &F) {
    if (F.m != p.m)
        throw IndexMismatch("torus field index m=" + std::to_string(F.m) + " differs from m=" + std::to_string(p.m));
}

// psi(t) read off its grid: zero outside, GridIncompatible when t is not a node
cplx line_lookup(const SampledLine &psi, double t) {
    const auto k = psi.grid.steps_of(t - psi.grid.origin, 1e-9);
    if (!k) {
        std::ostringstream msg;
        msg << "t=" << t << " is not a node of the window grid";
        throw GridIncompatible(msg.str());
    }
    if (*k < 0 || *k >= static_cast<std::ptrdiff_t>(psi.size()))
        return {};
    return psi[static_cast<std::size_t>(*k)];
}

std::vector<cplx> gaussian_window(const ReprParams &p, const GridSpec1D &rows, const GridSpec1D &cols,
                                  bool rows_are_x) {
    std::vector<cplx> w(rows.count * cols.count);
    for (std::size_t r = 0; r < rows.count; ++r)
        for (std::size_t c = 0; c < cols.count; ++c) {
            const double d = rows_are_x ? cols.point(c) - rows.point(r) : rows.point(r) - cols.point(c);
            w[r * cols.count + c] = gaussian_vacuum_value(p, d);
        }
    return w;
}

// extended line j/nu + n, n in [-ntrunc, ntrunc], and the absolute u-index of each node
GridSpec1D extended_line(std::size_t nu, int ntrunc) {
    if (ntrunc < 0)
        throw ConfigError("ntrunc must be non-negative");
    return {-static_cast<double>(ntrunc), 1.0 / static_cast<double>(nu),
            nu * static_cast<std::size_t>(2 * ntrunc + 1)};
}

std::vector<std::ptrdiff_t> node_indices(const GridSpec1D &grid, std::size_t nu) {
    std::vector<std::ptrdiff_t> idx(grid.count);
    const double scale = static_cast<double>(nu);
    for (std::size_t k = 0; k < grid.count; ++k) {
        const double pos = grid.point(k) * scale;
        const double r = std::round(pos);
        if (std::abs(pos - r) > 1e-6) {
            std::ostringstream msg;
            msg << "node t=" << grid.point(k) << " is not a multiple of 1/" << nu;
            throw GridIncompatible(msg.str());
        }
        idx[k] = static_cast<std::ptrdiff_t>(r);
    }
    return idx;
}

double theta_vacuum_norm2(const LatticeParams &p) { return std::sqrt(p.kappa / static_cast<double>(p.m)); }

void guard_exponent(cplx d, const char *what) {
    if (std::abs(d) > kPeelLimit) {
        std::ostringstream msg;
        msg << what << " peeling exponent |d| = " << std::abs(d) << " exceeds " << kPeelLimit;
        throw OverflowGuard(msg.str());
    }
}

} // namespace

PlaneField covariant_pre_fsb(const ReprParams &p, const FiducialSpec &phi, const SampledLine &f,
                             const GridSpec1D &gx, const GridSpec1D &gy) {
    p.validate();
    if (phi.kind == FiducialSpec::Kind::Gaussian)
        return kernels::analysis(f, gaussian_window(p, gx, f.grid, true), gx, gy, p.hbar,
                                 std::sqrt(p.hbar / p.kappa));
    if (!phi.custom)
        throw ShapeMismatch("custom fiducial carries no data");
    const SampledLine &w = *phi.custom;
    require_same_grid(w, f);
    std::vector<cplx> window(gx.count * f.size());
    for (std::size_t i = 0; i < gx.count; ++i) {
        const auto s = f.grid.steps_of(gx.point(i));
        if (!s)
            throw GridIncompatible("plane x-nodes must be line nodes for a sampled fiducial");
        for (std::size_t k = 0; k < f.size(); ++k) {
            const std::ptrdiff_t src = static_cast<std::ptrdiff_t>(k) - *s;
            if (src >= 0 && src < static_cast<std::ptrdiff_t>(w.size()))
                window[i * f.size() + k] = std::conj(w[static_cast<std::size_t>(src)]);
        }
    }
    return kernels::analysis(f, window, gx, gy, p.hbar, 1.0);
}

PlaneField matrix_coefficient(const ReprParams &p, const SampledLine &f, const SampledLine &phi,
                              const GridSpec1D &gx, const GridSpec1D &gy) {
    return covariant_pre_fsb(p, FiducialSpec::from(phi), f, gx, gy);
}

kernels::ZakLayout zak_layout(const GridSpec1D &line, std::size_t nu) {
    const double ratio = 1.0 / (static_cast<double>(nu) * line.step);
    const double d = std::round(ratio);
    if (d < 1.0 || std::abs(ratio - d) > 1e-9 * std::max(1.0, ratio)) {
        std::ostringstream msg;
        msg << "line step " << line.step << " does not divide 1/" << nu;
        throw GridIncompatible(msg.str());
    }
    const double o = -line.origin / line.step;
    const double i0 = std::round(o);
    if (std::abs(o - i0) > 1e-6)
        throw GridIncompatible("t = 0 is not a node of the line grid");
    const auto per_node = static_cast<std::ptrdiff_t>(d);
    return {static_cast<std::ptrdiff_t>(i0), per_node, per_node * static_cast<std::ptrdiff_t>(nu)};
}

TorusField covariant_zak(const LatticeParams &p, const SampledLine &f, std::size_t nu, std::size_t nv, int ntrunc) {
    p.validate();
    if (ntrunc < 0)
        throw ConfigError("ntrunc must be non-negative");
    const kernels::ZakLayout layout = zak_layout(f.grid, nu);
    const std::ptrdiff_t lo = layout.origin_index - ntrunc * layout.per_unit;
    const std::ptrdiff_t hi = layout.origin_index + (ntrunc + 1) * layout.per_unit;
    double tail = 0.0;
    double total = 0.0;
    for (std::size_t k = 0; k < f.size(); ++k) {
        const double a = std::norm(f[k]);
        total += a;
        const auto i = static_cast<std::ptrdiff_t>(k);
        if (i < lo || i >= hi)
            tail += a;
    }
    if (std::sqrt(tail) > 1e-12 * std::sqrt(total)) {
        std::ostringstream msg;
        msg << "signal mass outside [" << -ntrunc << ", " << ntrunc + 1 << ") is " << std::sqrt(tail)
            << "; raise ntrunc";
        throw SupportOverflow(msg.str());
    }
    return kernels::zak(f, layout, p.m, nu, nv, ntrunc);
}

cplx zak_value(const LatticeParams &p, const SampledLine &f, std::size_t nu, std::size_t nv, std::ptrdiff_t J,
               std::ptrdiff_t K) {
    const kernels::ZakLayout layout = zak_layout(f.grid, nu);
    const auto N = static_cast<std::ptrdiff_t>(nu * nv);
    const auto size = static_cast<std::ptrdiff_t>(f.size());
    const std::ptrdiff_t base = layout.origin_index + J * layout.per_node;
    const std::ptrdiff_t n_lo = -floor_div(base, layout.per_unit);
    const std::ptrdiff_t n_hi = floor_div(size - 1 - base, layout.per_unit);
    cplx acc{};
    for (std::ptrdiff_t n = n_lo; n <= n_hi; ++n) {
        const std::ptrdiff_t q = floor_mod(p.m * (J + n * static_cast<std::ptrdiff_t>(nu)) * K, N);
        acc += f[static_cast<std::size_t>(base + n * layout.per_unit)] *
               std::polar(1.0, kTwoPi * static_cast<double>(q) / static_cast<double>(N));
    }
    return acc;
}

SampledLine contravariant_zak_inverse(const LatticeParams &p, const TorusField &G, const GridSpec1D &out_grid) {
    p.validate();
    require_index(p, G);
    return kernels::izak(G, out_grid, node_indices(out_grid, G.nu));
}

PlaneField covariant_pre_theta(const LatticeParams &p, const TorusField &f, const GridSpec1D &gx,
                               const GridSpec1D &gy, int ntrunc) {
    p.validate();
    require_index(p, f);
    const GridSpec1D ext = extended_line(f.nu, ntrunc);
    const SampledLine line = kernels::izak(f, ext, node_indices(ext, f.nu));
    const ReprParams rp = p.as_repr();
    return kernels::analysis(line, gaussian_window(rp, gx, ext, true), gx, gy, rp.hbar, 1.0);
}

TorusField contravariant_pre_theta_inverse(const LatticeParams &p, const ReconstructionSpec &psi,
                                           const PlaneField &F, std::size_t nu, std::size_t nv, int ntrunc) {
    p.validate();
    switch (psi.kind) {
    case ReconstructionSpec::Kind::ThetaVacuum: {
        const GridSpec1D ext = extended_line(nu, ntrunc);
        const ReprParams rp = p.as_repr();
        const SampledLine line = kernels::synthesis(F, gaussian_window(rp, ext, F.gx, false), ext, rp.hbar,
                                                    1.0 / theta_vacuum_norm2(p));
        return kernels::zak(line, zak_layout(ext, nu), p.m, nu, nv, ntrunc);
    }
    case ReconstructionSpec::Kind::Custom: {
        if (!psi.torus)
            throw ShapeMismatch("lattice reconstruction needs a torus field");
        require_index(p, *psi.torus);
        const TorusField &w = *psi.torus;
        return kernels::reference::pre_theta_inverse(
            p, F, nu, nv, [&w](double u, double v) { return quasi_periodic_eval(w, u, v); });
    }
    default:
        throw ConfigError("the lattice reconstruction vector must be the theta vacuum or a torus field");
    }
}

cplx pre_theta_inverse_value(const LatticeParams &p, const PlaneField &F, double u, double v,
                             const ThetaTruncation &trunc) {
    cplx acc{};
    for (std::size_t i = 0; i < F.nx(); ++i)
        for (std::size_t l = 0; l < F.ny(); ++l) {
            const double x = F.gx.point(i);
            const double y = F.gy.point(l);
            acc += F.at(i, l) * std::polar(1.0, kTwoPi * p.m * x * (v - y)) * theta_vacuum_value(p, u - x, v - y, trunc);
        }
    return F.gx.step * F.gy.step / theta_vacuum_norm2(p) * acc;
}

SampledLine covariant_fourier_inverse(const ReprParams &p, const SampledLine &f, const GridSpec1D &out_grid) {
    p.validate();
    return kernels::fourier_sum(f, out_grid, p.hbar, +1);
}

SampledLine contravariant_fourier(const ReprParams &p, const SampledLine &f, const GridSpec1D &out_grid) {
    p.validate();
    return kernels::fourier_sum(f, out_grid, p.hbar, -1);
}

SampledLine contravariant_pre_fsb_inverse(const ReprParams &p, const ReconstructionSpec &psi, const PlaneField &F,
                                          const GridSpec1D &out_grid) {
    p.validate();
    const std::size_t nt = out_grid.count;
    const std::size_t nx = F.nx();
    switch (psi.kind) {
    case ReconstructionSpec::Kind::Gaussian:
        return kernels::synthesis(F, gaussian_window(p, out_grid, F.gx, false), out_grid, p.hbar, 1.0);
    case ReconstructionSpec::Kind::Constant:
        return kernels::synthesis(F, std::vector<cplx>(nt * nx, cplx{1.0}), out_grid, p.hbar, 1.0);
    case ReconstructionSpec::Kind::Custom: {
        if (!psi.line)
            throw ShapeMismatch("pre-FSB reconstruction needs a sampled line");
        std::vector<cplx> window(nt * nx);
        for (std::size_t k = 0; k < nt; ++k)
            for (std::size_t i = 0; i < nx; ++i)
                window[k * nx + i] = line_lookup(*psi.line, out_grid.point(k) - F.gx.point(i));
        return kernels::synthesis(F, window, out_grid, p.hbar, 1.0);
    }
    case ReconstructionSpec::Kind::ThetaVacuum:
        break;
    }
    throw ConfigError("the theta vacuum is not a reconstruction vector for the pre-FSB transform");
}

cplx fsb_peel_exponent(const ReprParams &p, double x, double y) {
    return p.h() / (4.0 * p.kappa) * cplx{x * x + p.kappa * p.kappa * y * y, -2.0 * p.kappa * x * y};
}

double schrodinger_peel_exponent(const ReprParams &p, double t) { return kPi * p.hbar / p.kappa * t * t; }

cplx lattice_peel_exponent(const LatticeParams &p, double u, double v) {
    const double m = p.m;
    return cplx{kPi * m * u * u / p.kappa - 0.25 * std::log(2.0), -kTwoPi * m * u * v};
}

PlaneField peel_fsb(const ReprParams &p, const PlaneField &F, PeelDirection dir) {
    p.validate();
    const double sign = dir == PeelDirection::Forward ? 1.0 : -1.0;
    PlaneField out(F.gx, F.gy);
    for (std::size_t i = 0; i < F.nx(); ++i)
        for (std::size_t j = 0; j < F.ny(); ++j) {
            const cplx d = fsb_peel_exponent(p, F.gx.point(i), F.gy.point(j));
            guard_exponent(d, "FSB");
            out.at(i, j) = std::exp(sign * d) * F.at(i, j);
        }
    return out;
}

SampledLine peel_schrodinger(const ReprParams &p, const SampledLine &f, PeelDirection dir) {
    p.validate();
    const double sign = dir == PeelDirection::Forward ? 1.0 : -1.0;
    SampledLine out(f.grid);
    for (std::size_t k = 0; k < f.size(); ++k) {
        const double d = schrodinger_peel_exponent(p, f.t(k));
        guard_exponent(d, "Schrodinger");
        out[k] = std::exp(sign * d) * f[k];
    }
    return out;
}

TorusField peel_lattice(const LatticeParams &p, const TorusField &F, PeelDirection dir) {
    p.validate();
    require_index(p, F);
    const double sign = dir == PeelDirection::Forward ? 1.0 : -1.0;
    TorusField out(F.nu, F.nv, F.m);
    for (std::size_t j = 0; j < F.nu; ++j)
        for (std::size_t k = 0; k < F.nv; ++k) {
            const cplx d = lattice_peel_exponent(p, F.u(j), F.v(k));
            guard_exponent(d, "lattice");
            out.at(j, k) = std::exp(sign * d) * F.at(j, k);
        }
    return out;
}

PlaneField fsb_transform(const ReprParams &p, const SampledLine &f, const GridSpec1D &gx, const GridSpec1D &gy) {
    return peel_fsb(p, covariant_pre_fsb(p, FiducialSpec::gaussian(), f, gx, gy));
}

PlaneField theta_transform(const LatticeParams &p, const TorusField &f, const GridSpec1D &gx, const GridSpec1D &gy,
                           int ntrunc) {
    return peel_fsb(p.as_repr(), covariant_pre_theta(p, f, gx, gy, ntrunc));
}

} // namespace heis
