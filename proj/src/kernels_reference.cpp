#include "heis/errors.hpp"
#include "heis/kernels.hpp"

#include <cmath>

namespace heis::kernels::reference {

PlaneField analysis(const SampledLine &f, const std::vector<cplx> &window, const GridSpec1D &gx,
                    const GridSpec1D &gy, double hbar, double scale) {
    const std::size_t nt = f.size();
    if (window.size() != gx.count * nt)
        throw ShapeMismatch("analysis window table has the wrong size");
    PlaneField out(gx, gy);
    for (std::size_t i = 0; i < gx.count; ++i)
        for (std::size_t j = 0; j < gy.count; ++j) {
            cplx acc{};
            for (std::size_t k = 0; k < nt; ++k)
                acc += f[k] * window[i * nt + k] * std::exp(cplx{0.0, kTwoPi * hbar * f.t(k) * gy.point(j)});
            out.at(i, j) = scale * f.grid.step * acc;
        }
    return out;
}

SampledLine synthesis(const PlaneField &F, const std::vector<cplx> &window, const GridSpec1D &out_grid,
                      double hbar, double scale) {
    const std::size_t nx = F.nx();
    if (window.size() != out_grid.count * nx)
        throw ShapeMismatch("synthesis window table has the wrong size");
    SampledLine out(out_grid);
    for (std::size_t k = 0; k < out_grid.count; ++k) {
        const double t = out_grid.point(k);
        cplx acc{};
        for (std::size_t i = 0; i < nx; ++i)
            for (std::size_t j = 0; j < F.ny(); ++j)
                acc += F.at(i, j) * window[k * nx + i] * std::exp(cplx{0.0, -kTwoPi * hbar * t * F.gy.point(j)});
        out[k] = scale * F.gx.step * F.gy.step * acc;
    }
    return out;
}

SampledLine fourier_sum(const SampledLine &f, const GridSpec1D &out_grid, double hbar, int sign) {
    SampledLine out(out_grid);
    const double s = sign >= 0 ? 1.0 : -1.0;
    for (std::size_t j = 0; j < out_grid.count; ++j) {
        cplx acc{};
        for (std::size_t k = 0; k < f.size(); ++k)
            acc += f[k] * std::exp(cplx{0.0, s * kTwoPi * hbar * f.t(k) * out_grid.point(j)});
        out[j] = f.grid.step * acc;
    }
    return out;
}

TorusField zak(const SampledLine &f, const ZakLayout &layout, int m, std::size_t nu, std::size_t nv, int ntrunc) {
    TorusField out(nu, nv, m);
    const auto size = static_cast<std::ptrdiff_t>(f.size());
    for (std::size_t j = 0; j < nu; ++j)
        for (std::size_t k = 0; k < nv; ++k) {
            const double u = out.u(j);
            const double v = out.v(k);
            cplx acc{};
            for (int n = -ntrunc; n <= ntrunc; ++n) {
                const std::ptrdiff_t idx =
                    layout.origin_index + static_cast<std::ptrdiff_t>(j) * layout.per_node + n * layout.per_unit;
                if (idx < 0 || idx >= size)
                    continue;
                acc += f[static_cast<std::size_t>(idx)] * std::exp(cplx{0.0, kTwoPi * m * n * v});
            }
            out.at(j, k) = std::exp(cplx{0.0, kTwoPi * m * u * v}) * acc;
        }
    return out;
}

SampledLine izak(const TorusField &G, const GridSpec1D &out_grid, const std::vector<std::ptrdiff_t> &node_index) {
    if (node_index.size() != out_grid.count)
        throw ShapeMismatch("izak node index list does not match the output grid");
    SampledLine out(out_grid);
    const auto nu = static_cast<std::ptrdiff_t>(G.nu);
    for (std::size_t t = 0; t < out_grid.count; ++t) {
        const std::ptrdiff_t J = node_index[t];
        const auto j = static_cast<std::size_t>(floor_mod(J, nu));
        const double tt = static_cast<double>(J) / static_cast<double>(G.nu);
        cplx acc{};
        for (std::size_t k = 0; k < G.nv; ++k)
            acc += G.at(j, k) * std::exp(cplx{0.0, -kTwoPi * G.m * tt * G.v(k)});
        out[t] = acc / static_cast<double>(G.nv);
    }
    return out;
}

PlaneField pre_theta(const LatticeParams &p, const TorusField &f, const GridSpec1D &gx, const GridSpec1D &gy,
                     const ThetaTruncation &trunc) {
    PlaneField out(gx, gy);
    const double cell = 1.0 / static_cast<double>(f.nu * f.nv);
    for (std::size_t i = 0; i < gx.count; ++i)
        for (std::size_t l = 0; l < gy.count; ++l) {
            const double x = gx.point(i);
            const double y = gy.point(l);
            cplx acc{};
            for (std::size_t j = 0; j < f.nu; ++j)
                for (std::size_t k = 0; k < f.nv; ++k) {
                    const double u = f.u(j);
                    const double v = f.v(k);
                    const cplx shifted = std::exp(cplx{0.0, kTwoPi * p.m * x * (v - y)}) *
                                         theta_vacuum_value(p, u - x, v - y, trunc);
                    acc += f.at(j, k) * std::conj(shifted);
                }
            out.at(i, l) = cell * acc;
        }
    return out;
}

TorusField pre_theta_inverse(const LatticeParams &p, const PlaneField &F, std::size_t nu, std::size_t nv,
                             const std::function<cplx(double, double)> &psi) {
    TorusField out(nu, nv, p.m);
    const double cell = F.gx.step * F.gy.step;
    for (std::size_t j = 0; j < nu; ++j)
        for (std::size_t k = 0; k < nv; ++k) {
            const double u = out.u(j);
            const double v = out.v(k);
            cplx acc{};
            for (std::size_t i = 0; i < F.nx(); ++i)
                for (std::size_t l = 0; l < F.ny(); ++l) {
                    const double x = F.gx.point(i);
                    const double y = F.gy.point(l);
                    acc += F.at(i, l) * std::exp(cplx{0.0, kTwoPi * p.m * x * (v - y)}) * psi(u - x, v - y);
                }
            out.at(j, k) = cell * acc;
        }
    return out;
}

} // namespace heis::kernels::reference
