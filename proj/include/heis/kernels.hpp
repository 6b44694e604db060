#pragma once

#include "heis/grids.hpp"
#include "heis/ladders.hpp"

namespace heis::kernels {

// Dense quadrature kernels. Every output node is an independent serial sum in
// a fixed order, so results do not depend on the number of threads.

/// out(x_i, y_j) = scale * dt * sum_k f(t_k) window[i][k] e^{2 pi i hbar t_k y_j}
/// window is nx-by-nt, row-major.
PlaneField analysis(const SampledLine &f, const std::vector<cplx> &window, const GridSpec1D &gx,
                    const GridSpec1D &gy, double hbar, double scale);

/// out(t_k) = scale * dx dy * sum_i window[k][i] sum_j F(x_i, y_j) e^{-2 pi i hbar t_k y_j}
/// window is nt-by-nx, row-major.
SampledLine synthesis(const PlaneField &F, const std::vector<cplx> &window, const GridSpec1D &out_grid,
                      double hbar, double scale);

/// out(y) = dt * sum_k f(t_k) e^{sign 2 pi i hbar t_k y}
SampledLine fourier_sum(const SampledLine &f, const GridSpec1D &out_grid, double hbar, int sign);

/// Placement of the torus u-nodes inside a line grid: node j/nu + n sits at
/// index origin_index + j * per_node + n * per_unit.
struct ZakLayout {
    std::ptrdiff_t origin_index = 0;
    std::ptrdiff_t per_node = 1;
    std::ptrdiff_t per_unit = 1;
};

/// Zf(j/nu, k/nv) = sum_{|n| <= ntrunc} f(j/nu + n) e^{2 pi i m (j/nu + n) k / nv}
TorusField zak(const SampledLine &f, const ZakLayout &layout, int m, std::size_t nu, std::size_t nv, int ntrunc);

/// out(t) = (1/nv) sum_k G(t mod 1, v_k) e^{-2 pi i m t v_k}; every t must be a
/// multiple of 1/nu (checked by the caller) and is passed as its index t * nu.
SampledLine izak(const TorusField &G, const GridSpec1D &out_grid, const std::vector<std::ptrdiff_t> &node_index);

namespace reference {

// Straightforward serial versions: one exponential per term, no tables.

PlaneField analysis(const SampledLine &f, const std::vector<cplx> &window, const GridSpec1D &gx,
                    const GridSpec1D &gy, double hbar, double scale);
SampledLine synthesis(const PlaneField &F, const std::vector<cplx> &window, const GridSpec1D &out_grid,
                      double hbar, double scale);
SampledLine fourier_sum(const SampledLine &f, const GridSpec1D &out_grid, double hbar, int sign);
TorusField zak(const SampledLine &f, const ZakLayout &layout, int m, std::size_t nu, std::size_t nv, int ntrunc);
SampledLine izak(const TorusField &G, const GridSpec1D &out_grid, const std::vector<std::ptrdiff_t> &node_index);

/// Defining pairing <f, rho_m(0,x,y) Phi> over the torus, Phi from the theta series.
PlaneField pre_theta(const LatticeParams &p, const TorusField &f, const GridSpec1D &gx, const GridSpec1D &gy,
                     const ThetaTruncation &trunc);
/// Defining integral of F(x,y) rho_m(0,x,y) psi over the plane; psi(u,v) is any
/// pointwise quasi-periodic evaluator.
TorusField pre_theta_inverse(const LatticeParams &p, const PlaneField &F, std::size_t nu, std::size_t nv,
                             const std::function<cplx(double, double)> &psi);

} // namespace reference

} // namespace heis::kernels
