#pragma once

#include "heis/representations.hpp"
#include "heis/special_functions.hpp"

namespace heis {

enum class DerivedDirection { S, X, Y };

/// Nodes closer than this to either end are excluded from residual norms.
inline constexpr std::size_t kInteriorMargin = 4;

/// Central difference of order 6 at node k of a strided sequence of n values;
/// the stencil narrows to order 4, then 2, near the ends and is one-sided at
/// the two end nodes.
cplx diff_at(const cplx *f, std::size_t n, std::ptrdiff_t stride, std::size_t k, double step);

SampledLine derivative(const SampledLine &f);

/// dS f = 2 pi i hbar f, dX f = -f', dY f = -2 pi i hbar t f
SampledLine derived_schrodinger(const ReprParams &p, DerivedDirection dir, const SampledLine &f);

/// a- f = (2 pi hbar t f + kappa f') / sqrt(4 pi hbar kappa)
SampledLine annihilation(const ReprParams &p, const SampledLine &f);
/// a+ f = (2 pi hbar t f - kappa f') / sqrt(4 pi hbar kappa)
SampledLine creation(const ReprParams &p, const SampledLine &f);

/// 2^{1/4} e^{-(pi hbar / kappa) t^2}
double gaussian_vacuum_value(const ReprParams &p, double t);
SampledLine vacuum_gaussian(const ReprParams &p, const GridSpec1D &grid);

/// Phi(u,v) = 2^{1/4} e^{-pi m u^2 / kappa + 2 pi i m u v} Theta(m (v + i u / kappa)),
/// valid at any real (u, v); evaluated after reduction to the fundamental domain.
cplx theta_vacuum_value(const LatticeParams &p, double u, double v, const ThetaTruncation &trunc = {});
TorusField vacuum_theta(const LatticeParams &p, std::size_t nu, std::size_t nv, const ThetaTruncation &trunc = {});

inline constexpr int kMaxHermiteOrder = 32;

/// (a+)^n phi0 / sqrt(n!)
SampledLine hermite_state(const ReprParams &p, int n, const GridSpec1D &grid);

} // namespace heis
