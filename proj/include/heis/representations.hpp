#pragma once

#include "heis/grids.hpp"

namespace heis {

/// Planck parameter hbar > 0 and ladder tuning kappa > 0. h = 2 pi hbar is
/// derived, never stored.
struct ReprParams {
    double hbar = 1.0;
    double kappa = 1.0;

    double h() const { return kTwoPi * hbar; }
    void validate() const;
};

/// Quasi-periodicity index m >= 1 (plays the role of hbar) and kappa > 0.
struct LatticeParams {
    int m = 1;
    double kappa = 1.0;

    void validate() const;
    /// The Schrodinger-side parameters with hbar = m.
    ReprParams as_repr() const { return {static_cast<double>(m), kappa}; }
};

/// Shifts must be whole grid steps unless interpolation is requested; the
/// interpolating mode is approximate and excluded from exactness checks.
enum class ShiftMode { Aligned, Interpolate };

// Line and plane actions read 0 outside the stored domain.

/// [rho(s,x,y) f](t) = e^{2 pi i hbar (s - t y)} f(t - x)
SampledLine act_schrodinger(const ReprParams &p, const HeisenbergElement &g, const SampledLine &f,
                            ShiftMode mode = ShiftMode::Aligned);

/// [rho'(s,x,y) f](l) = e^{2 pi i hbar (s + x (l - y))} f(l - y)
SampledLine act_schrodinger_momentum(const ReprParams &p, const HeisenbergElement &g, const SampledLine &f,
                                     ShiftMode mode = ShiftMode::Aligned);

/// [Lambda(s,x,y) F](x',y') = e^{2 pi i hbar (s + x (y' - y))} F(x' - x, y' - y)
PlaneField act_quasi_regular_left(const ReprParams &p, const HeisenbergElement &g, const PlaneField &F);

/// [R(s,x,y) F](x',y') = e^{-2 pi i hbar (s + x' y)} F(x' + x, y' + y)
PlaneField act_quasi_regular_right(const ReprParams &p, const HeisenbergElement &g, const PlaneField &F);

/// [rho_m(s,x,y) F](u,v) = e^{2 pi i m (s + x (v - y))} F(u - x, v - y), with F
/// read through its quasi-periodic extension.
TorusField act_lattice(const LatticeParams &p, const HeisenbergElement &g, const TorusField &F);

/// Same operator written with fractional and integer parts only:
/// e^{2 pi i m (s + x {v-y} + u [v-y])} F({u-x}, {v-y}).
TorusField act_lattice_torus(const LatticeParams &p, const HeisenbergElement &g, const TorusField &F);

/// FSB representation on the (x,y) chart of z = sqrt(h/2kappa)(x + i kappa y):
/// e^{h i s + (conj(z)^2 - z^2 - 2 z conj(z))/4 + conj(z) z'} F(z' - z).
PlaneField act_fsb(const ReprParams &p, const HeisenbergElement &g, const PlaneField &F);

/// Schrodinger action conjugated by the peeling e^{pi hbar t^2 / kappa}.
SampledLine act_schrodinger_peeled(const ReprParams &p, const HeisenbergElement &g, const SampledLine &F);

/// Lattice action conjugated by the lattice peeling. F holds peeled values on
/// the fundamental domain and is extended by the peeled covariance rule
/// F(u+n, v+k) = e^{(pi m / kappa)(2 u n + n^2) - 2 pi i m n v} F(u, v).
TorusField act_lattice_peeled(const LatticeParams &p, const HeisenbergElement &g, const TorusField &F);

/// Peeled-field value at the absolute node (J/nu, K/nv).
cplx peeled_torus_value(const LatticeParams &p, const TorusField &F, std::ptrdiff_t J, std::ptrdiff_t K);

/// Whole-step shift count, or OffGridShift.
std::ptrdiff_t aligned_steps(const GridSpec1D &grid, double shift, const char *axis);
std::ptrdiff_t aligned_torus_steps(std::size_t n, double shift, const char *axis);

} // namespace heis
