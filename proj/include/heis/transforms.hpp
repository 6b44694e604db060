#pragma once

#include "heis/kernels.hpp"
#include "heis/ladders.hpp"

#include <optional>

namespace heis {

struct FiducialSpec {
    enum class Kind { Gaussian, Custom };
    Kind kind = Kind::Gaussian;
    std::optional<SampledLine> custom;

    static FiducialSpec gaussian() { return {}; }
    static FiducialSpec from(SampledLine phi) { return {Kind::Custom, std::move(phi)}; }
};

struct ReconstructionSpec {
    enum class Kind { Gaussian, ThetaVacuum, Constant, Custom };
    Kind kind = Kind::Gaussian;
    std::optional<SampledLine> line;
    std::optional<TorusField> torus;

    static ReconstructionSpec gaussian() { return {}; }
    static ReconstructionSpec theta_vacuum() { return {Kind::ThetaVacuum, {}, {}}; }
    static ReconstructionSpec constant() { return {Kind::Constant, {}, {}}; }
    static ReconstructionSpec from(SampledLine psi) { return {Kind::Custom, std::move(psi), {}}; }
    static ReconstructionSpec from(TorusField psi) { return {Kind::Custom, {}, std::move(psi)}; }
};

enum class PeelDirection { Forward, Inverse };

inline constexpr int kDefaultZakTerms = 16;

/// f~(x,y) = <f, rho(0,x,y) phi>; the Gaussian fiducial carries the extra
/// factor (hbar/kappa)^{1/2}. A custom fiducial must share f's grid and the
/// plane x-nodes must be line nodes.
PlaneField covariant_pre_fsb(const ReprParams &p, const FiducialSpec &phi, const SampledLine &f,
                             const GridSpec1D &gx, const GridSpec1D &gy);

/// Same as covariant_pre_fsb with a custom fiducial and no extra factor.
PlaneField matrix_coefficient(const ReprParams &p, const SampledLine &f, const SampledLine &phi,
                              const GridSpec1D &gx, const GridSpec1D &gy);

/// Throws GridIncompatible unless every j/nu is a node of the line grid.
kernels::ZakLayout zak_layout(const GridSpec1D &line, std::size_t nu);

/// Zf(u,v) = e^{2 pi i m u v} sum_{|n| <= ntrunc} f(u+n) e^{2 pi i m n v}
TorusField covariant_zak(const LatticeParams &p, const SampledLine &f, std::size_t nu, std::size_t nv,
                         int ntrunc = kDefaultZakTerms);

/// The Zak sum at the absolute node (J/nu, K/nv), taken over every n with
/// J/nu + n inside the line grid.
cplx zak_value(const LatticeParams &p, const SampledLine &f, std::size_t nu, std::size_t nv, std::ptrdiff_t J,
               std::ptrdiff_t K);

/// [Mg](t) = int_0^1 g(t,v) e^{-2 pi i m t v} dv; nodes of out_grid must be
/// multiples of 1/nu.
SampledLine contravariant_zak_inverse(const LatticeParams &p, const TorusField &G, const GridSpec1D &out_grid);

/// f~(x,y) = <f, rho_m(0,x,y) Phi> over the torus.
PlaneField covariant_pre_theta(const LatticeParams &p, const TorusField &f, const GridSpec1D &gx,
                               const GridSpec1D &gy, int ntrunc = kDefaultZakTerms);

/// M(F)(u,v) = int F(x,y) [rho_m(0,x,y) psi](u,v) dx dy. ThetaVacuum uses
/// psi = Phi / ||Phi||^2; Custom takes a torus field whose nodes contain the
/// plane nodes modulo 1.
TorusField contravariant_pre_theta_inverse(const LatticeParams &p, const ReconstructionSpec &psi,
                                           const PlaneField &F, std::size_t nu, std::size_t nv,
                                           int ntrunc = kDefaultZakTerms);

/// The ThetaVacuum inverse pre-theta integral evaluated directly at one point.
cplx pre_theta_inverse_value(const LatticeParams &p, const PlaneField &F, double u, double v,
                             const ThetaTruncation &trunc = {});

/// [Wf](y) = int f(t) e^{2 pi i hbar y t} dt
SampledLine covariant_fourier_inverse(const ReprParams &p, const SampledLine &f, const GridSpec1D &out_grid);
/// [Mf](t) = int f(l) e^{-2 pi i hbar t l} dl
SampledLine contravariant_fourier(const ReprParams &p, const SampledLine &f, const GridSpec1D &out_grid);

/// [M F](t) = int F(x,y) e^{-2 pi i hbar t y} psi(t - x) dx dy
SampledLine contravariant_pre_fsb_inverse(const ReprParams &p, const ReconstructionSpec &psi, const PlaneField &F,
                                          const GridSpec1D &out_grid);

/// e^{+-d}, d = (h / 4 kappa)(x^2 + kappa^2 y^2 - 2 i kappa x y)
PlaneField peel_fsb(const ReprParams &p, const PlaneField &F, PeelDirection dir = PeelDirection::Forward);
/// e^{+-pi hbar t^2 / kappa}
SampledLine peel_schrodinger(const ReprParams &p, const SampledLine &f, PeelDirection dir = PeelDirection::Forward);
/// 2^{-1/4} e^{pi m u^2 / kappa - 2 pi i m u v} and its reciprocal
TorusField peel_lattice(const LatticeParams &p, const TorusField &F, PeelDirection dir = PeelDirection::Forward);

/// Log-weight of each peeling; the weighted norms below use e^{-2 Re d}.
cplx fsb_peel_exponent(const ReprParams &p, double x, double y);
double schrodinger_peel_exponent(const ReprParams &p, double t);
cplx lattice_peel_exponent(const LatticeParams &p, double u, double v);

PlaneField fsb_transform(const ReprParams &p, const SampledLine &f, const GridSpec1D &gx, const GridSpec1D &gy);
PlaneField theta_transform(const LatticeParams &p, const TorusField &f, const GridSpec1D &gx, const GridSpec1D &gy,
                           int ntrunc = kDefaultZakTerms);

} // namespace heis
