#pragma once

#include "heis/transforms.hpp"

#include <json.hpp>

#include <string>

namespace heis {

struct DefectReport {
    std::string name;
    double value = 0.0;
    double tolerance = 0.0;
    bool pass = true;
    nlohmann::ordered_json metadata = nlohmann::ordered_json::object();

    static DefectReport make(std::string name, double value, double tolerance,
                             nlohmann::ordered_json metadata = nlohmann::ordered_json::object());
};

nlohmann::ordered_json to_json(const DefectReport &r);
nlohmann::ordered_json to_json(const std::vector<DefectReport> &reports);
nlohmann::ordered_json to_json(const HeisenbergElement &g);

/// ratio a / b with the convention 0 / 0 = 0
double relative(double a, double b);

/// ||W(rho(g) f) - rho_target(g) W f|| / ||f||
template <class Source, class Transform, class Target, class Field, class Image>
DefectReport intertwining_defect(std::string name, Source &&source, Transform &&W, Target &&target,
                                 const HeisenbergElement &g, const Field &f, const Image &Wf, double tol) {
    const auto lhs = W(source(g, f));
    const auto rhs = target(g, Wf);
    return DefectReport::make(std::move(name), relative(norm(lhs - rhs), norm(f)), tol, {{"g", to_json(g)}});
}

template <class Source, class Transform, class Target, class Field>
DefectReport intertwining_defect(std::string name, Source &&source, Transform &&W, Target &&target,
                                 const HeisenbergElement &g, const Field &f, double tol) {
    return intertwining_defect(std::move(name), source, W, target, g, f, W(f), tol);
}

/// ||back(forward(f)) - c f|| / ||c f||, c the expected scale of the round trip
template <class Forward, class Backward, class Field>
DefectReport roundtrip_error(std::string name, Forward &&forward, Backward &&backward, const Field &f, double tol,
                             double c = 1.0) {
    const auto expect = cplx{c} * f;
    return DefectReport::make(std::move(name), relative(norm(backward(forward(f)) - expect), norm(expect)), tol);
}

/// | ||Tf|| - ||f|| | / ||f||
template <class Transform, class Field>
DefectReport unitarity_defect(std::string name, Transform &&T, const Field &f, double tol) {
    const double nf = norm(f);
    return DefectReport::make(std::move(name), relative(std::abs(norm(T(f)) - nf), nf), tol);
}

enum class AnnihilationKind { PreFsbLie, CauchyRiemannPeeled, SchrodingerLadder, LatticePeeled };

/// Region on which a residual is measured. Interior drops kInteriorMargin
/// nodes at each end; Bulk further keeps only nodes where the peeling
/// log-weight Re d stays below ln(1 / kBulkWeight).
enum class Region { Interior, Bulk };
inline constexpr double kBulkWeight = 1e-8;

/// PreFsbLie: (kappa d_x + i d_y + 2 pi hbar x) F, interior L2 relative to ||F||.
/// CauchyRiemannPeeled: (kappa d_x + i d_y) F on the given region.
DefectReport annihilation_residual(AnnihilationKind kind, const ReprParams &p, const PlaneField &F, double tol,
                                   Region region = Region::Interior);
/// SchrodingerLadder: interior max |a- f| relative to ||f||.
DefectReport annihilation_residual(AnnihilationKind kind, const ReprParams &p, const SampledLine &f, double tol);
/// LatticePeeled: (-kappa d_u + i d_v) F over the torus, neighbours taken from
/// the peeled covariance rule, RMS relative to RMS of F.
DefectReport annihilation_residual(AnnihilationKind kind, const LatticeParams &p, const TorusField &F, double tol);

bool in_bulk(const ReprParams &p, double x, double y);
bool in_bulk(const ReprParams &p, double t);

/// stddev / mean of |F| over the region
double constancy(const ReprParams &p, const PlaneField &F, Region region);

/// Norms in the peeled spaces: the weight e^{-2 Re d} undoes the peeling.
double weighted_norm(const ReprParams &p, const PlaneField &F);
double weighted_norm(const ReprParams &p, const SampledLine &f);
double weighted_norm(const LatticeParams &p, const TorusField &F);

/// Multiply the samples by e^{i delta t^2} (e^{i delta u^2} on the torus);
/// composing a transform with this breaks intertwining.
SampledLine chirp(const SampledLine &f, double delta);
TorusField chirp(const TorusField &F, double delta);

inline constexpr double kControlChirp = 0.01;

/// Turns the defect of a deliberately broken transform into a report that
/// passes iff that defect exceeds its own tolerance.
DefectReport negative_control(const DefectReport &perturbed);

} // namespace heis
