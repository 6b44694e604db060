#include "heis/verify.hpp"

#include "heis/errors.hpp"

#include <cmath>
#include <limits>

namespace heis {

DefectReport DefectReport::make(std::string name, double value, double tolerance, nlohmann::ordered_json metadata) {
    if (!std::isfinite(value))
        throw NonFinite("defect '" + name + "' is not finite");
    DefectReport r;
    r.name = std::move(name);
    r.value = value;
    r.tolerance = tolerance;
    r.pass = value <= tolerance;
    r.metadata = metadata.is_null() ? nlohmann::ordered_json::object() : std::move(metadata);
    return r;
}

nlohmann::ordered_json to_json(const DefectReport &r) {
    return {{"name", r.name}, {"value", r.value}, {"tolerance", r.tolerance}, {"pass", r.pass},
            {"metadata", r.metadata}};
}

nlohmann::ordered_json to_json(const std::vector<DefectReport> &reports) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto &r : reports)
        arr.push_back(to_json(r));
    return arr;
}

nlohmann::ordered_json to_json(const HeisenbergElement &g) { return {g.s, g.x, g.y}; }

double relative(double a, double b) {
    if (a == 0.0)
        return 0.0;
    if (b == 0.0)
        return std::numeric_limits<double>::max();
    return a / b;
}

bool in_bulk(const ReprParams &p, double x, double y) {
    return fsb_peel_exponent(p, x, y).real() <= -std::log(kBulkWeight);
}

bool in_bulk(const ReprParams &p, double t) { return schrodinger_peel_exponent(p, t) <= -std::log(kBulkWeight); }

namespace {

struct Window2D {
    std::size_t x0, x1, y0, y1;
};

Window2D interior(const PlaneField &F) {
    const std::size_t m = kInteriorMargin;
    if (F.nx() <= 2 * m || F.ny() <= 2 * m)
        throw ShapeMismatch("plane field too small for an interior residual");
    return {m, F.nx() - m, m, F.ny() - m};
}

} // namespace

DefectReport annihilation_residual(AnnihilationKind kind, const ReprParams &p, const PlaneField &F, double tol,
                                   Region region) {
    if (kind != AnnihilationKind::PreFsbLie && kind != AnnihilationKind::CauchyRiemannPeeled)
        throw InputError("plane residual needs the pre-FSB or Cauchy-Riemann operator");
    const bool lie = kind == AnnihilationKind::PreFsbLie;
    const Window2D w = interior(F);
    const std::size_t ny = F.ny();
    double res = 0.0;
    double ref = 0.0;
    std::size_t nodes = 0;
    for (std::size_t i = w.x0; i < w.x1; ++i)
        for (std::size_t j = w.y0; j < w.y1; ++j) {
            const double x = F.gx.point(i);
            if (region == Region::Bulk && !in_bulk(p, x, F.gy.point(j)))
                continue;
            const cplx dx = diff_at(F.values.data() + j, F.nx(), static_cast<std::ptrdiff_t>(ny), i, F.gx.step);
            const cplx dy = diff_at(F.values.data() + i * ny, ny, 1, j, F.gy.step);
            cplx r = p.kappa * dx + cplx{0.0, 1.0} * dy;
            if (lie)
                r += kTwoPi * p.hbar * x * F.at(i, j);
            res += std::norm(r);
            ref += std::norm(F.at(i, j));
            ++nodes;
        }
    if (region == Region::Interior) {
        ref = 0.0;
        for (const auto &v : F.values)
            ref += std::norm(v);
    }
    return DefectReport::make(lie ? "prefsb_lie_residual" : "cauchy_riemann_residual",
                              relative(std::sqrt(res), std::sqrt(ref)), tol,
                              {{"nodes", nodes}, {"region", region == Region::Bulk ? "bulk" : "interior"}});
}

DefectReport annihilation_residual(AnnihilationKind kind, const ReprParams &p, const SampledLine &f, double tol) {
    if (kind != AnnihilationKind::SchrodingerLadder)
        throw InputError("line residual needs the Schrodinger ladder operator");
    const SampledLine r = annihilation(p, f);
    double worst = 0.0;
    for (std::size_t k = kInteriorMargin; k + kInteriorMargin < r.size(); ++k)
        worst = std::max(worst, std::abs(r[k]));
    return DefectReport::make("ladder_residual", relative(worst, norm(f)), tol);
}

DefectReport annihilation_residual(AnnihilationKind kind, const LatticeParams &p, const TorusField &F, double tol) {
    if (kind != AnnihilationKind::LatticePeeled)
        throw InputError("torus residual needs the peeled lattice operator");
    const auto nu = static_cast<std::ptrdiff_t>(F.nu);
    const auto nv = static_cast<std::ptrdiff_t>(F.nv);
    double res = 0.0;
    double ref = 0.0;
    std::array<cplx, 7> su{}, sv{};
    for (std::ptrdiff_t j = 0; j < nu; ++j)
        for (std::ptrdiff_t k = 0; k < nv; ++k) {
            for (std::ptrdiff_t q = -3; q <= 3; ++q) {
                su[static_cast<std::size_t>(q + 3)] = peeled_torus_value(p, F, j + q, k);
                sv[static_cast<std::size_t>(q + 3)] = peeled_torus_value(p, F, j, k + q);
            }
            const cplx du = diff_at(su.data(), 7, 1, 3, 1.0 / static_cast<double>(nu));
            const cplx dv = diff_at(sv.data(), 7, 1, 3, 1.0 / static_cast<double>(nv));
            res += std::norm(-p.kappa * du + cplx{0.0, 1.0} * dv);
            ref += std::norm(su[3]);
        }
    return DefectReport::make("lattice_dbar_residual", relative(std::sqrt(res), std::sqrt(ref)), tol,
                              {{"nu", F.nu}, {"nv", F.nv}});
}

double constancy(const ReprParams &p, const PlaneField &F, Region region) {
    const Window2D w = interior(F);
    double sum = 0.0, sum2 = 0.0;
    std::size_t n = 0;
    for (std::size_t i = w.x0; i < w.x1; ++i)
        for (std::size_t j = w.y0; j < w.y1; ++j) {
            if (region == Region::Bulk && !in_bulk(p, F.gx.point(i), F.gy.point(j)))
                continue;
            const double a = std::abs(F.at(i, j));
            sum += a;
            sum2 += a * a;
            ++n;
        }
    if (n == 0)
        throw ShapeMismatch("empty region");
    const double mean = sum / static_cast<double>(n);
    const double var = std::max(0.0, sum2 / static_cast<double>(n) - mean * mean);
    return relative(std::sqrt(var), mean);
}

double weighted_norm(const ReprParams &p, const PlaneField &F) {
    double acc = 0.0;
    for (std::size_t i = 0; i < F.nx(); ++i)
        for (std::size_t j = 0; j < F.ny(); ++j)
            acc += std::norm(F.at(i, j)) *
                   std::exp(-2.0 * fsb_peel_exponent(p, F.gx.point(i), F.gy.point(j)).real());
    return std::sqrt(acc * F.gx.step * F.gy.step);
}

double weighted_norm(const ReprParams &p, const SampledLine &f) {
    double acc = 0.0;
    for (std::size_t k = 0; k < f.size(); ++k)
        acc += std::norm(f[k]) * std::exp(-2.0 * schrodinger_peel_exponent(p, f.t(k)));
    return std::sqrt(acc * f.grid.step);
}

double weighted_norm(const LatticeParams &p, const TorusField &F) {
    double acc = 0.0;
    for (std::size_t j = 0; j < F.nu; ++j)
        for (std::size_t k = 0; k < F.nv; ++k)
            acc += std::norm(F.at(j, k)) * std::exp(-2.0 * lattice_peel_exponent(p, F.u(j), F.v(k)).real());
    return std::sqrt(acc / static_cast<double>(F.nu * F.nv));
}

SampledLine chirp(const SampledLine &f, double delta) {
    SampledLine out(f.grid);
    for (std::size_t k = 0; k < f.size(); ++k)
        out[k] = std::polar(1.0, delta * f.t(k) * f.t(k)) * f[k];
    return out;
}

TorusField chirp(const TorusField &F, double delta) {
    TorusField out(F.nu, F.nv, F.m);
    for (std::size_t j = 0; j < F.nu; ++j)
        for (std::size_t k = 0; k < F.nv; ++k)
            out.at(j, k) = std::polar(1.0, delta * F.u(j) * F.u(j)) * F.at(j, k);
    return out;
}

DefectReport negative_control(const DefectReport &perturbed) {
    const double v = perturbed.value > 0.0 ? perturbed.tolerance / perturbed.value : std::numeric_limits<double>::max();
    auto meta = perturbed.metadata;
    meta["perturbed_defect"] = perturbed.value;
    meta["perturbed_tolerance"] = perturbed.tolerance;
    return DefectReport::make("control." + perturbed.name, v, 1.0, std::move(meta));
}

} // namespace heis
