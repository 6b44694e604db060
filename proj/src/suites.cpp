#include "heis/suites.hpp"

#include "heis/errors.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <random>

namespace heis {

namespace {

using Reports = std::vector<DefectReport>;
using Rng = std::mt19937_64;
using Json = nlohmann::ordered_json;

const double kQuarticRootTwo = std::pow(2.0, 0.25);

double uniform(Rng &rng, double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }

// random multiple of `step` in [-maxabs, maxabs]
double aligned(Rng &rng, double step, double maxabs) {
    const auto K = static_cast<long>(std::floor(maxabs / step + 1e-9));
    return static_cast<double>(std::uniform_int_distribution<long>(-K, K)(rng)) * step;
}

// smallest positive multiple of a that is also a multiple of b (within 1e-9), or 0
double common_step(double a, double b) {
    for (int k = 1; k <= 4096; ++k) {
        const double s = k * a;
        const double r = std::round(s / b);
        if (r >= 1.0 && std::abs(s - r * b) <= 1e-9)
            return s;
    }
    return 0.0;
}

double aligned_common(Rng &rng, double a, double b, double maxabs) {
    const double s = common_step(a, b);
    return s > 0.0 && s <= maxabs ? aligned(rng, s, maxabs) : 0.0;
}

double coord_diff(const HeisenbergElement &a, const HeisenbergElement &b) {
    return std::max({std::abs(a.s - b.s), std::abs(a.x - b.x), std::abs(a.y - b.y)});
}

double max_abs_diff(const std::vector<cplx> &a, const std::vector<cplx> &b) {
    double worst = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k)
        worst = std::max(worst, std::abs(a[k] - b[k]));
    return worst;
}

// A smooth, off-centre, modulated probe that is not an eigenvector of anything.
SampledLine probe_line(const ReprParams &p, const GridSpec1D &grid) {
    const double a = 0.75 * kPi * p.hbar / p.kappa;
    return sample(
        [a](double t) {
            return std::exp(-a * (t - 0.4) * (t - 0.4)) * cplx{1.0, 0.3 * t} * std::polar(1.0, kTwoPi * 0.35 * t);
        },
        grid);
}

PlaneField probe_plane(const GridSpec1D &gx, const GridSpec1D &gy) {
    return sample(
        [](double x, double y) {
            return std::exp(-2.0 * ((x - 0.2) * (x - 0.2) + (y + 0.3) * (y + 0.3))) * cplx{1.0 + 0.2 * y, 0.3 * x};
        },
        gx, gy);
}

TorusField random_torus(Rng &rng, std::size_t nu, std::size_t nv, int m) {
    TorusField F(nu, nv, m);
    for (auto &v : F.values)
        v = {uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)};
    return F;
}

Json grid_meta(const GridSpec1D &g) { return {{"origin", g.origin}, {"step", g.step}, {"count", g.count}}; }

// ---------------------------------------------------------------- group

Reports group_suite(const RunConfig &c) {
    Rng rng(c.seed);
    const double tol = c.tol("group");
    const Subgroup tags[] = {Subgroup::Centre, Subgroup::AbelianX, Subgroup::AbelianY, Subgroup::Lattice};
    const auto rand_elem = [&] {
        return HeisenbergElement{uniform(rng, -10, 10), uniform(rng, -10, 10), uniform(rng, -10, 10)};
    };
    const auto rand_member = [&](Subgroup tag) {
        const auto ri = [&] { return static_cast<double>(std::uniform_int_distribution<int>(-10, 10)(rng)); };
        switch (tag) {
        case Subgroup::Centre:
            return HeisenbergElement{uniform(rng, -10, 10), 0.0, 0.0};
        case Subgroup::AbelianX:
            return HeisenbergElement{uniform(rng, -10, 10), 0.0, uniform(rng, -10, 10)};
        case Subgroup::AbelianY:
            return HeisenbergElement{uniform(rng, -10, 10), uniform(rng, -10, 10), 0.0};
        case Subgroup::Lattice:
            break;
        }
        return HeisenbergElement{uniform(rng, -10, 10), ri(), ri()};
    };
    double assoc = 0.0, inv = 0.0, integral = 0.0, unimod = 0.0, mult = 0.0;
    std::map<Subgroup, double> recon;
    double outside = 0.0;
    const int trials = 1000;
    for (int i = 0; i < trials; ++i) {
        const auto a = rand_elem(), b = rand_elem(), d = rand_elem();
        assoc = std::max(assoc, coord_diff(multiply(multiply(a, b), d), multiply(a, multiply(b, d))));
        inv = std::max({inv, coord_diff(multiply(a, inverse(a)), identity()),
                        coord_diff(multiply(inverse(a), a), identity())});
        for (Subgroup tag : tags) {
            const Decomposition dec = decompose(a, tag);
            recon[tag] = std::max(recon[tag], coord_diff(multiply(dec.section, dec.remainder), a));
            if (!is_member(dec.remainder, tag))
                outside += 1.0;
            if (tag == Subgroup::Lattice)
                integral = std::max({integral, std::abs(dec.remainder.x - std::round(dec.remainder.x)),
                                     std::abs(dec.remainder.y - std::round(dec.remainder.y))});
            const double param = tag == Subgroup::Lattice ? static_cast<double>(c.m) : c.hbar;
            const auto h1 = rand_member(tag), h2 = rand_member(tag);
            const cplx c1 = character(tag, param, h1);
            unimod = std::max(unimod, std::abs(std::abs(c1) - 1.0));
            mult = std::max(mult, std::abs(character(tag, param, multiply(h1, h2)) - c1 * character(tag, param, h2)));
        }
    }
    const Json meta = {{"trials", trials}};
    Reports out = {
        DefectReport::make("associativity", assoc, tol, meta),
        DefectReport::make("inverse", inv, tol, meta),
    };
    for (Subgroup tag : tags)
        out.push_back(DefectReport::make(std::string("reconstruction.") + to_string(tag), recon[tag], tol, meta));
    out.push_back(DefectReport::make("remainder_membership", outside, tol, meta));
    out.push_back(DefectReport::make("lattice_remainder_integral", integral, tol, meta));
    out.push_back(DefectReport::make("character_unimodular", unimod, tol, meta));
    out.push_back(DefectReport::make("character_multiplicative", mult, tol, meta));
    return out;
}

// ---------------------------------------------------------------- representations

struct Axes {
    double x;
    double y;
};

HeisenbergElement rand_g(Rng &rng, Axes steps, double maxabs) {
    const auto coord = [&](double step) { return step > 0.0 ? aligned(rng, step, maxabs) : uniform(rng, -maxabs, maxabs); };
    const double s = uniform(rng, -1.0, 1.0);
    const double x = coord(steps.x);
    return {s, x, coord(steps.y)};
}

template <class Act, class Field, class Norm>
void action_checks(Reports &out, const std::string &name, Rng &rng, Axes steps, double maxabs, const Field &f,
                   Act act, Norm nrm, const RunConfig &c) {
    double hom = 0.0, uni = 0.0;
    const double nf = nrm(f);
    for (int i = 0; i < 10; ++i) {
        const auto g1 = rand_g(rng, steps, maxabs);
        const auto g2 = rand_g(rng, steps, maxabs);
        hom = std::max(hom, relative(nrm(act(g1, act(g2, f)) - act(multiply(g1, g2), f)), nf));
        uni = std::max(uni, relative(std::abs(nrm(act(g1, f)) - nf), nf));
    }
    out.push_back(DefectReport::make("homomorphism." + name, hom, c.tol("homomorphism"), {{"pairs", 10}}));
    out.push_back(DefectReport::make("unitarity." + name, uni, c.tol("unitarity"), {{"samples", 10}}));
}

Reports representations_suite(const RunConfig &c) {
    Rng rng(c.seed);
    const ReprParams p = c.repr();
    const LatticeParams lp = c.lattice();
    const GridSpec1D G = c.line();
    const GridSpec1D gx = c.plane_x(), gy = c.plane_y();
    const SampledLine f = probe_line(p, G);
    const PlaneField F = probe_plane(gx, gy);
    const TorusField T = random_torus(rng, c.nu, c.nv, c.m);
    const double tu = 1.0 / static_cast<double>(c.nu), tv = 1.0 / static_cast<double>(c.nv);
    const auto l2 = [](const auto &v) { return norm(v); };
    Reports out;

    action_checks(out, "schrodinger", rng, {G.step, 0.0}, 1.0, f,
                  [&](const HeisenbergElement &g, const SampledLine &v) { return act_schrodinger(p, g, v); }, l2, c);
    action_checks(out, "schrodinger_momentum", rng, {0.0, G.step}, 1.0, f,
                  [&](const HeisenbergElement &g, const SampledLine &v) { return act_schrodinger_momentum(p, g, v); },
                  l2, c);
    action_checks(out, "quasi_regular_left", rng, {gx.step, gy.step}, 1.0, F,
                  [&](const HeisenbergElement &g, const PlaneField &v) { return act_quasi_regular_left(p, g, v); },
                  l2, c);
    action_checks(out, "quasi_regular_right", rng, {gx.step, gy.step}, 1.0, F,
                  [&](const HeisenbergElement &g, const PlaneField &v) { return act_quasi_regular_right(p, g, v); },
                  l2, c);
    action_checks(out, "lattice", rng, {tu, tv}, 3.0, T,
                  [&](const HeisenbergElement &g, const TorusField &v) { return act_lattice(lp, g, v); }, l2, c);
    action_checks(out, "lattice_torus", rng, {tu, tv}, 3.0, T,
                  [&](const HeisenbergElement &g, const TorusField &v) { return act_lattice_torus(lp, g, v); }, l2, c);

    const PlaneField Fp = peel_fsb(p, F);
    action_checks(out, "fsb", rng, {gx.step, gy.step}, 1.0, Fp,
                  [&](const HeisenbergElement &g, const PlaneField &v) { return act_fsb(p, g, v); },
                  [&](const PlaneField &v) { return weighted_norm(p, v); }, c);
    const SampledLine fp = peel_schrodinger(p, f);
    action_checks(out, "schrodinger_peeled", rng, {G.step, 0.0}, 1.0, fp,
                  [&](const HeisenbergElement &g, const SampledLine &v) { return act_schrodinger_peeled(p, g, v); },
                  [&](const SampledLine &v) { return weighted_norm(p, v); }, c);
    const TorusField Tp = peel_lattice(lp, T);
    action_checks(out, "lattice_peeled", rng, {tu, tv}, 3.0, Tp,
                  [&](const HeisenbergElement &g, const TorusField &v) { return act_lattice_peeled(lp, g, v); },
                  [&](const TorusField &v) { return weighted_norm(lp, v); }, c);

    double fsb_conj = 0.0, sch_conj = 0.0, lat_conj = 0.0, commute = 0.0, forms = 0.0;
    for (int i = 0; i < 10; ++i) {
        const auto gp = rand_g(rng, {gx.step, gy.step}, 1.0);
        fsb_conj = std::max(fsb_conj, relative(weighted_norm(p, act_fsb(p, gp, Fp) -
                                                                    peel_fsb(p, act_quasi_regular_left(p, gp, F))),
                                               norm(F)));
        const auto gl = rand_g(rng, {G.step, 0.0}, 1.0);
        sch_conj = std::max(sch_conj, relative(weighted_norm(p, act_schrodinger_peeled(p, gl, fp) -
                                                                    peel_schrodinger(p, act_schrodinger(p, gl, f))),
                                               norm(f)));
        const auto gt = rand_g(rng, {tu, tv}, 3.0);
        lat_conj = std::max(lat_conj, relative(weighted_norm(lp, act_lattice_peeled(lp, gt, Tp) -
                                                                     peel_lattice(lp, act_lattice(lp, gt, T))),
                                               norm(T)));
        forms = std::max(forms, relative(norm(act_lattice(lp, gt, T) - act_lattice_torus(lp, gt, T)), norm(T)));
        const auto gq = rand_g(rng, {gx.step, gy.step}, 1.0);
        commute = std::max(commute, relative(norm(act_quasi_regular_left(p, gp, act_quasi_regular_right(p, gq, F)) -
                                                  act_quasi_regular_right(p, gq, act_quasi_regular_left(p, gp, F))),
                                             norm(F)));
    }
    out.push_back(DefectReport::make("conjugation.fsb", fsb_conj, c.tol("conjugation")));
    out.push_back(DefectReport::make("conjugation.schrodinger_peeled", sch_conj, c.tol("conjugation")));
    out.push_back(DefectReport::make("conjugation.lattice_peeled", lat_conj, c.tol("conjugation")));
    out.push_back(DefectReport::make("lattice_forms_agree", forms, c.tol("conjugation")));
    out.push_back(DefectReport::make("left_right_commute", commute, c.tol("commute")));
    return out;
}

// ---------------------------------------------------------------- ladders

double interior_max(const SampledLine &f) {
    double worst = 0.0;
    for (std::size_t k = kInteriorMargin; k + kInteriorMargin < f.size(); ++k)
        worst = std::max(worst, std::abs(f[k]));
    return worst;
}

SampledLine hermite_closed_form(const ReprParams &p, int n, const GridSpec1D &grid) {
    const double s = std::sqrt(kTwoPi * p.hbar / p.kappa);
    double norm2 = 1.0;
    for (int j = 1; j <= n; ++j)
        norm2 *= 2.0 * j;
    const double scale = 1.0 / std::sqrt(norm2);
    return sample(
        [&](double t) { return scale * hermite_polynomial(n, s * t) * gaussian_vacuum_value(p, t); }, grid);
}

Reports ladders_suite(const RunConfig &c) {
    const ReprParams p = c.repr();
    const GridSpec1D G = c.line();
    const GridSpec1D G2 = GridSpec1D::centered(c.L, 2 * c.n);
    Reports out;

    auto vac = annihilation_residual(AnnihilationKind::SchrodingerLadder, p, vacuum_gaussian(p, G), c.tol("ladder_vacuum"));
    auto vac2 = annihilation_residual(AnnihilationKind::SchrodingerLadder, p, vacuum_gaussian(p, G2), c.tol("ladder_vacuum"));
    vac.name = "vacuum_residual";
    vac.metadata["grid"] = grid_meta(G);
    out.push_back(vac);
    out.push_back(DefectReport::make("vacuum_residual_refinement", relative(vac2.value, vac.value), c.tol("refinement"),
                                     {{"coarse", vac.value}, {"fine", vac2.value}}));

    const double a = 0.5 * kPi * p.hbar / p.kappa;
    const SampledLine f = sample(
        [a](double t) { return std::exp(-a * t * t) * cplx{1.0 + 0.5 * t, 0.25 * t * t} * std::polar(1.0, kTwoPi * 0.3 * t); },
        G);
    const SampledLine comm = annihilation(p, creation(p, f)) - creation(p, annihilation(p, f)) - f;
    out.push_back(DefectReport::make("commutator", relative(interior_max(comm), interior_max(f)), c.tol("commutator")));

    std::vector<SampledLine> states;
    for (int n = 0; n <= 5; ++n)
        states.push_back(hermite_state(p, n, G));
    // the vacuum carries ||phi0||^2 = (kappa / hbar)^{1/2}
    const double n0 = std::sqrt(p.kappa / p.hbar);
    double gram = 0.0;
    for (int n = 0; n <= 5; ++n)
        for (int k = 0; k <= 5; ++k)
            gram = std::max(gram, std::abs(inner_product(states[static_cast<std::size_t>(n)],
                                                         states[static_cast<std::size_t>(k)]) / n0 -
                                           (n == k ? 1.0 : 0.0)));
    out.push_back(DefectReport::make("hermite_gram", gram, c.tol("gram"), {{"max_order", 5}}));

    double lower = 0.0, raise = 0.0;
    for (int n = 1; n <= 5; ++n) {
        const auto &prev = states[static_cast<std::size_t>(n - 1)];
        const SampledLine expect = std::sqrt(static_cast<double>(n)) * prev;
        lower = std::max(lower, relative(norm(annihilation(p, states[static_cast<std::size_t>(n)]) - expect), norm(expect)));
    }
    for (int n = 0; n <= 5; ++n) {
        const SampledLine exact = hermite_closed_form(p, n, G);
        raise = std::max(raise, relative(norm(states[static_cast<std::size_t>(n)] - exact), norm(exact)));
    }
    out.push_back(DefectReport::make("lowering", lower, c.tol("ladder_shift")));
    out.push_back(DefectReport::make("raising_matches_hermite_functions", raise, c.tol("ladder_shift")));

    const auto deriv_error = [&](const GridSpec1D &grid) {
        const SampledLine s = sample([](double t) { return cplx{std::sin(kTwoPi * t)}; }, grid);
        const SampledLine d = derived_schrodinger(p, DerivedDirection::X, s);
        const SampledLine exact = sample([](double t) { return cplx{-kTwoPi * std::cos(kTwoPi * t)}; }, grid);
        return interior_max(d - exact);
    };
    const double e1 = deriv_error(G), e2 = deriv_error(G2);
    out.push_back(DefectReport::make("derivative_order", relative(e2, e1), c.tol("derivative_order"),
                                     {{"coarse", e1}, {"fine", e2}}));
    return out;
}

// ---------------------------------------------------------------- zak

struct ZakSetup {
    LatticeParams lp;
    ReprParams rp;
    GridSpec1D G;
    std::function<TorusField(const SampledLine &)> Z;
    std::function<SampledLine(const TorusField &)> M;
};

ZakSetup zak_setup(const RunConfig &c) {
    ZakSetup s{c.lattice(), c.lattice().as_repr(), c.line(), {}, {}};
    s.Z = [c, lp = s.lp](const SampledLine &f) { return covariant_zak(lp, f, c.nu, c.nv, c.ntrunc); };
    s.M = [lp = s.lp, G = s.G](const TorusField &g) { return contravariant_zak_inverse(lp, g, G); };
    return s;
}

Reports zak_roundtrips(const RunConfig &c) {
    const ZakSetup s = zak_setup(c);
    Reports out;
    out.push_back(roundtrip_error("zak_roundtrip.gaussian", s.Z, s.M, vacuum_gaussian(s.rp, s.G), c.tol("roundtrip_zak")));
    out.push_back(roundtrip_error("zak_roundtrip.hermite3", s.Z, s.M, hermite_state(s.rp, 3, s.G), c.tol("roundtrip_zak")));
    out.push_back(roundtrip_error("zak_roundtrip.torus_first", s.M, s.Z, s.Z(vacuum_gaussian(s.rp, s.G)),
                                  c.tol("roundtrip_zak")));
    return out;
}

Reports zak_suite(const RunConfig &c) {
    Rng rng(c.seed);
    const ZakSetup s = zak_setup(c);
    const SampledLine phi0 = vacuum_gaussian(s.rp, s.G);
    Reports out;
    out.push_back(unitarity_defect("norm.gaussian", s.Z, phi0, c.tol("zak_norm")));
    out.push_back(unitarity_defect("norm.hermite3", s.Z, hermite_state(s.rp, 3, s.G), c.tol("zak_norm")));

    const TorusField theta = vacuum_theta(s.lp, c.nu, c.nv, c.trunc());
    const TorusField zphi = s.Z(phi0);
    out.push_back(DefectReport::make("vacuum_is_theta", relative(max_abs_diff(zphi.values, theta.values), max_abs(theta.values)),
                                     c.tol("zak_vacuum"), {{"nu", c.nu}, {"nv", c.nv}}));

    const SampledLine chi = sample([](double t) { return cplx{t >= 0.0 && t < 1.0 ? 1.0 : 0.0}; }, s.G);
    const TorusField zchi = s.Z(chi);
    double unimod = 0.0;
    for (const auto &v : zchi.values)
        unimod = std::max(unimod, std::abs(std::abs(v) - 1.0));
    out.push_back(DefectReport::make("indicator_unimodular", unimod, c.tol("zak_indicator")));

    const SampledLine f = probe_line(s.rp, s.G);
    const TorusField zf = s.Z(f);
    const double tu = 1.0 / static_cast<double>(c.nu), tv = 1.0 / static_cast<double>(c.nv);
    DefectReport worst = DefectReport::make("intertwining", 0.0, c.tol("intertwining"));
    for (int i = 0; i < 10; ++i) {
        const HeisenbergElement g{uniform(rng, -1.0, 1.0), aligned_common(rng, tu, s.G.step, 2.0), aligned(rng, tv, 2.0)};
        auto r = intertwining_defect(
            "intertwining", [&](const HeisenbergElement &h, const SampledLine &v) { return act_schrodinger(s.rp, h, v); },
            s.Z, [&](const HeisenbergElement &h, const TorusField &v) { return act_lattice(s.lp, h, v); }, g, f, zf,
            c.tol("intertwining"));
        if (i == 0 || r.value > worst.value)
            worst = r;
    }
    worst.metadata["samples"] = 10;
    out.push_back(worst);

    for (auto &r : zak_roundtrips(c))
        out.push_back(r);

    double qp = 0.0;
    const auto nu = static_cast<std::ptrdiff_t>(c.nu), nv = static_cast<std::ptrdiff_t>(c.nv);
    for (int i = 0; i < 20; ++i) {
        const auto J = std::uniform_int_distribution<std::ptrdiff_t>(0, nu - 1)(rng);
        const auto K = std::uniform_int_distribution<std::ptrdiff_t>(0, nv - 1)(rng);
        const auto n = std::uniform_int_distribution<std::ptrdiff_t>(-2, 2)(rng);
        const auto k = std::uniform_int_distribution<std::ptrdiff_t>(-2, 2)(rng);
        const cplx shifted = zak_value(s.lp, f, c.nu, c.nv, J + n * nu, K + k * nv);
        const double phase = kTwoPi * static_cast<double>(floor_mod(c.m * J * k, nu)) / static_cast<double>(nu);
        qp = std::max(qp, std::abs(shifted - std::polar(1.0, phase) * zf.at(static_cast<std::size_t>(J), static_cast<std::size_t>(K))));
    }
    out.push_back(DefectReport::make("quasi_periodicity", relative(qp, max_abs(zf.values)), c.tol("quasi_periodicity"),
                                     {{"samples", 20}}));
    return out;
}

// ---------------------------------------------------------------- fsb

struct FsbSetup {
    ReprParams p;
    GridSpec1D G, gx, gy;
    std::function<PlaneField(const SampledLine &)> W;
    std::function<SampledLine(const PlaneField &)> M;
};

FsbSetup fsb_setup(const RunConfig &c, std::size_t scale = 1) {
    FsbSetup s{c.repr(), c.line(), GridSpec1D::centered(c.Lx, c.nx * scale), GridSpec1D::centered(c.Ly, c.ny * scale),
               {}, {}};
    s.W = [p = s.p, gx = s.gx, gy = s.gy](const SampledLine &f) {
        return covariant_pre_fsb(p, FiducialSpec::gaussian(), f, gx, gy);
    };
    s.M = [p = s.p, G = s.G](const PlaneField &F) {
        return contravariant_pre_fsb_inverse(p, ReconstructionSpec::gaussian(), F, G);
    };
    return s;
}

// Coherent-state-like probe; its peeled transform is an exponential in z.
SampledLine coherent_probe(const ReprParams &p, const GridSpec1D &grid) {
    const double a = kPi * p.hbar / p.kappa;
    return sample(
        [a, h = p.hbar](double t) {
            return std::exp(-a * (t - 0.5) * (t - 0.5)) * std::polar(1.0, kTwoPi * h * 0.4 * t);
        },
        grid);
}

Reports fsb_roundtrips(const RunConfig &c) {
    const FsbSetup s = fsb_setup(c);
    return {roundtrip_error("fsb_roundtrip", s.W, s.M, probe_line(s.p, s.G), c.tol("roundtrip_fsb"), 1.0 / s.p.hbar)};
}

Reports fsb_suite(const RunConfig &c) {
    Rng rng(c.seed);
    const FsbSetup s = fsb_setup(c);
    const FsbSetup s2 = fsb_setup(c, 2);
    const ReprParams &p = s.p;
    const SampledLine f = probe_line(p, s.G);
    Reports out;

    const PlaneField Wf = s.W(f);
    auto lie = annihilation_residual(AnnihilationKind::PreFsbLie, p, Wf, c.tol("lie_residual"));
    const auto lie2 = annihilation_residual(AnnihilationKind::PreFsbLie, p, s2.W(f), c.tol("lie_residual"));
    out.push_back(lie);
    out.push_back(DefectReport::make("prefsb_lie_residual_refinement", relative(lie2.value, lie.value),
                                     c.tol("refinement"), {{"coarse", lie.value}, {"fine", lie2.value}}));

    const SampledLine q = coherent_probe(p, s.G);
    const auto cr = annihilation_residual(AnnihilationKind::CauchyRiemannPeeled, p, peel_fsb(p, s.W(q)),
                                          c.tol("cr_residual"), Region::Bulk);
    const auto cr2 = annihilation_residual(AnnihilationKind::CauchyRiemannPeeled, p, peel_fsb(p, s2.W(q)),
                                           c.tol("cr_residual"), Region::Bulk);
    out.push_back(cr);
    out.push_back(DefectReport::make("cauchy_riemann_residual_refinement", relative(cr2.value, cr.value),
                                     c.tol("refinement"), {{"coarse", cr.value}, {"fine", cr2.value}}));

    const SampledLine phi0 = vacuum_gaussian(p, s.G);
    out.push_back(DefectReport::make("vacuum_peeled_constant", constancy(p, peel_fsb(p, s.W(phi0)), Region::Bulk),
                                     c.tol("constancy")));

    const SampledLine h1 = hermite_state(p, 1, s.G), h2 = hermite_state(p, 2, s.G);
    const SampledLine f1 = phi0 + cplx{0.5} * h1;
    const SampledLine f2 = phi0 + cplx{0.2, 0.3} * h2 + cplx{0.2} * h1;
    const SampledLine v1 = phi0;
    const SampledLine v2 = phi0 + cplx{0.25} * h2;
    const cplx lhs = inner_product(matrix_coefficient(p, f1, v1, s.gx, s.gy), matrix_coefficient(p, f2, v2, s.gx, s.gy));
    const cplx rhs = inner_product(f1, f2) * inner_product(v2, v1) / p.hbar;
    const double scale = norm(f1) * norm(f2) * norm(v1) * norm(v2) / p.hbar;
    out.push_back(DefectReport::make("sesqui_unitarity", relative(std::abs(lhs - rhs), scale), c.tol("sesqui"),
                                     {{"lhs_re", lhs.real()}, {"lhs_im", lhs.imag()}, {"rhs_re", rhs.real()},
                                      {"rhs_im", rhs.imag()}}));

    for (auto &r : fsb_roundtrips(c))
        out.push_back(r);

    DefectReport worst = DefectReport::make("intertwining", 0.0, c.tol("intertwining"));
    for (int i = 0; i < 3; ++i) {
        const HeisenbergElement g{uniform(rng, -1.0, 1.0), aligned_common(rng, s.gx.step, s.G.step, 1.0),
                                  aligned(rng, s.gy.step, 1.0)};
        auto r = intertwining_defect(
            "intertwining", [&](const HeisenbergElement &h, const SampledLine &v) { return act_schrodinger(p, h, v); },
            s.W, [&](const HeisenbergElement &h, const PlaneField &v) { return act_quasi_regular_left(p, h, v); }, g,
            f, Wf, c.tol("intertwining"));
        if (i == 0 || r.value > worst.value)
            worst = r;
    }
    out.push_back(worst);
    return out;
}

// ---------------------------------------------------------------- theta

TorusField smooth_torus(const LatticeParams &lp, std::size_t nu, std::size_t nv, const ThetaTruncation &trunc) {
    const TorusField phi = vacuum_theta(lp, nu, nv, trunc);
    return phi + cplx{0.5, 0.2} * act_lattice(lp, {0.0, 0.25, 0.5}, phi);
}

Reports theta_roundtrips(const RunConfig &c) {
    const LatticeParams lp = c.lattice();
    const std::size_t n = 64;
    const TorusField phi = vacuum_theta(lp, n, n, c.trunc());
    const GridSpec1D gx = c.plane_x(), gy = c.plane_y();
    return {roundtrip_error(
        "theta_roundtrip", [&](const TorusField &f) { return covariant_pre_theta(lp, f, gx, gy, c.ntrunc); },
        [&](const PlaneField &F) {
            return contravariant_pre_theta_inverse(lp, ReconstructionSpec::theta_vacuum(), F, n, n, c.ntrunc);
        },
        phi, c.tol("roundtrip_theta"), 1.0 / lp.m)};
}

Reports theta_suite(const RunConfig &c) {
    Rng rng(c.seed);
    const LatticeParams lp = c.lattice();
    const ReprParams rp = lp.as_repr();
    const ThetaTruncation tr = c.trunc();
    const GridSpec1D gx = c.plane_x(), gy = c.plane_y();
    Reports out;

    double series = 0.0;
    for (int n = -60; n <= 60; ++n)
        series += std::exp(-kPi * lp.m * n * n / lp.kappa);
    const cplx phi00 = theta_vacuum_value(lp, 0.0, 0.0, tr);
    out.push_back(DefectReport::make("value_at_origin", relative(std::abs(phi00 - kQuarticRootTwo * series),
                                                                 kQuarticRootTwo * series),
                                     c.tol("theta_value")));

    const TorusField phi = vacuum_theta(lp, c.nu, c.nv, tr);
    double qp = 0.0, qpref = 0.0;
    for (int i = 0; i < 30; ++i) {
        const auto j = std::uniform_int_distribution<std::size_t>(0, c.nu - 1)(rng);
        const auto k = std::uniform_int_distribution<std::size_t>(0, c.nv - 1)(rng);
        const int dn = std::uniform_int_distribution<int>(-2, 2)(rng);
        const int dk = std::uniform_int_distribution<int>(-2, 2)(rng);
        const double U = phi.u(j) + dn, V = phi.v(k) + dk;
        const cplx direct = kQuarticRootTwo * std::exp(cplx{-kPi * lp.m * U * U / lp.kappa, kTwoPi * lp.m * U * V}) *
                            jacobi_theta_series(lp.m, lp.kappa, cplx{lp.m * V, lp.m * U / lp.kappa}, tr);
        qp = std::max(qp, std::abs(quasi_periodic_eval(phi, U, V) - direct));
        qpref = std::max(qpref, std::abs(direct));
    }
    out.push_back(DefectReport::make("quasi_periodicity", relative(qp, qpref), c.tol("theta_quasi_periodicity"),
                                     {{"samples", 30}}));

    const TorusField f = smooth_torus(lp, c.nu, c.nv, tr);
    const auto W = [&](const TorusField &v) { return covariant_pre_theta(lp, v, gx, gy, c.ntrunc); };
    const PlaneField Wf = W(f);
    const double tu = 1.0 / static_cast<double>(c.nu), tv = 1.0 / static_cast<double>(c.nv);
    DefectReport worst = DefectReport::make("intertwining", 0.0, c.tol("intertwining_theta"));
    for (int i = 0; i < 3; ++i) {
        const HeisenbergElement g{uniform(rng, -1.0, 1.0), aligned_common(rng, tu, gx.step, 1.0),
                                  aligned_common(rng, tv, gy.step, 1.0)};
        auto r = intertwining_defect(
            "intertwining", [&](const HeisenbergElement &h, const TorusField &v) { return act_lattice(lp, h, v); }, W,
            [&](const HeisenbergElement &h, const PlaneField &v) { return act_quasi_regular_left(rp, h, v); }, g, f,
            Wf, c.tol("intertwining_theta"));
        if (i == 0 || r.value > worst.value)
            worst = r;
    }
    out.push_back(worst);

    const TorusField peeled = peel_lattice(lp, phi);
    double pd = 0.0, pref = 0.0;
    for (std::size_t j = 0; j < c.nu; ++j)
        for (std::size_t k = 0; k < c.nv; ++k) {
            const cplx th = jacobi_theta_series(lp.m, lp.kappa, cplx{lp.m * phi.v(k), lp.m * phi.u(j) / lp.kappa}, tr);
            pd = std::max(pd, std::abs(peeled.at(j, k) - th));
            pref = std::max(pref, std::abs(th));
        }
    out.push_back(DefectReport::make("peeled_vacuum_is_theta", relative(pd, pref), c.tol("peel_theta")));

    auto dbar = annihilation_residual(AnnihilationKind::LatticePeeled, lp, peeled, c.tol("dbar_residual"));
    const auto dbar2 = annihilation_residual(AnnihilationKind::LatticePeeled, lp,
                                             peel_lattice(lp, vacuum_theta(lp, 2 * c.nu, 2 * c.nv, tr)),
                                             c.tol("dbar_residual"));
    out.push_back(dbar);
    out.push_back(DefectReport::make("lattice_dbar_residual_refinement", relative(dbar2.value, dbar.value),
                                     c.tol("refinement"), {{"coarse", dbar.value}, {"fine", dbar2.value}}));

    for (auto &r : theta_roundtrips(c))
        out.push_back(r);

    double iq = 0.0, iref = 0.0;
    for (int i = 0; i < 4; ++i) {
        const double u = uniform(rng, 0.0, 1.0), v = uniform(rng, 0.0, 1.0);
        const int dn = std::uniform_int_distribution<int>(-1, 1)(rng);
        const int dk = std::uniform_int_distribution<int>(-2, 2)(rng);
        const cplx base = pre_theta_inverse_value(lp, Wf, u, v, tr);
        const cplx shifted = pre_theta_inverse_value(lp, Wf, u + dn, v + dk, tr);
        iq = std::max(iq, std::abs(shifted - std::polar(1.0, kTwoPi * lp.m * u * dk) * base));
        iref = std::max(iref, std::abs(base));
    }
    out.push_back(DefectReport::make("inverse_quasi_periodicity", relative(iq, iref), c.tol("theta_quasi_periodicity"),
                                     {{"samples", 4}}));
    return out;
}

// ---------------------------------------------------------------- fourier

Reports fourier_roundtrips(const RunConfig &c) {
    const ReprParams p = c.repr();
    const GridSpec1D G = c.line();
    return {roundtrip_error(
        "fourier_roundtrip", [&](const SampledLine &f) { return covariant_fourier_inverse(p, f, G); },
        [&](const SampledLine &F) { return contravariant_fourier(p, F, G); }, probe_line(p, G),
        c.tol("roundtrip_fourier"), 1.0 / p.hbar)};
}

Reports fourier_suite(const RunConfig &c) {
    Rng rng(c.seed);
    const ReprParams p = c.repr();
    const GridSpec1D G = c.line();
    const auto W = [&](const SampledLine &f) { return covariant_fourier_inverse(p, f, G); };
    Reports out;

    const SampledLine Wphi = W(vacuum_gaussian(p, G));
    const SampledLine exact = sample(
        [&](double y) {
            return cplx{kQuarticRootTwo * std::sqrt(p.kappa / p.hbar) * std::exp(-kPi * p.hbar * p.kappa * y * y)};
        },
        G);
    out.push_back(DefectReport::make("gaussian_self_dual", relative(max_abs_diff(Wphi.values, exact.values),
                                                                    max_abs(exact.values)),
                                     c.tol("fourier_duality")));

    for (auto &r : fourier_roundtrips(c))
        out.push_back(r);

    const SampledLine f = probe_line(p, G);
    const SampledLine Wf = W(f);
    DefectReport worst = DefectReport::make("intertwining", 0.0, c.tol("intertwining_fourier"));
    for (int i = 0; i < 10; ++i) {
        const HeisenbergElement g{uniform(rng, -1.0, 1.0), aligned(rng, G.step, 1.0), aligned(rng, G.step, 1.0)};
        auto r = intertwining_defect(
            "intertwining", [&](const HeisenbergElement &h, const SampledLine &v) { return act_schrodinger(p, h, v); },
            W, [&](const HeisenbergElement &h, const SampledLine &v) { return act_schrodinger_momentum(p, h, v); }, g,
            f, Wf, c.tol("intertwining_fourier"));
        if (i == 0 || r.value > worst.value)
            worst = r;
    }
    out.push_back(worst);
    return out;
}

// ---------------------------------------------------------------- peeling

Reports peeling_suite(const RunConfig &c) {
    Rng rng(c.seed);
    const ReprParams p = c.repr();
    const LatticeParams lp = c.lattice();
    const GridSpec1D G = c.line();
    const double s = std::sqrt(kTwoPi * p.hbar / p.kappa);
    Reports out;

    const SampledLine e0 = peel_schrodinger(p, vacuum_gaussian(p, G));
    double ratio = 0.0;
    for (int n = 1; n <= 4; ++n) {
        const SampledLine en = peel_schrodinger(p, hermite_state(p, n, G));
        // least-squares c in en / e0 ~ c H_n(s t)
        cplx num{};
        double den = 0.0;
        std::vector<std::pair<cplx, double>> pts;
        for (std::size_t k = kInteriorMargin; k + kInteriorMargin < G.count; ++k) {
            if (!in_bulk(p, G.point(k)))
                continue;
            const cplx r = en[k] / e0[k];
            const double hn = hermite_polynomial(n, s * G.point(k));
            pts.emplace_back(r, hn);
            num += r * hn;
            den += hn * hn;
        }
        const cplx cfit = num / den;
        double dev = 0.0, ref = 0.0;
        for (const auto &[r, hn] : pts) {
            dev += std::norm(r - cfit * hn);
            ref += std::norm(cfit * hn);
        }
        ratio = std::max(ratio, relative(std::sqrt(dev), std::sqrt(ref)));
    }
    out.push_back(DefectReport::make("hermite_ratio", ratio, c.tol("hermite_ratio"), {{"max_order", 4}}));

    double vac = 0.0;
    for (std::size_t k = 0; k < G.count; ++k)
        if (in_bulk(p, G.point(k)))
            vac = std::max(vac, std::abs(e0[k] - kQuarticRootTwo));
    out.push_back(DefectReport::make("peeled_vacuum_constant", vac / kQuarticRootTwo, c.tol("peel_identity")));

    const SampledLine f = probe_line(p, G);
    const PlaneField F = probe_plane(c.plane_x(), c.plane_y());
    const TorusField T = random_torus(rng, c.nu, c.nv, c.m);
    out.push_back(roundtrip_error(
        "identity.schrodinger", [&](const SampledLine &v) { return peel_schrodinger(p, v); },
        [&](const SampledLine &v) { return peel_schrodinger(p, v, PeelDirection::Inverse); }, f,
        c.tol("peel_identity")));
    out.push_back(roundtrip_error(
        "identity.fsb", [&](const PlaneField &v) { return peel_fsb(p, v); },
        [&](const PlaneField &v) { return peel_fsb(p, v, PeelDirection::Inverse); }, F, c.tol("peel_identity")));
    out.push_back(roundtrip_error(
        "identity.lattice", [&](const TorusField &v) { return peel_lattice(lp, v); },
        [&](const TorusField &v) { return peel_lattice(lp, v, PeelDirection::Inverse); }, T, c.tol("peel_identity")));
    return out;
}

// ---------------------------------------------------------------- contravariant, controls

Reports contravariant_suite(const RunConfig &c) {
    Reports out;
    for (auto *fn : {&zak_roundtrips, &fsb_roundtrips, &theta_roundtrips, &fourier_roundtrips})
        for (auto &r : fn(c))
            out.push_back(r);
    return out;
}

Reports controls_suite(const RunConfig &c) {
    Rng rng(c.seed);
    const double d = kControlChirp;
    Reports out;

    const ZakSetup z = zak_setup(c);
    const SampledLine f = probe_line(z.rp, z.G);
    const HeisenbergElement gz{0.3, aligned_common(rng, 1.0 / static_cast<double>(c.nu), z.G.step, 1.0) + 0.5,
                               0.25};
    out.push_back(negative_control(intertwining_defect(
        "zak_intertwining", [&](const HeisenbergElement &h, const SampledLine &v) { return act_schrodinger(z.rp, h, v); },
        [&](const SampledLine &v) { return z.Z(chirp(v, d)); },
        [&](const HeisenbergElement &h, const TorusField &v) { return act_lattice(z.lp, h, v); }, gz, f,
        c.tol("intertwining"))));

    const FsbSetup s = fsb_setup(c);
    const HeisenbergElement gf{0.3, common_step(s.gx.step, s.G.step) * 8.0, s.gy.step * 4.0};
    out.push_back(negative_control(intertwining_defect(
        "prefsb_intertwining", [&](const HeisenbergElement &h, const SampledLine &v) { return act_schrodinger(s.p, h, v); },
        [&](const SampledLine &v) { return s.W(chirp(v, d)); },
        [&](const HeisenbergElement &h, const PlaneField &v) { return act_quasi_regular_left(s.p, h, v); }, gf,
        probe_line(s.p, s.G), c.tol("intertwining"))));

    const ReprParams p = c.repr();
    const GridSpec1D G = c.line();
    const HeisenbergElement gl{0.3, G.step * 64.0, G.step * 32.0};
    out.push_back(negative_control(intertwining_defect(
        "fourier_intertwining", [&](const HeisenbergElement &h, const SampledLine &v) { return act_schrodinger(p, h, v); },
        [&](const SampledLine &v) { return covariant_fourier_inverse(p, chirp(v, d), G); },
        [&](const HeisenbergElement &h, const SampledLine &v) { return act_schrodinger_momentum(p, h, v); }, gl,
        probe_line(p, G), c.tol("intertwining_fourier"))));

    const LatticeParams lp = c.lattice();
    const ReprParams rp = lp.as_repr();
    const GridSpec1D gx = c.plane_x(), gy = c.plane_y();
    const TorusField T = smooth_torus(lp, c.nu, c.nv, c.trunc());
    const double cs = common_step(1.0 / static_cast<double>(c.nu), gx.step);
    const HeisenbergElement gt{0.3, cs * std::max(1.0, std::round(0.5 / std::max(cs, 1e-9))),
                               common_step(1.0 / static_cast<double>(c.nv), gy.step)};
    out.push_back(negative_control(intertwining_defect(
        "pretheta_intertwining", [&](const HeisenbergElement &h, const TorusField &v) { return act_lattice(lp, h, v); },
        [&](const TorusField &v) { return covariant_pre_theta(lp, chirp(v, d), gx, gy, c.ntrunc); },
        [&](const HeisenbergElement &h, const PlaneField &v) { return act_quasi_regular_left(rp, h, v); }, gt, T,
        c.tol("intertwining_theta"))));
    return out;
}

using SuiteFn = Reports (*)(const RunConfig &);

const std::vector<std::pair<std::string, SuiteFn>> &registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> r = {
        {"group", &group_suite},     {"representations", &representations_suite},
        {"ladders", &ladders_suite}, {"zak", &zak_suite},
        {"fsb", &fsb_suite},         {"theta", &theta_suite},
        {"fourier", &fourier_suite}, {"peeling", &peeling_suite},
        {"contravariant", &contravariant_suite}, {"controls", &controls_suite},
    };
    return r;
}

Reports run_one(const std::string &name, SuiteFn fn, const RunConfig &c) {
    const auto t0 = std::chrono::steady_clock::now();
    Reports out = fn(c);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    for (auto &r : out) {
        r.name = name + "." + r.name;
        r.metadata["seed"] = c.seed;
        r.metadata["suite_ms"] = ms;
    }
    return out;
}

} // namespace

const std::vector<std::string> &suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto &[n, fn] : registry())
            v.push_back(n);
        v.emplace_back("all");
        return v;
    }();
    return names;
}

std::vector<DefectReport> run_suite(const std::string &name, const RunConfig &cfg) {
    cfg.validate();
    Reports out;
    for (const auto &[n, fn] : registry()) {
        if (name != "all" && name != n)
            continue;
        for (auto &r : run_one(n, fn, cfg))
            out.push_back(std::move(r));
        if (name != "all")
            return out;
    }
    if (name != "all")
        throw ConfigError("unknown suite '" + name + "'");
    return out;
}

double hermite_polynomial(int n, double x) {
    if (n < 0)
        throw InputError("negative Hermite order");
    double h0 = 1.0, h1 = 2.0 * x;
    if (n == 0)
        return h0;
    for (int k = 1; k < n; ++k) {
        const double h2 = 2.0 * x * h1 - 2.0 * k * h0;
        h0 = h1;
        h1 = h2;
    }
    return h1;
}

} // namespace heis
