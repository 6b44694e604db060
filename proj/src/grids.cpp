#include "heis/grids.hpp"

#include "heis/errors.hpp"

#include <cmath>
#include <sstream>

namespace heis {

GridSpec1D::GridSpec1D(double origin_, double step_, std::size_t count_)
    : origin(origin_), step(step_), count(count_) {
    if (!(step > 0.0) || !std::isfinite(step) || !std::isfinite(origin))
        throw ShapeMismatch("grid step must be positive and finite");
    if (count < 2)
        throw ShapeMismatch("grid needs at least two points");
}

GridSpec1D GridSpec1D::centered(double half_width, std::size_t n) {
    if (!(half_width > 0.0))
        throw ShapeMismatch("grid half width must be positive");
    return {-half_width, 2.0 * half_width / static_cast<double>(n), n};
}

std::optional<std::ptrdiff_t> GridSpec1D::steps_of(double shift, double tol) const {
    const double r = std::round(shift / step);
    if (std::abs(shift - r * step) > tol)
        return std::nullopt;
    return static_cast<std::ptrdiff_t>(r);
}

std::optional<std::ptrdiff_t> GridSpec1D::index_of(double t, double tol) const {
    auto k = steps_of(t - origin, tol);
    if (!k || *k < 0 || *k >= static_cast<std::ptrdiff_t>(count))
        return std::nullopt;
    return k;
}

bool GridSpec1D::same_as(const GridSpec1D &o) const {
    return count == o.count && std::abs(step - o.step) <= 1e-12 * step &&
           std::abs(origin - o.origin) <= 1e-12 * std::max(1.0, std::abs(origin));
}

SampledLine::SampledLine(const GridSpec1D &g) : grid(g), values(g.count) {}

SampledLine::SampledLine(const GridSpec1D &g, std::vector<cplx> v) : grid(g), values(std::move(v)) {
    if (values.size() != grid.count)
        throw ShapeMismatch("line values do not match grid size");
}

PlaneField::PlaneField(const GridSpec1D &x, const GridSpec1D &y) : gx(x), gy(y), values(x.count * y.count) {}

PlaneField::PlaneField(const GridSpec1D &x, const GridSpec1D &y, std::vector<cplx> v)
    : gx(x), gy(y), values(std::move(v)) {
    if (values.size() != gx.count * gy.count)
        throw ShapeMismatch("plane values do not match grid size");
}

TorusField::TorusField(std::size_t nu_, std::size_t nv_, int m_) : TorusField(nu_, nv_, m_, {}) {}

TorusField::TorusField(std::size_t nu_, std::size_t nv_, int m_, std::vector<cplx> v)
    : nu(nu_), nv(nv_), m(m_), values(std::move(v)) {
    if (nu == 0 || nv == 0)
        throw ShapeMismatch("torus grid needs positive sizes");
    if (m < 1)
        throw IndexMismatch("quasi-periodicity index m must be >= 1");
    if (values.empty())
        values.assign(nu * nv, cplx{});
    if (values.size() != nu * nv)
        throw ShapeMismatch("torus values do not match grid size");
}

void require_same_grid(const SampledLine &a, const SampledLine &b) {
    if (!a.grid.same_as(b.grid) || a.values.size() != b.values.size())
        throw ShapeMismatch("line grids differ");
}

void require_same_grid(const PlaneField &a, const PlaneField &b) {
    if (!a.gx.same_as(b.gx) || !a.gy.same_as(b.gy) || a.values.size() != b.values.size())
        throw ShapeMismatch("plane grids differ");
}

void require_same_grid(const TorusField &a, const TorusField &b) {
    if (a.nu != b.nu || a.nv != b.nv || a.values.size() != b.values.size())
        throw ShapeMismatch("torus grids differ");
    if (a.m != b.m)
        throw IndexMismatch("torus fields carry different indices m");
}

namespace {

cplx raw_inner(const std::vector<cplx> &f, const std::vector<cplx> &g) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        // f conj(g)
        re += f[i].real() * g[i].real() + f[i].imag() * g[i].imag();
        im += f[i].imag() * g[i].real() - f[i].real() * g[i].imag();
    }
    return {re, im};
}

double raw_norm2(const std::vector<cplx> &f) {
    double acc = 0.0;
    for (const cplx &z : f)
        acc += std::norm(z);
    return acc;
}

template <class F> F combine(const F &a, const F &b, double sign) {
    require_same_grid(a, b);
    F out = a;
    for (std::size_t i = 0; i < out.values.size(); ++i)
        out.values[i] += sign * b.values[i];
    return out;
}

template <class F> F scale(cplx c, const F &a) {
    F out = a;
    for (cplx &z : out.values)
        z *= c;
    return out;
}

} // namespace

cplx inner_product(const SampledLine &f, const SampledLine &g) {
    require_same_grid(f, g);
    return raw_inner(f.values, g.values) * f.grid.step;
}

cplx inner_product(const PlaneField &f, const PlaneField &g) {
    require_same_grid(f, g);
    return raw_inner(f.values, g.values) * (f.gx.step * f.gy.step);
}

cplx inner_product(const TorusField &f, const TorusField &g) {
    require_same_grid(f, g);
    return raw_inner(f.values, g.values) / static_cast<double>(f.nu * f.nv);
}

double norm(const SampledLine &f) { return std::sqrt(raw_norm2(f.values) * f.grid.step); }
double norm(const PlaneField &f) { return std::sqrt(raw_norm2(f.values) * f.gx.step * f.gy.step); }
double norm(const TorusField &f) { return std::sqrt(raw_norm2(f.values) / static_cast<double>(f.nu * f.nv)); }

double max_abs(const std::vector<cplx> &v) {
    double m = 0.0;
    for (const cplx &z : v)
        m = std::max(m, std::abs(z));
    return m;
}

SampledLine operator+(const SampledLine &a, const SampledLine &b) { return combine(a, b, 1.0); }
SampledLine operator-(const SampledLine &a, const SampledLine &b) { return combine(a, b, -1.0); }
SampledLine operator*(cplx c, const SampledLine &a) { return scale(c, a); }
PlaneField operator+(const PlaneField &a, const PlaneField &b) { return combine(a, b, 1.0); }
PlaneField operator-(const PlaneField &a, const PlaneField &b) { return combine(a, b, -1.0); }
PlaneField operator*(cplx c, const PlaneField &a) { return scale(c, a); }
TorusField operator+(const TorusField &a, const TorusField &b) { return combine(a, b, 1.0); }
TorusField operator-(const TorusField &a, const TorusField &b) { return combine(a, b, -1.0); }
TorusField operator*(cplx c, const TorusField &a) { return scale(c, a); }

cplx torus_value(const TorusField &f, std::ptrdiff_t J, std::ptrdiff_t K) {
    const auto nu = static_cast<std::ptrdiff_t>(f.nu);
    const auto nv = static_cast<std::ptrdiff_t>(f.nv);
    const std::ptrdiff_t j = floor_mod(J, nu);
    const std::ptrdiff_t k = floor_mod(K, nv);
    const std::ptrdiff_t kshift = floor_div(K, nv);
    const cplx value = f.at(static_cast<std::size_t>(j), static_cast<std::size_t>(k));
    if (kshift == 0 || j == 0)
        return value;
    const double u = static_cast<double>(j) / static_cast<double>(nu);
    return std::polar(1.0, kTwoPi * f.m * u * static_cast<double>(kshift)) * value;
}

cplx quasi_periodic_eval(const TorusField &f, double u, double v) {
    const auto locate = [](double w, std::size_t n, const char *axis) {
        const double frac = fractional_part(w);
        const double pos = frac * static_cast<double>(n);
        const double r = std::round(pos);
        if (std::abs(frac - r / static_cast<double>(n)) > 1e-9) {
            std::ostringstream msg;
            msg << axis << "=" << w << " is not a torus grid node";
            throw OffGridError(msg.str());
        }
        // absolute node index, whole periods included
        return static_cast<std::ptrdiff_t>(integer_part(w)) * static_cast<std::ptrdiff_t>(n) +
               static_cast<std::ptrdiff_t>(r);
    };
    return torus_value(f, locate(u, f.nu, "u"), locate(v, f.nv, "v"));
}

void require_finite(const std::vector<cplx> &v, const char *what) {
    for (const cplx &z : v)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw NonFinite(std::string(what) + " contains a non-finite value");
}

SampledLine sample(const std::function<cplx(double)> &fn, const GridSpec1D &grid) {
    SampledLine out(grid);
    for (std::size_t k = 0; k < grid.count; ++k)
        out[k] = fn(grid.point(k));
    require_finite(out.values, "sampled line");
    return out;
}

PlaneField sample(const std::function<cplx(double, double)> &fn, const GridSpec1D &gx, const GridSpec1D &gy) {
    PlaneField out(gx, gy);
    for (std::size_t i = 0; i < gx.count; ++i)
        for (std::size_t j = 0; j < gy.count; ++j)
            out.at(i, j) = fn(gx.point(i), gy.point(j));
    require_finite(out.values, "sampled plane field");
    return out;
}

TorusField sample_torus(const std::function<cplx(double, double)> &fn, std::size_t nu, std::size_t nv, int m) {
    TorusField out(nu, nv, m);
    for (std::size_t j = 0; j < nu; ++j)
        for (std::size_t k = 0; k < nv; ++k)
            out.at(j, k) = fn(out.u(j), out.v(k));
    require_finite(out.values, "sampled torus field");
    return out;
}

} // namespace heis
