#pragma once

#include "heis/group.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace heis {

/// Uniform grid origin + k*step, k = 0..count-1.
struct GridSpec1D {
    double origin = 0.0;
    double step = 1.0;
    std::size_t count = 2;

    GridSpec1D() = default;
    GridSpec1D(double origin, double step, std::size_t count);

    /// [-half_width, half_width) sampled with n points.
    static GridSpec1D centered(double half_width, std::size_t n);

    double point(std::size_t k) const { return origin + static_cast<double>(k) * step; }
    double end() const { return point(count); }

    /// Number of steps represented by `shift`, if it is a whole number of steps
    /// to within `tol` (absolute, in coordinate units).
    std::optional<std::ptrdiff_t> steps_of(double shift, double tol = 1e-9) const;
    /// Index of the node at t, if t is a node to within `tol`.
    std::optional<std::ptrdiff_t> index_of(double t, double tol = 1e-9) const;

    bool same_as(const GridSpec1D &other) const;
};

struct SampledLine {
    GridSpec1D grid;
    std::vector<cplx> values;

    SampledLine() = default;
    explicit SampledLine(const GridSpec1D &g);
    SampledLine(const GridSpec1D &g, std::vector<cplx> v);

    std::size_t size() const { return values.size(); }
    double t(std::size_t k) const { return grid.point(k); }
    cplx &operator[](std::size_t k) { return values[k]; }
    const cplx &operator[](std::size_t k) const { return values[k]; }
};

/// Complex field on a rectangle; row index is x, column index is y.
struct PlaneField {
    GridSpec1D gx;
    GridSpec1D gy;
    std::vector<cplx> values;

    PlaneField() = default;
    PlaneField(const GridSpec1D &gx, const GridSpec1D &gy);
    PlaneField(const GridSpec1D &gx, const GridSpec1D &gy, std::vector<cplx> v);

    std::size_t nx() const { return gx.count; }
    std::size_t ny() const { return gy.count; }
    cplx &at(std::size_t ix, std::size_t iy) { return values[ix * gy.count + iy]; }
    const cplx &at(std::size_t ix, std::size_t iy) const { return values[ix * gy.count + iy]; }
};

/// Fundamental-domain samples (j/nu, k/nv) of a function on R^2 obeying
/// f(u+n, v+k) = e^{2 pi i m u k} f(u, v).
struct TorusField {
    std::size_t nu = 0;
    std::size_t nv = 0;
    int m = 1;
    std::vector<cplx> values;

    TorusField() = default;
    TorusField(std::size_t nu, std::size_t nv, int m);
    TorusField(std::size_t nu, std::size_t nv, int m, std::vector<cplx> v);

    double u(std::size_t j) const { return static_cast<double>(j) / static_cast<double>(nu); }
    double v(std::size_t k) const { return static_cast<double>(k) / static_cast<double>(nv); }
    cplx &at(std::size_t j, std::size_t k) { return values[j * nv + k]; }
    const cplx &at(std::size_t j, std::size_t k) const { return values[j * nv + k]; }
};

// Riemann-sum inner products <f, g> = sum f conj(g) dA, conjugate-linear in g.
// Summation is serial, row-major, so results are bit-reproducible.
cplx inner_product(const SampledLine &f, const SampledLine &g);
cplx inner_product(const PlaneField &f, const PlaneField &g);
cplx inner_product(const TorusField &f, const TorusField &g);

double norm(const SampledLine &f);
double norm(const PlaneField &f);
double norm(const TorusField &f);

double max_abs(const std::vector<cplx> &v);

SampledLine operator+(const SampledLine &a, const SampledLine &b);
SampledLine operator-(const SampledLine &a, const SampledLine &b);
SampledLine operator*(cplx c, const SampledLine &a);
PlaneField operator+(const PlaneField &a, const PlaneField &b);
PlaneField operator-(const PlaneField &a, const PlaneField &b);
PlaneField operator*(cplx c, const PlaneField &a);
TorusField operator+(const TorusField &a, const TorusField &b);
TorusField operator-(const TorusField &a, const TorusField &b);
TorusField operator*(cplx c, const TorusField &a);

void require_same_grid(const SampledLine &a, const SampledLine &b);
void require_same_grid(const PlaneField &a, const PlaneField &b);
void require_same_grid(const TorusField &a, const TorusField &b);

/// Value at the integer node (J/nu, K/nv), any J, K, by the covariance rule.
cplx torus_value(const TorusField &f, std::ptrdiff_t J, std::ptrdiff_t K);

/// Extends f off the fundamental domain: with n = [u], k = [v] returns
/// e^{2 pi i m {u} k} f({u}, {v}). ({u}, {v}) must be a node to within 1e-9.
cplx quasi_periodic_eval(const TorusField &f, double u, double v);

SampledLine sample(const std::function<cplx(double)> &fn, const GridSpec1D &grid);
PlaneField sample(const std::function<cplx(double, double)> &fn, const GridSpec1D &gx,
                  const GridSpec1D &gy);
TorusField sample_torus(const std::function<cplx(double, double)> &fn, std::size_t nu,
                        std::size_t nv, int m);

/// Throws NonFinite on NaN or infinity.
void require_finite(const std::vector<cplx> &v, const char *what);

/// floor division / modulo for signed indices
inline std::ptrdiff_t floor_div(std::ptrdiff_t a, std::ptrdiff_t b) {
    std::ptrdiff_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}
inline std::ptrdiff_t floor_mod(std::ptrdiff_t a, std::ptrdiff_t b) { return a - floor_div(a, b) * b; }

} // namespace heis
