#include "heis/kernels.hpp"

#include "heis/errors.hpp"

#include <cmath>

namespace heis::kernels {

namespace {

// plain complex arithmetic; std::complex operator* carries inf/nan recovery we do not need
struct Acc {
    double re = 0.0;
    double im = 0.0;

    void fma(const cplx &a, const cplx &b) {
        re += a.real() * b.real() - a.imag() * b.imag();
        im += a.real() * b.imag() + a.imag() * b.real();
    }
    cplx value() const { return {re, im}; }
};

inline cplx mul(const cplx &a, const cplx &b) {
    return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

// table[r][k] = e^{sign 2 pi i hbar a_r b_k}
std::vector<cplx> phase_table(const GridSpec1D &a, const GridSpec1D &b, double hbar, double sign) {
    std::vector<cplx> table(a.count * b.count);
    const auto rows = static_cast<std::ptrdiff_t>(a.count);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t r = 0; r < rows; ++r) {
        const double ar = a.point(static_cast<std::size_t>(r));
        cplx *row = table.data() + static_cast<std::size_t>(r) * b.count;
        for (std::size_t k = 0; k < b.count; ++k)
            row[k] = std::polar(1.0, sign * kTwoPi * hbar * ar * b.point(k));
    }
    return table;
}

std::vector<cplx> roots_of_unity(std::size_t n) {
    std::vector<cplx> w(n);
    for (std::size_t q = 0; q < n; ++q)
        w[q] = std::polar(1.0, kTwoPi * static_cast<double>(q) / static_cast<double>(n));
    return w;
}

} // namespace

PlaneField analysis(const SampledLine &f, const std::vector<cplx> &window, const GridSpec1D &gx,
                    const GridSpec1D &gy, double hbar, double scale) {
    const std::size_t nt = f.size();
    const std::size_t nx = gx.count;
    const std::size_t ny = gy.count;
    if (window.size() != nx * nt)
        throw ShapeMismatch("analysis window table has the wrong size");
    const std::vector<cplx> E = phase_table(gy, f.grid, hbar, +1.0);
    PlaneField out(gx, gy);
    const double w = scale * f.grid.step;
#pragma omp parallel
    {
        std::vector<cplx> g(nt);
#pragma omp for schedule(static)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(nx); ++i) {
            const cplx *win = window.data() + static_cast<std::size_t>(i) * nt;
            std::size_t lo = nt, hi = 0;
            for (std::size_t k = 0; k < nt; ++k) {
                g[k] = mul(f[k], win[k]);
                if (g[k] != cplx{}) {
                    lo = std::min(lo, k);
                    hi = k + 1;
                }
            }
            for (std::size_t j = 0; j < ny; ++j) {
                const cplx *e = E.data() + j * nt;
                Acc acc;
                for (std::size_t k = lo; k < hi; ++k)
                    acc.fma(g[k], e[k]);
                out.at(static_cast<std::size_t>(i), j) = w * acc.value();
            }
        }
    }
    return out;
}

SampledLine synthesis(const PlaneField &F, const std::vector<cplx> &window, const GridSpec1D &out_grid,
                      double hbar, double scale) {
    const std::size_t nt = out_grid.count;
    const std::size_t nx = F.nx();
    const std::size_t ny = F.ny();
    if (window.size() != nt * nx)
        throw ShapeMismatch("synthesis window table has the wrong size");
    const std::vector<cplx> E = phase_table(out_grid, F.gy, hbar, -1.0);
    SampledLine out(out_grid);
    const double w = scale * F.gx.step * F.gy.step;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(nt); ++k) {
        const cplx *e = E.data() + static_cast<std::size_t>(k) * ny;
        const cplx *win = window.data() + static_cast<std::size_t>(k) * nx;
        Acc total;
        for (std::size_t i = 0; i < nx; ++i) {
            if (win[i] == cplx{})
                continue;
            const cplx *row = F.values.data() + i * ny;
            Acc acc;
            for (std::size_t j = 0; j < ny; ++j)
                acc.fma(row[j], e[j]);
            total.fma(win[i], acc.value());
        }
        out[static_cast<std::size_t>(k)] = w * total.value();
    }
    return out;
}

SampledLine fourier_sum(const SampledLine &f, const GridSpec1D &out_grid, double hbar, int sign) {
    SampledLine out(out_grid);
    const double s = sign >= 0 ? 1.0 : -1.0;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(out_grid.count); ++j) {
        const double y = out_grid.point(static_cast<std::size_t>(j));
        Acc acc;
        for (std::size_t k = 0; k < f.size(); ++k)
            acc.fma(f[k], std::polar(1.0, s * kTwoPi * hbar * f.t(k) * y));
        out[static_cast<std::size_t>(j)] = f.grid.step * acc.value();
    }
    return out;
}

TorusField zak(const SampledLine &f, const ZakLayout &layout, int m, std::size_t nu, std::size_t nv, int ntrunc) {
    TorusField out(nu, nv, m);
    const auto N = static_cast<std::ptrdiff_t>(nu * nv);
    const std::vector<cplx> w = roots_of_unity(nu * nv);
    const auto size = static_cast<std::ptrdiff_t>(f.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(nu); ++j) {
        for (std::size_t k = 0; k < nv; ++k) {
            Acc acc;
            for (std::ptrdiff_t n = -ntrunc; n <= ntrunc; ++n) {
                const std::ptrdiff_t idx = layout.origin_index + j * layout.per_node + n * layout.per_unit;
                if (idx < 0 || idx >= size)
                    continue;
                const std::ptrdiff_t J = j + n * static_cast<std::ptrdiff_t>(nu);
                const std::ptrdiff_t q = floor_mod(m * J * static_cast<std::ptrdiff_t>(k), N);
                acc.fma(f[static_cast<std::size_t>(idx)], w[static_cast<std::size_t>(q)]);
            }
            out.at(static_cast<std::size_t>(j), k) = acc.value();
        }
    }
    return out;
}

SampledLine izak(const TorusField &G, const GridSpec1D &out_grid, const std::vector<std::ptrdiff_t> &node_index) {
    if (node_index.size() != out_grid.count)
        throw ShapeMismatch("izak node index list does not match the output grid");
    SampledLine out(out_grid);
    const auto nu = static_cast<std::ptrdiff_t>(G.nu);
    const auto N = static_cast<std::ptrdiff_t>(G.nu * G.nv);
    const std::vector<cplx> w = roots_of_unity(G.nu * G.nv);
    const double dv = 1.0 / static_cast<double>(G.nv);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t t = 0; t < static_cast<std::ptrdiff_t>(out_grid.count); ++t) {
        const std::ptrdiff_t J = node_index[static_cast<std::size_t>(t)];
        const cplx *row = G.values.data() + static_cast<std::size_t>(floor_mod(J, nu)) * G.nv;
        Acc acc;
        for (std::size_t k = 0; k < G.nv; ++k) {
            const std::ptrdiff_t q = floor_mod(-G.m * J * static_cast<std::ptrdiff_t>(k), N);
            acc.fma(row[k], w[static_cast<std::size_t>(q)]);
        }
        out[static_cast<std::size_t>(t)] = dv * acc.value();
    }
    return out;
}

} // namespace heis::kernels
