#include "heis/csv.hpp"

#include "heis/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string_view>

namespace heis::csv {

namespace {

constexpr int kDigits = 17;

struct Table {
    std::optional<int> m;
    std::vector<std::vector<double>> rows;
    std::size_t columns = 0;
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        out.push_back(trim(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

std::optional<double> to_double(std::string_view s) {
    double v = 0.0;
    const auto *first = s.data();
    if (!s.empty() && s.front() == '+')
        ++first;
    const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        return std::nullopt;
    return v;
}

Table parse(std::istream &is) {
    Table t;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::string_view sv = trim(line);
        if (sv.empty())
            continue;
        if (sv.front() == '#') {
            sv.remove_prefix(1);
            sv = trim(sv);
            if (sv.substr(0, 2) == "m=") {
                const auto mv = to_double(trim(sv.substr(2)));
                if (!mv || *mv != std::floor(*mv) || *mv < 1)
                    throw ParseError("line " + std::to_string(lineno) + ": bad '# m=' header");
                t.m = static_cast<int>(*mv);
            }
            continue;
        }
        const auto cells = split(sv);
        std::vector<double> row;
        row.reserve(cells.size());
        bool numeric = true;
        for (auto c : cells) {
            auto v = to_double(c);
            if (!v) {
                numeric = false;
                break;
            }
            row.push_back(*v);
        }
        if (!numeric) {
            // a column-name header is tolerated before the first data row
            if (t.rows.empty() && t.columns == 0) {
                t.columns = cells.size();
                continue;
            }
            throw ParseError("line " + std::to_string(lineno) + ": non-numeric cell");
        }
        if (t.columns == 0)
            t.columns = row.size();
        if (row.size() != t.columns)
            throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(t.columns) +
                             " columns, found " + std::to_string(row.size()));
        for (double v : row)
            if (!std::isfinite(v))
                throw ParseError("line " + std::to_string(lineno) + ": non-finite value");
        t.rows.push_back(std::move(row));
    }
    if (t.rows.empty())
        throw ParseError("no data rows");
    return t;
}

void require_columns(const Table &t, std::size_t n, const char *kind) {
    if (t.columns != n)
        throw ParseError(std::string(kind) + " CSV needs " + std::to_string(n) + " columns, found " +
                         std::to_string(t.columns));
}

GridSpec1D infer_grid(const std::vector<double> &pts, const char *axis) {
    if (pts.size() < 2)
        throw ParseError(std::string("axis ") + axis + " needs at least two distinct nodes");
    const double origin = pts.front();
    const double step = (pts.back() - origin) / static_cast<double>(pts.size() - 1);
    if (!(step > 0.0))
        throw ParseError(std::string("axis ") + axis + " is not increasing");
    for (std::size_t k = 0; k < pts.size(); ++k) {
        const double expect = origin + static_cast<double>(k) * step;
        if (std::abs(pts[k] - expect) > 1e-9 * std::max(1.0, std::abs(expect)))
            throw ParseError(std::string("axis ") + axis + " is not uniformly spaced");
    }
    return {origin, step, pts.size()};
}

// block structure of an x-major listing: returns (outer count, inner count)
std::pair<std::size_t, std::size_t> blocks(const Table &t) {
    const double first = t.rows.front()[0];
    std::size_t inner = 0;
    while (inner < t.rows.size() && t.rows[inner][0] == first)
        ++inner;
    if (t.rows.size() % inner != 0)
        throw ParseError("rows do not form a rectangular grid");
    return {t.rows.size() / inner, inner};
}

PlaneField plane_from(const Table &t) {
    require_columns(t, 4, "plane");
    const auto [nx, ny] = blocks(t);
    std::vector<double> xs(nx), ys(ny);
    for (std::size_t i = 0; i < nx; ++i)
        xs[i] = t.rows[i * ny][0];
    for (std::size_t j = 0; j < ny; ++j)
        ys[j] = t.rows[j][1];
    PlaneField f(infer_grid(xs, "x"), infer_grid(ys, "y"));
    for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t j = 0; j < ny; ++j) {
            const auto &r = t.rows[i * ny + j];
            if (r[0] != xs[i] || r[1] != ys[j])
                throw ParseError("plane rows are not in x-major grid order");
            f.at(i, j) = {r[2], r[3]};
        }
    return f;
}

TorusField torus_from(const Table &t) {
    require_columns(t, 4, "torus");
    if (!t.m)
        throw ParseError("torus CSV lacks the '# m=' header");
    const auto [nu, nv] = blocks(t);
    TorusField f(nu, nv, *t.m);
    for (std::size_t j = 0; j < nu; ++j)
        for (std::size_t k = 0; k < nv; ++k) {
            const auto &r = t.rows[j * nv + k];
            if (std::abs(r[0] - f.u(j)) > 1e-9 || std::abs(r[1] - f.v(k)) > 1e-9)
                throw ParseError("torus rows must list the nodes (j/nu, k/nv) in u-major order");
            f.at(j, k) = {r[2], r[3]};
        }
    return f;
}

SampledLine line_from(const Table &t) {
    require_columns(t, 3, "line");
    std::vector<double> ts;
    ts.reserve(t.rows.size());
    for (const auto &r : t.rows)
        ts.push_back(r[0]);
    SampledLine f(infer_grid(ts, "t"));
    for (std::size_t k = 0; k < ts.size(); ++k)
        f[k] = {t.rows[k][1], t.rows[k][2]};
    return f;
}

std::ostream &prep(std::ostream &os) { return os << std::setprecision(kDigits); }

} // namespace

void write(std::ostream &os, const SampledLine &f) {
    prep(os) << "t,re,im\n";
    for (std::size_t k = 0; k < f.size(); ++k)
        os << f.t(k) << ',' << f[k].real() << ',' << f[k].imag() << '\n';
}

void write(std::ostream &os, const PlaneField &f) {
    prep(os) << "x,y,re,im\n";
    for (std::size_t i = 0; i < f.nx(); ++i)
        for (std::size_t j = 0; j < f.ny(); ++j)
            os << f.gx.point(i) << ',' << f.gy.point(j) << ',' << f.at(i, j).real() << ',' << f.at(i, j).imag()
               << '\n';
}

void write(std::ostream &os, const TorusField &f) {
    prep(os) << "# m=" << f.m << "\nu,v,re,im\n";
    for (std::size_t j = 0; j < f.nu; ++j)
        for (std::size_t k = 0; k < f.nv; ++k)
            os << f.u(j) << ',' << f.v(k) << ',' << f.at(j, k).real() << ',' << f.at(j, k).imag() << '\n';
}

SampledLine read_line(std::istream &is) { return line_from(parse(is)); }
PlaneField read_plane(std::istream &is) { return plane_from(parse(is)); }
TorusField read_torus(std::istream &is) { return torus_from(parse(is)); }

AnyField read_any(std::istream &is) {
    const Table t = parse(is);
    if (t.m)
        return torus_from(t);
    if (t.columns == 3)
        return line_from(t);
    if (t.columns == 4)
        return plane_from(t);
    throw ParseError("unrecognised CSV layout with " + std::to_string(t.columns) + " columns");
}

void write_file(const std::string &path, const AnyField &f) {
    std::ofstream os(path);
    if (!os)
        throw Error("cannot open " + path + " for writing");
    std::visit([&](const auto &field) { write(os, field); }, f);
    if (!os)
        throw Error("failed writing " + path);
}

AnyField read_file(const std::string &path) {
    std::ifstream is(path);
    if (!is)
        throw ParseError("cannot open " + path);
    return read_any(is);
}

} // namespace heis::csv
