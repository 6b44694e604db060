#include "heis/group.hpp"

#include "heis/errors.hpp"

#include <cmath>
#include <string>

namespace heis {

HeisenbergElement multiply(const HeisenbergElement &a, const HeisenbergElement &b) {
    return {a.s + b.s + a.x * b.y, a.x + b.x, a.y + b.y};
}

HeisenbergElement inverse(const HeisenbergElement &g) { return {-g.s + g.x * g.y, -g.x, -g.y}; }

HeisenbergElement swap_automorphism(const HeisenbergElement &g) { return {g.s - g.x * g.y, -g.y, g.x}; }

const char *to_string(Subgroup tag) {
    switch (tag) {
    case Subgroup::Centre:
        return "Centre";
    case Subgroup::AbelianX:
        return "AbelianX";
    case Subgroup::AbelianY:
        return "AbelianY";
    case Subgroup::Lattice:
        return "Lattice";
    }
    return "?";
}

double integer_part(double x) {
    const double r = std::round(x);
    if (std::abs(x - r) <= kSnapTolerance)
        return r;
    return std::floor(x);
}

double fractional_part(double x) {
    const double r = std::round(x);
    if (std::abs(x - r) <= kSnapTolerance)
        return 0.0;
    return x - std::floor(x);
}

CosetPoint project(const HeisenbergElement &g, Subgroup tag) {
    switch (tag) {
    case Subgroup::Centre:
        return {{g.x, g.y}, 2};
    case Subgroup::AbelianX:
        return {{g.x, 0.0}, 1};
    case Subgroup::AbelianY:
        return {{g.y, 0.0}, 1};
    case Subgroup::Lattice:
        return {{fractional_part(g.x), fractional_part(g.y)}, 2};
    }
    return {};
}

HeisenbergElement section(const CosetPoint &p, Subgroup tag) {
    switch (tag) {
    case Subgroup::Centre:
    case Subgroup::Lattice:
        return {0.0, p.coords[0], p.coords[1]};
    case Subgroup::AbelianX:
        return {0.0, p.coords[0], 0.0};
    case Subgroup::AbelianY:
        return {0.0, 0.0, p.coords[0]};
    }
    return {};
}

namespace {

HeisenbergElement remainder(const HeisenbergElement &g, Subgroup tag) {
    switch (tag) {
    case Subgroup::Centre:
        return {g.s, 0.0, 0.0};
    case Subgroup::AbelianX:
        return {g.s - g.x * g.y, 0.0, g.y};
    case Subgroup::AbelianY:
        return {g.s, g.x, 0.0};
    case Subgroup::Lattice: {
        const double ix = integer_part(g.x);
        const double iy = integer_part(g.y);
        return {g.s - fractional_part(g.x) * iy, ix, iy};
    }
    }
    return {};
}

bool near_integer(double v, double tol) { return std::abs(v - std::round(v)) <= tol; }

} // namespace

Decomposition decompose(const HeisenbergElement &g, Subgroup tag) {
    const CosetPoint p = project(g, tag);
    return {p, section(p, tag), remainder(g, tag)};
}

bool is_member(const HeisenbergElement &h, Subgroup tag, double tol) {
    switch (tag) {
    case Subgroup::Centre:
        return std::abs(h.x) <= tol && std::abs(h.y) <= tol;
    case Subgroup::AbelianX:
        return std::abs(h.x) <= tol;
    case Subgroup::AbelianY:
        return std::abs(h.y) <= tol;
    case Subgroup::Lattice:
        return near_integer(h.x, tol) && near_integer(h.y, tol);
    }
    return false;
}

cplx character(Subgroup tag, double param, const HeisenbergElement &h) {
    if (!is_member(h, tag))
        throw MembershipError(std::string("element is not in subgroup ") + to_string(tag));
    if (tag == Subgroup::Lattice && !near_integer(param, 0.0))
        throw MembershipError("lattice character index must be an integer");
    return std::polar(1.0, kTwoPi * param * h.s);
}

} // namespace heis
