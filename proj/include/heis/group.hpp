#pragma once

#include <array>
#include <complex>
#include <cstddef>

namespace heis {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Point (s, x, y) of the polarised Heisenberg group; s is the central coordinate.
struct HeisenbergElement {
    double s = 0.0;
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const HeisenbergElement &, const HeisenbergElement &) = default;
};

/// (s,x,y)(s',x',y') = (s + s' + x y', x + x', y + y')
HeisenbergElement multiply(const HeisenbergElement &a, const HeisenbergElement &b);
HeisenbergElement inverse(const HeisenbergElement &g);
constexpr HeisenbergElement identity() { return {}; }

/// The automorphism (s,x,y) -> (s - xy, -y, x) exchanging the two maximal
/// abelian subgroups; used to move between coordinate and momentum pictures.
HeisenbergElement swap_automorphism(const HeisenbergElement &g);

enum class Subgroup { Centre, AbelianX, AbelianY, Lattice };

const char *to_string(Subgroup tag);

/// Point of the homogeneous space G/H: one coordinate for the abelian
/// subgroups, two for the centre and the lattice.
struct CosetPoint {
    std::array<double, 2> coords{};
    std::size_t dim = 2;
};

/// g = section(projection) * remainder, with remainder in the tagged subgroup.
struct Decomposition {
    CosetPoint projection;
    HeisenbergElement section;
    HeisenbergElement remainder;
};

// Integer and fractional parts with floor semantics; values within 1e-12 of an
// integer are snapped to it first, so the fractional part never lands at 1-eps.
inline constexpr double kSnapTolerance = 1e-12;
double integer_part(double x);
double fractional_part(double x);

CosetPoint project(const HeisenbergElement &g, Subgroup tag);
HeisenbergElement section(const CosetPoint &p, Subgroup tag);
Decomposition decompose(const HeisenbergElement &g, Subgroup tag);

bool is_member(const HeisenbergElement &h, Subgroup tag, double tol = kSnapTolerance);

/// Character of the tagged subgroup: e^{2 pi i param s}. For the lattice the
/// parameter is the integer index m. Throws MembershipError when h is not in
/// the subgroup (tolerance 1e-12 on the constrained coordinates).
cplx character(Subgroup tag, double param, const HeisenbergElement &h);

} // namespace heis
