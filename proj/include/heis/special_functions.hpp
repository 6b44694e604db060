#pragma once

#include "heis/group.hpp"

namespace heis {

/// Truncation policy for the theta series: terms |n| <= nmax where
/// nmax = ceil(sqrt(kappa ln(2/eps) / (pi m))) + 1.
struct ThetaTruncation {
    double eps = 1e-14;

    int nmax(int m, double kappa) const;
};

/// Sum_n e^{-(pi m / kappa) n^2} e^{2 pi i n omega}, the theta-3 series with
/// nome e^{-pi m / kappa}. For complex omega the range is widened by
/// ceil(kappa |Im omega| / m) so that the dominant terms are always included.
/// Terms are added from the largest |n| inward with compensated summation.
/// Throws DivergenceGuard if any term exceeds 1e100 in modulus.
cplx jacobi_theta_series(int m, double kappa, cplx omega, const ThetaTruncation &trunc = {});

} // namespace heis
