#pragma once

#include "slrk/rational.hpp"
#include "slrk/tableau.hpp"

#include <complex>
#include <vector>

namespace slrk {

/// Phi(z) = sum_k coeffs[k] z^k, the one-step amplification on u' = lambda u
/// with z = h lambda.
struct StabilityPolynomial {
    std::vector<Rational> coeffs;

    std::size_t degree() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    std::complex<double> operator()(std::complex<double> z) const;
};

/// coeffs[0] = 1, coeffs[k] = b^T A^(k-1) 1; trailing zeros dropped.
StabilityPolynomial stability_polynomial(const Tableau& tab);

/// e^{z2} Phi(z1): the stiff rate z2 is propagated exactly.
std::complex<double> slrk_amplification(const StabilityPolynomial& phi, std::complex<double> z1,
                                        std::complex<double> z2);

struct RegionBoundary {
    std::complex<double> z2;
    /// One point per ray that crossed |e^{z2} Phi| = 1, ordered by angle.
    std::vector<std::complex<double>> points;
    /// Angles of rays that never reached the stable side.
    std::vector<double> flagged_angles;
};

/// For each of `angular_samples` rays from the origin, the outermost radius
/// where |e^{z2} Phi(z)| = 1, located by bisection.
RegionBoundary region_boundary(const StabilityPolynomial& phi, std::complex<double> z2, int angular_samples);

/// Most negative x with |e^{z2} Phi(t)| <= 1 for all t in [x, 0].
double real_axis_boundary(const StabilityPolynomial& phi, double z2);

}  // namespace slrk
