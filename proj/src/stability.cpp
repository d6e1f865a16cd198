#include "slrk/stability.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace slrk {

namespace {

constexpr int radial_samples = 4000;

std::vector<double> float_coeffs(const StabilityPolynomial& phi) {
    std::vector<double> out;
    for (const auto& c : phi.coeffs) out.push_back(to_double(c));
    return out;
}

std::complex<double> horner(const std::vector<double>& coeffs, std::complex<double> z) {
    std::complex<double> acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

// Radius beyond which |e^{z2} Phi(z)| > 1 for every direction.
double escape_radius(const std::vector<double>& coeffs, double scale) {
    const std::size_t d = coeffs.size() - 1;
    const double lead = std::abs(coeffs[d]);
    for (double r = 1.0; r < 1e12; r *= 2.0) {
        double lower = lead * std::pow(r, static_cast<double>(d));
        for (std::size_t k = 0; k < d; ++k) lower -= std::abs(coeffs[k]) * std::pow(r, static_cast<double>(k));
        if (lower * scale > 1.0) return r;
    }
    throw std::runtime_error("no escape radius below 1e12");
}

template <typename F>
double bisect(F excess, double stable, double unstable) {
    for (int it = 0; it < 200 && std::abs(unstable - stable) > 1e-15 * std::max(1.0, std::abs(unstable)); ++it) {
        const double mid = 0.5 * (stable + unstable);
        (excess(mid) <= 0.0 ? stable : unstable) = mid;
    }
    return 0.5 * (stable + unstable);
}

}  // namespace

std::complex<double> StabilityPolynomial::operator()(std::complex<double> z) const {
    return horner(float_coeffs(*this), z);
}

StabilityPolynomial stability_polynomial(const Tableau& tab) {
    const std::size_t s = tab.stages();
    StabilityPolynomial phi;
    phi.coeffs.push_back(1);
    std::vector<Rational> power(s, Rational(1));  // A^(k-1) 1
    for (std::size_t k = 1; k <= s; ++k) {
        Rational coeff = 0;
        for (std::size_t i = 0; i < s; ++i) coeff += tab.b()[i] * power[i];
        phi.coeffs.push_back(coeff);
        std::vector<Rational> next(s, Rational(0));
        for (std::size_t i = 0; i < s; ++i) {
            for (std::size_t j = 0; j < i; ++j) next[i] += tab.a(i, j) * power[j];
        }
        power = std::move(next);
    }
    while (phi.coeffs.size() > 1 && phi.coeffs.back() == 0) phi.coeffs.pop_back();
    return phi;
}

std::complex<double> slrk_amplification(const StabilityPolynomial& phi, std::complex<double> z1,
                                        std::complex<double> z2) {
    return std::exp(z2) * phi(z1);
}

RegionBoundary region_boundary(const StabilityPolynomial& phi, std::complex<double> z2, int angular_samples) {
    if (angular_samples < 16) throw std::invalid_argument("angular_samples must be >= 16");
    if (phi.degree() == 0) throw std::invalid_argument("constant stability polynomial has no boundary");
    const auto coeffs = float_coeffs(phi);
    const double scale = std::abs(std::exp(z2));
    const double radius = escape_radius(coeffs, scale);

    RegionBoundary boundary;
    boundary.z2 = z2;
    for (int a = 0; a < angular_samples; ++a) {
        const double theta = 2.0 * std::numbers::pi * a / angular_samples;
        const std::complex<double> dir = std::polar(1.0, theta);
        auto excess = [&](double r) { return scale * std::abs(horner(coeffs, r * dir)) - 1.0; };
        int last_stable = -1;
        for (int k = radial_samples; k >= 0; --k) {
            if (excess(radius * k / radial_samples) <= 0.0) {
                last_stable = k;
                break;
            }
        }
        if (last_stable < 0) {
            boundary.flagged_angles.push_back(theta);
            continue;
        }
        const double r = bisect(excess, radius * last_stable / radial_samples,
                                radius * (last_stable + 1) / radial_samples);
        boundary.points.push_back(r * dir);
    }
    return boundary;
}

double real_axis_boundary(const StabilityPolynomial& phi, double z2) {
    if (z2 > 0.0) throw std::invalid_argument("z2 must be <= 0");
    if (phi.degree() == 0) throw std::invalid_argument("constant stability polynomial has no boundary");
    const auto coeffs = float_coeffs(phi);
    const double scale = std::exp(z2);
    const double radius = escape_radius(coeffs, scale);
    auto excess = [&](double x) { return scale * std::abs(horner(coeffs, x)) - 1.0; };
    const double step = radius / (20 * radial_samples);
    double stable = 0.0;
    for (int k = 1; k <= 20 * radial_samples + 1; ++k) {
        const double x = -step * k;
        if (excess(x) > 0.0) return bisect(excess, stable, x);
        stable = x;
    }
    return stable;
}

}  // namespace slrk
