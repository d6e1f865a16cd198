#include "doctest.h"

#include "slrk/order_conditions.hpp"
#include "slrk/stability.hpp"

#include <cmath>

using namespace slrk;

namespace {

std::vector<Rational> Rs(std::initializer_list<const char*> xs) {
    std::vector<Rational> out;
    for (const char* x : xs) out.push_back(parse_rational(x));
    return out;
}

// Independent real-axis boundary: walk left in small steps on the
// hand-written polynomial, then bisect.
double rk4_real_boundary_oracle() {
    auto phi = [](double x) { return 1 + x + x * x / 2 + x * x * x / 6 + x * x * x * x / 24; };
    double lo = 0.0;
    double x = 0.0;
    while (std::abs(phi(x)) <= 1.0) {
        lo = x;
        x -= 1e-3;
    }
    double hi = x;
    for (int i = 0; i < 100; ++i) {
        const double mid = 0.5 * (lo + hi);
        (std::abs(phi(mid)) <= 1.0 ? lo : hi) = mid;
    }
    return lo;
}

}  // namespace

TEST_SUITE("stability") {

TEST_CASE("stability polynomial coefficients") {
    CHECK(stability_polynomial(rk4_tableau()).coeffs == Rs({"1", "1", "1/2", "1/6", "1/24"}));
    CHECK(stability_polynomial(rk6_tableau()).coeffs ==
          Rs({"1", "1", "1/2", "1/6", "1/24", "1/120", "1/720", "29/178200"}));
    CHECK(stability_polynomial(euler_tableau()).coeffs == Rs({"1", "1"}));
    CHECK(stability_polynomial(heun3_tableau()).coeffs == Rs({"1", "1", "1/2", "1/6"}));
}

TEST_CASE("coefficients match the exponential series up to the verified order") {
    for (const auto& name : builtin_tableau_names()) {
        const Tableau t = *builtin_tableau(name);
        const auto phi = stability_polynomial(t);
        CHECK(phi.degree() <= t.stages());
        Rational factorial = 1;
        const int p = verified_order(t);
        for (int k = 0; k <= p; ++k) {
            if (k > 0) factorial *= k;
            CHECK(phi.coeffs[static_cast<std::size_t>(k)] == Rational(1) / factorial);
        }
    }
}

TEST_CASE("two-rate amplification identities") {
    const auto phi = stability_polynomial(rk6_tableau());
    const std::complex<double> z1(-0.8, 0.6);
    CHECK(std::abs(slrk_amplification(phi, z1, 0.0) - phi(z1)) == 0.0);
    const std::complex<double> z2(-3.0, 1.0);
    CHECK(std::abs(slrk_amplification(phi, 0.0, z2) - std::exp(z2)) <= 1e-15);
    for (double y : {-7.0, 0.3, 12.0}) {
        CHECK(std::abs(std::abs(slrk_amplification(phi, z1, {0.0, y})) - std::abs(phi(z1))) <= 1e-14);
    }
}

TEST_CASE("forward Euler region is the unit disc around -1") {
    const auto phi = stability_polynomial(euler_tableau());
    const auto region = region_boundary(phi, 0.0, 64);
    CHECK(region.flagged_angles.empty());
    CHECK(region.points.size() == 64);
    for (const auto& z : region.points) {
        // The ray along +x only touches the circle at the origin.
        CHECK(std::abs(std::abs(z + 1.0) - 1.0) <= 1e-6);
    }
}

TEST_CASE("boundary points have unit amplification") {
    for (const char* name : {"rk4", "rk6"}) {
        const auto phi = stability_polynomial(*builtin_tableau(name));
        for (std::complex<double> z2 : {std::complex<double>(0.0), std::complex<double>(-10.0, 0.0)}) {
            const auto region = region_boundary(phi, z2, 128);
            CHECK(region.points.size() + region.flagged_angles.size() == 128);
            for (const auto& z : region.points) CHECK(std::abs(std::abs(slrk_amplification(phi, z, z2)) - 1.0) <= 1e-8);
        }
    }
    CHECK_THROWS(region_boundary(stability_polynomial(rk4_tableau()), 0.0, 8));
}

TEST_CASE("RK4 real-axis boundary") {
    const auto phi = stability_polynomial(rk4_tableau());
    const double oracle = rk4_real_boundary_oracle();
    CHECK(oracle == doctest::Approx(-2.7853).epsilon(1e-4));
    const double x = real_axis_boundary(phi, 0.0);
    CHECK(std::abs(x - oracle) <= 1e-6);
    CHECK(std::abs(std::abs(phi(x)) - 1.0) <= 1e-6);
    // The ray at angle pi gives the same crossing.
    const auto region = region_boundary(phi, 0.0, 64);
    CHECK(std::abs(region.points[32].real() - oracle) <= 1e-6);
}

TEST_CASE("boundary at zero stiffness is non-positive with unit modulus") {
    for (const auto& name : builtin_tableau_names()) {
        const auto phi = stability_polynomial(*builtin_tableau(name));
        const double x = real_axis_boundary(phi, 0.0);
        CHECK(x <= 0.0);
        CHECK(std::abs(std::abs(phi(x)) - 1.0) <= 1e-6);
    }
    CHECK(real_axis_boundary(stability_polynomial(euler_tableau()), 0.0) == doctest::Approx(-2.0).epsilon(1e-9));
    CHECK_THROWS(real_axis_boundary(stability_polynomial(rk4_tableau()), 1.0));
}

TEST_CASE("boundary grows like the p-th root of exp(-z2)") {
    const auto phi = stability_polynomial(rk4_tableau());
    const double ratio = real_axis_boundary(phi, -8.0) / real_axis_boundary(phi, -4.0);
    CHECK(std::abs(ratio / std::exp(1.0) - 1.0) <= 0.15);
}

TEST_CASE("low order wins in the stiff regime") {
    const auto phi4 = stability_polynomial(rk4_tableau());
    const auto phi6 = stability_polynomial(rk6_tableau());
    CHECK(std::abs(real_axis_boundary(phi4, -10.0)) > std::abs(real_axis_boundary(phi6, -10.0)));
    CHECK(std::abs(real_axis_boundary(phi4, 0.0)) < std::abs(real_axis_boundary(phi6, 0.0)));
}

TEST_CASE("imaginary stiffness leaves the region unchanged") {
    const auto phi = stability_polynomial(rk6_tableau());
    const auto plain = region_boundary(phi, 0.0, 96);
    const auto shifted = region_boundary(phi, {0.0, 5.3}, 96);
    REQUIRE(plain.points.size() == shifted.points.size());
    for (std::size_t i = 0; i < plain.points.size(); ++i) CHECK(std::abs(plain.points[i] - shifted.points[i]) <= 1e-6);
}

}  // TEST_SUITE
