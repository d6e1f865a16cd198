#include "doctest.h"

#include "slrk/integrator.hpp"

#include <cmath>
#include <random>

using namespace slrk;

namespace {

double rel(const Vector& x, const Vector& y) { return (x - y).norm() / y.norm(); }

Vector random_vector(std::mt19937_64& rng, Eigen::Index n) {
    std::normal_distribution<double> normal;
    Vector v(n);
    for (auto& x : v) x = Complex(normal(rng), normal(rng));
    return v;
}

// Stiff diagonal spectrum: real parts in [-50, 0], modest imaginary parts.
// exp(lambda t) evaluated in extended precision.
Complex exact_mode(Complex lambda, long double t) {
    const auto e = std::exp(std::complex<long double>(lambda.real(), lambda.imag()) * t);
    return {static_cast<double>(e.real()), static_cast<double>(e.imag())};
}

Vector stiff_spectrum(std::mt19937_64& rng, Eigen::Index n) {
    std::uniform_real_distribution<double> re(-50.0, 0.0), im(-5.0, 5.0);
    Vector v(n);
    for (auto& x : v) x = Complex(re(rng), im(rng));
    return v;
}

// Quadratic coupling plus a constant source.
RhsFunction quadratic_rhs(std::mt19937_64& rng, Eigen::Index n) {
    std::normal_distribution<double> normal;
    Matrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) = Complex(normal(rng), normal(rng)) / double(n);
    }
    Vector source = random_vector(rng, n);
    return [m, source](const Vector& u) -> Vector { return 0.3 * (m * u).cwiseProduct(u) + source; };
}

Complex poly(const std::vector<double>& c, Complex z) {
    Complex acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

const std::vector<double> phi_rk4{1.0, 1.0, 1.0 / 2, 1.0 / 6, 1.0 / 24};
const std::vector<double> phi_rk6{1.0, 1.0, 1.0 / 2, 1.0 / 6, 1.0 / 24, 1.0 / 120, 1.0 / 720, 29.0 / 178200};

OdeProblem scalar_problem(Complex lambda1, std::optional<Complex> lambda2) {
    OdeProblem p;
    p.dim = 1;
    p.g = [lambda1](const Vector& u) -> Vector { return lambda1 * u; };
    if (lambda2) p.A = LinearOperator::diagonal(Vector::Constant(1, *lambda2));
    return p;
}

}  // namespace

TEST_SUITE("integrator") {

TEST_CASE("zero right-hand side leaves the state unchanged") {
    OdeProblem p;
    p.dim = 3;
    p.g = [](const Vector& u) -> Vector { return Vector::Zero(u.size()); };
    const StepPlan plan(p, rk6_tableau(), 0.1);
    std::mt19937_64 rng(1);
    const Vector u = random_vector(rng, 3);
    CHECK(rk_step(plan, u) == u);
}

TEST_CASE("scalar amplification of classical steps") {
    for (Complex z : {Complex(-0.7, 0.0), Complex(0.3, 1.1), Complex(-2.0, -0.5), Complex(1.0, 0.0)}) {
        const double h = 0.5;
        const Vector u = Vector::Constant(1, Complex(0.8, -0.3));
        const StepPlan p4(scalar_problem(z / h, std::nullopt), rk4_tableau(), h);
        const StepPlan p6(scalar_problem(z / h, std::nullopt), rk6_tableau(), h);
        const Complex r4 = rk_step(p4, u)[0] / u[0];
        const Complex r6 = rk_step(p6, u)[0] / u[0];
        CHECK(std::abs(r4 - poly(phi_rk4, z)) <= 1e-14 * std::abs(poly(phi_rk4, z)) + 1e-15);
        CHECK(std::abs(r6 - poly(phi_rk6, z)) <= 1e-13 * std::abs(poly(phi_rk6, z)) + 1e-15);
    }
}

TEST_CASE("general Lawson step with zero nonlinearity is the exact exponential") {
    std::mt19937_64 rng(2);
    const Vector lambda = stiff_spectrum(rng, 5);
    const Vector u = random_vector(rng, 5);
    const RhsFunction zero = [](const Vector& v) -> Vector { return Vector::Zero(v.size()); };
    const Vector out = lawson_step_general(rk6_tableau(), zero, LinearOperator::diagonal(lambda), u, 0.1);
    const Vector exact = (lambda * 0.1).array().exp().matrix().cwiseProduct(u);
    CHECK(rel(out, exact) <= 1e-15);
}

TEST_CASE("general Lawson step with zero operator is the classical step") {
    std::mt19937_64 rng(3);
    const RhsFunction g = quadratic_rhs(rng, 4);
    const Vector u = random_vector(rng, 4);
    for (const auto& name : builtin_tableau_names()) {
        const Tableau t = *builtin_tableau(name);
        OdeProblem p;
        p.g = g;
        p.dim = 4;
        const StepPlan plan(p, t, 0.1);
        const Vector expected = rk_step(plan, u);
        CHECK(rel(lawson_step_general(t, g, LinearOperator::zero(4), u, 0.1), expected) <= 1e-14);
    }
}

TEST_CASE("simple Lawson step equals the general process on stiff diagonal problems") {
    std::mt19937_64 rng(4);
    for (const char* name : {"rk4", "heun3", "rk6", "euler"}) {
        const Tableau t = *builtin_tableau(name);
        double worst = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            const Eigen::Index n = 6;
            OdeProblem p;
            p.dim = n;
            p.g = quadratic_rhs(rng, n);
            p.A = LinearOperator::diagonal(stiff_spectrum(rng, n));
            const Vector u = random_vector(rng, n);
            const StepPlan plan(p, t, 0.1);
            const Vector oracle = lawson_step_general(t, p.g, *p.A, u, 0.1);
            worst = std::max(worst, (slrk_step(plan, u) - oracle).lpNorm<Eigen::Infinity>() /
                                        oracle.lpNorm<Eigen::Infinity>());
        }
        INFO(name);
        CHECK(worst <= 1e-12);
    }
}

TEST_CASE("zero operator makes the Lawson step classical") {
    std::mt19937_64 rng(5);
    OdeProblem with;
    with.dim = 4;
    with.g = quadratic_rhs(rng, 4);
    OdeProblem without = with;
    with.A = LinearOperator::zero(4);
    const Vector u = random_vector(rng, 4);
    for (const char* name : {"rk4", "heun3", "rk6"}) {
        const Tableau t = *builtin_tableau(name);
        CHECK(rel(slrk_step(StepPlan(with, t, 0.2), u), rk_step(StepPlan(without, t, 0.2), u)) <= 1e-14);
    }
}

TEST_CASE("two-rate scalar amplification") {
    const Tableau t = rk6_tableau();
    for (double re2 : {0.0, -3.0, -20.0}) {
        for (Complex z1 : {Complex(-1.0, 0.5), Complex(0.4, -1.2)}) {
            const Complex z2(re2, 0.7);
            const double h = 0.25;
            const StepPlan plan(scalar_problem(z1 / h, z2 / h), t, h);
            const Vector u = Vector::Constant(1, 1.0);
            const Complex expected = std::exp(z2) * poly(phi_rk6, z1);
            CHECK(std::abs(slrk_step(plan, u)[0] - expected) <= 1e-13 * std::abs(expected) + 1e-300);
        }
    }
}

TEST_CASE("imaginary stiff rate leaves the amplification modulus unchanged") {
    const double h = 0.1;
    for (double y : {0.5, 3.0, 40.0}) {
        const Complex z1(-0.9, 0.3);
        const StepPlan plan(scalar_problem(z1 / h, Complex(0.0, y) / h), rk4_tableau(), h);
        const Complex r = slrk_step(plan, Vector::Constant(1, 1.0))[0];
        CHECK(std::abs(std::abs(r) - std::abs(poly(phi_rk4, z1))) <= 1e-13);
    }
}

TEST_CASE("propagator application counts") {
    OdeProblem p;
    p.dim = 2;
    p.g = [](const Vector& u) -> Vector { return -u; };
    p.A = LinearOperator::diagonal(Vector::Constant(2, -1.0));
    const Vector u = Vector::Ones(2);

    StepStats rk6;
    slrk_step(StepPlan(p, rk6_tableau(), 0.1), u, &rk6);
    CHECK(rk6.state_propagations == 6);
    CHECK(rk6.slope_propagations == 1 + 3 + 4 + 5 + 6 + 7);
    CHECK(rk6.rhs_evaluations == 8);

    const StepPlan rk4_plan(p, rk4_tableau(), 0.1);
    CHECK(rk4_plan.stage_advances() == std::vector<bool>{false, true, false, true});
    StepStats rk4;
    slrk_step(rk4_plan, u, &rk4);
    CHECK(rk4.state_propagations == 2);
    CHECK(rk4.slope_propagations == 1 + 3);

    // c ends at 2/3, so one closing application carries all three slopes.
    const StepPlan heun_plan(p, heun3_tableau(), 0.1);
    CHECK(heun_plan.closing_applications() == 1);
    StepStats heun;
    slrk_step(heun_plan, u, &heun);
    CHECK(heun.state_propagations == 3);
    CHECK(heun.slope_propagations == 1 + 2 + 3);
}

TEST_CASE("plan preconditions") {
    OdeProblem p = scalar_problem(-1.0, Complex(-2.0));
    const Tableau uneven("uneven", {{}, {Rational(1, 4)}, {Rational(1, 2), Rational(1, 2)}},
                         {Rational(1, 3), Rational(1, 3), Rational(1, 3)});
    CHECK_THROWS_AS(StepPlan(p, uneven, 0.1), std::invalid_argument);
    const Tableau beyond("beyond", {{}, {Rational(1)}, {Rational(1), Rational(1)}},
                         {Rational(1, 3), Rational(1, 3), Rational(1, 3)});
    CHECK_THROWS_AS(StepPlan(p, beyond, 0.1), std::invalid_argument);
    const Tableau fractional("fractional", {{}, {Rational(2, 5)}}, {Rational(1, 2), Rational(1, 2)});
    CHECK_THROWS_AS(StepPlan(p, fractional, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(StepPlan(p, rk4_tableau(), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(rk_step(StepPlan(p, rk4_tableau(), 0.1), Vector::Ones(1)), std::invalid_argument);
    // Non-conforming tableaux are fine without a linear part.
    CHECK_NOTHROW(StepPlan(scalar_problem(-1.0, std::nullopt), uneven, 0.1));
}

TEST_CASE("non-finite values abort the step") {
    OdeProblem p;
    p.dim = 1;
    p.g = [](const Vector& u) -> Vector { return u.array().square().matrix(); };
    const StepPlan plan(p, rk4_tableau(), 1.0);
    CHECK_THROWS_AS(rk_step(plan, Vector::Constant(1, 1e300)), NonFiniteError);
    CHECK_THROWS_AS(rk_step(plan, Vector::Constant(1, std::nan(""))), NonFiniteError);
}

TEST_CASE("linear problems integrate exactly") {
    std::mt19937_64 rng(6);
    const Eigen::Index n = 8;
    const Vector lambda = stiff_spectrum(rng, n);
    OdeProblem p;
    p.dim = n;
    p.g = [](const Vector& u) -> Vector { return Vector::Zero(u.size()); };
    p.A = LinearOperator::diagonal(lambda);
    const Vector u0 = random_vector(rng, n);
    for (const char* name : {"rk4", "rk6", "heun3", "euler"}) {
        for (int steps : {1, 10, 50}) {
            const double t = 0.5;
            const StepPlan plan(p, *builtin_tableau(name), t / steps);
            const auto result = integrate(plan, u0, steps, true);
            CHECK(result.trajectory.size() == static_cast<std::size_t>(steps) + 1);
            CHECK(result.trajectory.back() == result.final_state);
            const long double elapsed = static_cast<long double>(plan.h()) * steps;
            for (Eigen::Index k = 0; k < n; ++k) {
                const Complex exact = exact_mode(lambda[k], elapsed) * u0[k];
                CHECK(std::abs(result.final_state[k] - exact) <= steps * 1e-15 * std::abs(exact) + 1e-300);
            }
        }
    }
}

TEST_CASE("halving the step reduces error by 2^p") {
    // u' = u (1 - u), u(0) = 0.1: u(t) = 1 / (1 + 9 e^{-t})
    OdeProblem p;
    p.dim = 1;
    p.g = [](const Vector& u) -> Vector { return u.cwiseProduct(Vector::Ones(1) - u); };
    const Vector u0 = Vector::Constant(1, 0.1);
    const double t = 2.0;
    const double exact = 1.0 / (1.0 + 9.0 * std::exp(-t));
    auto error = [&](const Tableau& tab, int steps) {
        const StepPlan plan(p, tab, t / steps);
        return std::abs(integrate(plan, u0, steps).final_state[0] - exact);
    };
    const double r4 = error(rk4_tableau(), 10) / error(rk4_tableau(), 20);
    CHECK(r4 == doctest::Approx(16.0).epsilon(0.15));
    const double p6 = std::log2(error(rk6_tableau(), 16) / error(rk6_tableau(), 32));
    CHECK(std::abs(p6 - 6.0) <= 0.5);
}

TEST_CASE("Lawson integration splits the rates") {
    // u' = -u^2 + lambda u with the linear part in A agrees with the same
    // problem integrated classically at a small step.
    const Complex lambda(-3.0, 0.0);
    OdeProblem lawson;
    lawson.dim = 1;
    lawson.g = [](const Vector& u) -> Vector { return -u.cwiseProduct(u); };
    lawson.A = LinearOperator::diagonal(Vector::Constant(1, lambda));
    OdeProblem classical;
    classical.dim = 1;
    classical.g = [lambda](const Vector& u) -> Vector { return -u.cwiseProduct(u) + lambda * u; };
    const Vector u0 = Vector::Constant(1, 0.7);
    const Vector a = integrate(StepPlan(lawson, rk6_tableau(), 0.05), u0, 20).final_state;
    const Vector b = integrate(StepPlan(classical, rk6_tableau(), 0.01), u0, 100).final_state;
    CHECK(std::abs(a[0] - b[0]) <= 1e-8);
    CHECK_THROWS(integrate(StepPlan(lawson, rk6_tableau(), 0.05), u0, 0));
}

}  // TEST_SUITE
