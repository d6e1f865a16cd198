#include "slrk/integrator.hpp"

#include <string>

namespace slrk {

namespace {

Vector evaluate(const RhsFunction& g, const Vector& stage, double h, std::size_t index) {
    if (!stage.allFinite()) {
        throw NonFiniteError("non-finite stage value at stage " + std::to_string(index + 1));
    }
    Vector k = g(stage);
    if (!k.allFinite()) {
        throw NonFiniteError("right-hand side returned non-finite values at stage " + std::to_string(index + 1));
    }
    k *= h;
    return k;
}

// fraction * h without rounding the fraction to double first.
long double scaled_step(const Rational& fraction, double h) {
    const auto num = boost::multiprecision::numerator(fraction).convert_to<long double>();
    const auto den = boost::multiprecision::denominator(fraction).convert_to<long double>();
    return static_cast<long double>(h) * num / den;
}

}  // namespace

StepPlan::StepPlan(OdeProblem problem, const Tableau& tableau, double h)
    : problem_(std::move(problem)), tableau_(to_float(tableau)), spacing_(spacing_report(tableau)), h_(h) {
    if (!problem_.g) throw std::invalid_argument("problem has no right-hand side");
    if (!std::isfinite(h) || h <= 0.0) throw std::invalid_argument("timestep must be positive and finite");
    const std::size_t s = tableau.stages();
    advances_.assign(s, false);
    if (!problem_.A) return;
    if (problem_.A->size() != problem_.dim) {
        throw std::invalid_argument("linear operator size does not match the problem dimension");
    }
    if (!spacing_.conforming) {
        throw std::invalid_argument("tableau '" + tableau.name() +
                                    "' does not have ordered, equally spaced abscissae");
    }
    const Rational remaining = Rational(1) - tableau.c().back();
    if (remaining < 0) throw std::invalid_argument("abscissae beyond 1 are not supported");
    if (spacing_.delta_c) {
        for (std::size_t j = 1; j < s; ++j) advances_[j] = spacing_.increments[j - 1] == Increment::step;
        const Rational steps = remaining / *spacing_.delta_c;
        if (boost::multiprecision::denominator(steps) != 1) {
            throw std::invalid_argument("1 - c_s is not a whole number of abscissa steps");
        }
        closing_ = boost::multiprecision::numerator(steps).convert_to<int>();
        propagator_.emplace(*problem_.A, scaled_step(*spacing_.delta_c, h));
    } else if (remaining > 0) {
        closing_ = 1;
        propagator_.emplace(*problem_.A, scaled_step(remaining, h));
    }
}

Vector rk_step(const StepPlan& plan, const Vector& u, StepStats* stats) {
    if (plan.problem().A) throw std::invalid_argument("rk_step needs a plan without a linear operator");
    const auto& tab = plan.tableau();
    const std::size_t s = tab.stages();
    const double h = plan.h();
    std::vector<Vector> k(s);
    for (std::size_t i = 0; i < s; ++i) {
        Vector stage = u;
        for (std::size_t j = 0; j < i; ++j) {
            if (tab.a[i][j] != 0.0) stage += tab.a[i][j] * k[j];
        }
        k[i] = evaluate(plan.problem().g, stage, h, i);
    }
    if (stats) stats->rhs_evaluations += static_cast<int>(s);
    Vector next = u;
    for (std::size_t i = 0; i < s; ++i) {
        if (tab.b[i] != 0.0) next += tab.b[i] * k[i];
    }
    return next;
}

Vector slrk_step(const StepPlan& plan, const Vector& u, StepStats* stats) {
    const auto& tab = plan.tableau();
    const std::size_t s = tab.stages();
    const double h = plan.h();
    const auto& e = plan.propagator();
    const auto& advances = plan.stage_advances();

    auto propagate = [&](Vector& base, std::vector<Vector>& k, std::size_t count) {
        e->apply_in_place(base);
        for (std::size_t m = 0; m < count; ++m) e->apply_in_place(k[m]);
        if (stats) {
            stats->state_propagations += 1;
            stats->slope_propagations += static_cast<int>(count);
        }
    };

    Vector base = u;
    std::vector<Vector> k(s);
    k[0] = evaluate(plan.problem().g, base, h, 0);
    for (std::size_t j = 1; j < s; ++j) {
        if (e && advances[j]) propagate(base, k, j);
        Vector stage = base;
        for (std::size_t m = 0; m < j; ++m) {
            if (tab.a[j][m] != 0.0) stage += tab.a[j][m] * k[m];
        }
        k[j] = evaluate(plan.problem().g, stage, h, j);
    }
    if (stats) stats->rhs_evaluations += static_cast<int>(s);
    if (e) {
        for (int r = 0; r < plan.closing_applications(); ++r) propagate(base, k, s);
    }
    for (std::size_t i = 0; i < s; ++i) {
        if (tab.b[i] != 0.0) base += tab.b[i] * k[i];
    }
    return base;
}

Vector lawson_step_general(const Tableau& tableau, const RhsFunction& g, const LinearOperator& A, const Vector& u,
                           double h) {
    if (!A.is_diagonal()) throw std::invalid_argument("lawson_step_general supports diagonal operators only");
    if (A.size() != u.size()) throw std::invalid_argument("operator and state dimensions differ");
    const auto tab = to_float(tableau);
    const std::size_t s = tab.stages();
    const Vector& lambda = A.spectrum();
    auto exp_of = [&](double fraction) -> Vector { return (lambda * (fraction * h)).array().exp().matrix(); };

    std::vector<Vector> k(s);
    for (std::size_t i = 0; i < s; ++i) {
        Vector stage = exp_of(tab.c[i]).cwiseProduct(u);
        for (std::size_t j = 0; j < i; ++j) {
            if (tab.a[i][j] != 0.0) stage += tab.a[i][j] * exp_of(tab.c[i] - tab.c[j]).cwiseProduct(k[j]);
        }
        k[i] = evaluate(g, stage, h, i);
    }
    Vector next = exp_of(1.0).cwiseProduct(u);
    for (std::size_t i = 0; i < s; ++i) {
        if (tab.b[i] != 0.0) next += tab.b[i] * exp_of(1.0 - tab.c[i]).cwiseProduct(k[i]);
    }
    return next;
}

IntegrationResult integrate(const StepPlan& plan, const Vector& u0, int n_steps, bool keep_trajectory) {
    if (n_steps < 1) throw std::invalid_argument("n_steps must be >= 1");
    if (u0.size() != plan.problem().dim) throw std::invalid_argument("initial state has the wrong dimension");
    IntegrationResult result;
    Vector u = u0;
    if (keep_trajectory) {
        result.trajectory.reserve(static_cast<std::size_t>(n_steps) + 1);
        result.trajectory.push_back(u);
    }
    const bool lawson = plan.problem().A.has_value();
    for (int n = 0; n < n_steps; ++n) {
        u = lawson ? slrk_step(plan, u) : rk_step(plan, u);
        if (keep_trajectory) result.trajectory.push_back(u);
    }
    result.final_state = std::move(u);
    return result;
}

}  // namespace slrk
