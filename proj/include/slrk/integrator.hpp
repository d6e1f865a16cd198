#pragma once

#include "slrk/linop.hpp"
#include "slrk/tableau.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace slrk {

/// Nonlinear right-hand side g of u' = g(u) + A u.
using RhsFunction = std::function<Vector(const Vector&)>;

struct OdeProblem {
    RhsFunction g;
    std::optional<LinearOperator> A;
    Eigen::Index dim = 0;
};

/// Raised when g is handed, or returns, a non-finite state.
class NonFiniteError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Everything a fixed-step integration needs: the scheme, h, and (with a
/// linear part) the single propagator exp(delta_c h A).
///
/// Stage increments are classified with exact rational arithmetic. After the
/// last stage the state sits at t + c_s h; when c_s < 1 the remaining
/// (1 - c_s) h is covered by further applications of the same propagator,
/// which requires (1 - c_s) to be a whole multiple of delta_c. Tableaux
/// without any nonzero increment use exp((1 - c_s) h A) for that closing
/// stretch instead.
class StepPlan {
public:
    StepPlan(OdeProblem problem, const Tableau& tableau, double h);

    const OdeProblem& problem() const noexcept { return problem_; }
    const FloatTableau& tableau() const noexcept { return tableau_; }
    const SpacingReport& spacing() const noexcept { return spacing_; }
    double h() const noexcept { return h_; }
    const std::optional<Propagator>& propagator() const noexcept { return propagator_; }

    /// stage_advances()[j] is true when stage j (j >= 1) starts one delta_c
    /// after stage j - 1.
    const std::vector<bool>& stage_advances() const noexcept { return advances_; }
    /// Propagator applications needed after the last stage to reach t + h.
    int closing_applications() const noexcept { return closing_; }

private:
    OdeProblem problem_;
    FloatTableau tableau_;
    SpacingReport spacing_;
    double h_;
    std::optional<Propagator> propagator_;
    std::vector<bool> advances_;
    int closing_ = 0;
};

/// Per-step bookkeeping, mainly for tests.
struct StepStats {
    int rhs_evaluations = 0;
    int state_propagations = 0;  // exp applied to u
    int slope_propagations = 0;  // exp applied to some k_m
};

/// Classical explicit step; the plan must not carry a linear operator.
Vector rk_step(const StepPlan& plan, const Vector& u, StepStats* stats = nullptr);

/// Simple Lawson step: one propagator, applied to u and to all earlier
/// slopes whenever the abscissa advances.
Vector slrk_step(const StepPlan& plan, const Vector& u, StepStats* stats = nullptr);

/// Generalized Runge-Kutta process with every exponential formed
/// explicitly:
///   U_i = e^{c_i h A} u0 + sum_j a_ij e^{(c_i - c_j) h A} k_j,
///   u+  = e^{h A} u0 + sum_i b_i e^{(1 - c_i) h A} k_i.
/// Diagonal A only.
Vector lawson_step_general(const Tableau& tableau, const RhsFunction& g, const LinearOperator& A, const Vector& u,
                           double h);

struct IntegrationResult {
    Vector final_state;
    std::vector<Vector> trajectory;  // u0, u1, ..., when requested
};

/// n_steps applications of slrk_step (or rk_step when the problem has no
/// linear part).
IntegrationResult integrate(const StepPlan& plan, const Vector& u0, int n_steps, bool keep_trajectory = false);

}  // namespace slrk
