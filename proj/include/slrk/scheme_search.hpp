#pragma once

#include "slrk/order_conditions.hpp"
#include "slrk/rational.hpp"
#include "slrk/tableau.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <vector>

namespace slrk {

struct SearchConfig {
    int stages = 8;
    int target_order = 6;
    Rational delta_c{1, 6};
    /// Target abscissae; starts at 0 and moves in steps of 0 or delta_c.
    std::vector<Rational> c_pattern;
    double damping = 0.5;
    int max_iters = 500;
    double residual_tol = 1e-12;
    std::uint64_t rng_seed = 0;
    double init_scale = 0.5;

    /// Throws std::invalid_argument when an invariant does not hold.
    void validate() const;
};

/// The c column of the eight-stage sixth-order scheme:
/// 0, 1/6, 1/6, 2/6, ..., 1.
std::vector<Rational> rk6_c_pattern();
/// 0, dc, 2 dc, ... with one step per stage.
std::vector<Rational> uniform_c_pattern(int stages, const Rational& delta_c);

/// Unknowns are b (s entries) followed by the strictly lower part of a in
/// row-major order.
std::size_t unknown_count(int stages);
Eigen::VectorXd pack(const FloatTableau& t);
FloatTableau unpack(const Eigen::VectorXd& x, int stages);

/// Order-condition residuals followed by the abscissa deviations of stages
/// 2..s. Leaves in the order conditions take the target abscissae rather
/// than the row sums of a; both forms share their roots.
class ResidualModel {
public:
    explicit ResidualModel(const SearchConfig& cfg);

    std::size_t unknowns() const noexcept { return unknowns_; }
    std::size_t equations() const noexcept { return trees_.trees.size() + static_cast<std::size_t>(stages_ - 1); }

    Eigen::VectorXd residual(const Eigen::VectorXd& x) const;
    /// Central differences with step 1e-6 * max(1, |x_m|).
    Eigen::MatrixXd jacobian(const Eigen::VectorXd& x) const;

private:
    int stages_;
    std::size_t unknowns_;
    TreeIndex trees_;
    std::vector<double> c_target_;
};

Eigen::VectorXd residual_vector(const Eigen::VectorXd& x, const SearchConfig& cfg);
Eigen::MatrixXd jacobian(const Eigen::VectorXd& x, const SearchConfig& cfg);

struct SearchState {
    Eigen::VectorXd x;
    double residual_norm = 0.0;  // infinity norm of F(x)
    int iters = 0;
    bool stalled = false;  // the Jacobian was numerically degenerate
};

SearchState initial_state(const Eigen::VectorXd& x, const ResidualModel& model);

/// x <- x - gamma pinv(J) F, with singular values below sigma_max * 1e-10
/// discarded.
SearchState newton_step(const SearchState& state, const ResidualModel& model, double gamma);
SearchState newton_step(const SearchState& state, const SearchConfig& cfg);

enum class SearchStatus { converged, stalled, diverged };

struct SearchResult {
    SearchStatus status = SearchStatus::stalled;
    std::uint64_t seed = 0;
    std::optional<FloatTableau> tableau;  // set when converged
    std::vector<double> history;          // residual norm per iterate, starting with x0
    Eigen::VectorXd x;
};

const char* to_string(SearchStatus status);

/// Gaussian initial guess with standard deviation cfg.init_scale drawn from
/// `seed`.
Eigen::VectorXd random_guess(const SearchConfig& cfg, std::uint64_t seed);

SearchResult search(const SearchConfig& cfg);
SearchResult search_from(const SearchConfig& cfg, const ResidualModel& model, Eigen::VectorXd x0,
                         std::uint64_t seed);

/// Per-seed result k uses seed derive_seed(cfg.rng_seed, k); results are in
/// seed order regardless of thread scheduling.
std::vector<SearchResult> multi_start_search(const SearchConfig& cfg, int n_seeds, int threads = 0);
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

struct RationalizeResult {
    std::optional<Tableau> tableau;
    /// Nonzero residuals of the rounded tableau when verification failed.
    int failed_conditions = 0;
};

/// Rounds each coefficient to its best rational approximation with
/// denominator <= max_denominator and accepts the result only if every
/// order condition up to `target_order` holds exactly.
RationalizeResult rationalize(const FloatTableau& t, long long max_denominator, int target_order);

}  // namespace slrk
