#include "slrk/scheme_search.hpp"

#include "slrk/parallel.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace slrk {

void SearchConfig::validate() const {
    if (stages < 1) throw std::invalid_argument("stages must be >= 1");
    if (target_order < 1 || target_order > 10) throw std::invalid_argument("target_order must be in [1, 10]");
    if (delta_c <= 0) throw std::invalid_argument("delta_c must be positive");
    if (c_pattern.size() != static_cast<std::size_t>(stages)) {
        throw std::invalid_argument("c_pattern needs one entry per stage");
    }
    if (c_pattern.front() != 0) throw std::invalid_argument("c_pattern must start at 0");
    for (std::size_t i = 1; i < c_pattern.size(); ++i) {
        const Rational inc = c_pattern[i] - c_pattern[i - 1];
        if (inc != 0 && inc != delta_c) {
            throw std::invalid_argument("c_pattern increments must be 0 or delta_c");
        }
    }
    if (!(damping > 0.0 && damping <= 1.0)) throw std::invalid_argument("damping must lie in (0, 1]");
    if (max_iters < 0) throw std::invalid_argument("max_iters must be non-negative");
    if (!(residual_tol > 0.0)) throw std::invalid_argument("residual_tol must be positive");
    if (!(init_scale > 0.0)) throw std::invalid_argument("init_scale must be positive");
}

std::vector<Rational> rk6_c_pattern() {
    std::vector<Rational> c;
    for (int k : {0, 1, 1, 2, 3, 4, 5, 6}) c.emplace_back(k, 6);
    return c;
}

std::vector<Rational> uniform_c_pattern(int stages, const Rational& delta_c) {
    std::vector<Rational> c;
    for (int k = 0; k < stages; ++k) c.push_back(delta_c * k);
    return c;
}

std::size_t unknown_count(int stages) {
    const auto s = static_cast<std::size_t>(stages);
    return s + s * (s - 1) / 2;
}

Eigen::VectorXd pack(const FloatTableau& t) {
    const std::size_t s = t.stages();
    Eigen::VectorXd x(static_cast<Eigen::Index>(unknown_count(static_cast<int>(s))));
    Eigen::Index k = 0;
    for (std::size_t i = 0; i < s; ++i) x[k++] = t.b[i];
    for (std::size_t i = 1; i < s; ++i) {
        for (std::size_t j = 0; j < i; ++j) x[k++] = t.a[i][j];
    }
    return x;
}

FloatTableau unpack(const Eigen::VectorXd& x, int stages) {
    const auto s = static_cast<std::size_t>(stages);
    if (static_cast<std::size_t>(x.size()) != unknown_count(stages)) {
        throw std::invalid_argument("unknown vector has wrong length for the stage count");
    }
    FloatTableau t;
    t.a.assign(s, std::vector<double>(s, 0.0));
    t.b.assign(s, 0.0);
    t.c.assign(s, 0.0);
    Eigen::Index k = 0;
    for (std::size_t i = 0; i < s; ++i) t.b[i] = x[k++];
    for (std::size_t i = 1; i < s; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            t.a[i][j] = x[k++];
            t.c[i] += t.a[i][j];
        }
    }
    return t;
}

ResidualModel::ResidualModel(const SearchConfig& cfg)
    : stages_(cfg.stages), unknowns_(unknown_count(cfg.stages)), trees_(cfg.target_order) {
    cfg.validate();
    for (const auto& c : cfg.c_pattern) c_target_.push_back(to_double(c));
}

Eigen::VectorXd ResidualModel::residual(const Eigen::VectorXd& x) const {
    if (static_cast<std::size_t>(x.size()) != unknowns_) {
        throw std::invalid_argument("unknown vector length " + std::to_string(x.size()) + " does not match " +
                                    std::to_string(unknowns_));
    }
    const auto s = static_cast<std::size_t>(stages_);
    std::vector<double> a(s * s, 0.0);
    Eigen::Index k = static_cast<Eigen::Index>(s);
    for (std::size_t i = 1; i < s; ++i) {
        for (std::size_t j = 0; j < i; ++j) a[i * s + j] = x[k++];
    }
    std::vector<double> weights;
    elementary_weights(trees_, s, a.data(), x.data(), weights, c_target_.data());

    Eigen::VectorXd f(static_cast<Eigen::Index>(equations()));
    Eigen::Index row = 0;
    for (std::size_t t = 0; t < weights.size(); ++t) f[row++] = weights[t] - trees_.inverse_density[t];
    for (std::size_t i = 1; i < s; ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < i; ++j) sum += a[i * s + j];
        f[row++] = sum - c_target_[i];
    }
    return f;
}

Eigen::MatrixXd ResidualModel::jacobian(const Eigen::VectorXd& x) const {
    Eigen::MatrixXd jac(static_cast<Eigen::Index>(equations()), x.size());
    Eigen::VectorXd probe = x;
    for (Eigen::Index m = 0; m < x.size(); ++m) {
        const double step = 1e-6 * std::max(1.0, std::abs(x[m]));
        probe[m] = x[m] + step;
        const Eigen::VectorXd up = residual(probe);
        probe[m] = x[m] - step;
        const Eigen::VectorXd down = residual(probe);
        probe[m] = x[m];
        jac.col(m) = (up - down) / (2.0 * step);
    }
    return jac;
}

Eigen::VectorXd residual_vector(const Eigen::VectorXd& x, const SearchConfig& cfg) {
    return ResidualModel(cfg).residual(x);
}

Eigen::MatrixXd jacobian(const Eigen::VectorXd& x, const SearchConfig& cfg) { return ResidualModel(cfg).jacobian(x); }

SearchState initial_state(const Eigen::VectorXd& x, const ResidualModel& model) {
    SearchState state;
    state.x = x;
    state.residual_norm = model.residual(x).lpNorm<Eigen::Infinity>();
    return state;
}

SearchState newton_step(const SearchState& state, const ResidualModel& model, double gamma) {
    SearchState next = state;
    next.iters = state.iters + 1;
    const Eigen::VectorXd f = model.residual(state.x);
    const Eigen::MatrixXd jac = model.jacobian(state.x);
    if (!f.allFinite() || !jac.allFinite()) {
        next.stalled = true;
        return next;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd& sigma = svd.singularValues();
    if (sigma.size() == 0 || !sigma.allFinite() || !(sigma[0] > 0.0)) {
        next.stalled = true;
        return next;
    }
    const double cutoff = sigma[0] * 1e-10;
    Eigen::VectorXd projected = svd.matrixU().transpose() * f;
    for (Eigen::Index k = 0; k < sigma.size(); ++k) {
        projected[k] = sigma[k] > cutoff ? projected[k] / sigma[k] : 0.0;
    }
    next.x = state.x - gamma * (svd.matrixV() * projected);
    next.residual_norm = model.residual(next.x).lpNorm<Eigen::Infinity>();
    return next;
}

SearchState newton_step(const SearchState& state, const SearchConfig& cfg) {
    return newton_step(state, ResidualModel(cfg), cfg.damping);
}

const char* to_string(SearchStatus status) {
    switch (status) {
        case SearchStatus::converged: return "converged";
        case SearchStatus::stalled: return "stalled";
        case SearchStatus::diverged: return "diverged";
    }
    return "unknown";
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    // splitmix64 finalizer
    std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Eigen::VectorXd random_guess(const SearchConfig& cfg, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, cfg.init_scale);
    Eigen::VectorXd x(static_cast<Eigen::Index>(unknown_count(cfg.stages)));
    for (auto& v : x) v = normal(rng);
    return x;
}

SearchResult search_from(const SearchConfig& cfg, const ResidualModel& model, Eigen::VectorXd x0,
                         std::uint64_t seed) {
    constexpr double divergence_bound = 1e6;
    constexpr double quadratic_phase = 1e-3;

    SearchResult result;
    result.seed = seed;
    SearchState state = initial_state(x0, model);
    result.history.push_back(state.residual_norm);
    while (true) {
        if (!state.x.allFinite() || !std::isfinite(state.residual_norm) || state.x.norm() > divergence_bound) {
            result.status = SearchStatus::diverged;
            break;
        }
        if (state.residual_norm <= cfg.residual_tol) {
            result.status = SearchStatus::converged;
            result.tableau = unpack(state.x, cfg.stages);
            break;
        }
        if (state.iters >= cfg.max_iters) {
            result.status = SearchStatus::stalled;
            break;
        }
        const double gamma = state.residual_norm < quadratic_phase ? 1.0 : cfg.damping;
        state = newton_step(state, model, gamma);
        if (state.stalled) {
            result.status = SearchStatus::stalled;
            break;
        }
        result.history.push_back(state.residual_norm);
    }
    result.x = state.x;
    return result;
}

SearchResult search(const SearchConfig& cfg) {
    const ResidualModel model(cfg);
    return search_from(cfg, model, random_guess(cfg, cfg.rng_seed), cfg.rng_seed);
}

std::vector<SearchResult> multi_start_search(const SearchConfig& cfg, int n_seeds, int threads) {
    if (n_seeds < 0) throw std::invalid_argument("n_seeds must be non-negative");
    const ResidualModel model(cfg);
    std::vector<SearchResult> results(static_cast<std::size_t>(n_seeds));
    parallel_for(results.size(), threads, [&](std::size_t k) {
        const std::uint64_t seed = derive_seed(cfg.rng_seed, k);
        results[k] = search_from(cfg, model, random_guess(cfg, seed), seed);
    });
    return results;
}

RationalizeResult rationalize(const FloatTableau& t, long long max_denominator, int target_order) {
    const std::size_t s = t.stages();
    std::vector<std::vector<Rational>> rows(s);
    std::vector<Rational> b;
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < i; ++j) rows[i].push_back(best_rational(t.a[i][j], max_denominator));
        b.push_back(best_rational(t.b[i], max_denominator));
    }
    Tableau exact(t.name, std::move(rows), std::move(b));
    RationalizeResult result;
    for (const auto& cond : order_residuals(exact, target_order)) {
        if (cond.residual != 0) ++result.failed_conditions;
    }
    if (result.failed_conditions == 0) result.tableau = std::move(exact);
    return result;
}

}  // namespace slrk
