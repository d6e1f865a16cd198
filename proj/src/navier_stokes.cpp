#include "slrk/navier_stokes.hpp"

#include "slrk/parallel.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace slrk {

namespace {

// The FFTW planner is not thread-safe; executing existing plans is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

fftw_complex* as_fftw(Complex* p) { return reinterpret_cast<fftw_complex*>(p); }

}  // namespace

struct SpectralGrid::Plans {
    fftw_plan forward = nullptr;
    fftw_plan backward = nullptr;

    explicit Plans(int n) {
        std::lock_guard lock(planner_mutex());
        std::vector<Complex> scratch_in(static_cast<std::size_t>(n) * n);
        std::vector<Complex> scratch_out(scratch_in.size());
        const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
        forward = fftw_plan_dft_2d(n, n, as_fftw(scratch_in.data()), as_fftw(scratch_out.data()), FFTW_FORWARD,
                                   flags);
        backward = fftw_plan_dft_2d(n, n, as_fftw(scratch_in.data()), as_fftw(scratch_out.data()), FFTW_BACKWARD,
                                    flags);
        if (!forward || !backward) throw std::runtime_error("FFTW planning failed");
    }
    ~Plans() {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(forward);
        fftw_destroy_plan(backward);
    }
    Plans(const Plans&) = delete;
    Plans& operator=(const Plans&) = delete;
};

SpectralGrid::SpectralGrid(int n) : n_(n) {
    if (n < 4 || (n & (n - 1)) != 0) throw std::invalid_argument("grid size must be a power of two >= 4");
    const Eigen::Index total = size();
    kx_.resize(total);
    ky_.resize(total);
    k2_.resize(total);
    mask_.resize(total);
    mirror_.resize(static_cast<std::size_t>(total));
    for (int iy = 0; iy < n; ++iy) {
        for (int ix = 0; ix < n; ++ix) {
            const Eigen::Index idx = index(iy, ix);
            const int kx = wavenumber(ix);
            const int ky = wavenumber(iy);
            kx_[idx] = kx;
            ky_[idx] = ky;
            k2_[idx] = static_cast<double>(kx) * kx + static_cast<double>(ky) * ky;
            mask_[idx] = (3 * std::abs(kx) <= n && 3 * std::abs(ky) <= n) ? 1.0 : 0.0;
            mirror_[static_cast<std::size_t>(idx)] = index((n - iy) % n, (n - ix) % n);
        }
    }
    plans_ = std::make_shared<const Plans>(n);
}

Eigen::Index SpectralGrid::mode(int kx, int ky) const noexcept {
    const int ix = ((kx % n_) + n_) % n_;
    const int iy = ((ky % n_) + n_) % n_;
    return index(iy, ix);
}

Vector SpectralGrid::forward(const Vector& physical) const {
    if (physical.size() != size()) throw std::invalid_argument("field size does not match the grid");
    Vector in = physical;
    Vector out(size());
    fftw_execute_dft(plans_->forward, as_fftw(in.data()), as_fftw(out.data()));
    return out;
}

Vector SpectralGrid::inverse(const Vector& spectral) const {
    if (spectral.size() != size()) throw std::invalid_argument("field size does not match the grid");
    Vector in = spectral;
    Vector out(size());
    fftw_execute_dft(plans_->backward, as_fftw(in.data()), as_fftw(out.data()));
    out /= static_cast<double>(size());
    return out;
}

void SpectralGrid::enforce_real(Vector& spectral) const {
    const Eigen::Index total = size();
    for (Eigen::Index idx = 0; idx < total; ++idx) {
        const Eigen::Index partner = mirror_[static_cast<std::size_t>(idx)];
        if (partner < idx) continue;
        if (partner == idx) {
            spectral[idx] = Complex(spectral[idx].real(), 0.0);
            continue;
        }
        const Complex avg = 0.5 * (spectral[idx] + std::conj(spectral[partner]));
        spectral[idx] = avg;
        spectral[partner] = std::conj(avg);
    }
    spectral[0] = 0.0;
    const int half = n_ / 2;
    for (int j = 0; j < n_; ++j) {
        spectral[index(half, j)] = 0.0;
        spectral[index(j, half)] = 0.0;
    }
}

Vector initial_condition(const SpectralGrid& grid) {
    const double n2 = static_cast<double>(grid.size());
    Vector w = Vector::Zero(grid.size());
    // amplitude * cos(kx x + ky y + phase); a sine is a cosine with phase - pi/2.
    struct Wave {
        int kx, ky;
        double amplitude, phase;
    };
    constexpr double quarter = std::numbers::pi / 2;
    const Wave waves[] = {{2, 0, 4.0, -quarter}, {1, 3, 3.0, 0.13}, {4, 2, 2.0, 0.31 - quarter}, {5, 6, 1.0, 1.23 - quarter}};
    for (const auto& wave : waves) {
        const Complex coeff = 0.5 * n2 * wave.amplitude * std::polar(1.0, wave.phase);
        w[grid.mode(wave.kx, wave.ky)] += coeff;
        w[grid.mode(-wave.kx, -wave.ky)] += std::conj(coeff);
    }
    return w;
}

LinearOperator linear_operator(const SpectralGrid& grid, double nu) {
    if (!(nu > 0.0)) throw std::invalid_argument("viscosity must be positive");
    return LinearOperator::diagonal((-nu * grid.k_squared()).cast<Complex>().matrix());
}

KolmogorovFlow::KolmogorovFlow(int n, double nu, bool forcing)
    : grid_(std::make_shared<const SpectralGrid>(n)), nu_(nu), forcing_hat_(Vector::Zero(grid_->size())) {
    if (!(nu > 0.0)) throw std::invalid_argument("viscosity must be positive");
    if (forcing) {
        // -4 cos(4y) = -2 (e^{4iy} + e^{-4iy})
        const double n2 = static_cast<double>(grid_->size());
        forcing_hat_[grid_->mode(0, 4)] = -2.0 * n2;
        forcing_hat_[grid_->mode(0, -4)] = -2.0 * n2;
    }
}

Vector KolmogorovFlow::initial_condition() const { return slrk::initial_condition(*grid_); }

LinearOperator KolmogorovFlow::linear_operator() const { return slrk::linear_operator(*grid_, nu_); }

Vector KolmogorovFlow::nonlinear_rhs(const Vector& omega_hat) const {
    const SpectralGrid& g = *grid_;
    const Complex i(0.0, 1.0);
    const Eigen::ArrayXcd w = omega_hat.array() * g.dealias_mask();
    const Eigen::ArrayXd inv_k2 = (g.k_squared() > 0.0).select(1.0 / g.k_squared(), 0.0);
    const Eigen::ArrayXcd psi = w * inv_k2;

    const Eigen::ArrayXd u = g.inverse((i * g.ky_array() * psi).matrix()).real().array();
    const Eigen::ArrayXd v = g.inverse((-i * g.kx_array() * psi).matrix()).real().array();
    const Eigen::ArrayXd wx = g.inverse((i * g.kx_array() * w).matrix()).real().array();
    const Eigen::ArrayXd wy = g.inverse((i * g.ky_array() * w).matrix()).real().array();
    const Eigen::ArrayXd advection = u * wx + v * wy;

    Vector rhs = -(g.forward(advection.cast<Complex>().matrix()).array() * g.dealias_mask()).matrix();
    rhs += forcing_hat_;
    g.enforce_real(rhs);
    return rhs;
}

OdeProblem KolmogorovFlow::problem() const {
    auto self = std::make_shared<const KolmogorovFlow>(*this);
    return OdeProblem{[self](const Vector& w) { return self->nonlinear_rhs(w); }, linear_operator(), grid_->size()};
}

Eigen::VectorXd KolmogorovFlow::to_physical(const Vector& omega_hat) const {
    return grid_->inverse(omega_hat).real();
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> KolmogorovFlow::velocity(const Vector& omega_hat) const {
    const SpectralGrid& g = *grid_;
    const Complex i(0.0, 1.0);
    const Eigen::ArrayXd inv_k2 = (g.k_squared() > 0.0).select(1.0 / g.k_squared(), 0.0);
    const Eigen::ArrayXcd psi = omega_hat.array() * inv_k2;
    return {g.inverse((i * g.ky_array() * psi).matrix()).real(), g.inverse((-i * g.kx_array() * psi).matrix()).real()};
}

double KolmogorovFlow::enstrophy(const Vector& omega_hat) const {
    const double n2 = static_cast<double>(grid_->size());
    return omega_hat.squaredNorm() / (n2 * n2);
}

Vector run_kolmogorov(const KolmogorovFlow& flow, const Tableau& tab, double t_final, int steps) {
    const StepPlan plan(flow.problem(), tab, t_final / steps);
    return integrate(plan, flow.initial_condition(), steps).final_state;
}

const ConvergenceCell* ConvergenceTable::find(const std::string& scheme, int steps) const {
    for (const auto& c : cells) {
        if (c.scheme == scheme && c.steps == steps) return &c;
    }
    return nullptr;
}

const SlopeFit* ConvergenceTable::fit(const std::string& scheme) const {
    for (const auto& f : fits) {
        if (f.scheme == scheme) return &f;
    }
    return nullptr;
}

ConvergenceTable convergence_study(const ConvergenceConfig& cfg) {
    if (cfg.step_counts.empty()) throw std::invalid_argument("no step counts given");
    for (std::size_t k = 1; k < cfg.step_counts.size(); ++k) {
        if (cfg.step_counts[k] <= cfg.step_counts[k - 1]) {
            throw std::invalid_argument("step counts must be strictly increasing");
        }
    }
    if (cfg.step_counts.front() < 1) throw std::invalid_argument("step counts must be positive");
    if (cfg.reference_steps < 4 * cfg.step_counts.back()) {
        throw std::invalid_argument("reference step count must be at least 4x the largest tested count");
    }
    std::vector<Tableau> schemes;
    for (const auto& name : cfg.schemes) {
        auto tab = builtin_tableau(name);
        if (!tab) throw std::invalid_argument("unknown scheme '" + name + "'");
        schemes.push_back(*tab);
    }

    const KolmogorovFlow flow(cfg.n, cfg.nu);
    ConvergenceTable table;
    for (const auto& name : cfg.schemes) {
        for (int m : cfg.step_counts) table.cells.push_back({name, m});
    }

    // Slot 0 is the reference; the rest follow table.cells.
    std::vector<Eigen::VectorXd> finals(table.cells.size() + 1);
    std::vector<char> ok(finals.size(), 1);
    const Tableau reference_tab = rk6_tableau();
    parallel_for(finals.size(), cfg.threads, [&](std::size_t job) {
        const Tableau& tab = job == 0 ? reference_tab : schemes[(job - 1) / cfg.step_counts.size()];
        const int steps = job == 0 ? cfg.reference_steps : table.cells[job - 1].steps;
        try {
            const Vector w = run_kolmogorov(flow, tab, cfg.t_final, steps);
            finals[job] = flow.to_physical(w);
            if (!finals[job].allFinite()) ok[job] = 0;
        } catch (const NonFiniteError&) {
            ok[job] = 0;
        }
    });
    if (!ok[0]) throw std::runtime_error("reference integration blew up; raise reference_steps");
    const Eigen::VectorXd& reference = finals[0];
    table.reference_max = reference.cwiseAbs().maxCoeff();

    table.error_floor = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < table.cells.size(); ++k) {
        auto& cell = table.cells[k];
        cell.stable = ok[k + 1] != 0;
        if (!cell.stable) {
            cell.linf_error = std::numeric_limits<double>::infinity();
            continue;
        }
        cell.linf_error = (finals[k + 1] - reference).cwiseAbs().maxCoeff();
        table.error_floor = std::min(table.error_floor, cell.linf_error);
    }

    for (const auto& name : cfg.schemes) {
        SlopeFit fit;
        fit.scheme = name;
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (auto& cell : table.cells) {
            if (cell.scheme != name || !cell.stable || !(cell.linf_error > 10.0 * table.error_floor)) continue;
            cell.used_in_fit = true;
            const double x = std::log(static_cast<double>(cell.steps));
            const double y = std::log(cell.linf_error);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
            ++fit.points;
        }
        if (fit.points >= 2) {
            const double np = fit.points;
            const double beta = (np * sxy - sx * sy) / (np * sxx - sx * sx);
            fit.slope = -beta;
            fit.log_intercept = (sy - beta * sx) / np;
        } else {
            fit.slope = std::numeric_limits<double>::quiet_NaN();
        }
        table.fits.push_back(fit);
    }
    return table;
}

void write_snapshot(const std::string& path, int n, double time, const Eigen::VectorXd& field) {
    if (field.size() != static_cast<Eigen::Index>(n) * n) throw std::invalid_argument("snapshot size mismatch");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write snapshot '" + path + "'");
    char header[96];
    std::snprintf(header, sizeof header, "n %d time %.17g\n", n, time);
    out << header;
    out.write(reinterpret_cast<const char*>(field.data()), static_cast<std::streamsize>(field.size() * sizeof(double)));
}

}  // namespace slrk
