#pragma once

#include "slrk/integrator.hpp"
#include "slrk/linop.hpp"
#include "slrk/tableau.hpp"

#include <memory>
#include <string>
#include <vector>

namespace slrk {

/// n x n Fourier grid on the periodic box [0, 2 pi)^2.
///
/// Fields are stored row-major with y along rows: entry iy * n + ix. Mode
/// index j maps to wavenumber j for j <= n/2 and j - n otherwise. The
/// forward transform is unnormalized; the inverse carries the 1/n^2.
class SpectralGrid {
public:
    explicit SpectralGrid(int n);

    int n() const noexcept { return n_; }
    Eigen::Index size() const noexcept { return static_cast<Eigen::Index>(n_) * n_; }
    Eigen::Index index(int iy, int ix) const noexcept { return static_cast<Eigen::Index>(iy) * n_ + ix; }
    /// Index of the mode with wavenumbers (kx, ky).
    Eigen::Index mode(int kx, int ky) const noexcept;

    int kx(Eigen::Index idx) const noexcept { return wavenumber(static_cast<int>(idx % n_)); }
    int ky(Eigen::Index idx) const noexcept { return wavenumber(static_cast<int>(idx / n_)); }
    int wavenumber(int j) const noexcept { return j <= n_ / 2 ? j : j - n_; }

    const Eigen::ArrayXd& kx_array() const noexcept { return kx_; }
    const Eigen::ArrayXd& ky_array() const noexcept { return ky_; }
    const Eigen::ArrayXd& k_squared() const noexcept { return k2_; }
    /// 1 where |kx| <= n/3 and |ky| <= n/3, else 0.
    const Eigen::ArrayXd& dealias_mask() const noexcept { return mask_; }

    Vector forward(const Vector& physical) const;
    Vector inverse(const Vector& spectral) const;

    /// Averages each mode with the conjugate of its mirror, zeroes the mean
    /// and Nyquist modes.
    void enforce_real(Vector& spectral) const;

private:
    struct Plans;
    int n_;
    Eigen::ArrayXd kx_, ky_, k2_, mask_;
    std::vector<Eigen::Index> mirror_;
    std::shared_ptr<const Plans> plans_;
};

/// Vorticity form of 2D incompressible Navier-Stokes with Kolmogorov
/// forcing f = sin(4y) x_hat:
///
///     w_t = -u . grad w + nu lap w - 4 cos(4y),
///
/// with lap psi = -w and u = (psi_y, -psi_x).
class KolmogorovFlow {
public:
    KolmogorovFlow(int n, double nu, bool forcing = true);

    const SpectralGrid& grid() const noexcept { return *grid_; }
    double nu() const noexcept { return nu_; }

    /// 4 sin(2x) + 3 cos(x + 3y + 0.13) + 2 sin(4x + 2y + 0.31) + sin(5x + 6y + 1.23),
    /// built mode by mode so only those eight coefficients are nonzero.
    Vector initial_condition() const;
    /// Diagonal spectrum -nu (kx^2 + ky^2).
    LinearOperator linear_operator() const;
    Vector nonlinear_rhs(const Vector& omega_hat) const;
    const Vector& forcing() const noexcept { return forcing_hat_; }

    OdeProblem problem() const;

    /// Real physical-space field on the grid.
    Eigen::VectorXd to_physical(const Vector& omega_hat) const;
    /// (u, v) in physical space.
    std::pair<Eigen::VectorXd, Eigen::VectorXd> velocity(const Vector& omega_hat) const;

    /// sum |w_hat|^2 / n^4
    double enstrophy(const Vector& omega_hat) const;

private:
    std::shared_ptr<const SpectralGrid> grid_;
    double nu_;
    Vector forcing_hat_;
};

Vector initial_condition(const SpectralGrid& grid);
LinearOperator linear_operator(const SpectralGrid& grid, double nu);

struct ConvergenceConfig {
    int n = 64;
    double nu = 1e-2;
    double t_final = 5.0;
    std::vector<int> step_counts{32, 64, 128, 256, 512, 1024};
    int reference_steps = 4096;
    std::vector<std::string> schemes{"rk4", "rk6"};
    int threads = 0;
};

struct ConvergenceCell {
    std::string scheme;
    int steps = 0;
    double linf_error = 0.0;
    bool stable = true;
    bool used_in_fit = false;
};

struct SlopeFit {
    std::string scheme;
    double slope = 0.0;  // order: error ~ m^-slope
    double log_intercept = 0.0;
    int points = 0;
};

struct ConvergenceTable {
    std::vector<ConvergenceCell> cells;
    std::vector<SlopeFit> fits;
    double error_floor = 0.0;
    double reference_max = 0.0;  // max |w_ref|

    const ConvergenceCell* find(const std::string& scheme, int steps) const;
    const SlopeFit* fit(const std::string& scheme) const;
};

/// Integrates the initial vorticity to t_final with every scheme and step
/// count and measures the max pointwise error against a Lawson RK6 run
/// with reference_steps. The error floor is the smallest error seen; fits
/// use stable cells whose error exceeds ten times that floor.
ConvergenceTable convergence_study(const ConvergenceConfig& cfg);

/// Lawson integration of the benchmark from the initial condition.
Vector run_kolmogorov(const KolmogorovFlow& flow, const Tableau& tab, double t_final, int steps);

/// Writes "n <n> time <t>\n" followed by n*n little-endian float64 values.
void write_snapshot(const std::string& path, int n, double time, const Eigen::VectorXd& field);

}  // namespace slrk
