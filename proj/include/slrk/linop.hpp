#pragma once

#include <Eigen/Dense>

#include <complex>
#include <variant>

namespace slrk {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// The stiff linear part A of u' = g(u) + A u.
///
/// Either diagonal (a spectrum, as in a Fourier basis) or a dense matrix.
class LinearOperator {
public:
    static LinearOperator diagonal(Vector spectrum);
    static LinearOperator dense(Matrix matrix);
    static LinearOperator zero(Eigen::Index n);

    bool is_diagonal() const noexcept { return std::holds_alternative<Vector>(data_); }
    Eigen::Index size() const noexcept;

    const Vector& spectrum() const;  // diagonal only
    const Matrix& matrix() const;    // dense only

    Vector apply(const Vector& v) const;

private:
    explicit LinearOperator(std::variant<Vector, Matrix> data) : data_(std::move(data)) {}
    std::variant<Vector, Matrix> data_;
};

/// Precomputed action of exp(tau A). Diagonal factors are evaluated in
/// extended precision and rounded once.
class Propagator {
public:
    Propagator(const LinearOperator& op, long double tau);

    double tau() const noexcept { return tau_; }
    bool is_diagonal() const noexcept { return std::holds_alternative<Vector>(data_); }
    Eigen::Index size() const noexcept;

    const Vector& factors() const;  // diagonal only: exp(tau lambda_k)
    const Matrix& matrix() const;   // dense only

    Vector apply(const Vector& v) const;
    void apply_in_place(Vector& v) const;

private:
    std::variant<Vector, Matrix> data_;
    double tau_;
};

inline Propagator make_propagator(const LinearOperator& op, long double tau) { return Propagator(op, tau); }

/// Matrix exponential by scaling and squaring with the [13/13] Pade
/// approximant; the matrix is scaled until its 1-norm is at most 0.5.
Matrix expm(const Matrix& a);

}  // namespace slrk
