#include "slrk/linop.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace slrk {

namespace {

void require_size(Eigen::Index expected, Eigen::Index got) {
    if (expected != got) {
        throw std::invalid_argument("dimension mismatch: operator has size " + std::to_string(expected) +
                                    ", vector has size " + std::to_string(got));
    }
}

}  // namespace

LinearOperator LinearOperator::diagonal(Vector spectrum) {
    if (!spectrum.allFinite()) throw std::invalid_argument("operator spectrum must be finite");
    return LinearOperator(std::move(spectrum));
}

LinearOperator LinearOperator::dense(Matrix matrix) {
    if (matrix.rows() != matrix.cols()) throw std::invalid_argument("dense operator must be square");
    if (!matrix.allFinite()) throw std::invalid_argument("operator entries must be finite");
    return LinearOperator(std::move(matrix));
}

LinearOperator LinearOperator::zero(Eigen::Index n) { return diagonal(Vector::Zero(n)); }

Eigen::Index LinearOperator::size() const noexcept {
    if (const auto* d = std::get_if<Vector>(&data_)) return d->size();
    return std::get<Matrix>(data_).rows();
}

const Vector& LinearOperator::spectrum() const { return std::get<Vector>(data_); }
const Matrix& LinearOperator::matrix() const { return std::get<Matrix>(data_); }

Vector LinearOperator::apply(const Vector& v) const {
    require_size(size(), v.size());
    if (const auto* d = std::get_if<Vector>(&data_)) return d->cwiseProduct(v);
    return std::get<Matrix>(data_) * v;
}

Propagator::Propagator(const LinearOperator& op, long double tau) : tau_(static_cast<double>(tau)) {
    if (!std::isfinite(tau)) throw std::invalid_argument("propagator step must be finite");
    if (op.is_diagonal()) {
        const Vector& lambda = op.spectrum();
        Vector factors(lambda.size());
        for (Eigen::Index k = 0; k < lambda.size(); ++k) {
            const std::complex<long double> z(lambda[k].real(), lambda[k].imag());
            const auto e = std::exp(z * tau);
            factors[k] = Complex(static_cast<double>(e.real()), static_cast<double>(e.imag()));
        }
        data_ = std::move(factors);
    } else {
        data_ = expm(op.matrix() * tau_);
    }
}

Eigen::Index Propagator::size() const noexcept {
    if (const auto* d = std::get_if<Vector>(&data_)) return d->size();
    return std::get<Matrix>(data_).rows();
}

const Vector& Propagator::factors() const { return std::get<Vector>(data_); }
const Matrix& Propagator::matrix() const { return std::get<Matrix>(data_); }

Vector Propagator::apply(const Vector& v) const {
    Vector out = v;
    apply_in_place(out);
    return out;
}

void Propagator::apply_in_place(Vector& v) const {
    require_size(size(), v.size());
    if (const auto* d = std::get_if<Vector>(&data_)) {
        v.array() *= d->array();
    } else {
        v = std::get<Matrix>(data_) * v;
    }
}

Matrix expm(const Matrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("expm needs a square matrix");
    const Eigen::Index n = a.rows();
    if (n == 0) return a;

    // Numerator coefficients of the [13/13] Pade approximant of exp.
    static constexpr std::array<double, 14> b = {
        64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
        129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
        1323241920.0,        40840800.0,          960960.0,           16380.0,
        182.0,               1.0};

    const double norm = a.cwiseAbs().colwise().sum().maxCoeff();
    int squarings = 0;
    if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    const Matrix scaled = a / std::ldexp(1.0, squarings);

    const Matrix ident = Matrix::Identity(n, n);
    const Matrix a2 = scaled * scaled;
    const Matrix a4 = a2 * a2;
    const Matrix a6 = a4 * a2;
    const Matrix u = scaled * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 + b[3] * a2 +
                               b[1] * ident);
    const Matrix v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * ident;
    Matrix result = (v - u).partialPivLu().solve(v + u);
    for (int k = 0; k < squarings; ++k) result = result * result;
    return result;
}

}  // namespace slrk
