#ifndef GLEASON_OPERATORS_HPP
#define GLEASON_OPERATORS_HPP

// Dense Hermitian operator core: validated strong types for Hermitian
// operators, effects, projectors and density operators, the qubit Bloch
// parameterisation and spectral decomposition.
//
// Qubit convention: |0><0| = (1 + sigma_z)/2, i.e. the +z pole of the Bloch
// sphere is the computational basis state |0>.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "gleason/error.hpp"
#include "gleason/tolerance.hpp"

namespace gleason {

using Index = Eigen::Index;

template <typename Scalar>
using OperatorMatrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Derived>
typename Derived::RealScalar hermiticity_defect(const Eigen::MatrixBase<Derived>& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

template <typename DerivedA, typename DerivedB>
typename DerivedA::RealScalar max_abs_diff(const Eigen::MatrixBase<DerivedA>& a,
                                           const Eigen::MatrixBase<DerivedB>& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

/// Pauli matrix k in {0: identity, 1: x, 2: y, 3: z}.
template <typename Scalar = double>
OperatorMatrix<Scalar> pauli(int k) {
    using C = std::complex<Scalar>;
    OperatorMatrix<Scalar> m(2, 2);
    switch (k) {
    case 0: m << C(1), C(0), C(0), C(1); break;
    case 1: m << C(0), C(1), C(1), C(0); break;
    case 2: m << C(0), C(0, -1), C(0, 1), C(0); break;
    case 3: m << C(1), C(0), C(0), C(-1); break;
    default: throw Error(ErrorCode::IndexOutOfRange, "pauli index " + std::to_string(k));
    }
    return m;
}

/// Complex d x d matrix equal to its adjoint. The stored matrix is exactly
/// Hermitian (symmetrised on construction).
template <typename Scalar>
class BasicHermitian {
public:
    using Matrix = OperatorMatrix<Scalar>;
    using Complex = std::complex<Scalar>;

    explicit BasicHermitian(const Matrix& m, Scalar tol = Scalar(tol::kArithmetic)) {
        if (m.rows() != m.cols()) {
            throw Error(ErrorCode::DimensionMismatch, "operator must be square");
        }
        if (m.rows() < 1) {
            throw Error(ErrorCode::DimensionMismatch, "operator dimension must be positive");
        }
        if (!m.allFinite()) {
            throw Error(ErrorCode::NotHermitian, "operator has non-finite entries");
        }
        if (hermiticity_defect(m) > tol) {
            throw Error(ErrorCode::NotHermitian, "operator differs from its adjoint");
        }
        m_ = (m + m.adjoint()) / Scalar(2);
    }

    static BasicHermitian identity(Index dim) { return BasicHermitian(Matrix::Identity(dim, dim)); }
    static BasicHermitian zero(Index dim) { return BasicHermitian(Matrix::Zero(dim, dim)); }

    Index dim() const { return m_.rows(); }
    const Matrix& matrix() const { return m_; }
    const Complex& operator()(Index i, Index j) const { return m_(i, j); }

    Scalar trace() const { return m_.trace().real(); }

    friend BasicHermitian operator+(const BasicHermitian& a, const BasicHermitian& b) {
        check_same_dim(a, b);
        return BasicHermitian(a.m_ + b.m_);
    }
    friend BasicHermitian operator-(const BasicHermitian& a, const BasicHermitian& b) {
        check_same_dim(a, b);
        return BasicHermitian(a.m_ - b.m_);
    }
    friend BasicHermitian operator*(Scalar s, const BasicHermitian& a) { return BasicHermitian(s * a.m_); }
    friend BasicHermitian operator*(const BasicHermitian& a, Scalar s) { return BasicHermitian(s * a.m_); }
    friend BasicHermitian operator/(const BasicHermitian& a, Scalar s) { return BasicHermitian(a.m_ / s); }

private:
    static void check_same_dim(const BasicHermitian& a, const BasicHermitian& b) {
        if (a.dim() != b.dim()) {
            throw Error(ErrorCode::DimensionMismatch, "operand dimensions differ");
        }
    }

    Matrix m_;
};

/// Tr(a b) for Hermitian a, b (always real).
template <typename Scalar>
Scalar trace_product(const BasicHermitian<Scalar>& a, const BasicHermitian<Scalar>& b) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "trace product of different dimensions");
    }
    // Tr(AB) = sum_ij A_ij B_ji = sum_ij A_ij conj(B_ij) for Hermitian B.
    return (a.matrix().array() * b.matrix().conjugate().array()).sum().real();
}

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> eigenvalues(const BasicHermitian<Scalar>& h) {
    Eigen::SelfAdjointEigenSolver<OperatorMatrix<Scalar>> solver(h.matrix(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorCode::ConvergenceFailure, "eigenvalue iteration failed");
    }
    return solver.eigenvalues();
}

/// True iff every eigenvalue of h lies in [-tol, 1 + tol].
template <typename Scalar>
bool is_effect(const BasicHermitian<Scalar>& h, Scalar tol = Scalar(tol::kValidation)) {
    const auto ev = eigenvalues(h);
    return ev.minCoeff() >= -tol && ev.maxCoeff() <= Scalar(1) + tol;
}

template <typename Scalar>
bool is_projector(const BasicHermitian<Scalar>& h, Scalar tol = Scalar(tol::kValidation)) {
    return max_abs_diff(h.matrix() * h.matrix(), h.matrix()) <= tol;
}

/// Hermitian operator with 0 <= e <= 1.
template <typename Scalar>
class BasicEffect {
public:
    using Matrix = OperatorMatrix<Scalar>;

    explicit BasicEffect(BasicHermitian<Scalar> h, Scalar tol = Scalar(tol::kValidation)) : op_(std::move(h)) {
        if (!is_effect(op_, tol)) {
            throw Error(ErrorCode::NotAnEffect, "eigenvalues outside [0, 1]");
        }
    }

    static BasicEffect identity(Index dim) { return BasicEffect(BasicHermitian<Scalar>::identity(dim)); }
    static BasicEffect zero(Index dim) { return BasicEffect(BasicHermitian<Scalar>::zero(dim)); }

    const BasicHermitian<Scalar>& op() const { return op_; }
    const Matrix& matrix() const { return op_.matrix(); }
    Index dim() const { return op_.dim(); }

    /// 1 - e, again an effect.
    BasicEffect complement() const { return BasicEffect(BasicHermitian<Scalar>::identity(dim()) - op_); }
    /// s * e for s in [0, 1].
    BasicEffect scaled(Scalar s) const { return BasicEffect(s * op_); }

protected:
    struct Trusted {};
    BasicEffect(BasicHermitian<Scalar> h, Trusted) : op_(std::move(h)) {}

private:
    BasicHermitian<Scalar> op_;
};

/// Effect with P^2 = P.
template <typename Scalar>
class BasicProjector : public BasicEffect<Scalar> {
public:
    explicit BasicProjector(BasicHermitian<Scalar> h, Scalar tol = Scalar(tol::kValidation))
        : BasicEffect<Scalar>(validated(std::move(h), tol), typename BasicEffect<Scalar>::Trusted{}) {}

    /// |v><v| / <v|v>.
    static BasicProjector rank_one(const Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>& v) {
        const Scalar n = v.squaredNorm();
        if (!(n > Scalar(0))) {
            throw Error(ErrorCode::NotAProjector, "zero vector");
        }
        return BasicProjector(BasicHermitian<Scalar>(v * v.adjoint() / n));
    }

private:
    static BasicHermitian<Scalar> validated(BasicHermitian<Scalar> h, Scalar tol) {
        if (!is_projector(h, tol)) {
            throw Error(ErrorCode::NotAProjector, "operator is not idempotent");
        }
        return h;
    }
};

/// Positive semidefinite operator with unit trace.
template <typename Scalar>
class BasicDensity {
public:
    using Matrix = OperatorMatrix<Scalar>;

    explicit BasicDensity(BasicHermitian<Scalar> h, Scalar tol = Scalar(tol::kValidation)) : op_(std::move(h)) {
        if (std::abs(op_.trace() - Scalar(1)) > tol) {
            throw Error(ErrorCode::NotADensity, "trace differs from 1");
        }
        if (eigenvalues(op_).minCoeff() < -tol) {
            throw Error(ErrorCode::NotADensity, "negative eigenvalue");
        }
    }

    static BasicDensity maximally_mixed(Index dim) {
        return BasicDensity(BasicHermitian<Scalar>::identity(dim) / Scalar(dim));
    }

    const BasicHermitian<Scalar>& op() const { return op_; }
    const Matrix& matrix() const { return op_.matrix(); }
    Index dim() const { return op_.dim(); }

private:
    BasicHermitian<Scalar> op_;
};

/// e = a 1 + b sigma_x + c sigma_y + d sigma_z.
template <typename Scalar>
struct BasicBloch {
    Scalar a = 0;
    Scalar b = 0;
    Scalar c = 0;
    Scalar d = 0;

    Scalar radius() const { return std::sqrt(b * b + c * c + d * d); }
    Eigen::Matrix<Scalar, 3, 1> vector() const { return {b, c, d}; }
    /// The coefficients describe an effect: a - r >= -tol and a + r <= 1 + tol.
    bool is_effect(Scalar tol = Scalar(tol::kValidation)) const {
        const Scalar r = radius();
        return a - r >= -tol && a + r <= Scalar(1) + tol;
    }
};

template <typename Scalar>
BasicHermitian<Scalar> bloch_to_hermitian(const BasicBloch<Scalar>& k) {
    OperatorMatrix<Scalar> m = k.a * pauli<Scalar>(0) + k.b * pauli<Scalar>(1) + k.c * pauli<Scalar>(2) +
                               k.d * pauli<Scalar>(3);
    return BasicHermitian<Scalar>(m);
}

template <typename Scalar>
BasicEffect<Scalar> bloch_to_effect(const BasicBloch<Scalar>& k, Scalar tol = Scalar(tol::kValidation)) {
    if (!k.is_effect(tol)) {
        throw Error(ErrorCode::NotAnEffect, "Bloch coefficients violate 0 <= a - r, a + r <= 1");
    }
    return BasicEffect<Scalar>(bloch_to_hermitian(k), tol);
}

template <typename Scalar>
BasicBloch<Scalar> bloch_coefficients(const BasicHermitian<Scalar>& h) {
    if (h.dim() != 2) {
        throw Error(ErrorCode::DimensionMismatch, "Bloch coefficients need a qubit operator");
    }
    const auto& m = h.matrix();
    // Tr(h sigma_k) / 2 written out entrywise.
    return {(m(0, 0).real() + m(1, 1).real()) / Scalar(2), m(0, 1).real(), -m(0, 1).imag(),
            (m(0, 0).real() - m(1, 1).real()) / Scalar(2)};
}

template <typename Scalar>
BasicBloch<Scalar> effect_to_bloch(const BasicEffect<Scalar>& e) {
    return bloch_coefficients(e.op());
}

template <typename Scalar>
struct BasicSpectralDecomposition {
    /// Ascending.
    std::vector<Scalar> eigenvalues;
    /// Rank-one, mutually orthogonal, aligned with eigenvalues.
    std::vector<BasicProjector<Scalar>> projectors;

    BasicHermitian<Scalar> reconstruct() const {
        const Index d = projectors.front().dim();
        OperatorMatrix<Scalar> m = OperatorMatrix<Scalar>::Zero(d, d);
        for (std::size_t j = 0; j < projectors.size(); ++j) {
            m += eigenvalues[j] * projectors[j].matrix();
        }
        return BasicHermitian<Scalar>(m);
    }
};

/// Spectral resolution h = sum_j lambda_j P_j with ascending eigenvalues.
/// Inside a degenerate eigenspace the basis is whatever the solver returns.
template <typename Scalar>
BasicSpectralDecomposition<Scalar> spectral(const BasicHermitian<Scalar>& h) {
    Eigen::SelfAdjointEigenSolver<OperatorMatrix<Scalar>> solver(h.matrix());
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorCode::ConvergenceFailure, "eigen decomposition failed");
    }
    BasicSpectralDecomposition<Scalar> out;
    const Index d = h.dim();
    out.eigenvalues.reserve(d);
    out.projectors.reserve(d);
    for (Index j = 0; j < d; ++j) {
        out.eigenvalues.push_back(solver.eigenvalues()(j));
        out.projectors.push_back(BasicProjector<Scalar>::rank_one(solver.eigenvectors().col(j)));
    }
    return out;
}

/// Tr(rho e), clamped into [0, 1] only when within the validation band.
template <typename Scalar>
Scalar born_probability(const BasicDensity<Scalar>& rho, const BasicEffect<Scalar>& e) {
    if (rho.dim() != e.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "density and effect dimensions differ");
    }
    const Scalar p = trace_product(rho.op(), e.op());
    const Scalar band = Scalar(tol::kValidation);
    if (p < Scalar(0) && p >= -band) return Scalar(0);
    if (p > Scalar(1) && p <= Scalar(1) + band) return Scalar(1);
    return p;
}

using Hermitian = BasicHermitian<double>;
using Effect = BasicEffect<double>;
using Projector = BasicProjector<double>;
using DensityOperator = BasicDensity<double>;
using BlochCoefficients = BasicBloch<double>;
using SpectralDecomposition = BasicSpectralDecomposition<double>;
using Matrix = OperatorMatrix<double>;
using Complex = std::complex<double>;

} // namespace gleason

#endif // GLEASON_OPERATORS_HPP
