#include "gleason/random.hpp"

#include <cmath>
#include <numbers>

namespace gleason {

std::size_t Rng::index(std::size_t n) {
    if (n == 0) {
        throw Error(ErrorCode::IndexOutOfRange, "index() on empty range");
    }
    return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n;
}

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u = 0;
    do {
        u = uniform();
    } while (u <= 0.0);
    const double v = uniform();
    const double r = std::sqrt(-2.0 * std::log(u));
    const double phi = 2.0 * std::numbers::pi * v;
    spare_ = r * std::sin(phi);
    has_spare_ = true;
    return r * std::cos(phi);
}

Eigen::Vector3d Rng::unit_vector() {
    const double z = uniform(-1.0, 1.0);
    const double phi = uniform(0.0, 2.0 * std::numbers::pi);
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {s * std::cos(phi), s * std::sin(phi), z};
}

Matrix random_unitary(Rng& rng, Index dim) {
    Matrix g(dim, dim);
    for (Index i = 0; i < dim; ++i) {
        for (Index j = 0; j < dim; ++j) {
            g(i, j) = Complex(rng.normal(), rng.normal());
        }
    }
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Index j = 0; j < dim; ++j) {
        const double mag = std::abs(r(j, j));
        if (mag > 0) {
            q.col(j) *= r(j, j) / mag;
        }
    }
    return q;
}

Effect random_effect(Rng& rng, Index dim) {
    const Matrix u = random_unitary(rng, dim);
    Eigen::VectorXd lambda(dim);
    for (Index j = 0; j < dim; ++j) {
        lambda(j) = rng.uniform();
    }
    return Effect(Hermitian(u * lambda.cast<Complex>().asDiagonal() * u.adjoint(), 1e-10));
}

BlochCoefficients random_bloch_effect(Rng& rng) {
    const double a = rng.uniform();
    const double r = rng.uniform() * std::min(a, 1.0 - a);
    const Eigen::Vector3d n = rng.unit_vector();
    return {a, r * n.x(), r * n.y(), r * n.z()};
}

DensityOperator random_density(Rng& rng, Index dim) {
    Eigen::VectorXd w(dim);
    for (Index j = 0; j < dim; ++j) {
        double u = 0;
        do {
            u = rng.uniform();
        } while (u <= 0.0);
        w(j) = -std::log(u);
    }
    w /= w.sum();
    const Matrix u = random_unitary(rng, dim);
    Matrix rho = u * w.cast<Complex>().asDiagonal() * u.adjoint();
    rho /= rho.trace().real();
    return DensityOperator(Hermitian(rho, 1e-10));
}

Projector random_qubit_projector(Rng& rng) {
    const Eigen::Vector3d n = rng.unit_vector();
    return Projector(bloch_to_hermitian(BlochCoefficients{0.5, 0.5 * n.x(), 0.5 * n.y(), 0.5 * n.z()}));
}

} // namespace gleason
