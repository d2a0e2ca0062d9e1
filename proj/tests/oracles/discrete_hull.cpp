#include "discrete_hull.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace gleason::oracle {

Eigen::VectorXd bloch_coordinates(const Measurement& m) {
    Eigen::VectorXd v(4 * static_cast<Index>(m.size()));
    for (std::size_t j = 0; j < m.size(); ++j) {
        const Matrix& e = m[j].matrix();
        const Index s = 4 * static_cast<Index>(j);
        v(s) = 0.5 * (e(0, 0) + e(1, 1)).real();
        v(s + 1) = 0.5 * (e(0, 1) + e(1, 0)).real();
        v(s + 2) = 0.5 * (e(1, 0) - e(0, 1)).imag();
        v(s + 3) = 0.5 * (e(0, 0) - e(1, 1)).real();
    }
    return v;
}

Eigen::MatrixXd enumerate_atoms(std::size_t n, std::size_t n_axes) {
    const Index rows = 4 * static_cast<Index>(n);
    const Index cols = static_cast<Index>(n + n * (n - 1) * n_axes);
    Eigen::MatrixXd atoms = Eigen::MatrixXd::Zero(rows, cols);
    Index col = 0;
    for (std::size_t i = 0; i < n; ++i) atoms(4 * static_cast<Index>(i), col++) = 1.0;
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (std::size_t k = 0; k < n_axes; ++k) {
        const double z = 1.0 - 2.0 * (static_cast<double>(k) + 0.5) / static_cast<double>(n_axes);
        const double r = std::sqrt(1.0 - z * z);
        const double phi = golden * static_cast<double>(k);
        const Eigen::Vector3d u(r * std::cos(phi), r * std::sin(phi), z);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                atoms(4 * static_cast<Index>(i), col) = 0.5;
                atoms.block<3, 1>(4 * static_cast<Index>(i) + 1, col) = 0.5 * u;
                atoms(4 * static_cast<Index>(j), col) = 0.5;
                atoms.block<3, 1>(4 * static_cast<Index>(j) + 1, col) = -0.5 * u;
                ++col;
            }
        }
    }
    return atoms;
}

namespace {

// Affine minimiser of ||P alpha|| with sum(alpha) = 1 via the KKT system.
Eigen::VectorXd affine_min(const Eigen::MatrixXd& p) {
    const Index k = p.cols();
    Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(k + 1, k + 1);
    kkt.topLeftCorner(k, k) = p.transpose() * p;
    kkt.block(0, k, k, 1).setOnes();
    kkt.block(k, 0, 1, k).setOnes();
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(k + 1);
    rhs(k) = 1.0;
    return kkt.completeOrthogonalDecomposition().solve(rhs).head(k);
}

} // namespace

HullDistance min_norm_distance(const Eigen::MatrixXd& atoms, const Eigen::VectorXd& target, int max_iter) {
    // Work in scaled coordinates where the metric is Euclidean.
    const double scale = std::numbers::sqrt2;
    const Eigen::VectorXd t = scale * target;
    auto point = [&](Index c) -> Eigen::VectorXd { return scale * atoms.col(c) - t; };

    Index first = 0;
    double best = point(0).squaredNorm();
    for (Index c = 1; c < atoms.cols(); ++c) {
        const double v = point(c).squaredNorm();
        if (v < best) {
            best = v;
            first = c;
        }
    }
    std::vector<Index> s{first};
    Eigen::VectorXd lambda = Eigen::VectorXd::Ones(1);
    Eigen::VectorXd x = point(first);

    int it = 0;
    for (; it < max_iter; ++it) {
        // Pricing: argmin_c <x, p_c> over every enumerated atom.
        const Eigen::VectorXd scores = scale * (atoms.transpose() * x);
        Index j = 0;
        scores.minCoeff(&j);
        const double xp = x.dot(point(j));
        const double xx = x.squaredNorm();
        if (xx - xp <= 1e-15 * std::max(1.0, xx)) break;
        bool present = false;
        for (const Index c : s) present |= (c == j);
        if (present) break;
        s.push_back(j);
        lambda.conservativeResize(lambda.size() + 1);
        lambda(lambda.size() - 1) = 0.0;

        for (;;) {
            Eigen::MatrixXd p(x.size(), static_cast<Index>(s.size()));
            for (std::size_t k = 0; k < s.size(); ++k) p.col(static_cast<Index>(k)) = point(s[k]);
            const Eigen::VectorXd alpha = affine_min(p);
            if (alpha.minCoeff() > 1e-14) {
                lambda = alpha;
                x = p * alpha;
                break;
            }
            double theta = 1.0;
            for (Index k = 0; k < alpha.size(); ++k) {
                if (alpha(k) <= 1e-14) {
                    const double denom = lambda(k) - alpha(k);
                    if (denom > 0) theta = std::min(theta, lambda(k) / denom);
                }
            }
            lambda = theta * alpha + (1 - theta) * lambda;
            std::vector<Index> kept;
            std::vector<double> kept_l;
            for (Index k = 0; k < lambda.size(); ++k) {
                if (lambda(k) > 1e-14) {
                    kept.push_back(s[static_cast<std::size_t>(k)]);
                    kept_l.push_back(lambda(k));
                }
            }
            s = kept;
            lambda = Eigen::Map<Eigen::VectorXd>(kept_l.data(), static_cast<Index>(kept_l.size()));
            lambda /= lambda.sum();
            x.setZero();
            for (std::size_t k = 0; k < s.size(); ++k) x += lambda(static_cast<Index>(k)) * point(s[k]);
        }
    }
    return HullDistance{x.norm(), static_cast<std::size_t>(atoms.cols()), it, s.size()};
}

} // namespace gleason::oracle
