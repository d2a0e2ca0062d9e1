#include "nnls.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace gleason::detail {

Eigen::VectorXd nnls(const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
    const Eigen::Index n = a.cols();
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    std::vector<bool> passive(n, false);
    // Columns whose entry left x unchanged; cleared whenever x moves.
    std::vector<bool> blocked(n, false);
    const double tol = 10.0 * std::numeric_limits<double>::epsilon() * a.cwiseAbs().maxCoeff() *
                       static_cast<double>(std::max(a.rows(), a.cols()));
    const int max_outer = 3 * static_cast<int>(n) + 10;

    auto solve_passive = [&](Eigen::VectorXd& s) {
        std::vector<Eigen::Index> idx;
        for (Eigen::Index j = 0; j < n; ++j) {
            if (passive[j]) idx.push_back(j);
        }
        Eigen::MatrixXd ap(a.rows(), static_cast<Eigen::Index>(idx.size()));
        for (std::size_t k = 0; k < idx.size(); ++k) {
            ap.col(static_cast<Eigen::Index>(k)) = a.col(idx[k]);
        }
        const Eigen::VectorXd z = ap.colPivHouseholderQr().solve(b);
        s.setZero(n);
        for (std::size_t k = 0; k < idx.size(); ++k) {
            s(idx[k]) = z(static_cast<Eigen::Index>(k));
        }
    };

    Eigen::VectorXd w = a.transpose() * (b - a * x);
    Eigen::VectorXd s(n);
    for (int outer = 0; outer < max_outer; ++outer) {
        Eigen::Index best = -1;
        double best_w = tol;
        for (Eigen::Index j = 0; j < n; ++j) {
            if (!passive[j] && !blocked[j] && w(j) > best_w) {
                best_w = w(j);
                best = j;
            }
        }
        if (best < 0) break;
        passive[best] = true;
        const Eigen::VectorXd before = x;

        for (int inner = 0; inner < 3 * static_cast<int>(n) + 10; ++inner) {
            solve_passive(s);
            bool feasible = true;
            for (Eigen::Index j = 0; j < n; ++j) {
                if (passive[j] && s(j) <= 0) {
                    feasible = false;
                    break;
                }
            }
            if (feasible) {
                x = s;
                break;
            }
            double alpha = std::numeric_limits<double>::infinity();
            for (Eigen::Index j = 0; j < n; ++j) {
                if (passive[j] && s(j) <= 0) {
                    alpha = std::min(alpha, x(j) / (x(j) - s(j)));
                }
            }
            x += alpha * (s - x);
            for (Eigen::Index j = 0; j < n; ++j) {
                if (passive[j] && x(j) <= tol) {
                    passive[j] = false;
                    x(j) = 0;
                }
            }
        }
        if (!passive[best] && (x - before).cwiseAbs().maxCoeff() == 0.0) {
            blocked[best] = true;
        } else {
            std::fill(blocked.begin(), blocked.end(), false);
        }
        w = a.transpose() * (b - a * x);
    }
    return x;
}

Eigen::VectorXd simplex_least_squares(const Eigen::MatrixXd& points, const Eigen::VectorXd& target) {
    const Eigen::Index dim = points.rows();
    const Eigen::Index m = points.cols();
    Eigen::MatrixXd e(dim + 1, m);
    e.topRows(dim) = points.colwise() - target;
    e.row(dim).setOnes();
    Eigen::VectorXd f = Eigen::VectorXd::Zero(dim + 1);
    f(dim) = 1.0;
    Eigen::VectorXd u = nnls(e, f);
    const double total = u.sum();
    if (!(total > 0)) {
        // Degenerate: fall back to the single nearest point.
        Eigen::Index best = 0;
        (points.colwise() - target).colwise().squaredNorm().minCoeff(&best);
        u.setZero();
        u(best) = 1.0;
        return u;
    }
    return u / total;
}

} // namespace gleason::detail
