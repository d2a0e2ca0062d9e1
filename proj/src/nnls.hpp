#ifndef GLEASON_SRC_NNLS_HPP
#define GLEASON_SRC_NNLS_HPP

#include <Eigen/Dense>

namespace gleason::detail {

/// Lawson-Hanson active-set solution of min ||A x - b|| subject to x >= 0.
Eigen::VectorXd nnls(const Eigen::MatrixXd& a, const Eigen::VectorXd& b);

/// Weights lambda on the simplex minimising ||points * lambda - target||.
/// Reduced to NNLS on [points - target; 1^T] u = [0; 1], lambda = u / sum(u).
Eigen::VectorXd simplex_least_squares(const Eigen::MatrixXd& points, const Eigen::VectorXd& target);

} // namespace gleason::detail

#endif // GLEASON_SRC_NNLS_HPP
