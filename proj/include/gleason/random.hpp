#ifndef GLEASON_RANDOM_HPP
#define GLEASON_RANDOM_HPP

#include <cstdint>
#include <random>

#include "gleason/operators.hpp"

namespace gleason {

/// Seeded generator whose output is identical on every platform: the
/// distributions are built from raw mt19937_64 words instead of the
/// implementation-defined std:: distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Uniform on {0, ..., n - 1}.
    std::size_t index(std::size_t n);
    double normal();
    Eigen::Vector3d unit_vector();

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0;
};

/// Haar-random unitary (QR of a complex Ginibre matrix with phase fix).
Matrix random_unitary(Rng& rng, Index dim);
/// Random effect U diag(lambda) U^dagger with lambda uniform in [0, 1].
Effect random_effect(Rng& rng, Index dim);
/// Uniform Bloch tuple: a ~ U[0,1], direction uniform, |r| ~ U[0, min(a, 1 - a)].
BlochCoefficients random_bloch_effect(Rng& rng);
/// Density with uniformly random spectrum on the simplex and Haar eigenbasis.
DensityOperator random_density(Rng& rng, Index dim);
/// Rank-one projector (1 + n.sigma)/2 with n uniform on the sphere.
Projector random_qubit_projector(Rng& rng);

} // namespace gleason

#endif // GLEASON_RANDOM_HPP
