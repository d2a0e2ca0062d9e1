#ifndef GLEASON_TOLERANCE_HPP
#define GLEASON_TOLERANCE_HPP

namespace gleason::tol {

// Eigenvalue band for effects, projector idempotency, density trace/positivity.
inline constexpr double kValidation = 1e-10;
// Arithmetic identities (Hermiticity, round trips, catalog sums).
inline constexpr double kArithmetic = 1e-12;
// Weights below this are dropped from constructive decompositions.
inline constexpr double kZeroWeight = 1e-14;
// Default Frank-Wolfe membership distance.
inline constexpr double kMembership = 1e-7;
inline constexpr int kMembershipMaxIter = 20000;
// Singular values at or below this count as zero in frame systems.
inline constexpr double kNullspace = 1e-8;
// Effects closer than this (max-abs entrywise) share a registry id.
inline constexpr double kRegistryMatch = 1.5e-9;

} // namespace gleason::tol

#endif // GLEASON_TOLERANCE_HPP
