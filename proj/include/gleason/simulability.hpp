#ifndef GLEASON_SIMULABILITY_HPP
#define GLEASON_SIMULABILITY_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "gleason/measurement.hpp"

namespace gleason {

/// e = sum_{k>=1} p_k Q_k with nested projectors Q_k = sum_{j>=k} P_j built
/// from the ascending spectral resolution, p_k = lambda_k - lambda_{k-1}
/// (lambda_0 = 0) and p_0 = 1 - lambda_d paired with Q_0 = 0.
struct StaircaseDecomposition {
    /// p_0 ... p_d, nonnegative, summing to 1.
    std::vector<double> probabilities;
    /// Q_0 = 0, Q_1 = 1, ..., Q_d; decreasing.
    std::vector<Projector> projectors;

    Hermitian reconstruct() const;
};

/// Eigenvalues are clamped into [0, 1] before the gaps are taken, so the
/// weights are exactly nonnegative for effects on the validation band edge.
StaircaseDecomposition staircase(const Effect& e);

/// Weighted list of projective (possibly zero-padded) measurements.
using MixtureDecomposition = std::vector<MixturePart>;

/// Mixture of [[Q_k, 1 - Q_k]] with weights p_k reproducing [[e, 1 - e]].
/// Parts with weight below 1e-14 are dropped.
MixtureDecomposition simulate_two_outcome(const Effect& e);

/// T_e = (1/2)[[e, 0, 1 - e]] + (1/2)[[0, e, 1 - e]], each half expanded
/// with simulate_two_outcome.
MixtureDecomposition simulate_t_e(const Effect& e);
/// T_{e,e2} = (1/2)[[e, 0, 1 - e]] + (1/2)[[0, e2, 1 - e2]].
MixtureDecomposition simulate_t_ee(const Effect& e, const Effect& e2);

/// Mixture reproduces target entrywise within tol, weights form a
/// distribution, and every effect of every part is idempotent.
bool verify_decomposition(const Measurement& target, const MixtureDecomposition& dec, double tol);

/// Largest entrywise deviation between the mixed parts and target.
double reconstruction_error(const Measurement& target, const MixtureDecomposition& dec);

/// Projective qubit atom maximising sum_j Tr(G_j e_j). Candidates are the
/// identity placed in one slot, and P = (1 + n.sigma)/2 in slot i with 1 - P
/// in slot j != i where n is the Bloch direction of G_i - G_j.
Measurement atom_oracle(const MeasurementVector& gradient, std::size_t n_outcomes);

/// max over projective atoms of <separator, atom>.
double atom_support(const MeasurementVector& separator);

/// <separator, target> - max over atoms of <separator, atom>.
double separation_margin(const MeasurementVector& separator, const Measurement& target);

enum class SimulabilityStatus { Simulable, NotSimulable, Inconclusive };

std::string_view to_string(SimulabilityStatus s) noexcept;

struct SeparatingCertificate {
    /// Unit-norm functional (outcome-wise trace inner product).
    MeasurementVector separator;
    /// <separator, target> - max_atom <separator, atom>; a lower bound on the
    /// distance from the target to the projective-simulable set.
    double margin;
};

struct SimulabilityVerdict {
    SimulabilityStatus status;
    std::optional<MixtureDecomposition> witness;
    std::optional<SeparatingCertificate> certificate;
    int iterations = 0;
    /// Frank-Wolfe gap <t - x, s - x> at termination.
    double gap = 0;
    /// ||t - x|| of the final iterate.
    double distance = 0;
};

/// Certified membership of a qubit POM (at most 8 outcomes) in the convex
/// hull of projective atoms. Fully corrective Frank-Wolfe on ||x - pom||^2
/// with the closed-form atom oracle; the active set is warm-started with
/// atoms built from the eigenprojectors of the target's effects. Stops once
/// the gap falls below tol^2/4 or after max_iter iterations.
SimulabilityVerdict membership(const Measurement& pom, double tol = tol::kMembership,
                               int max_iter = tol::kMembershipMaxIter);

} // namespace gleason

#endif // GLEASON_SIMULABILITY_HPP
