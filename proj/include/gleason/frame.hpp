#ifndef GLEASON_FRAME_HPP
#define GLEASON_FRAME_HPP

// Frame functions over finite measurement sets: effect identification,
// the linear sum-to-one system, its affine solution space, trace-form
// fitting and the counterexample function g.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "gleason/measurement.hpp"

namespace gleason {

/// Canonical ids for effects. Two effects whose entries agree within 1.5e-9
/// (max-abs) share an id; the first one registered is the representative.
class EffectRegistry {
public:
    std::size_t intern(const Effect& e);
    std::optional<std::size_t> find(const Effect& e) const;

    std::size_t size() const { return entries_.size(); }
    const Effect& operator[](std::size_t id) const { return entries_[id]; }
    const std::vector<Effect>& entries() const { return entries_; }

private:
    std::vector<Effect> entries_;
    // Keyed by Re(e(0,0)); candidates are confirmed entrywise.
    std::multimap<double, std::size_t> index_;
};

/// One row per measurement: sum over outcome slots of f(effect) = 1. A
/// repeated effect contributes its multiplicity as the coefficient.
struct FrameSystem {
    EffectRegistry registry;
    std::vector<std::vector<std::size_t>> rows;
    Eigen::MatrixXd matrix;
};

FrameSystem build_system(const std::vector<Measurement>& measurements);

/// All x with matrix * x = 1: particular + span(basis).
struct SolutionSpace {
    Eigen::VectorXd particular;
    /// Orthonormal columns spanning the homogeneous solutions.
    Eigen::MatrixXd basis;
    Index affine_dim = 0;
    Index rank = 0;
    /// Smallest singular value kept in the rank (0 when rank is 0).
    double smallest_retained = 0;
    /// Largest singular value treated as zero (0 when none).
    double largest_discarded = 0;
};

/// Particular solution by SVD least squares, homogeneous basis from the right
/// singular vectors with singular value <= threshold. Throws
/// InconsistentSystem when the best residual exceeds 1e-6.
SolutionSpace solve_space(const FrameSystem& sys, double threshold = tol::kNullspace);

using FrameFunction = std::function<double(const Effect&)>;

/// Frame values indexed by registry id, each within [-1e-10, 1 + 1e-10].
class FrameTable {
public:
    explicit FrameTable(std::vector<double> values);
    static FrameTable from_function(const EffectRegistry& registry, const FrameFunction& f);

    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t id) const { return values_[id]; }
    const std::vector<double>& values() const { return values_; }

private:
    std::vector<double> values_;
};

/// Function view of a table; throws MissingValue for unregistered effects.
FrameFunction table_function(const EffectRegistry& registry, const FrameTable& table);

/// Born-rule frame function e -> Tr(rho e).
FrameFunction born_function(const DensityOperator& rho);

/// The non-trace-form qubit assignment: alpha - |r| on effects whose Bloch
/// direction is +z, alpha + |r| on direction -z, alpha otherwise (within an
/// angular tolerance of 1e-9). On projectors: 0 on |0><0|, 1 on |1><1|,
/// 1/2 elsewhere.
double counterexample_g(const Effect& e);

struct FrameCheck {
    bool ok = true;
    /// Indices into the measurement list whose row sum misses 1.
    std::vector<std::size_t> violated;
    double worst_deviation = 0;
};

FrameCheck check_frame(const FrameFunction& f, const std::vector<Measurement>& measurements, double tol);
FrameCheck check_frame(const EffectRegistry& registry, const FrameTable& table,
                       const std::vector<Measurement>& measurements, double tol);

/// sum_i w_i f(outcome-th effect of part i).
double mixture_outcome_probability(const FrameFunction& f, const std::vector<MixturePart>& parts,
                                   std::size_t outcome);

struct DensityFit {
    /// Least-squares trace-one Hermitian operator; not necessarily positive.
    Hermitian rho;
    /// max_i |Tr(rho e_i) - f_i|.
    double residual;
    /// Smallest eigenvalue of rho >= -1e-8.
    bool psd;
};

/// Throws RankDeficient when the registered effects do not span the
/// Hermitian operators.
DensityFit fit_density(const EffectRegistry& registry, const Eigen::VectorXd& values);
DensityFit fit_density(const EffectRegistry& registry, const FrameTable& values);

/// |sum_j f(P_j) - f(sum_j P_j)| <= tol for mutually orthogonal projectors.
bool additivity_check(const FrameFunction& f, const std::vector<Projector>& projectors, double tol);

/// Random points of {x in solution space : 0 <= x <= 1} by hit-and-run,
/// started from the projection of the maximally mixed Born table.
std::vector<Eigen::VectorXd> sample_feasible(const FrameSystem& sys, const SolutionSpace& space,
                                             std::size_t count, std::uint64_t seed);

/// Intertwined sample of two-outcome POMs and T_e / T_{e,e'} measurements.
/// Three seed effects (each below 1/2) get D_e and T_e; further effects are
/// midpoints (x + y)/2 of earlier ones, each entering through T_{x,y},
/// D_{(x+y)/2} and T_{(x+y)/2}. Leftover budget is spent on rows that only
/// introduce effects already pinned by earlier rows.
std::vector<Measurement> sample_3psm_prime(std::uint64_t seed, std::size_t n_two_outcome, std::size_t n_te,
                                           std::size_t n_tee);

/// k binary qubit PVMs [[P, 1 - P]] with uniformly random axes.
std::vector<Measurement> sample_pvm(std::uint64_t seed, std::size_t k);
/// k two-outcome POMs D_e for uniformly random Bloch tuples.
std::vector<Measurement> sample_2pom(std::uint64_t seed, std::size_t k);

} // namespace gleason

#endif // GLEASON_FRAME_HPP
