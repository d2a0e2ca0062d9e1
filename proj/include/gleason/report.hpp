#ifndef GLEASON_REPORT_HPP
#define GLEASON_REPORT_HPP

// Report builders behind the gleason-lab commands. Everything here is
// deterministic for fixed inputs so outputs can be diffed byte for byte.

#include <string>
#include <vector>

#include "gleason/catalog.hpp"
#include "gleason/serialize.hpp"

namespace gleason {

struct ReproduceCell {
    std::string name;
    double computed;
    double expected;
    bool ok;
};

struct ReproduceReport {
    std::vector<ReproduceCell> cells;
    bool ok() const;
};

/// g-probabilities of M_x, M_z, M_r, M_s, the first-outcome probabilities of
/// the two mixtures, and the deviations of both mixtures and of m from their
/// reference forms. Uses the measurements found in `cat`.
ReproduceReport reproduce(const Catalog& cat);

Json to_json(const ReproduceReport& r);
std::string to_csv(const ReproduceReport& r);

struct FrameReport {
    std::size_t n_effects = 0;
    std::size_t n_rows = 0;
    Index affine_dim = 0;
    DensityFit fit;
    /// Rows violated by the counterexample g.
    std::vector<std::size_t> violations;
    double smallest_retained = 0;
    double largest_discarded = 0;
    /// Residual of the trace-form fit to the g-table (3psmprime only).
    std::optional<double> g_residual;
};

/// Samples the set, solves the frame system and fits the particular solution.
/// counts: one entry for pvm and 2pom, three (two-outcome, T_e, T_ee) for
/// 3psmprime. Throws RankDeficient when the effects cannot determine rho.
FrameReport rigidity(MeasurementSet set, std::uint64_t seed, const std::vector<std::size_t>& counts);

Json to_json(const FrameReport& r);

/// Point cloud of the effect-space cross section with one Bloch component
/// suppressed: header, the extremal points zero and identity, `resolution`
/// samples of the projector circle, then cone surface points.
std::string cross_section_csv(char suppress, int resolution);

/// Fixed 12-decimal rendering with negative zero normalised.
std::string format_number(double v);

} // namespace gleason

#endif // GLEASON_REPORT_HPP
