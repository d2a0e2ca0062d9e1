#ifndef GLEASON_MEASUREMENT_HPP
#define GLEASON_MEASUREMENT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gleason/operators.hpp"

namespace gleason {

/// Ordered sequence of effects summing to the identity. Slot order is
/// significant: mixing aligns outcomes by position.
class Measurement {
public:
    Index dim() const { return dim_; }
    std::size_t size() const { return effects_.size(); }
    const Effect& operator[](std::size_t j) const { return effects_[j]; }
    const std::vector<Effect>& effects() const { return effects_; }

    /// Every effect is idempotent (zero effects included).
    bool is_projective(double tol = tol::kValidation) const;

    friend Measurement make_measurement(std::vector<Effect> effects, double tol);

private:
    Measurement(std::vector<Effect> effects, Index dim) : effects_(std::move(effects)), dim_(dim) {}

    std::vector<Effect> effects_;
    Index dim_;
};

/// Validates completeness: sum of effects equals 1 entrywise within tol.
Measurement make_measurement(std::vector<Effect> effects, double tol = tol::kValidation);
/// Validates every element as an effect, then completeness.
Measurement make_measurement(const std::vector<Hermitian>& effects, double tol = tol::kValidation);

/// Element of the real vector space of n-tuples of Hermitian operators.
/// Measurements embed into it; only convex combinations stay measurements.
class MeasurementVector {
public:
    explicit MeasurementVector(std::vector<Hermitian> parts);
    explicit MeasurementVector(const Measurement& m);

    static MeasurementVector zero(std::size_t n, Index dim);

    Index dim() const { return parts_.front().dim(); }
    std::size_t size() const { return parts_.size(); }
    const Hermitian& operator[](std::size_t j) const { return parts_[j]; }
    const std::vector<Hermitian>& parts() const { return parts_; }

    friend MeasurementVector operator+(const MeasurementVector& a, const MeasurementVector& b);
    friend MeasurementVector operator-(const MeasurementVector& a, const MeasurementVector& b);
    friend MeasurementVector operator*(double s, const MeasurementVector& a);

private:
    std::vector<Hermitian> parts_;
};

/// Outcome-wise trace inner product sum_j Tr(a_j b_j).
double inner(const MeasurementVector& a, const MeasurementVector& b);
/// Largest entrywise deviation across all outcomes.
double max_abs_diff(const MeasurementVector& a, const MeasurementVector& b);

struct MixturePart {
    double weight;
    Measurement measurement;
};

/// Outcome j of the result is sum_i w_i (effect j of part i). Weights must lie
/// in [0, 1] and sum to 1 within 1e-12; outcome counts must already agree.
Measurement mix(const std::vector<MixturePart>& parts);

/// Inserts the zero effect at `position` (0 <= position <= size).
Measurement pad_zero(const Measurement& m, std::size_t position);

/// [[e, 1 - e]]
Measurement d_e(const Effect& e);
/// [[e/2, e/2, 1 - e]]
Measurement t_e(const Effect& e);
/// [[e/2, e2/2, 1 - (e + e2)/2]]; requires e + e2 to be an effect.
Measurement t_ee(const Effect& e, const Effect& e2);

/// Qubit measurement (1/2)[[1 + n.sigma, 1 - n.sigma]] for a unit axis n.
Measurement stern_gerlach(const Eigen::Vector3d& axis);

enum class MeasurementSet { PVM, POM, TwoPOM, ThreePOM, PSM, ThreePSMPrime };

std::string_view to_string(MeasurementSet s) noexcept;
/// Accepts pvm, pom, 2pom, 3pom, psm, 3psmprime (case-insensitive) and the enum names.
std::optional<MeasurementSet> parse_measurement_set(std::string_view name);

} // namespace gleason

#endif // GLEASON_MEASUREMENT_HPP
