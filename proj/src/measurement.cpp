#include "gleason/measurement.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace gleason {

bool Measurement::is_projective(double tol) const {
    return std::all_of(effects_.begin(), effects_.end(),
                       [tol](const Effect& e) { return is_projector(e.op(), tol); });
}

Measurement make_measurement(std::vector<Effect> effects, double tol) {
    if (effects.empty()) {
        throw Error(ErrorCode::ShapeMismatch, "a measurement needs at least one outcome");
    }
    const Index dim = effects.front().dim();
    Matrix sum = Matrix::Zero(dim, dim);
    for (const auto& e : effects) {
        if (e.dim() != dim) {
            throw Error(ErrorCode::DimensionMismatch, "effects of different dimensions");
        }
        sum += e.matrix();
    }
    if (max_abs_diff(sum, Matrix::Identity(dim, dim)) > tol) {
        throw Error(ErrorCode::IncompleteMeasurement, "effects do not sum to the identity");
    }
    return Measurement(std::move(effects), dim);
}

Measurement make_measurement(const std::vector<Hermitian>& effects, double tol) {
    std::vector<Effect> checked;
    checked.reserve(effects.size());
    for (const auto& h : effects) {
        checked.emplace_back(h, tol);
    }
    return make_measurement(std::move(checked), tol);
}

MeasurementVector::MeasurementVector(std::vector<Hermitian> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) {
        throw Error(ErrorCode::ShapeMismatch, "empty measurement vector");
    }
    for (const auto& p : parts_) {
        if (p.dim() != parts_.front().dim()) {
            throw Error(ErrorCode::DimensionMismatch, "components of different dimensions");
        }
    }
}

MeasurementVector::MeasurementVector(const Measurement& m) {
    parts_.reserve(m.size());
    for (const auto& e : m.effects()) {
        parts_.push_back(e.op());
    }
}

MeasurementVector MeasurementVector::zero(std::size_t n, Index dim) {
    return MeasurementVector(std::vector<Hermitian>(n, Hermitian::zero(dim)));
}

namespace {

void check_shape(const MeasurementVector& a, const MeasurementVector& b) {
    if (a.size() != b.size()) {
        throw Error(ErrorCode::ShapeMismatch, "outcome counts differ");
    }
    if (a.dim() != b.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "dimensions differ");
    }
}

} // namespace

MeasurementVector operator+(const MeasurementVector& a, const MeasurementVector& b) {
    check_shape(a, b);
    std::vector<Hermitian> out;
    out.reserve(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
        out.push_back(a[j] + b[j]);
    }
    return MeasurementVector(std::move(out));
}

MeasurementVector operator-(const MeasurementVector& a, const MeasurementVector& b) {
    check_shape(a, b);
    std::vector<Hermitian> out;
    out.reserve(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
        out.push_back(a[j] - b[j]);
    }
    return MeasurementVector(std::move(out));
}

MeasurementVector operator*(double s, const MeasurementVector& a) {
    std::vector<Hermitian> out;
    out.reserve(a.size());
    for (const auto& p : a.parts()) {
        out.push_back(s * p);
    }
    return MeasurementVector(std::move(out));
}

double inner(const MeasurementVector& a, const MeasurementVector& b) {
    check_shape(a, b);
    double s = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        s += trace_product(a[j], b[j]);
    }
    return s;
}

double max_abs_diff(const MeasurementVector& a, const MeasurementVector& b) {
    check_shape(a, b);
    double worst = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        worst = std::max(worst, max_abs_diff(a[j].matrix(), b[j].matrix()));
    }
    return worst;
}

Measurement mix(const std::vector<MixturePart>& parts) {
    if (parts.empty()) {
        throw Error(ErrorCode::WeightError, "empty mixture");
    }
    const double eps = tol::kArithmetic;
    double total = 0;
    for (const auto& p : parts) {
        if (!(p.weight >= -eps && p.weight <= 1 + eps)) {
            throw Error(ErrorCode::WeightError, "weight outside [0, 1]");
        }
        total += p.weight;
    }
    if (std::abs(total - 1.0) > eps) {
        throw Error(ErrorCode::WeightError, "weights do not sum to 1");
    }
    const auto& first = parts.front().measurement;
    const std::size_t n = first.size();
    const Index dim = first.dim();
    std::vector<Matrix> acc(n, Matrix::Zero(dim, dim));
    for (const auto& p : parts) {
        if (p.measurement.dim() != dim) {
            throw Error(ErrorCode::DimensionMismatch, "mixed measurements of different dimensions");
        }
        if (p.measurement.size() != n) {
            throw Error(ErrorCode::ShapeMismatch, "mixed measurements with different outcome counts");
        }
        for (std::size_t j = 0; j < n; ++j) {
            acc[j] += p.weight * p.measurement[j].matrix();
        }
    }
    std::vector<Effect> effects;
    effects.reserve(n);
    for (auto& m : acc) {
        effects.emplace_back(Hermitian(m));
    }
    return make_measurement(std::move(effects));
}

Measurement pad_zero(const Measurement& m, std::size_t position) {
    if (position > m.size()) {
        throw Error(ErrorCode::IndexOutOfRange, "padding position beyond outcome count");
    }
    std::vector<Effect> effects = m.effects();
    effects.insert(effects.begin() + static_cast<std::ptrdiff_t>(position), Effect::zero(m.dim()));
    return make_measurement(std::move(effects));
}

Measurement d_e(const Effect& e) {
    return make_measurement({e, e.complement()});
}

Measurement t_e(const Effect& e) {
    const Effect half = e.scaled(0.5);
    return make_measurement({half, half, e.complement()});
}

Measurement t_ee(const Effect& e, const Effect& e2) {
    // Throws NotAnEffect when e + e2 leaves the effect space.
    const Effect sum(e.op() + e2.op());
    return make_measurement({e.scaled(0.5), e2.scaled(0.5), sum.scaled(0.5).complement()});
}

Measurement stern_gerlach(const Eigen::Vector3d& axis) {
    if (std::abs(axis.norm() - 1.0) > tol::kArithmetic) {
        throw Error(ErrorCode::NotUnitVector, "Stern-Gerlach axis must have unit length");
    }
    const BlochCoefficients plus{0.5, 0.5 * axis.x(), 0.5 * axis.y(), 0.5 * axis.z()};
    const BlochCoefficients minus{0.5, -0.5 * axis.x(), -0.5 * axis.y(), -0.5 * axis.z()};
    return make_measurement({bloch_to_effect(plus), bloch_to_effect(minus)});
}

std::string_view to_string(MeasurementSet s) noexcept {
    switch (s) {
    case MeasurementSet::PVM: return "pvm";
    case MeasurementSet::POM: return "pom";
    case MeasurementSet::TwoPOM: return "2pom";
    case MeasurementSet::ThreePOM: return "3pom";
    case MeasurementSet::PSM: return "psm";
    case MeasurementSet::ThreePSMPrime: return "3psmprime";
    }
    return "unknown";
}

std::optional<MeasurementSet> parse_measurement_set(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    if (lower == "pvm") return MeasurementSet::PVM;
    if (lower == "pom") return MeasurementSet::POM;
    if (lower == "2pom" || lower == "twopom") return MeasurementSet::TwoPOM;
    if (lower == "3pom" || lower == "threepom") return MeasurementSet::ThreePOM;
    if (lower == "psm") return MeasurementSet::PSM;
    if (lower == "3psmprime" || lower == "threepsmprime" || lower == "3psm'") return MeasurementSet::ThreePSMPrime;
    return std::nullopt;
}

} // namespace gleason
