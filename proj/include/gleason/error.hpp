#ifndef GLEASON_ERROR_HPP
#define GLEASON_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace gleason {

enum class ErrorCode {
    NotHermitian,
    NotAnEffect,
    NotAProjector,
    NotADensity,
    DimensionMismatch,
    ConvergenceFailure,
    IncompleteMeasurement,
    WeightError,
    ShapeMismatch,
    IndexOutOfRange,
    NotUnitVector,
    UnsupportedDimension,
    MissingValue,
    InconsistentSystem,
    RankDeficient,
    NotOrthogonal,
    InvalidProbability,
    ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotAnEffect: return "NotAnEffect";
    case ErrorCode::NotAProjector: return "NotAProjector";
    case ErrorCode::NotADensity: return "NotADensity";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::IncompleteMeasurement: return "IncompleteMeasurement";
    case ErrorCode::WeightError: return "WeightError";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotUnitVector: return "NotUnitVector";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::MissingValue: return "MissingValue";
    case ErrorCode::InconsistentSystem: return "InconsistentSystem";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
    case ErrorCode::InvalidProbability: return "InvalidProbability";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

} // namespace gleason

#endif // GLEASON_ERROR_HPP
