#ifndef GLEASON_REFERENCE_VALUES_HPP
#define GLEASON_REFERENCE_VALUES_HPP

// Published reference constants. Everything the reproduction report
// compares against lives here as a literal; nothing is recomputed.

#include <array>
#include <numbers>
#include <string_view>

namespace gleason::reference {

// Bloch tuples (a, b, c, d) of the named qubit effects.
struct NamedBloch {
    std::string_view name;
    double a, b, c, d;
};

// x+, x-, z+, z-: Stern-Gerlach along x and z.
// r+, r-: (1 +- (sigma_x + sqrt3 sigma_z)/2) / 2.
// s+, s-: (1 +- (sigma_x - sqrt3 sigma_z)/2) / 2.
// m: (1 + (sigma_x + sigma_z)/2) / 2, the common first effect of both mixtures.
inline constexpr double kHalfSqrt3 = std::numbers::sqrt3 / 2.0;
inline constexpr std::array<NamedBloch, 9> kNamedEffects{{
    {"x+", 0.5, 0.5, 0.0, 0.0},
    {"x-", 0.5, -0.5, 0.0, 0.0},
    {"z+", 0.5, 0.0, 0.0, 0.5},
    {"z-", 0.5, 0.0, 0.0, -0.5},
    {"r+", 0.5, 0.25, 0.0, kHalfSqrt3 / 2.0},
    {"r-", 0.5, -0.25, 0.0, -kHalfSqrt3 / 2.0},
    {"s+", 0.5, 0.25, 0.0, -kHalfSqrt3 / 2.0},
    {"s-", 0.5, -0.25, 0.0, kHalfSqrt3 / 2.0},
    {"m", 0.5, 0.25, 0.0, 0.25},
}};

// Mixing weights p+- = (1 +- 1/sqrt3)/2 for M_r and M_s.
inline constexpr double kPPlus = (1.0 + 1.0 / std::numbers::sqrt3) / 2.0;
inline constexpr double kPMinus = (1.0 - 1.0 / std::numbers::sqrt3) / 2.0;

// Trine: (1/3)[[1 + sx, 1 - sx/2 + (sqrt3/2) sz, 1 - sx/2 - (sqrt3/2) sz]].
inline constexpr std::array<std::array<double, 4>, 3> kTrine{{
    {1.0 / 3.0, 1.0 / 3.0, 0.0, 0.0},
    {1.0 / 3.0, -1.0 / 6.0, 0.0, kHalfSqrt3 / 3.0},
    {1.0 / 3.0, -1.0 / 6.0, 0.0, -kHalfSqrt3 / 3.0},
}};

// T' = (1/4)[[1 + sz, 1 + sx, 2 - (sz + sx)]].
inline constexpr std::array<std::array<double, 4>, 3> kTPrime{{
    {0.25, 0.0, 0.0, 0.25},
    {0.25, 0.25, 0.0, 0.0},
    {0.5, -0.25, 0.0, -0.25},
}};

// Outcome probabilities assigned by the counterexample function g.
struct TableRow {
    std::string_view measurement;
    double outcome1;
    double outcome2;
};
inline constexpr std::array<TableRow, 4> kOutcomeTable{{
    {"M_x", 0.5, 0.5},
    {"M_z", 0.0, 1.0},
    {"M_r", 0.5, 0.5},
    {"M_s", 0.5, 0.5},
}};

// First-outcome probability under g of (M_x + M_z)/2 and of p+ M_r + p- M_s.
inline constexpr double kMixtureXZFirstOutcome = 0.25;
inline constexpr double kMixtureRSFirstOutcome = 0.5;

// Bloch tuple of m.
inline constexpr std::array<double, 4> kMixedEffectM{0.5, 0.25, 0.0, 0.25};

inline constexpr double kReproduceTolerance = 1e-12;

} // namespace gleason::reference

#endif // GLEASON_REFERENCE_VALUES_HPP
