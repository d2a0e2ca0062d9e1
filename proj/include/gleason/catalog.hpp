#ifndef GLEASON_CATALOG_HPP
#define GLEASON_CATALOG_HPP

#include <map>
#include <string>

#include "gleason/measurement.hpp"

namespace gleason {

using Catalog = std::map<std::string, Measurement>;

/// M_xz(p) = p M_x + (1 - p) M_z.
Measurement m_xz(double p);

/// Named qubit measurements: M_x, M_z, M_xz (at mixing weight p), M_r, M_s,
/// E (trine), Tprime, D_m. Every entry is validated at 1e-12.
Catalog catalog(double p = 0.5);

/// Named qubit effects: x+, x-, z+, z-, r+, r-, s+, s-, m.
std::map<std::string, Effect> named_effects();

} // namespace gleason

#endif // GLEASON_CATALOG_HPP
