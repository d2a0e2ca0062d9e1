#ifndef GLEASON_SERIALIZE_HPP
#define GLEASON_SERIALIZE_HPP

// JSON forms. A hermitian operator is {"dim": d, "entries": [[re, im], ...]}
// in row-major order; a measurement is {"dim": d, "effects": [hermitian...]}.
// Parsers throw Error(ParseError) on malformed documents and the usual
// validation errors (NotHermitian, NotAnEffect, ...) on bad content.

#include <json.hpp>

#include "gleason/frame.hpp"
#include "gleason/simulability.hpp"

namespace gleason {

using Json = nlohmann::json;

Json to_json(const Hermitian& h);
Json to_json(const Measurement& m);
Json to_json(const MixtureDecomposition& dec);
Json to_json(const StaircaseDecomposition& s);
Json to_json(const SimulabilityVerdict& v);
Json to_json(const DensityFit& fit);

Hermitian hermitian_from_json(const Json& j);
Effect effect_from_json(const Json& j);
Measurement measurement_from_json(const Json& j);

/// Parses text, mapping syntax errors to ParseError.
Json parse_json(const std::string& text);

} // namespace gleason

#endif // GLEASON_SERIALIZE_HPP
