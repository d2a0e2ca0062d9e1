#include "gleason/serialize.hpp"

namespace gleason {

Json to_json(const Hermitian& h) {
    Json entries = Json::array();
    for (Index i = 0; i < h.dim(); ++i) {
        for (Index j = 0; j < h.dim(); ++j) {
            entries.push_back(Json::array({h(i, j).real(), h(i, j).imag()}));
        }
    }
    return Json{{"dim", h.dim()}, {"entries", std::move(entries)}};
}

Json to_json(const Measurement& m) {
    Json effects = Json::array();
    for (const auto& e : m.effects()) effects.push_back(to_json(e.op()));
    return Json{{"dim", m.dim()}, {"effects", std::move(effects)}};
}

Json to_json(const MixtureDecomposition& dec) {
    Json out = Json::array();
    for (const auto& part : dec) {
        out.push_back(Json{{"weight", part.weight}, {"measurement", to_json(part.measurement)}});
    }
    return out;
}

Json to_json(const StaircaseDecomposition& s) {
    Json projectors = Json::array();
    for (const auto& p : s.projectors) projectors.push_back(to_json(p.op()));
    return Json{{"probabilities", s.probabilities}, {"projectors", std::move(projectors)}};
}

Json to_json(const SimulabilityVerdict& v) {
    Json out{{"status", std::string(to_string(v.status))},
             {"iterations", v.iterations},
             {"gap", v.gap},
             {"distance", v.distance}};
    out["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
    if (v.certificate) {
        Json sep = Json::array();
        for (const auto& h : v.certificate->separator.parts()) sep.push_back(to_json(h));
        out["certificate"] = Json{{"separator", std::move(sep)}, {"margin", v.certificate->margin}};
    } else {
        out["certificate"] = nullptr;
    }
    return out;
}

Json to_json(const DensityFit& fit) {
    return Json{{"rho", to_json(fit.rho)}, {"residual", fit.residual}, {"psd", fit.psd}};
}

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
    return j.at(key);
}

} // namespace

Hermitian hermitian_from_json(const Json& j) {
    const Json& dim = field(j, "dim");
    const Json& entries = field(j, "entries");
    if (!dim.is_number_integer() || dim.get<long long>() < 1) malformed("'dim' must be a positive integer");
    const Index d = dim.get<Index>();
    if (!entries.is_array() || entries.size() != static_cast<std::size_t>(d * d)) {
        malformed("'entries' must hold dim*dim values");
    }
    Matrix m(d, d);
    for (Index k = 0; k < d * d; ++k) {
        const Json& z = entries[static_cast<std::size_t>(k)];
        if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
            malformed("entries must be [re, im] pairs");
        }
        m(k / d, k % d) = Complex(z[0].get<double>(), z[1].get<double>());
    }
    return Hermitian(m, tol::kValidation);
}

Effect effect_from_json(const Json& j) { return Effect(hermitian_from_json(j)); }

Measurement measurement_from_json(const Json& j) {
    const Json& effects = field(j, "effects");
    if (!effects.is_array()) malformed("'effects' must be an array");
    std::vector<Effect> out;
    for (const auto& e : effects) out.push_back(effect_from_json(e));
    if (j.contains("dim") && !out.empty() && j.at("dim") != out.front().dim()) {
        throw Error(ErrorCode::DimensionMismatch, "'dim' disagrees with the effects");
    }
    return make_measurement(std::move(out));
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        malformed(e.what());
    }
}

} // namespace gleason
