#include "gleason/catalog.hpp"

#include "gleason/reference_values.hpp"

namespace gleason {

namespace {

Effect effect_from(const std::array<double, 4>& k) {
    return bloch_to_effect(BlochCoefficients{k[0], k[1], k[2], k[3]});
}

Measurement from_table(const std::array<std::array<double, 4>, 3>& rows) {
    return make_measurement({effect_from(rows[0]), effect_from(rows[1]), effect_from(rows[2])},
                            tol::kArithmetic);
}

} // namespace

std::map<std::string, Effect> named_effects() {
    std::map<std::string, Effect> out;
    for (const auto& n : reference::kNamedEffects) {
        out.emplace(std::string(n.name), bloch_to_effect(BlochCoefficients{n.a, n.b, n.c, n.d}));
    }
    return out;
}

Measurement m_xz(double p) {
    return mix({{p, stern_gerlach({1, 0, 0})}, {1.0 - p, stern_gerlach({0, 0, 1})}});
}

Catalog catalog(double p) {
    const auto fx = named_effects();
    auto pair = [&](const char* plus, const char* minus) {
        return make_measurement({fx.at(plus), fx.at(minus)}, tol::kArithmetic);
    };
    Catalog c;
    c.emplace("M_x", pair("x+", "x-"));
    c.emplace("M_z", pair("z+", "z-"));
    c.emplace("M_xz", m_xz(p));
    c.emplace("M_r", pair("r+", "r-"));
    c.emplace("M_s", pair("s+", "s-"));
    c.emplace("E", from_table(reference::kTrine));
    c.emplace("Tprime", from_table(reference::kTPrime));
    c.emplace("D_m", d_e(fx.at("m")));
    return c;
}

} // namespace gleason
