#include "gleason/report.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "gleason/reference_values.hpp"

namespace gleason {

bool ReproduceReport::ok() const {
    for (const auto& c : cells) {
        if (!c.ok) return false;
    }
    return true;
}

namespace {

const Measurement& lookup(const Catalog& cat, const std::string& name) {
    const auto it = cat.find(name);
    if (it == cat.end()) throw Error(ErrorCode::MissingValue, "catalog lacks " + name);
    return it->second;
}

Hermitian bloch_hermitian(const std::array<double, 4>& k) {
    return bloch_to_hermitian(BlochCoefficients{k[0], k[1], k[2], k[3]});
}

} // namespace

ReproduceReport reproduce(const Catalog& cat) {
    constexpr double tol = reference::kReproduceTolerance;
    ReproduceReport r;
    auto cell = [&](std::string name, double computed, double expected) {
        const bool ok = std::abs(computed - expected) <= tol;
        r.cells.push_back({std::move(name), computed, expected, ok});
    };

    for (const auto& row : reference::kOutcomeTable) {
        const Measurement& m = lookup(cat, std::string(row.measurement));
        const std::string name(row.measurement);
        cell(name + "[1]", counterexample_g(m[0]), row.outcome1);
        cell(name + "[2]", counterexample_g(m[1]), row.outcome2);
    }

    const FrameFunction g = [](const Effect& e) { return counterexample_g(e); };
    const Measurement& mx = lookup(cat, "M_x");
    const Measurement& mz = lookup(cat, "M_z");
    const Measurement& mr = lookup(cat, "M_r");
    const Measurement& ms = lookup(cat, "M_s");
    const std::vector<MixturePart> xz{{0.5, mx}, {0.5, mz}};
    const std::vector<MixturePart> rs{{reference::kPPlus, mr}, {reference::kPMinus, ms}};
    cell("mixture_xz[1]", mixture_outcome_probability(g, xz, 0), reference::kMixtureXZFirstOutcome);
    cell("mixture_rs[1]", mixture_outcome_probability(g, rs, 0), reference::kMixtureRSFirstOutcome);

    const MeasurementVector dm(lookup(cat, "D_m"));
    const Effect m(bloch_hermitian(reference::kMixedEffectM));
    const MeasurementVector reference_dm(d_e(m));
    cell("D_m_vs_m", max_abs_diff(dm, reference_dm), 0.0);
    cell("mixture_xz_vs_D_m", max_abs_diff(MeasurementVector(mix(xz)), dm), 0.0);
    cell("mixture_rs_vs_D_m", max_abs_diff(MeasurementVector(mix(rs)), dm), 0.0);
    return r;
}

Json to_json(const ReproduceReport& r) {
    Json cells = Json::array();
    for (const auto& c : r.cells) {
        cells.push_back(Json{{"name", c.name}, {"computed", c.computed}, {"expected", c.expected}, {"ok", c.ok}});
    }
    return Json{{"ok", r.ok()}, {"tolerance", reference::kReproduceTolerance}, {"cells", std::move(cells)}};
}

std::string format_number(double v) {
    if (std::abs(v) < 5e-13) v = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", v);
    return buf;
}

std::string to_csv(const ReproduceReport& r) {
    std::string out = "name,computed,expected,ok\n";
    for (const auto& c : r.cells) {
        out += c.name + "," + format_number(c.computed) + "," + format_number(c.expected) + "," +
               (c.ok ? "true" : "false") + "\n";
    }
    return out;
}

FrameReport rigidity(MeasurementSet set, std::uint64_t seed, const std::vector<std::size_t>& counts) {
    std::vector<Measurement> ms;
    switch (set) {
    case MeasurementSet::PVM:
    case MeasurementSet::TwoPOM:
        if (counts.size() != 1) throw Error(ErrorCode::ShapeMismatch, "expected one count");
        ms = set == MeasurementSet::PVM ? sample_pvm(seed, counts[0]) : sample_2pom(seed, counts[0]);
        break;
    case MeasurementSet::ThreePSMPrime:
        if (counts.size() != 3) throw Error(ErrorCode::ShapeMismatch, "expected three counts");
        ms = sample_3psm_prime(seed, counts[0], counts[1], counts[2]);
        break;
    default:
        throw Error(ErrorCode::ShapeMismatch, "set must be pvm, 2pom or 3psmprime");
    }

    const FrameSystem sys = build_system(ms);
    const SolutionSpace space = solve_space(sys);
    FrameReport r{sys.registry.size(), sys.rows.size(), space.affine_dim, fit_density(sys.registry, space.particular),
                  {}, space.smallest_retained, space.largest_discarded, std::nullopt};
    r.violations = check_frame([](const Effect& e) { return counterexample_g(e); }, ms, tol::kValidation).violated;
    if (set == MeasurementSet::ThreePSMPrime) {
        Eigen::VectorXd g(static_cast<Index>(sys.registry.size()));
        for (std::size_t i = 0; i < sys.registry.size(); ++i) {
            g(static_cast<Index>(i)) = counterexample_g(sys.registry[i]);
        }
        r.g_residual = fit_density(sys.registry, g).residual;
    }
    return r;
}

Json to_json(const FrameReport& r) {
    Json out{{"n_effects", r.n_effects},
             {"n_rows", r.n_rows},
             {"affine_dim", r.affine_dim},
             {"fit", to_json(r.fit)},
             {"violations", r.violations},
             {"singular_values", Json{{"smallest_retained", r.smallest_retained},
                                      {"largest_discarded", r.largest_discarded}}}};
    if (r.g_residual) out["g_fit_residual"] = *r.g_residual;
    return out;
}

std::string cross_section_csv(char suppress, int resolution) {
    std::string cols;
    switch (suppress) {
    case 'x': cols = "c,d"; break;
    case 'y': cols = "b,d"; break;
    case 'z': cols = "b,c"; break;
    default: throw Error(ErrorCode::IndexOutOfRange, "axis must be x, y or z");
    }
    if (resolution < 8) throw Error(ErrorCode::IndexOutOfRange, "resolution must be at least 8");

    std::ostringstream out;
    out << "kind,a," << cols << "\n";
    auto row = [&](const char* kind, double a, double u, double v) {
        out << kind << ',' << format_number(a) << ',' << format_number(u) << ',' << format_number(v) << '\n';
    };
    row("zero", 0, 0, 0);
    row("identity", 1, 0, 0);
    const double step = 2.0 * std::numbers::pi / resolution;
    for (int k = 0; k < resolution; ++k) {
        row("projector", 0.5, 0.5 * std::cos(k * step), 0.5 * std::sin(k * step));
    }
    // Lower cone a = r below the circle, upper cone a + r = 1 above it.
    for (int i = 1; i < resolution; ++i) {
        const double a = static_cast<double>(i) / resolution;
        if (std::abs(a - 0.5) < 1e-12) continue;
        const double r = std::min(a, 1.0 - a);
        for (int k = 0; k < resolution; ++k) {
            row("surface", a, r * std::cos(k * step), r * std::sin(k * step));
        }
    }
    return out.str();
}

} // namespace gleason
