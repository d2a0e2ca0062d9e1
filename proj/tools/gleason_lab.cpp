// gleason-lab: command-line front end for the gleason library.
//
// Exit codes: 0 success / simulable, 1 negative finding, 2 input error,
// 3 inconclusive.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gleason/report.hpp"

using namespace gleason;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;
constexpr int kInconclusive = 3;

struct Options {
    std::string output;
    std::string format = "json";

    std::string bloch;
    std::string input;
    std::string catalog_name;

    double tol = tol::kMembership;
    int max_iter = tol::kMembershipMaxIter;

    std::string perturb;

    std::string set = "3psmprime";
    std::uint64_t seed = 7;
    std::string counts;

    std::string suppress = "y";
    int resolution = 64;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const Options& opt, const std::string& text) {
    if (opt.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.output, std::ios::binary);
    if (!out) throw Error(ErrorCode::ParseError, "cannot write " + opt.output);
    out << text;
}

void emit(const Options& opt, const Json& j) { emit(opt, j.dump(2) + "\n"); }

std::vector<double> parse_reals(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, "not a number: '" + item + "'");
        }
        if (used != item.size()) throw Error(ErrorCode::ParseError, "not a number: '" + item + "'");
        out.push_back(v);
    }
    return out;
}

void require_json(const Options& opt) {
    if (opt.format != "json") throw Error(ErrorCode::ParseError, "this command only emits json");
}

int run_decompose(const Options& opt) {
    require_json(opt);
    const int sources = !opt.bloch.empty() + !opt.input.empty() + !opt.catalog_name.empty();
    if (sources != 1) throw Error(ErrorCode::ParseError, "give exactly one of --bloch, --input, --catalog");

    std::optional<Effect> e;
    if (!opt.bloch.empty()) {
        const auto k = parse_reals(opt.bloch);
        if (k.size() != 4) throw Error(ErrorCode::ParseError, "--bloch takes a,b,c,d");
        e = bloch_to_effect(BlochCoefficients{k[0], k[1], k[2], k[3]});
    } else if (!opt.input.empty()) {
        e = effect_from_json(parse_json(read_file(opt.input)));
    } else {
        const auto named = named_effects();
        const auto it = named.find(opt.catalog_name);
        if (it == named.end()) throw Error(ErrorCode::ParseError, "unknown effect " + opt.catalog_name);
        e = it->second;
    }

    const auto stairs = staircase(*e);
    const auto dec = simulate_two_outcome(*e);
    const Measurement target = d_e(*e);
    Json out{{"effect", to_json(e->op())},
             {"staircase", to_json(stairs)},
             {"decomposition", to_json(dec)},
             {"reconstruction_error", reconstruction_error(target, dec)},
             {"verified", verify_decomposition(target, dec, tol::kValidation)}};
    emit(opt, out);
    return kOk;
}

int run_simulable(const Options& opt) {
    require_json(opt);
    if (opt.input.empty() == opt.catalog_name.empty()) {
        throw Error(ErrorCode::ParseError, "give exactly one of --input, --catalog");
    }
    std::optional<Measurement> m;
    if (!opt.input.empty()) {
        m = measurement_from_json(parse_json(read_file(opt.input)));
    } else {
        const auto cat = catalog();
        const auto it = cat.find(opt.catalog_name);
        if (it == cat.end()) throw Error(ErrorCode::ParseError, "unknown measurement " + opt.catalog_name);
        m = it->second;
    }
    if (!(opt.tol > 0) || opt.max_iter < 0) throw Error(ErrorCode::ParseError, "--tol must be positive");
    const auto verdict = membership(*m, opt.tol, opt.max_iter);
    Json out = to_json(verdict);
    out["measurement"] = to_json(*m);
    emit(opt, out);
    switch (verdict.status) {
    case SimulabilityStatus::Simulable: return kOk;
    case SimulabilityStatus::NotSimulable: return kNegative;
    case SimulabilityStatus::Inconclusive: return kInconclusive;
    }
    return kInconclusive;
}

// Reverses the outcome order of one catalog entry; used to check that the
// comparison actually catches a wrong table.
Catalog perturbed_catalog(const std::string& name) {
    Catalog cat = catalog();
    if (name.empty()) return cat;
    const auto it = cat.find(name);
    if (it == cat.end()) throw Error(ErrorCode::ParseError, "unknown measurement " + name);
    std::vector<Effect> effects(it->second.effects().rbegin(), it->second.effects().rend());
    it->second = make_measurement(std::move(effects));
    return cat;
}

int run_reproduce(const Options& opt) {
    const auto report = reproduce(perturbed_catalog(opt.perturb));
    if (opt.format == "csv") {
        emit(opt, to_csv(report));
    } else if (opt.format == "json") {
        emit(opt, to_json(report));
    } else {
        throw Error(ErrorCode::ParseError, "unknown format " + opt.format);
    }
    if (!report.ok()) {
        for (const auto& c : report.cells) {
            if (!c.ok) std::cerr << "mismatch: " << c.name << " computed " << c.computed << " expected " << c.expected << "\n";
        }
        return kNegative;
    }
    return kOk;
}

int run_rigidity(const Options& opt) {
    require_json(opt);
    const auto set = parse_measurement_set(opt.set);
    if (!set) throw Error(ErrorCode::ParseError, "unknown set " + opt.set);
    std::vector<std::size_t> counts;
    const std::string raw = opt.counts.empty() ? (*set == MeasurementSet::ThreePSMPrime ? "200,200,200" : "10")
                                               : opt.counts;
    for (const double c : parse_reals(raw)) {
        if (c < 0 || c != std::floor(c)) throw Error(ErrorCode::ParseError, "counts must be nonnegative integers");
        counts.push_back(static_cast<std::size_t>(c));
    }
    emit(opt, to_json(rigidity(*set, opt.seed, counts)));
    return kOk;
}

int run_cross_section(const Options& opt) {
    if (opt.suppress.size() != 1) throw Error(ErrorCode::ParseError, "--suppress takes x, y or z");
    emit(opt, cross_section_csv(opt.suppress[0], opt.resolution));
    return kOk;
}

bool is_input_error(ErrorCode c) {
    return c != ErrorCode::ConvergenceFailure;
}

} // namespace

int main(int argc, char** argv) {
    Options opt;
    if (const char* env = std::getenv("GLEASON_LAB_TOL")) {
        try {
            opt.tol = std::stod(env);
        } catch (const std::exception&) {
            std::cerr << "GLEASON_LAB_TOL is not a number\n";
            return kInputError;
        }
    }

    CLI::App app{"Projective simulability and frame-function experiments for qubit measurements"};
    app.name("gleason-lab");
    app.require_subcommand(1);
    app.add_option("--output", opt.output, "Write to this path instead of stdout");
    app.add_option("--format", opt.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    auto* decompose = app.add_subcommand("decompose", "Staircase decomposition of a two-outcome POM");
    decompose->add_option("--bloch", opt.bloch, "Effect a,b,c,d of a + b sx + c sy + d sz");
    decompose->add_option("--input", opt.input, "Effect JSON file");
    decompose->add_option("--catalog", opt.catalog_name, "Named effect (x+, x-, z+, z-, r+, r-, s+, s-, m)");

    auto* simulable = app.add_subcommand("simulable", "Decide projective simulability of a qubit POM");
    simulable->add_option("--input", opt.input, "Measurement JSON file");
    simulable->add_option("--catalog", opt.catalog_name, "Catalog measurement (M_x, M_z, M_xz, M_r, M_s, E, Tprime, D_m)");
    simulable->add_option("--tol", opt.tol, "Distance tolerance");
    simulable->add_option("--max-iter", opt.max_iter, "Iteration cap");

    auto* reproduce_cmd = app.add_subcommand("reproduce", "Recompute the reference probability table");
    reproduce_cmd->add_option("--perturb", opt.perturb)->group("");

    auto* rigidity_cmd = app.add_subcommand("rigidity", "Solve the frame system of a sampled measurement set");
    rigidity_cmd->add_option("--set", opt.set, "pvm, 2pom or 3psmprime");
    rigidity_cmd->add_option("--seed", opt.seed, "Sampling seed");
    rigidity_cmd->add_option("--counts", opt.counts, "K for pvm/2pom; n_two,n_te,n_tee for 3psmprime");

    auto* cross = app.add_subcommand("cross-section", "Effect-space cross section as CSV");
    cross->add_option("--suppress", opt.suppress, "Bloch component set to zero")->check(CLI::IsMember({"x", "y", "z"}));
    cross->add_option("--resolution", opt.resolution, "Samples per circle")->check(CLI::Range(8, 1 << 16));

    for (auto* sub : {decompose, simulable, reproduce_cmd, rigidity_cmd, cross}) {
        sub->add_option("--output", opt.output, "Write to this path instead of stdout");
        sub->add_option("--format", opt.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*decompose) return run_decompose(opt);
        if (*simulable) return run_simulable(opt);
        if (*reproduce_cmd) return run_reproduce(opt);
        if (*rigidity_cmd) return run_rigidity(opt);
        if (*cross) return run_cross_section(opt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return is_input_error(e.code()) ? kInputError : kInconclusive;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
