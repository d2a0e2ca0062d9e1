#include "gleason/simulability.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "nnls.hpp"

namespace gleason {

namespace {

constexpr std::size_t kMaxOutcomes = 8;

// Real embedding of qubit measurement vectors: slot j occupies entries
// 4j..4j+3 holding sqrt(2) (a, b, c, d), so the Euclidean dot product equals
// the outcome-wise trace inner product sum_j Tr(X_j Y_j).
using Vec = Eigen::VectorXd;

Vec embed(const std::vector<Hermitian>& parts) {
    Vec v(4 * static_cast<Index>(parts.size()));
    for (std::size_t j = 0; j < parts.size(); ++j) {
        const auto k = bloch_coefficients(parts[j]);
        v.segment<4>(4 * static_cast<Index>(j)) << k.a, k.b, k.c, k.d;
    }
    return std::numbers::sqrt2 * v;
}

Vec embed(const Measurement& m) { return embed(MeasurementVector(m).parts()); }

MeasurementVector unembed(const Vec& v) {
    std::vector<Hermitian> parts;
    const Vec s = v / std::numbers::sqrt2;
    for (Index j = 0; j < v.size() / 4; ++j) {
        parts.push_back(bloch_to_hermitian(BlochCoefficients{s(4 * j), s(4 * j + 1), s(4 * j + 2), s(4 * j + 3)}));
    }
    return MeasurementVector(std::move(parts));
}

// Identity in slot `first` when `second` < 0; otherwise (1 + n.sigma)/2 in
// `first` and (1 - n.sigma)/2 in `second`.
struct Atom {
    int first = 0;
    int second = -1;
    Eigen::Vector3d axis = Eigen::Vector3d::UnitZ();
};

Vec embed(const Atom& atom, std::size_t n) {
    Vec v = Vec::Zero(4 * static_cast<Index>(n));
    if (atom.second < 0) {
        v(4 * atom.first) = 1.0;
    } else {
        v.segment<4>(4 * atom.first) << 0.5, 0.5 * atom.axis;
        v.segment<4>(4 * atom.second) << 0.5, -0.5 * atom.axis;
    }
    return std::numbers::sqrt2 * v;
}

Measurement to_measurement(const Atom& atom, std::size_t n) {
    std::vector<Effect> effects(n, Effect::zero(2));
    if (atom.second < 0) {
        effects[atom.first] = Effect::identity(2);
    } else {
        const Eigen::Vector3d h = 0.5 * atom.axis;
        const Hermitian plus = bloch_to_hermitian(BlochCoefficients{0.5, h.x(), h.y(), h.z()});
        const Effect p{plus};
        effects[atom.first] = p;
        effects[atom.second] = p.complement();
    }
    return make_measurement(std::move(effects));
}

struct Priced {
    Atom atom;
    double score;
};

// Exact linear maximisation of <g, atom> over all projective atoms.
Priced best_atom(const Vec& g, std::size_t n) {
    Priced best{{0, -1, Eigen::Vector3d::UnitZ()}, -std::numeric_limits<double>::infinity()};
    for (std::size_t i = 0; i < n; ++i) {
        const double score = std::numbers::sqrt2 * g(4 * static_cast<Index>(i));
        if (score > best.score) {
            best = {{static_cast<int>(i), -1, Eigen::Vector3d::UnitZ()}, score};
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const Index si = 4 * static_cast<Index>(i);
            const Index sj = 4 * static_cast<Index>(j);
            const Eigen::Vector3d diff = g.segment<3>(si + 1) - g.segment<3>(sj + 1);
            const double len = diff.norm();
            const double score = (g(si) + g(sj) + len) / std::numbers::sqrt2;
            if (score > best.score) {
                const Eigen::Vector3d axis = len > 0 ? Eigen::Vector3d(diff / len) : Eigen::Vector3d::UnitZ();
                best = {{static_cast<int>(i), static_cast<int>(j), axis}, score};
            }
        }
    }
    return best;
}

void require_qubit(const Measurement& m) {
    if (m.dim() != 2) {
        throw Error(ErrorCode::UnsupportedDimension, "membership testing is implemented for qubits");
    }
    if (m.size() > kMaxOutcomes) {
        throw Error(ErrorCode::ShapeMismatch, "at most 8 outcomes are supported");
    }
}

} // namespace

std::string_view to_string(SimulabilityStatus s) noexcept {
    switch (s) {
    case SimulabilityStatus::Simulable: return "Simulable";
    case SimulabilityStatus::NotSimulable: return "NotSimulable";
    case SimulabilityStatus::Inconclusive: return "Inconclusive";
    }
    return "Unknown";
}

Measurement atom_oracle(const MeasurementVector& gradient, std::size_t n_outcomes) {
    if (gradient.dim() != 2) {
        throw Error(ErrorCode::UnsupportedDimension, "atom oracle is implemented for qubits");
    }
    if (gradient.size() != n_outcomes) {
        throw Error(ErrorCode::ShapeMismatch, "gradient outcome count differs from n_outcomes");
    }
    return to_measurement(best_atom(embed(gradient.parts()), n_outcomes).atom, n_outcomes);
}

double atom_support(const MeasurementVector& separator) {
    if (separator.dim() != 2) {
        throw Error(ErrorCode::UnsupportedDimension, "atom support is implemented for qubits");
    }
    return best_atom(embed(separator.parts()), separator.size()).score;
}

double separation_margin(const MeasurementVector& separator, const Measurement& target) {
    return inner(separator, MeasurementVector(target)) - atom_support(separator);
}

SimulabilityVerdict membership(const Measurement& pom, double tol, int max_iter) {
    require_qubit(pom);
    const std::size_t n = pom.size();

    if (pom.is_projective()) {
        SimulabilityVerdict v{SimulabilityStatus::Simulable, MixtureDecomposition{{1.0, pom}}, std::nullopt};
        return v;
    }

    const Vec target = embed(pom);
    std::vector<Atom> atoms;
    std::vector<Vec> columns;
    auto add_atom = [&](const Atom& a) {
        Vec v = embed(a, n);
        for (const auto& c : columns) {
            if ((c - v).cwiseAbs().maxCoeff() <= 1e-14) return false;
        }
        atoms.push_back(a);
        columns.push_back(std::move(v));
        return true;
    };

    // Warm start: identity atoms and eigenprojector atoms of every effect.
    for (std::size_t i = 0; i < n; ++i) {
        add_atom({static_cast<int>(i), -1, Eigen::Vector3d::UnitZ()});
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto k = effect_to_bloch(pom[i]);
        const double r = k.radius();
        if (r <= tol::kArithmetic) continue;
        const Eigen::Vector3d axis = k.vector() / r;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            add_atom({static_cast<int>(i), static_cast<int>(j), axis});
            add_atom({static_cast<int>(j), static_cast<int>(i), -axis});
        }
    }
    add_atom(best_atom(target, n).atom);

    Vec weights;
    Vec x;
    auto correct = [&]() {
        Eigen::MatrixXd pts(target.size(), static_cast<Index>(columns.size()));
        for (std::size_t k = 0; k < columns.size(); ++k) {
            pts.col(static_cast<Index>(k)) = columns[k];
        }
        const Vec lambda = detail::simplex_least_squares(pts, target);
        std::vector<Atom> kept_atoms;
        std::vector<Vec> kept_cols;
        std::vector<double> kept_w;
        for (std::size_t k = 0; k < columns.size(); ++k) {
            if (lambda(static_cast<Index>(k)) > 0) {
                kept_atoms.push_back(atoms[k]);
                kept_cols.push_back(columns[k]);
                kept_w.push_back(lambda(static_cast<Index>(k)));
            }
        }
        atoms = std::move(kept_atoms);
        columns = std::move(kept_cols);
        weights = Eigen::Map<const Vec>(kept_w.data(), static_cast<Index>(kept_w.size()));
        weights /= weights.sum();
        x = Vec::Zero(target.size());
        for (std::size_t k = 0; k < columns.size(); ++k) {
            x += weights(static_cast<Index>(k)) * columns[k];
        }
    };
    correct();

    const double gap_stop = tol * tol / 4.0;
    SimulabilityVerdict verdict{SimulabilityStatus::Inconclusive, std::nullopt, std::nullopt};
    double gap = std::numeric_limits<double>::infinity();
    int it = 0;
    for (; it < max_iter; ++it) {
        const Vec w = target - x;
        if (w.norm() <= 1e-15) {
            gap = 0;
            break;
        }
        const Priced s = best_atom(w, n);
        gap = s.score - w.dot(x);
        if (gap < gap_stop) break;
        if (!add_atom(s.atom)) break;
        correct();
    }

    const Vec residual = target - x;
    verdict.iterations = it;
    verdict.gap = std::max(gap, 0.0);
    verdict.distance = residual.norm();

    if (verdict.distance <= tol) {
        verdict.status = SimulabilityStatus::Simulable;
        MixtureDecomposition witness;
        for (std::size_t k = 0; k < atoms.size(); ++k) {
            witness.push_back({weights(static_cast<Index>(k)), to_measurement(atoms[k], n)});
        }
        verdict.witness = std::move(witness);
        return verdict;
    }

    const Vec unit = residual / verdict.distance;
    const double margin = unit.dot(target) - best_atom(unit, n).score;
    if (margin > tol) {
        verdict.status = SimulabilityStatus::NotSimulable;
        verdict.certificate = SeparatingCertificate{unembed(unit), margin};
    }
    return verdict;
}

} // namespace gleason
