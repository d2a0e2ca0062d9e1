#include "gleason/simulability.hpp"

#include <algorithm>

namespace gleason {

Hermitian StaircaseDecomposition::reconstruct() const {
    const Index d = projectors.front().dim();
    Matrix m = Matrix::Zero(d, d);
    for (std::size_t k = 1; k < projectors.size(); ++k) {
        m += probabilities[k] * projectors[k].matrix();
    }
    return Hermitian(m);
}

StaircaseDecomposition staircase(const Effect& e) {
    const auto eig = spectral(e.op());
    const Index d = e.dim();
    std::vector<double> lambda(eig.eigenvalues);
    for (auto& l : lambda) {
        l = std::clamp(l, 0.0, 1.0);
    }

    StaircaseDecomposition out;
    out.probabilities.reserve(d + 1);
    out.projectors.reserve(d + 1);
    out.probabilities.push_back(1.0 - lambda.back());
    out.projectors.push_back(Projector(Hermitian::zero(d)));

    // Q_k accumulates P_k ... P_d; build from the top down, then reverse.
    std::vector<Matrix> tail(d);
    Matrix acc = Matrix::Zero(d, d);
    for (Index k = d - 1; k >= 0; --k) {
        acc += eig.projectors[k].matrix();
        tail[k] = acc;
    }
    double previous = 0;
    for (Index k = 0; k < d; ++k) {
        out.probabilities.push_back(lambda[k] - previous);
        previous = lambda[k];
        out.projectors.push_back(Projector(Hermitian(tail[k], 1e-10)));
    }
    return out;
}

namespace {

MixtureDecomposition two_outcome_parts(const StaircaseDecomposition& s) {
    MixtureDecomposition out;
    for (std::size_t k = 0; k < s.probabilities.size(); ++k) {
        if (s.probabilities[k] <= tol::kZeroWeight) {
            continue;
        }
        const Effect q(s.projectors[k].op());
        out.push_back({s.probabilities[k], make_measurement({q, q.complement()})});
    }
    return out;
}

void append_padded(MixtureDecomposition& out, const MixtureDecomposition& parts, double scale,
                   std::size_t position) {
    for (const auto& p : parts) {
        out.push_back({scale * p.weight, pad_zero(p.measurement, position)});
    }
}

} // namespace

MixtureDecomposition simulate_two_outcome(const Effect& e) {
    return two_outcome_parts(staircase(e));
}

MixtureDecomposition simulate_t_e(const Effect& e) {
    const auto parts = simulate_two_outcome(e);
    MixtureDecomposition out;
    append_padded(out, parts, 0.5, 1);
    append_padded(out, parts, 0.5, 0);
    return out;
}

MixtureDecomposition simulate_t_ee(const Effect& e, const Effect& e2) {
    if (e.dim() != e2.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "effects of different dimensions");
    }
    if (!is_effect(e.op() + e2.op())) {
        throw Error(ErrorCode::NotAnEffect, "e + e2 is not an effect");
    }
    MixtureDecomposition out;
    append_padded(out, simulate_two_outcome(e), 0.5, 1);
    append_padded(out, simulate_two_outcome(e2), 0.5, 0);
    return out;
}

double reconstruction_error(const Measurement& target, const MixtureDecomposition& dec) {
    const Index d = target.dim();
    std::vector<Matrix> acc(target.size(), Matrix::Zero(d, d));
    for (const auto& p : dec) {
        if (p.measurement.size() != target.size() || p.measurement.dim() != d) {
            throw Error(ErrorCode::ShapeMismatch, "part shape differs from target");
        }
        for (std::size_t j = 0; j < target.size(); ++j) {
            acc[j] += p.weight * p.measurement[j].matrix();
        }
    }
    double worst = 0;
    for (std::size_t j = 0; j < target.size(); ++j) {
        worst = std::max(worst, max_abs_diff(acc[j], target[j].matrix()));
    }
    return worst;
}

bool verify_decomposition(const Measurement& target, const MixtureDecomposition& dec, double tol) {
    if (dec.empty()) {
        return false;
    }
    double total = 0;
    for (const auto& p : dec) {
        if (p.measurement.size() != target.size() || p.measurement.dim() != target.dim()) {
            return false;
        }
        if (p.weight < -tol) {
            return false;
        }
        if (!p.measurement.is_projective()) {
            return false;
        }
        total += p.weight;
    }
    if (std::abs(total - 1.0) > tol) {
        return false;
    }
    return reconstruction_error(target, dec) <= tol;
}

} // namespace gleason
