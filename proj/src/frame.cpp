#include "gleason/frame.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "gleason/random.hpp"

namespace gleason {

std::optional<std::size_t> EffectRegistry::find(const Effect& e) const {
    if (!entries_.empty() && entries_.front().dim() != e.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "registry holds effects of another dimension");
    }
    const double key = e.matrix()(0, 0).real();
    auto it = index_.lower_bound(key - tol::kRegistryMatch);
    const auto end = index_.upper_bound(key + tol::kRegistryMatch);
    for (; it != end; ++it) {
        if (max_abs_diff(entries_[it->second].matrix(), e.matrix()) <= tol::kRegistryMatch) {
            return it->second;
        }
    }
    return std::nullopt;
}

std::size_t EffectRegistry::intern(const Effect& e) {
    if (auto id = find(e)) return *id;
    const std::size_t id = entries_.size();
    entries_.push_back(e);
    index_.emplace(e.matrix()(0, 0).real(), id);
    return id;
}

FrameSystem build_system(const std::vector<Measurement>& measurements) {
    FrameSystem sys;
    for (const auto& m : measurements) {
        std::vector<std::size_t> row;
        for (const auto& e : m.effects()) {
            row.push_back(sys.registry.intern(e));
        }
        sys.rows.push_back(std::move(row));
    }
    sys.matrix = Eigen::MatrixXd::Zero(static_cast<Index>(sys.rows.size()), static_cast<Index>(sys.registry.size()));
    for (std::size_t r = 0; r < sys.rows.size(); ++r) {
        for (const auto id : sys.rows[r]) {
            sys.matrix(static_cast<Index>(r), static_cast<Index>(id)) += 1.0;
        }
    }
    return sys;
}

SolutionSpace solve_space(const FrameSystem& sys, double threshold) {
    const Index m = sys.matrix.rows();
    const Index n = sys.matrix.cols();
    SolutionSpace out;
    if (n == 0) {
        if (m > 0) throw Error(ErrorCode::InconsistentSystem, "rows without unknowns");
        out.particular = Eigen::VectorXd(0);
        out.basis = Eigen::MatrixXd(0, 0);
        return out;
    }
    if (m == 0) {
        out.particular = Eigen::VectorXd::Zero(n);
        out.basis = Eigen::MatrixXd::Identity(n, n);
        out.affine_dim = n;
        return out;
    }

    Eigen::BDCSVD<Eigen::MatrixXd> svd(sys.matrix, Eigen::ComputeThinU | Eigen::ComputeFullV);
    const Eigen::VectorXd& sv = svd.singularValues();
    Index rank = 0;
    for (Index k = 0; k < sv.size(); ++k) {
        if (sv(k) > threshold) {
            ++rank;
        } else {
            out.largest_discarded = std::max(out.largest_discarded, sv(k));
        }
    }
    out.rank = rank;
    out.smallest_retained = rank > 0 ? sv(rank - 1) : 0.0;

    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(m);
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    for (Index k = 0; k < rank; ++k) {
        x += (svd.matrixU().col(k).dot(ones) / sv(k)) * svd.matrixV().col(k);
    }
    const double residual = (sys.matrix * x - ones).cwiseAbs().maxCoeff();
    if (residual > 1e-6) {
        throw Error(ErrorCode::InconsistentSystem, "rows cannot all sum to one (residual " + std::to_string(residual) + ")");
    }
    out.particular = std::move(x);
    out.basis = svd.matrixV().rightCols(n - rank);
    out.affine_dim = n - rank;
    return out;
}

FrameTable::FrameTable(std::vector<double> values) : values_(std::move(values)) {
    for (const double v : values_) {
        if (!std::isfinite(v) || v < -tol::kValidation || v > 1.0 + tol::kValidation) {
            throw Error(ErrorCode::InvalidProbability, "frame value outside [0, 1]");
        }
    }
}

FrameTable FrameTable::from_function(const EffectRegistry& registry, const FrameFunction& f) {
    std::vector<double> values;
    values.reserve(registry.size());
    for (const auto& e : registry.entries()) values.push_back(f(e));
    return FrameTable(std::move(values));
}

FrameFunction table_function(const EffectRegistry& registry, const FrameTable& table) {
    if (table.size() != registry.size()) {
        throw Error(ErrorCode::ShapeMismatch, "table size differs from registry size");
    }
    return [&registry, &table](const Effect& e) {
        const auto id = registry.find(e);
        if (!id) throw Error(ErrorCode::MissingValue, "effect has no frame value");
        return table[*id];
    };
}

FrameFunction born_function(const DensityOperator& rho) {
    return [rho](const Effect& e) { return born_probability(rho, e); };
}

double counterexample_g(const Effect& e) {
    const auto k = effect_to_bloch(e);
    const double r = k.radius();
    if (r <= tol::kArithmetic) return k.a;
    const double off_axis = std::hypot(k.b, k.c) / r;
    if (off_axis <= 1e-9) {
        return k.d > 0 ? k.a - r : k.a + r;
    }
    return k.a;
}

FrameCheck check_frame(const FrameFunction& f, const std::vector<Measurement>& measurements, double tol) {
    FrameCheck out;
    for (std::size_t r = 0; r < measurements.size(); ++r) {
        double sum = 0;
        for (const auto& e : measurements[r].effects()) sum += f(e);
        const double dev = std::abs(sum - 1.0);
        out.worst_deviation = std::max(out.worst_deviation, dev);
        if (dev > tol) out.violated.push_back(r);
    }
    out.ok = out.violated.empty();
    return out;
}

FrameCheck check_frame(const EffectRegistry& registry, const FrameTable& table,
                       const std::vector<Measurement>& measurements, double tol) {
    return check_frame(table_function(registry, table), measurements, tol);
}

double mixture_outcome_probability(const FrameFunction& f, const std::vector<MixturePart>& parts,
                                   std::size_t outcome) {
    double p = 0;
    for (const auto& part : parts) {
        if (outcome >= part.measurement.size()) {
            throw Error(ErrorCode::IndexOutOfRange, "outcome index beyond measurement size");
        }
        p += part.weight * f(part.measurement[outcome]);
    }
    return p;
}

namespace {

// Orthonormal Hermitian basis under Tr(XY): 1/sqrt(d) first, then the
// generalised Gell-Mann matrices normalised to unit trace norm.
std::vector<Matrix> hermitian_basis(Index d) {
    std::vector<Matrix> basis;
    basis.push_back(Matrix::Identity(d, d) / std::sqrt(static_cast<double>(d)));
    const double s = 1.0 / std::numbers::sqrt2;
    for (Index i = 0; i < d; ++i) {
        for (Index j = i + 1; j < d; ++j) {
            Matrix sym = Matrix::Zero(d, d);
            sym(i, j) = sym(j, i) = s;
            basis.push_back(sym);
            Matrix anti = Matrix::Zero(d, d);
            anti(i, j) = Complex(0, -s);
            anti(j, i) = Complex(0, s);
            basis.push_back(anti);
        }
    }
    for (Index l = 1; l < d; ++l) {
        Matrix diag = Matrix::Zero(d, d);
        const double norm = std::sqrt(static_cast<double>(l * (l + 1)));
        for (Index j = 0; j < l; ++j) diag(j, j) = 1.0 / norm;
        diag(l, l) = -static_cast<double>(l) / norm;
        basis.push_back(diag);
    }
    return basis;
}

} // namespace

DensityFit fit_density(const EffectRegistry& registry, const Eigen::VectorXd& values) {
    if (static_cast<std::size_t>(values.size()) != registry.size()) {
        throw Error(ErrorCode::ShapeMismatch, "value count differs from registry size");
    }
    if (registry.size() == 0) {
        throw Error(ErrorCode::RankDeficient, "no effects to fit");
    }
    const Index d = registry[0].dim();
    const auto basis = hermitian_basis(d);
    const Index nb = static_cast<Index>(basis.size());
    const Index n = static_cast<Index>(registry.size());

    Eigen::MatrixXd a(n, nb);
    for (Index i = 0; i < n; ++i) {
        const Matrix& e = registry[static_cast<std::size_t>(i)].matrix();
        for (Index k = 0; k < nb; ++k) {
            a(i, k) = (basis[static_cast<std::size_t>(k)] * e).trace().real();
        }
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> full(a);
    full.setThreshold(1e-10);
    if (full.rank() < nb) {
        throw Error(ErrorCode::RankDeficient, "effects do not span the Hermitian operators");
    }

    // Trace one fixes the identity coordinate; the rest is plain least squares.
    const double x0 = 1.0 / std::sqrt(static_cast<double>(d));
    const Eigen::VectorXd rhs = values - x0 * a.col(0);
    const Eigen::VectorXd rest = a.rightCols(nb - 1).colPivHouseholderQr().solve(rhs);

    Matrix rho = x0 * basis[0];
    for (Index k = 1; k < nb; ++k) {
        rho += rest(k - 1) * basis[static_cast<std::size_t>(k)];
    }
    Hermitian h(rho);
    Eigen::VectorXd predicted(n);
    for (Index i = 0; i < n; ++i) {
        predicted(i) = trace_product(h, registry[static_cast<std::size_t>(i)].op());
    }
    const double residual = (predicted - values).cwiseAbs().maxCoeff();
    const bool psd = eigenvalues(h).minCoeff() >= -tol::kNullspace;
    return DensityFit{std::move(h), residual, psd};
}

DensityFit fit_density(const EffectRegistry& registry, const FrameTable& values) {
    return fit_density(registry, Eigen::Map<const Eigen::VectorXd>(values.values().data(),
                                                                  static_cast<Index>(values.size())));
}

bool additivity_check(const FrameFunction& f, const std::vector<Projector>& projectors, double tol) {
    if (projectors.empty()) {
        throw Error(ErrorCode::ShapeMismatch, "no projectors");
    }
    const Index d = projectors.front().dim();
    Matrix sum = Matrix::Zero(d, d);
    double parts = 0;
    for (std::size_t i = 0; i < projectors.size(); ++i) {
        if (projectors[i].dim() != d) {
            throw Error(ErrorCode::DimensionMismatch, "projectors of different dimensions");
        }
        for (std::size_t j = i + 1; j < projectors.size(); ++j) {
            if ((projectors[i].matrix() * projectors[j].matrix()).cwiseAbs().maxCoeff() > tol::kValidation) {
                throw Error(ErrorCode::NotOrthogonal, "projectors are not mutually orthogonal");
            }
        }
        sum += projectors[i].matrix();
        parts += f(projectors[i]);
    }
    return std::abs(parts - f(Projector(Hermitian(sum)))) <= tol;
}

std::vector<Eigen::VectorXd> sample_feasible(const FrameSystem& sys, const SolutionSpace& space,
                                             std::size_t count, std::uint64_t seed) {
    constexpr int kBurnIn = 200;
    constexpr int kThin = 20;
    const Index n = space.particular.size();
    std::vector<Eigen::VectorXd> out;
    if (n == 0 || count == 0) return out;

    const Index d = sys.registry[0].dim();
    Eigen::VectorXd mixed(n);
    for (Index i = 0; i < n; ++i) {
        mixed(i) = sys.registry[static_cast<std::size_t>(i)].op().trace() / static_cast<double>(d);
    }
    const Eigen::MatrixXd& b = space.basis;
    const Index k = b.cols();
    Eigen::VectorXd c = k > 0 ? Eigen::VectorXd(b.transpose() * (mixed - space.particular)) : Eigen::VectorXd(0);
    if (k == 0) {
        out.assign(count, space.particular);
        return out;
    }

    Rng rng(seed);
    auto step = [&]() {
        Eigen::VectorXd u(k);
        for (Index j = 0; j < k; ++j) u(j) = rng.normal();
        u.normalize();
        const Eigen::VectorXd x = space.particular + b * c;
        const Eigen::VectorXd dir = b * u;
        double lo = -std::numeric_limits<double>::infinity();
        double hi = std::numeric_limits<double>::infinity();
        for (Index i = 0; i < n; ++i) {
            if (std::abs(dir(i)) < 1e-12) continue;
            double t0 = (0.0 - x(i)) / dir(i);
            double t1 = (1.0 - x(i)) / dir(i);
            if (t0 > t1) std::swap(t0, t1);
            lo = std::max(lo, t0);
            hi = std::min(hi, t1);
        }
        if (!(lo <= hi) || !std::isfinite(lo) || !std::isfinite(hi)) return;
        c += rng.uniform(lo, hi) * u;
    };
    for (int s = 0; s < kBurnIn; ++s) step();
    for (std::size_t s = 0; s < count; ++s) {
        for (int t = 0; t < kThin; ++t) step();
        out.push_back(space.particular + b * c);
    }
    return out;
}

} // namespace gleason
