#include <cmath>

#include "gleason/catalog.hpp"
#include "gleason/random.hpp"
#include "gleason/simulability.hpp"
#include "test_util.hpp"

using namespace gleason;
using namespace gleason::test;

namespace {

Measurement depolarized_trine(double v) {
    const Measurement e = catalog().at("E");
    std::vector<Effect> out;
    for (const auto& x : e.effects()) {
        out.emplace_back(v * x.op() + (1 - v) * x.op().trace() * Hermitian::identity(2) / 2.0);
    }
    return make_measurement(std::move(out));
}

double witness_distance(const Measurement& target, const MixtureDecomposition& w) {
    return reconstruction_error(target, w);
}

} // namespace

TEST(Membership, TwoOutcomeRandomEffects) {
    Rng rng(31);
    for (int i = 0; i < 100; ++i) {
        const auto target = d_e(bloch_to_effect(random_bloch_effect(rng)));
        const auto v = membership(target);
        ASSERT_EQ(v.status, SimulabilityStatus::Simulable);
        ASSERT_TRUE(v.witness);
        EXPECT_LE(witness_distance(target, *v.witness), 1e-8);
        EXPECT_TRUE(verify_decomposition(target, *v.witness, 1e-7));
    }
}

TEST(Membership, TPrimeSimulable) {
    const Measurement t = catalog().at("Tprime");
    const auto v = membership(t);
    ASSERT_EQ(v.status, SimulabilityStatus::Simulable);
    EXPECT_LE(witness_distance(t, *v.witness), 1e-8);
    EXPECT_TRUE(verify_decomposition(t, *v.witness, 1e-7));
}

TEST(Membership, ProjectiveShortCircuit) {
    const Measurement mx = catalog().at("M_x");
    const auto v = membership(mx);
    ASSERT_EQ(v.status, SimulabilityStatus::Simulable);
    ASSERT_EQ(v.witness->size(), 1u);
    EXPECT_EQ(v.iterations, 0);
}

TEST(Membership, TrineNotSimulable) {
    const Measurement e = catalog().at("E");
    const auto v = membership(e);
    ASSERT_EQ(v.status, SimulabilityStatus::NotSimulable);
    ASSERT_TRUE(v.certificate);
    EXPECT_GT(v.certificate->margin, 1e-7);
    // Re-price the separator independently of the verdict.
    EXPECT_NEAR(separation_margin(v.certificate->separator, e), v.certificate->margin, 1e-12);
    EXPECT_NEAR(std::sqrt(inner(v.certificate->separator, v.certificate->separator)), 1.0, 1e-12);
}

TEST(Membership, TrineMarginMatchesDepolarisationLine) {
    // Projecting E onto the hull lands on its own depolarisation line by
    // symmetry, so margin = |E - E(v*)| = (1 - v*) |E - E(0)|.
    const Measurement e = catalog().at("E");
    const double margin = membership(e).certificate->margin;
    double lo = 0, hi = 1;
    for (int i = 0; i < 40; ++i) {
        const double mid = 0.5 * (lo + hi);
        (membership(depolarized_trine(mid)).status == SimulabilityStatus::Simulable ? lo : hi) = mid;
    }
    const MeasurementVector full(e);
    const MeasurementVector centre(depolarized_trine(0));
    const double scale = std::sqrt(inner(full - centre, full - centre));
    EXPECT_NEAR(margin, (1 - lo) * scale, 1e-6);
}

TEST(Membership, DepolarisationSingleCrossing) {
    // Scan v on a grid: the verdict must switch exactly once.
    int switches = 0;
    bool previous = true;
    for (int k = 0; k <= 50; ++k) {
        const double v = k / 50.0;
        const auto verdict = membership(depolarized_trine(v));
        ASSERT_NE(verdict.status, SimulabilityStatus::Inconclusive) << "v = " << v;
        const bool simulable = verdict.status == SimulabilityStatus::Simulable;
        if (simulable != previous) ++switches;
        previous = simulable;
    }
    EXPECT_EQ(switches, 1);
}

TEST(Membership, BisectionStable) {
    auto bisect = [] {
        double lo = 0, hi = 1;
        while (hi - lo > 1e-3) {
            const double mid = 0.5 * (lo + hi);
            (membership(depolarized_trine(mid)).status == SimulabilityStatus::Simulable ? lo : hi) = mid;
        }
        return lo;
    };
    const double a = bisect();
    EXPECT_EQ(a, bisect());
    EXPECT_GT(a, 0.5);
    EXPECT_LT(a, 1.0);
}

TEST(Membership, RandomThreeOutcomeVerdictsAreSound) {
    Rng rng(32);
    int certified = 0;
    for (int i = 0; i < 60; ++i) {
        // Random 3-outcome POM: random positive operators normalised to sum to 1.
        std::vector<Matrix> raw;
        Matrix s = Matrix::Zero(2, 2);
        for (int j = 0; j < 3; ++j) {
            Matrix a(2, 2);
            for (Index r = 0; r < 2; ++r)
                for (Index c = 0; c < 2; ++c) a(r, c) = Complex(rng.normal(), rng.normal());
            raw.push_back(a * a.adjoint());
            s += raw.back();
        }
        Eigen::SelfAdjointEigenSolver<Matrix> es(s);
        const Matrix inv_sqrt = es.operatorInverseSqrt();
        std::vector<Hermitian> effects;
        for (const auto& r : raw) effects.emplace_back(Matrix(inv_sqrt * r * inv_sqrt), 1e-9);
        const auto pom = make_measurement(effects, 1e-9);
        const auto v = membership(pom);
        if (v.status == SimulabilityStatus::Simulable) {
            EXPECT_TRUE(verify_decomposition(pom, *v.witness, 1e-7));
        } else if (v.status == SimulabilityStatus::NotSimulable) {
            ++certified;
            EXPECT_GT(separation_margin(v.certificate->separator, pom), 0.0);
        }
    }
    EXPECT_GT(certified, 0);
}

TEST(Membership, Errors) {
    expect_error(ErrorCode::UnsupportedDimension,
                 [] { membership(make_measurement({Effect::identity(3)})); });
}
