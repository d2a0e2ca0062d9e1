#include <set>
#include <utility>

#include "gleason/frame.hpp"
#include "gleason/random.hpp"

namespace gleason {

namespace {

// Uniform Bloch tuple conditioned on e <= 1/2, so any two such effects sum
// to an effect and the family is closed under midpoints.
Effect random_small_effect(Rng& rng) {
    for (;;) {
        const auto k = random_bloch_effect(rng);
        if (k.a + k.radius() <= 0.5) return bloch_to_effect(k);
    }
}

Effect random_qubit_effect(Rng& rng) { return bloch_to_effect(random_bloch_effect(rng)); }

Effect midpoint(const Effect& x, const Effect& y) { return Effect(0.5 * (x.op() + y.op())); }

} // namespace

std::vector<Measurement> sample_3psm_prime(std::uint64_t seed, std::size_t n_two_outcome, std::size_t n_te,
                                           std::size_t n_tee) {
    constexpr std::size_t kSeeds = 3;
    constexpr int kTries = 64;
    Rng rng(seed);
    std::vector<Measurement> out;
    // Effects carrying both a D row and a T row, which pins the value of e/2.
    std::vector<Effect> anchored;
    std::size_t d_left = n_two_outcome;
    std::size_t t_left = n_te;
    std::size_t tt_left = n_tee;

    while (anchored.size() < kSeeds && (d_left > 0 || t_left > 0)) {
        const Effect e = random_small_effect(rng);
        if (d_left > 0) {
            out.push_back(d_e(e));
            --d_left;
        }
        if (t_left > 0) {
            out.push_back(t_e(e));
            --t_left;
        }
        anchored.push_back(e);
    }

    std::set<std::pair<std::size_t, std::size_t>> used;
    auto pick_pair = [&](bool distinct) -> std::optional<std::pair<std::size_t, std::size_t>> {
        const std::size_t n = anchored.size();
        if (n == 0 || (distinct && n < 2)) return std::nullopt;
        for (int t = 0; t < kTries; ++t) {
            std::size_t i = rng.index(n);
            std::size_t j = rng.index(n);
            if (distinct && i == j) continue;
            if (i > j) std::swap(i, j);
            if (distinct && used.count({i, j})) continue;
            if (!is_effect(anchored[i].op() + anchored[j].op())) continue;
            return std::make_pair(i, j);
        }
        return std::nullopt;
    };

    while (d_left > 0 && t_left > 0 && tt_left > 0) {
        const auto pair = pick_pair(true);
        if (!pair) break;
        used.insert(*pair);
        const Effect& x = anchored[pair->first];
        const Effect& y = anchored[pair->second];
        const Effect mid = midpoint(x, y);
        out.push_back(t_ee(x, y));
        out.push_back(d_e(mid));
        out.push_back(t_e(mid));
        --tt_left;
        --d_left;
        --t_left;
        anchored.push_back(mid);
    }

    while (tt_left > 0) {
        if (const auto pair = pick_pair(false)) {
            out.push_back(t_ee(anchored[pair->first], anchored[pair->second]));
        } else {
            for (;;) {
                const Effect x = random_qubit_effect(rng);
                const Effect y = random_qubit_effect(rng);
                if (is_effect(x.op() + y.op())) {
                    out.push_back(t_ee(x, y));
                    break;
                }
            }
        }
        --tt_left;
    }
    for (std::size_t k = 0; d_left > 0; ++k, --d_left) {
        out.push_back(anchored.empty() ? d_e(random_qubit_effect(rng))
                                       : d_e(anchored[k % anchored.size()].scaled(0.5)));
    }
    for (std::size_t k = 0; t_left > 0; ++k, --t_left) {
        out.push_back(anchored.empty() ? t_e(random_qubit_effect(rng))
                                       : t_e(anchored[k % anchored.size()].complement()));
    }
    return out;
}

std::vector<Measurement> sample_pvm(std::uint64_t seed, std::size_t k) {
    Rng rng(seed);
    std::vector<Measurement> out;
    for (std::size_t i = 0; i < k; ++i) {
        out.push_back(d_e(random_qubit_projector(rng)));
    }
    return out;
}

std::vector<Measurement> sample_2pom(std::uint64_t seed, std::size_t k) {
    Rng rng(seed);
    std::vector<Measurement> out;
    for (std::size_t i = 0; i < k; ++i) {
        out.push_back(d_e(random_qubit_effect(rng)));
    }
    return out;
}

} // namespace gleason
