#include "../oracles/discrete_hull.hpp"
#include "gleason/catalog.hpp"
#include "gleason/simulability.hpp"
#include "test_util.hpp"

using namespace gleason;

TEST(DiscreteHull, AtomCount) {
    EXPECT_EQ(oracle::enumerate_atoms(3, 100).cols(), 3 + 6 * 100);
    EXPECT_EQ(oracle::enumerate_atoms(2, 10).cols(), 2 + 2 * 10);
}

TEST(DiscreteHull, InsideHullHasZeroDistance) {
    const auto atoms = oracle::enumerate_atoms(3, 2000);
    const auto d = oracle::min_norm_distance(atoms, oracle::bloch_coordinates(make_measurement(
                                                        {Effect::identity(2).scaled(1.0 / 3), Effect::identity(2).scaled(1.0 / 3),
                                                         Effect::identity(2).scaled(1.0 / 3)})));
    EXPECT_LT(d.distance, 1e-10);
}

TEST(DiscreteHull, RefiningTheGridShrinksTheDistance) {
    const Measurement e = catalog().at("E");
    const auto coarse = oracle::min_norm_distance(oracle::enumerate_atoms(3, 200), oracle::bloch_coordinates(e));
    const auto fine = oracle::min_norm_distance(oracle::enumerate_atoms(3, 20000), oracle::bloch_coordinates(e));
    EXPECT_GE(coarse.distance, fine.distance - 1e-12);
    EXPECT_GT(fine.distance, 0.1);
}
