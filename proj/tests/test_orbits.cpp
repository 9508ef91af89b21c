#include <gtest/gtest.h>

#include <numeric>

#include "patternsc/orbits.hpp"

using namespace patternsc;

TEST(Orbits, PartitionCoversSpaceWithMinimalRepresentatives) {
  for (const Poset& poset : {commutator_poset(5), full_poset(4), dyck_index_poset(5, 9)})
    for (Role role : {Role::kPrimal, Role::kDual})
      for (Side side : {Side::kLeft, Side::kRight, Side::kTwoSided}) {
        const OrbitSpace space(poset, 3, role);
        const auto table = compute_orbits(space, side);
        EXPECT_EQ(std::accumulate(table.sizes.begin(), table.sizes.end(), std::uint64_t{0}), space.size());
        for (std::size_t o = 0; o < table.count(); ++o) {
          EXPECT_EQ(table.orbit_of[table.representatives[o]], o);
          if (o > 0) {
            EXPECT_LT(table.representatives[o - 1], table.representatives[o]);
          }
        }
        for (std::uint64_t k = 0; k < space.size(); ++k)
          EXPECT_LE(table.representatives[table.orbit_of[k]], k);
      }
}

TEST(Orbits, ShuffledGeneratorOrderGivesSamePartition) {
  const Poset poset = commutator_poset(6);
  for (Role role : {Role::kPrimal, Role::kDual}) {
    const OrbitSpace space(poset, 2, role);
    const auto base = compute_orbits(space, Side::kTwoSided);
    for (std::uint64_t seed : {1U, 2U, 3U}) {
      const auto other = compute_orbits_shuffled(space, Side::kTwoSided, seed);
      EXPECT_EQ(other.orbit_of, base.orbit_of);
      EXPECT_EQ(other.sizes, base.sizes);
    }
  }
}

TEST(Orbits, WitnessesReproduceEveryElement) {
  const Poset poset = dyck_index_poset(5, 3);
  for (Role role : {Role::kPrimal, Role::kDual})
    for (Side side : {Side::kLeft, Side::kRight, Side::kTwoSided}) {
      const OrbitSpace space(poset, 3, role);
      const auto table = compute_orbits(space, side, true);
      ASSERT_TRUE(table.has_witnesses());
      for (std::uint64_t k = 0; k < space.size(); k += 7) {
        const auto [g, h] = orbit_witness(space, table, k);
        if (side == Side::kLeft) {
          EXPECT_TRUE(h.is_identity());
        }
        if (side == Side::kRight) {
          EXPECT_TRUE(g.is_identity());
        }
        const auto rep = space.matrix(table.representatives[table.orbit_of[k]]);
        EXPECT_EQ(act(role, g, rep, h), space.matrix(k));
      }
    }
}

TEST(Orbits, OrbitKeysAndFindWitness) {
  const Poset poset = commutator_poset(5);
  const OrbitSpace space(poset, 2, Role::kDual);
  const auto table = compute_orbits(space, Side::kTwoSided);
  for (std::size_t o = 0; o < table.count(); ++o) {
    const auto keys = orbit_keys(space, table.representatives[o], Side::kTwoSided);
    EXPECT_EQ(keys.size(), table.sizes[o]);
    EXPECT_EQ(keys.front(), table.representatives[o]);
    const auto [g, h] = find_orbit_witness(space, keys.front(), keys.back(), Side::kTwoSided);
    EXPECT_EQ(act(Role::kDual, g, space.matrix(keys.front()), h), space.matrix(keys.back()));
  }
  ASSERT_GE(table.count(), 2U);
  EXPECT_THROW(find_orbit_witness(space, table.representatives[0], table.representatives[1], Side::kTwoSided),
               std::invalid_argument);
}

TEST(Orbits, FullGroupActsOnNormalSubalgebra) {
  const Poset poset = commutator_poset(5);
  const OrbitSpace space(poset, 2, Role::kPrimal, full_poset(5).relations());
  const auto table = compute_orbits(space, Side::kTwoSided);
  EXPECT_LE(table.count(), compute_orbits(OrbitSpace(poset, 2, Role::kPrimal), Side::kTwoSided).count());
}
