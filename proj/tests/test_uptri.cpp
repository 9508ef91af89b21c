#include <gtest/gtest.h>

#include <random>

#include "patternsc/uptri.hpp"

using namespace patternsc;

namespace {

FqUpperMatrix random_matrix(const Poset& poset, int p, Role role, std::mt19937& rng) {
  FqUpperMatrix m(poset, p, role);
  std::uniform_int_distribution<int> digit(0, p - 1);
  for (const auto& pos : poset.positions()) m.set(pos, digit(rng));
  return m;
}

GroupElement random_element(const Poset& poset, int p, std::mt19937& rng) {
  return GroupElement(random_matrix(poset, p, Role::kPrimal, rng));
}

}  // namespace

TEST(FqUpperMatrix, SupportIsEnforced) {
  FqUpperMatrix m(commutator_poset(4), 3, Role::kPrimal);
  m.set(1, 3, 4);
  EXPECT_EQ(m.get(1, 3), 1);
  EXPECT_NO_THROW(m.set(1, 2, 0));
  try {
    m.set(1, 2, 1);
    FAIL() << "expected SupportViolation";
  } catch (const SupportViolation& e) {
    EXPECT_EQ(e.position(), (Position{1, 2}));
  }
}

TEST(FqUpperMatrix, KeyOrderIsRowMajorLex) {
  const Poset full = full_poset(3);
  const auto all = enumerate_space(full, 2, Role::kPrimal);
  ASSERT_EQ(all.size(), 8U);
  for (std::size_t k = 0; k < all.size(); ++k) {
    EXPECT_EQ(all[k].key(), k);
    EXPECT_EQ(FqUpperMatrix::from_key(3, 2, full.relations(), Role::kPrimal, k), all[k]);
    if (k > 0) {
      EXPECT_LT(all[k - 1], all[k]);
    }
  }
  // The first row-major position is the most significant digit.
  FqUpperMatrix e12(full, 2, Role::kPrimal);
  e12.set(1, 2, 1);
  EXPECT_EQ(e12.key(), 4U);
}

TEST(FqUpperMatrix, RolesDoNotMix) {
  const Poset full = full_poset(3);
  const FqUpperMatrix a(full, 2, Role::kPrimal);
  const FqUpperMatrix b(full, 2, Role::kDual);
  EXPECT_THROW((void)(a + b), RoleMismatch);
  EXPECT_EQ(role_from_string(to_string(Role::kDual)), Role::kDual);
}

TEST(FqUpperMatrix, ToString) {
  FqUpperMatrix m(full_poset(7), 5, Role::kDual);
  EXPECT_EQ(m.to_string(), "0");
  m.set(1, 6, 1);
  m.set(2, 7, 3);
  EXPECT_EQ(m.to_string(), "e*1_6 + 3*e*2_7");
}

TEST(GroupElement, InverseAndProduct) {
  std::mt19937 rng(7);
  for (int p : {2, 3, 5}) {
    const Poset full = full_poset(5);
    for (int trial = 0; trial < 20; ++trial) {
      const auto g = random_element(full, p, rng);
      const auto h = random_element(full, p, rng);
      EXPECT_TRUE(mul(g, inv(g)).is_identity());
      EXPECT_TRUE(mul(inv(g), g).is_identity());
      EXPECT_EQ(inv(mul(g, h)), mul(inv(h), inv(g)));
    }
  }
}

TEST(GroupElement, PatternSubgroupIsClosed) {
  std::mt19937 rng(11);
  const Poset p = commutator_poset(6);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = random_element(p, 3, rng);
    const auto h = random_element(p, 3, rng);
    EXPECT_TRUE(mul(g, h).off_diag().support().is_subset_of(p.relations()));
    EXPECT_TRUE(inv(g).off_diag().support().is_subset_of(p.relations()));
  }
}

TEST(Action, NormalPatternAlgebraIsStableUnderUn) {
  std::mt19937 rng(3);
  const Poset full = full_poset(6);
  for (const Poset& p : {commutator_poset(6), dyck_index_poset(6, 17), t_family(3, 3)}) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto g = random_element(full, 3, rng);
      const auto h = random_element(full, 3, rng);
      const auto x = random_matrix(p, 3, Role::kPrimal, rng);
      EXPECT_NO_THROW((void)act_matrix(g, x, h));
    }
  }
}

TEST(Action, DualActionIsAdjointToMatrixAction) {
  std::mt19937 rng(5);
  const Poset full = full_poset(6);
  for (int p : {2, 3, 5}) {
    for (const Poset& poset : {commutator_poset(6), dyck_index_poset(6, 40), full}) {
      for (int trial = 0; trial < 10; ++trial) {
        const auto g = random_element(full, p, rng);
        const auto h = random_element(full, p, rng);
        const auto lam = random_matrix(poset, p, Role::kDual, rng);
        const auto x = random_matrix(poset, p, Role::kPrimal, rng);
        // (g lam h)(X) = lam(g^{-1} X h^{-1}).
        EXPECT_EQ(pairing(act_dual(g, lam, h), x), pairing(lam, act_matrix(inv(g), x, inv(h))));
      }
    }
  }
}

TEST(Action, DualActionMatchesEntrywiseFormulas) {
  std::mt19937 rng(9);
  const Poset full = full_poset(7);
  const Poset poset = commutator_poset(7);
  for (int p : {2, 3, 7}) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto g = random_element(full, p, rng);
      const auto lam = random_matrix(poset, p, Role::kDual, rng);
      const auto id = GroupElement::identity(full, p);
      EXPECT_EQ(act_dual(g, lam, id), act_dual_left_by_entries(g, lam));
      EXPECT_EQ(act_dual(id, lam, g), act_dual_right_by_entries(lam, g));
    }
  }
}

TEST(Action, DualActionIsAGroupAction) {
  std::mt19937 rng(13);
  const Poset full = full_poset(5);
  const Poset poset = dyck_index_poset(5, 20);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g1 = random_element(full, 3, rng), g2 = random_element(full, 3, rng);
    const auto h1 = random_element(full, 3, rng), h2 = random_element(full, 3, rng);
    const auto lam = random_matrix(poset, 3, Role::kDual, rng);
    EXPECT_EQ(act_dual(g1, act_dual(g2, lam, h2), h1), act_dual(mul(g1, g2), lam, mul(h2, h1)));
  }
}

TEST(Enumeration, CapIsEnforced) {
  EXPECT_EQ(space_size(full_poset(4), 3), 729U);
  EXPECT_THROW(space_size(full_poset(6), 3), std::length_error);
  EXPECT_EQ(enumerate_group(full_poset(3), 2).size(), 8U);
}
