#include <gtest/gtest.h>

#include <set>

#include "patternsc/classify.hpp"

using namespace patternsc;

namespace {

constexpr int kP = 5;

FqUpperMatrix mat(const Poset& poset, Role role, std::initializer_list<Entry> entries) {
  FqUpperMatrix m(poset, kP, role);
  for (const auto& e : entries) m.set(e.pos, e.value);
  return m;
}

int inv(int v) { return Fp(kP, v).inverse().value(); }

// Labelings of the representative posets of the commutator poset on [5].
std::uint64_t commutator_five_count(std::uint64_t q) {
  const std::uint64_t u = q - 1;
  return 1 + 3 * u + 3 * u * u + u * u * u + 3 * q * q * u + 3 * q * q * u * u + q * q * q * u * u;
}

}  // namespace

TEST(StarProduct, PrimalWorkedExample) {
  const Poset poset = commutator_poset(7);
  for (int a : {1, 2}) {
    for (int c : {1, 3, 4}) {
      const int b = 3, d = 2;
      const auto lam =
          LabeledSetPartition(mat(poset, Role::kPrimal, {{{1, 4}, a}, {{4, 6}, b}, {{2, 5}, c}, {{3, 7}, d}}));
      for (int r : {1, 4})
        for (int v : {2, 3})
          for (int t : {0, 3}) {
            const int s = 2, u = 1, w = 4;
            const auto x = mat(poset, Role::kPrimal, {{{1, 5}, r}, {{2, 7}, s}, {{3, 6}, t}});
            const auto y = mat(poset, Role::kPrimal, {{{1, 5}, u}, {{2, 6}, v}, {{4, 7}, w}});
            const auto expected =
                mat(poset, Role::kPrimal,
                    {{{1, 5}, (r + u) % kP}, {{2, 7}, s}, {{3, 6}, t}, {{2, 6}, v}, {{4, 7}, w},
                     {{1, 6}, r * v * inv(c) % kP}, {{3, 7}, t * w * inv(b) % kP}});
            EXPECT_EQ(star_primal(lam, x, y), expected);
          }
    }
  }
}

TEST(StarProduct, DualWorkedExample) {
  const Poset poset = commutator_poset(7);
  for (int c : {1, 2, 4}) {
    const auto lam =
        LabeledSetPartition(mat(poset, Role::kDual, {{{1, 4}, 1}, {{4, 6}, 2}, {{2, 7}, c}, {{3, 5}, 3}}));
    for (int s : {1, 3})
      for (int u : {2, 4}) {
        const int r = 3, t = 1;
        const auto eta = mat(poset, Role::kDual, {{{2, 4}, r}, {{3, 7}, s}});
        const auto mu = mat(poset, Role::kDual, {{{1, 3}, t}, {{2, 6}, u}});
        const auto expected = mat(poset, Role::kDual,
                                  {{{2, 4}, r}, {{3, 7}, s}, {{1, 3}, t}, {{2, 6}, u}, {{3, 6}, s * u * inv(c) % kP}});
        EXPECT_EQ(star_dual(lam, eta, mu), expected);
      }
  }
}

TEST(RepresentativeMap, PrimalWorkedExample) {
  const Poset poset = commutator_poset(7);
  for (int b : {1, 2, 3}) {
    const auto lam =
        LabeledSetPartition(mat(poset, Role::kPrimal, {{{1, 4}, 2}, {{4, 6}, b}, {{2, 5}, 1}, {{3, 7}, 4}}));
    for (int s : {0, 1, 4})
      for (int t : {2, 3}) {
        const auto x = mat(poset, Role::kPrimal, {{{1, 5}, 3}, {{3, 6}, s}, {{4, 7}, t}});
        auto expected = x;
        expected.set(3, 7, s * t * inv(b) % kP);
        EXPECT_EQ(rep_map_primal(SuperclassIndex{poset, lam, x}), expected);
        EXPECT_EQ(superclass_representative(SuperclassIndex{poset, lam, x}), lam.matrix() + expected);
      }
  }
}

TEST(RepresentativeMap, DualWorkedExample) {
  const Poset poset = commutator_poset(7);
  for (int c : {1, 3}) {
    const auto lam =
        LabeledSetPartition(mat(poset, Role::kDual, {{{1, 4}, 4}, {{4, 6}, 2}, {{2, 7}, c}, {{3, 5}, 1}}));
    for (int s : {1, 2})
      for (int t : {0, 3, 4}) {
        const auto eta = mat(poset, Role::kDual, {{{1, 3}, 2}, {{2, 6}, s}, {{3, 7}, t}});
        auto expected = eta;
        expected.set(3, 6, s * t * inv(c) % kP);
        EXPECT_EQ(rep_map_dual(SupercharacterIndex{poset, lam, eta}), expected);
      }
  }
}

TEST(Indexing, CommutatorFiveCounts) {
  const Poset poset = commutator_poset(5);
  EXPECT_EQ(commutator_five_count(2), 40U);
  EXPECT_EQ(commutator_five_count(3), 297U);
  for (int p : {2, 3, 5}) {
    const auto count = commutator_five_count(static_cast<std::uint64_t>(p));
    const auto classes = superclasses(poset, p, 2);
    const auto chars = supercharacters(poset, p, 2);
    EXPECT_EQ(classes.size(), count);
    EXPECT_EQ(chars.size(), count);
    for (const auto& idx : chars) EXPECT_TRUE(is_irreducible(idx));
  }
}

TEST(Indexing, SizesAndDegreesAddUp) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& poset : enumerate_normal(n))
      for (int p : {2, 3}) {
        const std::uint64_t order = int_pow(static_cast<std::uint64_t>(p), static_cast<int>(poset.size()));
        std::uint64_t class_total = 0;
        for (const auto& idx : superclasses(poset, p)) class_total += superclass_size(idx);
        EXPECT_EQ(class_total, order);
        // Sum over supercharacters of (|U lam U| / |U lam|) times the degree.
        std::uint64_t degree_total = 0;
        for (const auto& idx : supercharacters(poset, p)) {
          const auto sets = position_sets(poset, idx.lam);
          const std::uint64_t two_sided = int_pow(static_cast<std::uint64_t>(p), static_cast<int>(sets.coadj_P.size()));
          degree_total += two_sided / degree(idx) * degree(idx);
        }
        EXPECT_EQ(degree_total, order) << n << " " << p;
      }
}

TEST(Indexing, RequiresNormalPoset) {
  EXPECT_THROW(superclasses(branch_poset(5, 3), 2), NotNormal);
  EXPECT_THROW(supercharacters(branch_poset(5, 3), 2), NotNormal);
}

TEST(Indexing, FunctionalsAreDistinct) {
  const Poset poset = dyck_index_poset(5, 4);
  std::set<std::uint64_t> seen;
  for (const auto& idx : supercharacters(poset, 3)) seen.insert(supercharacter_functional(idx).key());
  EXPECT_EQ(seen.size(), supercharacters(poset, 3).size());
}

TEST(UnFormula, TrivialCharacterAndIdentity) {
  const Poset full = full_poset(4);
  const auto zero_dual = LabeledSetPartition::zero(full, 3, Role::kDual);
  for (const auto& mu : enumerate_partitions(full, 3, Role::kPrimal))
    EXPECT_EQ(un_supercharacter_value(zero_dual, mu), CyclotomicInt::integer(3, 1));
  const auto zero_primal = LabeledSetPartition::zero(full, 3, Role::kPrimal);
  for (const auto& lam : enumerate_partitions(full, 3, Role::kDual)) {
    const auto sets = position_sets(full, lam);
    const auto expected = static_cast<std::int64_t>(int_pow(3, static_cast<int>(sets.coadjL_P.size())));
    EXPECT_EQ(un_supercharacter_value(lam, zero_primal), CyclotomicInt::integer(3, expected));
  }
}

TEST(ElementaryFactorization, FactorsAreSingleArcs) {
  const Poset poset = commutator_poset(5);
  for (const auto& idx : supercharacters(poset, 2)) {
    const auto f = elementary_factorization(idx);
    EXPECT_EQ(f.factors.size(), idx.lam.arcs().size());
    for (const auto& factor : f.factors) EXPECT_FALSE(factor.is_zero());
  }
}
