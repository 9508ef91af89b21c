#include <gtest/gtest.h>

#include <set>

#include "patternsc/poset.hpp"

using namespace patternsc;

TEST(Position, IndexIsRowMajorAndIndependentOfN) {
  int expected = 0;
  for (int j = 2; j <= kMaxN; ++j)
    for (int i = 1; i < j; ++i) {
      EXPECT_EQ(position_index(i, j), expected);
      EXPECT_EQ(position_at(expected), (Position{i, j}));
      ++expected;
    }
  EXPECT_EQ(expected, kMaxPositions);
}

TEST(PositionSet, SetOperations) {
  const PositionSet a{{1, 2}, {1, 3}};
  const PositionSet b{{1, 3}, {2, 3}};
  EXPECT_EQ((a | b).size(), 3U);
  EXPECT_EQ((a & b), (PositionSet{{1, 3}}));
  EXPECT_EQ((a - b), (PositionSet{{1, 2}}));
  EXPECT_TRUE((a & b).is_subset_of(a));
  EXPECT_EQ(a.max_index(), 3);
  EXPECT_THROW(PositionSet({{3, 2}}), std::invalid_argument);
}

TEST(Poset, RejectsNonTransitiveRelations) {
  EXPECT_THROW(Poset(3, PositionSet{{1, 2}, {2, 3}}), NotAPoset);
  EXPECT_NO_THROW(Poset(3, PositionSet{{1, 2}, {2, 3}, {1, 3}}));
  EXPECT_THROW(Poset(3, PositionSet{{1, 4}}), NotAPoset);
  EXPECT_THROW(full_poset(kMaxN + 1), std::invalid_argument);
}

TEST(Poset, CoversOfFourElementExample) {
  // 1 < 3, 2 < 3, 3 < 4.
  const Poset p = Poset::from_relations(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  EXPECT_EQ(covers(p), (PositionSet{{1, 3}, {2, 3}, {3, 4}}));
  EXPECT_EQ(from_covers(4, covers(p)), p);
  EXPECT_TRUE(is_normal(p));
  EXPECT_EQ(boundary_vector(p), (std::vector<int>{2, 2, 3, 4}));
}

TEST(Poset, FromCoversRejectsNonCovers) {
  EXPECT_THROW(from_covers(3, PositionSet{{1, 2}, {2, 3}, {1, 3}}), NotAPoset);
  // The superclass-side counterexample support on [7].
  EXPECT_THROW(from_covers(7, PositionSet{{1, 4}, {4, 7}, {1, 7}, {2, 4}, {4, 6}}), NotAPoset);
}

TEST(Poset, CoversRoundTripOnAllSmallPosets) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : enumerate_all_posets(n)) EXPECT_EQ(from_covers(n, covers(p)), p);
}

TEST(Poset, AllPosetCounts) {
  // Labeled posets on [n] that are natural (i < j whenever i precedes j).
  const std::vector<std::size_t> expected{1, 2, 7, 40, 357};
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(enumerate_all_posets(n).size(), expected[n - 1]) << n;
}

TEST(Normality, FullEmptyCommutatorAreNormal) {
  for (int n = 1; n <= 8; ++n) {
    EXPECT_TRUE(is_normal(full_poset(n)));
    EXPECT_TRUE(is_normal(empty_poset(n)));
    EXPECT_TRUE(is_normal(commutator_poset(n)));
  }
}

TEST(Normality, WitnessQuadruple) {
  const Poset p = Poset::from_relations(4, {{2, 3}});
  const auto w = find_normality_violation(p);
  ASSERT_TRUE(w.has_value());
  const auto [i, j, k, l] = *w;
  EXPECT_TRUE(i <= j && k <= l);
  EXPECT_TRUE(p.contains(j, k));
  EXPECT_FALSE(p.contains(i, l));
  try {
    require_normal(p);
    FAIL() << "expected NotNormal";
  } catch (const NotNormal& e) {
    EXPECT_EQ(e.witness(), *w);
  }
}

TEST(Normality, BranchPosetsAreNotNormalInTheMiddle) {
  for (int n = 4; n <= 7; ++n)
    for (int i = 3; i < n; ++i) EXPECT_FALSE(is_normal(branch_poset(n, i))) << n << " " << i;
  EXPECT_TRUE(is_normal(branch_poset(5, 1)));
}

TEST(Normality, TFamilyIsNormal) {
  for (int m = 1; m <= 4; ++m)
    for (int n2 = 0; n2 <= 4; ++n2) {
      const Poset t = t_family(m, n2);
      EXPECT_EQ(t.n(), m + n2);
      EXPECT_TRUE(is_normal(t));
      EXPECT_EQ(t.size(), static_cast<std::size_t>(m * (m - 1) / 2 + m * n2));
    }
}

TEST(Catalan, EnumerationCountsMatch) {
  const std::vector<std::uint64_t> expected{1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
  for (int n = 1; n <= 10; ++n) {
    EXPECT_EQ(catalan(n), expected[n - 1]);
    const auto posets = enumerate_normal(n);
    EXPECT_EQ(posets.size(), expected[n - 1]);
    std::set<std::vector<int>> seen;
    for (const auto& p : posets) {
      EXPECT_TRUE(is_normal(p));
      seen.insert(boundary_vector(p));
    }
    EXPECT_EQ(seen.size(), posets.size());
  }
  EXPECT_THROW(enumerate_normal(13), std::invalid_argument);
}

TEST(Catalan, NormalPosetsAreExactlyTheIdealsAmongAllPosets) {
  for (int n = 1; n <= 5; ++n) {
    std::size_t normal = 0;
    for (const auto& p : enumerate_all_posets(n)) normal += is_normal(p);
    EXPECT_EQ(normal, catalan(n));
  }
}

TEST(Catalan, DyckIndexRoundTrip) {
  for (int n = 1; n <= 6; ++n) {
    const auto posets = enumerate_normal(n);
    for (std::size_t k = 0; k < posets.size(); ++k) {
      EXPECT_EQ(dyck_index(posets[k]), k);
      EXPECT_EQ(dyck_index_poset(n, k), posets[k]);
      EXPECT_EQ(poset_from_boundary(boundary_vector(posets[k])), posets[k]);
    }
    EXPECT_EQ(posets.front(), full_poset(n));
    EXPECT_EQ(posets.back(), empty_poset(n));
  }
  EXPECT_THROW(dyck_index_poset(4, 14), std::out_of_range);
}
