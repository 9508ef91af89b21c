#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "patternsc/repposets.hpp"

using namespace patternsc;

namespace {

Poset greedy_example() {
  return from_covers(6, PositionSet{{1, 2}, {1, 3}, {2, 6}, {3, 4}, {3, 5}, {4, 6}, {5, 6}});
}

}  // namespace

TEST(HighestCoverSet, GreedyExample) {
  const Poset p = greedy_example();
  EXPECT_FALSE(is_normal(p));
  const PositionSet expected{{1, 3}, {2, 6}, {3, 5}};
  EXPECT_EQ(highest_cover_set(p), expected);
  EXPECT_EQ(highest_cover_set_bruteforce(p), expected);
  EXPECT_TRUE(is_independent(expected));
  EXPECT_EQ(length_vector(expected), (std::vector<int>{4, 2, 2}));
}

TEST(HighestCoverSet, GreedyMatchesBruteForce) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : enumerate_all_posets(n)) EXPECT_EQ(highest_cover_set(p), highest_cover_set_bruteforce(p));
  std::mt19937 rng(17);
  const auto six = enumerate_all_posets(6);
  std::uniform_int_distribution<std::size_t> pick(0, six.size() - 1);
  for (int trial = 0; trial < 300; ++trial) {
    const Poset& p = six[pick(rng)];
    EXPECT_EQ(highest_cover_set(p), highest_cover_set_bruteforce(p));
  }
}

TEST(HighestCoverSet, TieOrderDoesNotMatter) {
  std::mt19937 rng(23);
  for (const auto& p : enumerate_all_posets(5)) {
    const PositionSet base = highest_cover_set(p);
    std::vector<Position> order;
    for (const auto& c : covers(p).to_vector()) order.push_back(c);
    for (int trial = 0; trial < 3; ++trial) {
      std::shuffle(order.begin(), order.end(), rng);
      EXPECT_EQ(highest_cover_set(p, order), base);
    }
  }
}

TEST(Chains, DefinitionsAgree) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : enumerate_all_posets(n)) EXPECT_EQ(decomposes_into_chains(p), decomposes_into_chains_direct(p));
  EXPECT_TRUE(decomposes_into_chains(empty_poset(4)));
  EXPECT_TRUE(decomposes_into_chains(full_poset(4)));
  EXPECT_FALSE(decomposes_into_chains(from_covers(3, PositionSet{{1, 3}, {2, 3}})));
}

TEST(Representative, TFamilyExample) {
  const Poset t = t_family(5, 3);
  const Poset p1 = from_covers(8, PositionSet{{1, 3}, {3, 8}, {3, 7}, {2, 4}, {4, 7}, {4, 6}});
  const Poset p2 = from_covers(8, PositionSet{{1, 4}, {4, 8}, {4, 7}, {2, 3}, {3, 7}, {3, 6}});
  EXPECT_TRUE(is_p_representative(t, p1));
  EXPECT_FALSE(is_p_representative(t, p2));
}

TEST(Representative, LabeledPosetValidation) {
  const Poset q = from_covers(3, PositionSet{{1, 2}, {2, 3}});
  FqUpperMatrix labels(full_poset(3), 3, Role::kDual);
  labels.set(1, 2, 1);
  EXPECT_THROW(make_labeled_poset(q, labels), std::invalid_argument);
  labels.set(2, 3, 2);
  EXPECT_NO_THROW(make_labeled_poset(q, labels));
  labels.set(1, 3, 1);
  EXPECT_THROW(make_labeled_poset(q, labels), std::invalid_argument);
}

TEST(Representative, BijectionRoundTrip) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& ambient : enumerate_normal(n))
      for (int p : {2, 3}) {
        if (n == 5 && p == 3 && ambient.size() > 7) continue;
        const auto chars = supercharacters(ambient, p);
        const auto reps = enumerate_representative(ambient, p);
        EXPECT_EQ(reps.size(), chars.size());
        for (const auto& idx : chars) {
          const auto q = index_to_poset(idx);
          EXPECT_TRUE(is_p_representative(ambient, q.poset));
          EXPECT_EQ(is_irreducible_poset(ambient, q), is_irreducible(idx));
          EXPECT_EQ(degree_one_test(ambient, q), degree(idx) == 1);
          const auto back = poset_to_index(ambient, q);
          EXPECT_EQ(back.lam, idx.lam);
          EXPECT_EQ(back.eta, idx.eta);
        }
      }
}

TEST(Representative, SearchAgreesOnNormalPosets) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& ambient : enumerate_normal(n))
      EXPECT_EQ(count_representative_search(ambient, 2), enumerate_representative(ambient, 2).size());
  EXPECT_EQ(count_representative_search(commutator_poset(5), 2), 40U);
}

TEST(Representative, BranchPosetBreaksTheBijection) {
  const Poset branch = branch_poset(5, 3);
  EXPECT_EQ(count_representative_search(branch, 2), 53U);
  EXPECT_EQ(enumerate_representative_search(branch, 2).size(), 53U);
  EXPECT_THROW(enumerate_representative(branch, 2), NotNormal);
}

TEST(Representative, RejectsNonRepresentative) {
  const Poset t = t_family(5, 3);
  const Poset p2 = from_covers(8, PositionSet{{1, 4}, {4, 8}, {4, 7}, {2, 3}, {3, 7}, {3, 6}});
  FqUpperMatrix labels(full_poset(8), 2, Role::kDual);
  for (const auto& c : covers(p2).to_vector()) labels.set(c, 1);
  EXPECT_THROW(poset_to_index(t, make_labeled_poset(p2, labels)), std::invalid_argument);
}
