#include <gtest/gtest.h>

#include "patternsc/orbits.hpp"
#include "patternsc/partitions.hpp"
#include "patternsc/verify.hpp"

using namespace patternsc;

namespace {

const Check* find_check(const Report& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST(Verify, EveryNormalPosetUpToFour) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& poset : enumerate_normal(n))
      for (int p : {2, 3}) {
        const Report r = verify_poset(poset, p);
        EXPECT_TRUE(r.passed()) << r.subject;
        EXPECT_NE(find_check(r, "degree-sum"), nullptr);
      }
}

TEST(Verify, CommutatorFive) {
  const Report r = verify_poset(commutator_poset(5), 3);
  EXPECT_TRUE(r.passed());
  for (const char* name : {"superclass-bijection", "supercharacter-bijection", "restriction", "representative-round-trip"})
    EXPECT_NE(find_check(r, name), nullptr) << name;
}

TEST(Verify, NonNormalPosetIsReported) {
  const Report r = verify_poset(branch_poset(5, 3), 2);
  EXPECT_FALSE(r.passed());
  ASSERT_NE(find_check(r, "normal"), nullptr);
}

TEST(Verify, UnFormula) {
  for (int n = 1; n <= 4; ++n) EXPECT_TRUE(verify_un_formula(n, 3).passed()) << n;
  EXPECT_TRUE(verify_un_formula(5, 2).passed());
}

TEST(Counterexamples, NaiveMapsCollide) {
  for (int p : {2, 3, 5}) {
    const Report r = counterexample_report(p, 1, p - 1);
    EXPECT_TRUE(r.passed()) << p;
    EXPECT_EQ(r.checks.size(), 3U);
  }
}

TEST(Counterexamples, LiteralDualPairLiesInDifferentOrbits) {
  const Poset poset = commutator_poset(7);
  const OrbitSpace space(poset, 2, Role::kDual);
  const auto mu = parse_arc_notation("4(1)6", poset, 2, Role::kDual);
  const auto nu = parse_arc_notation("1(1)7|4(1)6", poset, 2, Role::kDual);
  auto eta = FqUpperMatrix(poset, 2, Role::kDual);
  eta.set(1, 6, 1);
  eta.set(2, 7, 1);
  EXPECT_TRUE(position_sets(poset, mu).coaux.empty());
  EXPECT_THROW(find_orbit_witness(space, space.key(mu.matrix() + eta), space.key(nu.matrix() + eta), Side::kTwoSided),
               std::invalid_argument);
}

TEST(NegativeControl, BranchPoset) {
  const Report r = branch_negative_control(5, 3, 2);
  EXPECT_TRUE(r.passed());
  const Check* count = find_check(r, "representative-count");
  ASSERT_NE(count, nullptr);
  EXPECT_TRUE(count->expected_negative);
  EXPECT_FALSE(count->passed);
}
