#pragma once

// Formula-versus-oracle verification of the classification for one poset, the
// counterexample regressions, and the non-normal negative control.

#include <cstdint>

#include "patternsc/oracle.hpp"
#include "patternsc/poset.hpp"

namespace patternsc {

struct VerifyOptions {
  std::uint64_t cap = kDefaultGroupCap;
  bool axioms = true;
  bool representative_posets = true;
  // Pointwise restriction and factorization identities; skipped above the budget.
  bool pointwise = true;
  std::uint64_t pointwise_budget = std::uint64_t{1} << 27;
  int jobs = 1;
  AxiomOptions axiom_options;
};

// Requires P normal; a non-normal P yields a single failed "normal" check.
Report verify_poset(const Poset& poset, int p, const VerifyOptions& options = {});

// Closed-form U_n values against orbit sums for every (lam, mu) in S_n* x S_n.
Report verify_un_formula(int n, int p);

// The naive (lam, X) -> 1 + lam + X and (lam, eta) -> lam + eta maps collide,
// and superclass supports need not be cover sets of a poset. Uses the
// commutator poset on [7] with a, b the given labels.
Report counterexample_report(int p, int a = 1, int b = 1);

// P_(i) on [n]: representative labeled posets are not in bijection with supercharacters.
Report branch_negative_control(int n, int i, int p);

}  // namespace patternsc
