#pragma once

// Superclass and supercharacter indexing of a normal pattern group U_P, the
// bilinear products used to build representatives, and closed-form invariants.

#include <cstdint>
#include <vector>

#include "patternsc/fq.hpp"
#include "patternsc/partitions.hpp"
#include "patternsc/poset.hpp"
#include "patternsc/uptri.hpp"

namespace patternsc {

// A labeled set partition lam in S_P together with X supported on aux_P(lam).
struct SuperclassIndex {
  Poset poset;
  LabeledSetPartition lam;
  FqUpperMatrix x;

  int p() const { return lam.p(); }
};

// A labeled set partition lam in S_P* together with eta supported on coaux_P(lam).
struct SupercharacterIndex {
  Poset poset;
  LabeledSetPartition lam;
  FqUpperMatrix eta;

  int p() const { return lam.p(); }
};

// (X *_lam Y)_il = X_il + Y_il + sum over (j,k) in supp(lam), i<j<k<l, of X_ik Y_jl / lam_jk.
FqUpperMatrix star_primal(const LabeledSetPartition& lam, const FqUpperMatrix& x, const FqUpperMatrix& y);
// (eta *_lam mu)_jk = eta_jk + mu_jk + sum over (i,l) in supp(lam), i<j<k<l, of eta_jl mu_ik / lam_il.
FqUpperMatrix star_dual(const LabeledSetPartition& lam, const FqUpperMatrix& eta, const FqUpperMatrix& mu);

// X_L *_lam X_{R\L}, where X_L is X on auxL and X_{R\L} is X on auxR - auxL.
FqUpperMatrix rep_map_primal(const SuperclassIndex& idx);
FqUpperMatrix rep_map_dual(const SupercharacterIndex& idx);

// lam + R(X), the representative of the superclass (as the matrix g - 1).
FqUpperMatrix superclass_representative(const SuperclassIndex& idx);
// lam + R*(eta), the functional indexing the supercharacter.
FqUpperMatrix supercharacter_functional(const SupercharacterIndex& idx);

// Every matrix supported inside `support`, in key order (last position fastest).
std::vector<FqUpperMatrix> enumerate_supported(const Poset& poset, int p, Role role, const PositionSet& support);

// Index lists in deterministic order (lam first, then X or eta). Throw NotNormal.
std::vector<SuperclassIndex> superclasses(const Poset& poset, int p, int jobs = 1);
std::vector<SupercharacterIndex> supercharacters(const Poset& poset, int p, int jobs = 1);

std::uint64_t superclass_size(const SuperclassIndex& idx);
std::uint64_t degree(const SupercharacterIndex& idx);
std::uint64_t norm_sq(const SupercharacterIndex& idx);
bool is_irreducible(const SupercharacterIndex& idx);

struct Restriction {
  // Restriction of chi^lam from U_n equals q^exponent times the sum of the listed supercharacters.
  int exponent = 0;
  LabeledSetPartition mu;
  std::vector<SupercharacterIndex> terms;
};

// lam_n is a dual labeled set partition over [[n]].
Restriction restrict_from_un(const Poset& poset, const LabeledSetPartition& lam_n);

struct ElementaryFactorization {
  // mu = g lam h with g, h in U_n.
  GroupElement g;
  GroupElement h;
  // g alpha_i h for each arc alpha_i of lam, in arc order.
  std::vector<FqUpperMatrix> factors;
};

ElementaryFactorization elementary_factorization(const SupercharacterIndex& idx,
                                                 std::uint64_t cap = kDefaultGroupCap);

// Closed-form value chi^lam(1 + mu) on U_n for lam in S_n*, mu in S_n.
CyclotomicInt un_supercharacter_value(const LabeledSetPartition& lam, const LabeledSetPartition& mu);

}  // namespace patternsc
