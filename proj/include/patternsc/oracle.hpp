#pragma once

// Brute-force ground truth: two-sided orbits on n_P and n_P*, supercharacter
// values from orbit sums, inner products, and the supercharacter theory axioms.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "patternsc/fq.hpp"
#include "patternsc/orbits.hpp"
#include "patternsc/poset.hpp"
#include "patternsc/uptri.hpp"

namespace patternsc {

class Oracle {
 public:
  // Uses U_P acting on itself; P need not be normal.
  Oracle(const Poset& poset, int p, std::uint64_t cap = kDefaultGroupCap);

  const Poset& poset() const { return primal_.poset(); }
  int p() const { return primal_.p(); }
  std::uint64_t group_order() const { return primal_.size(); }

  const OrbitSpace& primal_space() const { return primal_; }
  const OrbitSpace& dual_space() const { return dual_; }
  // Two-sided orbits: superclasses (as g - 1) and supercharacter orbits.
  const OrbitTable& superclass_table() const { return classes_; }
  const OrbitTable& dual_table() const { return characters_; }

  std::uint32_t superclass_of(const FqUpperMatrix& x) const { return classes_.orbit_of.at(primal_.key(x)); }
  std::uint32_t dual_orbit_of(const FqUpperMatrix& lam) const { return characters_.orbit_of.at(dual_.key(lam)); }

  // Sorted keys of one dual orbit.
  std::vector<std::uint64_t> dual_orbit_members(std::uint32_t orbit) const;
  // |U_P lam| for any lam in the orbit.
  std::uint64_t left_orbit_size(std::uint32_t orbit) const { return left_sizes_.at(orbit); }
  // |U_P lam intersect lam U_P| by explicit set intersection.
  std::uint64_t left_right_intersection(const FqUpperMatrix& lam) const;

  // counts[t] = #{mu in orbit : mu(x) = t}.
  std::vector<std::int64_t> exponent_histogram(std::uint32_t orbit, std::uint64_t x_key) const;
  // chi(1 + x) for the supercharacter of the given dual orbit; always lies in Z[zeta_p].
  CyclotomicInt value(std::uint32_t orbit, std::uint64_t x_key) const;
  // chi^lam(1 + x) from the orbit-sum formula.
  CyclotomicRat evaluate(const FqUpperMatrix& lam, const FqUpperMatrix& x) const;

 private:
  OrbitSpace primal_;
  OrbitSpace dual_;
  OrbitTable classes_;
  OrbitTable characters_;
  // Dual keys grouped by orbit.
  std::vector<std::uint64_t> member_offsets_;
  std::vector<std::uint64_t> members_;
  std::vector<std::uint64_t> left_sizes_;
};

// Exact <chi^a, chi^b> over U_P, summed per superclass.
CyclotomicRat inner_product(const Oracle& oracle, const FqUpperMatrix& a, const FqUpperMatrix& b);

struct CharacterTable {
  int p = 2;
  std::uint64_t group_order = 1;
  // Dual orbit and superclass id of each row and column.
  std::vector<std::uint32_t> row_orbits;
  std::vector<std::uint32_t> col_classes;
  std::vector<std::uint64_t> class_sizes;
  std::vector<std::vector<CyclotomicInt>> values;

  std::size_t rows() const { return row_orbits.size(); }
  std::size_t cols() const { return col_classes.size(); }
};

// Rows and columns in orbit order (smallest key first) unless given explicitly.
CharacterTable character_table(const Oracle& oracle, int jobs = 1);
CharacterTable character_table(const Oracle& oracle, const std::vector<std::uint32_t>& row_orbits,
                               const std::vector<std::uint32_t>& col_classes, int jobs = 1);

// Inner product of two rows, exact.
CyclotomicRat row_inner_product(const CharacterTable& table, std::size_t a, std::size_t b);

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
  // A negative control: the report only passes if this check fails.
  bool expected_negative = false;
};

struct Report {
  std::string subject;
  std::vector<Check> checks;

  bool passed() const;
  void add(std::string name, bool ok, std::string detail = {}, bool expected_negative = false);
};

struct AxiomOptions {
  // Full constancy scan costs |U_P|^2 |P|; above this budget only two members per superclass are tested.
  std::uint64_t constancy_budget = std::uint64_t{1} << 28;
  // Pairwise orthogonality is skipped for tables with more rows.
  std::size_t orthogonality_rows = 400;
  int jobs = 1;
};

Report verify_supercharacter_theory(const Oracle& oracle, const AxiomOptions& options = {});

}  // namespace patternsc
