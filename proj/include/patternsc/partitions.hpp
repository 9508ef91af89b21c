#pragma once

// F_p-labeled set partitions inside a poset and the adjacent / auxiliary
// position sets attached to them.

#include <cstdint>
#include <string>
#include <vector>

#include "patternsc/poset.hpp"
#include "patternsc/uptri.hpp"

namespace patternsc {

// A matrix with at most one nonzero entry in each row and each column.
class LabeledSetPartition {
 public:
  // Throws std::invalid_argument if the row/column condition fails.
  explicit LabeledSetPartition(FqUpperMatrix matrix);
  static LabeledSetPartition zero(const Poset& poset, int p, Role role) {
    return LabeledSetPartition(FqUpperMatrix(poset, p, role));
  }

  const FqUpperMatrix& matrix() const { return matrix_; }
  Role role() const { return matrix_.role(); }
  int n() const { return matrix_.n(); }
  int p() const { return matrix_.p(); }
  PositionSet support() const { return matrix_.support(); }
  std::vector<Entry> arcs() const { return matrix_.entries(); }
  bool is_zero() const { return matrix_.is_zero(); }

  friend bool operator==(const LabeledSetPartition&, const LabeledSetPartition&) = default;

 private:
  FqUpperMatrix matrix_;
};

bool is_set_partition_support(const PositionSet& support);

inline constexpr std::uint64_t kDefaultPartitionCap = std::uint64_t{1} << 24;

// Every labeled set partition with support in P, ordered by support (as a
// row-major position sequence) and then by label vector.
std::vector<LabeledSetPartition> enumerate_partitions(const Poset& poset, int p, Role role,
                                                      std::uint64_t cap = kDefaultPartitionCap);

struct PositionSets {
  PositionSet adjL_P, adjR_P, adj_P;
  PositionSet adjL_full, adjR_full, adj_full;
  PositionSet auxL, auxR, aux;
  PositionSet coadjL_P, coadjR_P, coadj_P;
  PositionSet coadjL_full, coadjR_full, coadj_full;
  PositionSet coauxL, coauxR, coaux;
};

// All adjacent / auxiliary sets of lam with respect to P and [[n]].
PositionSets position_sets(const Poset& poset, const LabeledSetPartition& lam);

// No (i,k), (j,l) in the support with i < j < k < l.
bool is_noncrossing(const LabeledSetPartition& lam);

// Arc notation: blocks separated by '|', labels in parentheses, e.g. "1(1)4(2)6|2(3)5".
// Singleton blocks are omitted; the zero partition prints as "0".
std::string to_arc_notation(const LabeledSetPartition& lam);
LabeledSetPartition parse_arc_notation(const std::string& text, const Poset& poset, int p, Role role);

}  // namespace patternsc
