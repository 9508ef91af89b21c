#pragma once

// Posets on [n] stored as subsets of the strictly upper-triangular positions [[n]].

#include <array>
#include <bitset>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace patternsc {

inline constexpr int kMaxN = 16;
inline constexpr int kMaxPositions = kMaxN * (kMaxN - 1) / 2;

// A pair (i, j) with 1 <= i < j. Ordered row-major: by i, then j.
struct Position {
  int i = 0;
  int j = 0;
  int length() const { return j - i; }
  friend auto operator<=>(const Position&, const Position&) = default;
};

std::string to_string(Position pos);

// Dense index of (i, j), independent of n: (j-1)(j-2)/2 + (i-1).
inline int position_index(int i, int j) { return (j - 1) * (j - 2) / 2 + (i - 1); }
Position position_at(int index);

class NotAPoset : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotNormal : public std::invalid_argument {
 public:
  NotNormal(const std::string& what, std::array<int, 4> witness)
      : std::invalid_argument(what), witness_(witness) {}
  // (i, j, k, l) with (j, k) in P but (i, l) not in P.
  const std::array<int, 4>& witness() const { return witness_; }

 private:
  std::array<int, 4> witness_;
};

// Set of positions of [[n]].
class PositionSet {
 public:
  using Bits = std::bitset<kMaxPositions>;

  PositionSet() = default;
  explicit PositionSet(Bits bits) : bits_(bits) {}
  PositionSet(std::initializer_list<Position> positions);

  bool contains(int i, int j) const { return i < j && bits_.test(position_index(i, j)); }
  bool contains(Position pos) const { return contains(pos.i, pos.j); }
  void insert(Position pos);
  void erase(Position pos) { bits_.reset(position_index(pos.i, pos.j)); }

  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  const Bits& bits() const { return bits_; }

  // Positions in row-major order.
  std::vector<Position> to_vector() const;
  // Largest column index used, 0 if empty.
  int max_index() const;

  bool is_subset_of(const PositionSet& other) const { return (bits_ & ~other.bits_).none(); }

  PositionSet operator|(const PositionSet& o) const { return PositionSet(bits_ | o.bits_); }
  PositionSet operator&(const PositionSet& o) const { return PositionSet(bits_ & o.bits_); }
  PositionSet operator-(const PositionSet& o) const { return PositionSet(bits_ & ~o.bits_); }
  PositionSet& operator|=(const PositionSet& o) { bits_ |= o.bits_; return *this; }
  friend bool operator==(const PositionSet&, const PositionSet&) = default;

  // "{(1,2),(1,3)}"
  std::string to_string() const;

 private:
  Bits bits_;
};

class Poset {
 public:
  // The empty poset on [n].
  explicit Poset(int n = 0);
  // Throws NotAPoset unless relations lie in [[n]] and are transitively closed.
  Poset(int n, const PositionSet& relations);
  static Poset from_relations(int n, const std::vector<Position>& relations);

  int n() const { return n_; }
  const PositionSet& relations() const { return relations_; }
  std::size_t size() const { return relations_.size(); }
  bool contains(int i, int j) const { return relations_.contains(i, j); }
  bool contains(Position pos) const { return relations_.contains(pos); }
  // Row-major relation list, cached.
  const std::vector<Position>& positions() const { return positions_; }

  friend bool operator==(const Poset& a, const Poset& b) { return a.n_ == b.n_ && a.relations_ == b.relations_; }

 private:
  int n_;
  PositionSet relations_;
  std::vector<Position> positions_;
};

void require_supported_n(int n);

PositionSet transitive_closure(int n, const PositionSet& relations);
bool is_transitively_closed(const PositionSet& relations);

Poset empty_poset(int n);
Poset full_poset(int n);
// {(i, j) : j - i >= 2}, the commutator subgroup of U_n.
Poset commutator_poset(int n);
// T(m, n2): [[m]] together with every (i, j), i <= m < j <= m + n2.
Poset t_family(int m, int n2);
// P_(i): every (a, b) with 2 <= a < b <= n, plus (1, b) for b >= i + 1.
Poset branch_poset(int n, int i);

PositionSet covers(const Poset& poset);
// Throws NotAPoset if some element of cover_set is not a cover of its closure.
Poset from_covers(int n, const PositionSet& cover_set);

std::optional<std::array<int, 4>> find_normality_violation(const Poset& poset);
bool is_normal(const Poset& poset);
void require_normal(const Poset& poset);

// Weakly increasing boundary r_1 <= ... <= r_n with i <= r_i <= n such that
// (i, j) in P iff j > r_i. Defined only for normal posets.
std::vector<int> boundary_vector(const Poset& poset);
Poset poset_from_boundary(const std::vector<int>& boundary);

inline constexpr int kDefaultEnumerateCap = 12;

// All normal posets on [n] in lexicographic order of the boundary vector; the
// position in this sequence is the Dyck index.
std::vector<Poset> enumerate_normal(int n, int cap = kDefaultEnumerateCap);
Poset dyck_index_poset(int n, std::size_t index);
std::size_t dyck_index(const Poset& poset);
std::uint64_t catalan(int n);

// Every poset on [n] (transitively closed subsets of [[n]]), n <= 6.
std::vector<Poset> enumerate_all_posets(int n);

}  // namespace patternsc
