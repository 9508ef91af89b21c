#pragma once

// Breadth-first orbit enumeration for the left, right and two-sided actions of a
// pattern group on n_P or n_P*, over a dense key-indexed state table.

#include <cstdint>
#include <utility>
#include <vector>

#include "patternsc/poset.hpp"
#include "patternsc/uptri.hpp"

namespace patternsc {

enum class Side { kLeft, kRight, kTwoSided };

// One elementary generator 1 + c e_ab acting on one side.
struct Generator {
  Side side = Side::kLeft;
  Position pos;
  int coeff = 1;
  // new[target] = old[target] + factor * old[source], slot indices into the domain.
  struct Update {
    int target;
    int source;
    int factor;
  };
  std::vector<Update> updates;
};

// The state space F_p^P for a fixed poset P together with the generators of an
// acting group U_Q (Q given by its positions) on it.
class OrbitSpace {
 public:
  // Throws SupportViolation if some generator moves n_P outside itself.
  OrbitSpace(const Poset& poset, int p, Role role, const PositionSet& acting,
             std::uint64_t cap = kDefaultGroupCap);
  // U_P acting on its own algebra or dual.
  OrbitSpace(const Poset& poset, int p, Role role, std::uint64_t cap = kDefaultGroupCap)
      : OrbitSpace(poset, p, role, poset.relations(), cap) {}

  const Poset& poset() const { return poset_; }
  int p() const { return p_; }
  Role role() const { return role_; }
  std::uint64_t size() const { return size_; }
  int slots() const { return static_cast<int>(positions_.size()); }
  const std::vector<Generator>& generators() const { return generators_; }

  std::uint64_t key(const FqUpperMatrix& m) const;
  FqUpperMatrix matrix(std::uint64_t key) const;
  void decode(std::uint64_t key, std::vector<int>& digits) const;
  std::uint64_t apply(std::uint64_t key, const std::vector<int>& digits, const Generator& gen) const;
  bool acts(const Generator& gen, Side side) const { return side == Side::kTwoSided || gen.side == side; }

  // 1 + c e_ab as a group element of U_n.
  GroupElement element(const Generator& gen) const;

 private:
  Poset poset_;
  int p_;
  Role role_;
  std::uint64_t size_;
  std::vector<Position> positions_;
  std::vector<std::uint64_t> place_;
  std::vector<Generator> generators_;
};

// Partition of the whole space into orbits.
struct OrbitTable {
  Side side = Side::kTwoSided;
  std::vector<std::uint32_t> orbit_of;
  // Smallest key of each orbit, in increasing order.
  std::vector<std::uint64_t> representatives;
  std::vector<std::uint64_t> sizes;
  // Filled only when witnesses were requested.
  std::vector<std::uint64_t> parent;
  std::vector<std::int32_t> parent_generator;

  std::size_t count() const { return representatives.size(); }
  bool has_witnesses() const { return !parent.empty(); }
};

OrbitTable compute_orbits(const OrbitSpace& space, Side side, bool record_witnesses = false);

// Shuffle the generator order before BFS (orbit partition must not change).
OrbitTable compute_orbits_shuffled(const OrbitSpace& space, Side side, std::uint64_t seed);

// Keys of the orbit through key, sorted.
std::vector<std::uint64_t> orbit_keys(const OrbitSpace& space, std::uint64_t key, Side side);

// g, h in U_Q with element = g . representative . h (h = 1 for left, g = 1 for right orbits).
std::pair<GroupElement, GroupElement> orbit_witness(const OrbitSpace& space, const OrbitTable& table,
                                                    std::uint64_t key);

// g, h with to = g . from . h; throws std::invalid_argument if they lie in different orbits.
std::pair<GroupElement, GroupElement> find_orbit_witness(const OrbitSpace& space, std::uint64_t from,
                                                         std::uint64_t to, Side side);

// Apply an element given by the action (matrix or dual, by role).
FqUpperMatrix act(Role role, const GroupElement& g, const FqUpperMatrix& m, const GroupElement& h);

}  // namespace patternsc
