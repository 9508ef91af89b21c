#pragma once

// Strictly upper-triangular matrices over F_p with a support constraint, the
// unipotent group elements 1 + X, and the left/right actions on n_P and n_P*.

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "patternsc/poset.hpp"

namespace patternsc {

// Primal matrices are elements X of n_P; dual matrices are functionals on n_P
// identified with the matrix of their values on the e_ij.
enum class Role { kPrimal, kDual };

std::string to_string(Role role);
Role role_from_string(const std::string& name);

class SupportViolation : public std::domain_error {
 public:
  SupportViolation(const std::string& what, Position pos) : std::domain_error(what), position_(pos) {}
  const Position& position() const { return position_; }

 private:
  Position position_;
};

class RoleMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Entry {
  Position pos;
  int value = 0;
  friend bool operator==(const Entry&, const Entry&) = default;
};

class FqUpperMatrix {
 public:
  FqUpperMatrix(int n, int p, const PositionSet& domain, Role role);
  FqUpperMatrix(const Poset& poset, int p, Role role) : FqUpperMatrix(poset.n(), p, poset.relations(), role) {}

  static FqUpperMatrix from_entries(const Poset& poset, int p, Role role, const std::vector<Entry>& entries);

  int n() const { return n_; }
  int p() const { return p_; }
  Role role() const { return role_; }
  const PositionSet& domain() const { return domain_; }

  int get(int i, int j) const { return i < j ? digits_[position_index(i, j)] : 0; }
  int get(Position pos) const { return get(pos.i, pos.j); }
  // Throws SupportViolation when a nonzero value lands outside the domain.
  void set(int i, int j, long long value);
  void set(Position pos, long long value) { set(pos.i, pos.j, value); }
  void add(Position pos, long long value) { set(pos, get(pos) + value); }

  PositionSet support() const;
  bool is_zero() const;
  // Nonzero entries in row-major order.
  std::vector<Entry> entries() const;

  // Same entries with a different domain; throws SupportViolation if an entry falls outside it.
  FqUpperMatrix with_domain(const PositionSet& domain) const;
  // Entries outside the given set are dropped (kept domain).
  FqUpperMatrix restricted_to(const PositionSet& positions) const;
  FqUpperMatrix with_role(Role role) const;

  // Base-p integer over the domain positions in row-major order, first position most significant.
  std::uint64_t key() const;
  static FqUpperMatrix from_key(int n, int p, const PositionSet& domain, Role role, std::uint64_t key);

  FqUpperMatrix operator+(const FqUpperMatrix& other) const;
  FqUpperMatrix operator-(const FqUpperMatrix& other) const;
  FqUpperMatrix scaled(long long factor) const;

  friend bool operator==(const FqUpperMatrix& a, const FqUpperMatrix& b);
  // Row-major lexicographic comparison of entries; matrices must share n.
  friend std::strong_ordering operator<=>(const FqUpperMatrix& a, const FqUpperMatrix& b);

  std::string to_string() const;

 private:
  void require_compatible(const FqUpperMatrix& other) const;

  int n_;
  int p_;
  Role role_;
  PositionSet domain_;
  std::array<std::uint8_t, kMaxPositions> digits_{};
};

// g = 1 + X with X strictly upper-triangular.
class GroupElement {
 public:
  explicit GroupElement(FqUpperMatrix off_diag);
  static GroupElement identity(int n, int p, const PositionSet& domain);
  static GroupElement identity(const Poset& poset, int p) { return identity(poset.n(), p, poset.relations()); }
  // 1 + c e_ab in U_n.
  static GroupElement elementary(int n, int p, Position pos, long long c);

  int n() const { return off_diag_.n(); }
  int p() const { return off_diag_.p(); }
  const FqUpperMatrix& off_diag() const { return off_diag_; }
  bool is_identity() const { return off_diag_.is_zero(); }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  FqUpperMatrix off_diag_;
};

// The result's domain is the transitive closure of the factors' domains.
GroupElement mul(const GroupElement& g, const GroupElement& h);
GroupElement inv(const GroupElement& g);

// g X h as a matrix product, required to stay in the domain of X.
FqUpperMatrix act_matrix(const GroupElement& g, const FqUpperMatrix& x, const GroupElement& h);

// The functional g lam h: X -> lam(g^{-1} X h^{-1}), computed as the projection of
// transpose(g^{-1}) lam transpose(h^{-1}) onto the domain of lam.
FqUpperMatrix act_dual(const GroupElement& g, const FqUpperMatrix& lam, const GroupElement& h);

// Same actions evaluated entry by entry from the one-sided sum formulas.
FqUpperMatrix act_dual_left_by_entries(const GroupElement& g, const FqUpperMatrix& lam);
FqUpperMatrix act_dual_right_by_entries(const FqUpperMatrix& lam, const GroupElement& h);

// lam(X) = sum of lam_ij X_ij.
int pairing(const FqUpperMatrix& lam, const FqUpperMatrix& x);

// Every element of the domain, in key order. Throws std::length_error past the cap.
inline constexpr std::uint64_t kDefaultGroupCap = std::uint64_t{1} << 20;
std::vector<FqUpperMatrix> enumerate_space(const Poset& poset, int p, Role role,
                                           std::uint64_t cap = kDefaultGroupCap);
std::vector<GroupElement> enumerate_group(const Poset& poset, int p, std::uint64_t cap = kDefaultGroupCap);
// p^|P|, throwing std::length_error when it exceeds cap.
std::uint64_t space_size(const Poset& poset, int p, std::uint64_t cap = kDefaultGroupCap);

}  // namespace patternsc
