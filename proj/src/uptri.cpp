#include "patternsc/uptri.hpp"

#include "patternsc/fq.hpp"

namespace patternsc {

namespace {

// Full n x n matrix over F_p, including the diagonal.
struct Dense {
  int n;
  int p;
  std::array<std::array<int, kMaxN>, kMaxN> a{};

  Dense(int n_, int p_) : n(n_), p(p_) {}

  int& at(int i, int j) { return a[i - 1][j - 1]; }
  int at(int i, int j) const { return a[i - 1][j - 1]; }

  static Dense unipotent(const FqUpperMatrix& x) {
    Dense d = strict(x);
    for (int i = 1; i <= x.n(); ++i) d.at(i, i) = 1;
    return d;
  }

  static Dense strict(const FqUpperMatrix& x) {
    Dense d(x.n(), x.p());
    for (const auto& e : x.entries()) d.at(e.pos.i, e.pos.j) = e.value;
    return d;
  }

  Dense transposed() const {
    Dense t(n, p);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend Dense operator*(const Dense& x, const Dense& y) {
    Dense out(x.n, x.p);
    for (int i = 1; i <= x.n; ++i)
      for (int k = 1; k <= x.n; ++k) {
        const int xik = x.at(i, k);
        if (xik == 0) continue;
        for (int j = 1; j <= x.n; ++j) out.at(i, j) += xik * y.at(k, j);
      }
    for (int i = 1; i <= x.n; ++i)
      for (int j = 1; j <= x.n; ++j) out.at(i, j) = mod_reduce(out.at(i, j), x.p);
    return out;
  }
};

void require_same_shape(int n1, int p1, int n2, int p2) {
  if (n1 != n2) throw std::invalid_argument("matrix dimension mismatch");
  if (p1 != p2) throw std::invalid_argument("matrix field mismatch");
}

}  // namespace

std::string to_string(Role role) { return role == Role::kPrimal ? "primal" : "dual"; }

Role role_from_string(const std::string& name) {
  if (name == "primal") return Role::kPrimal;
  if (name == "dual") return Role::kDual;
  throw std::invalid_argument("unknown role '" + name + "'");
}

FqUpperMatrix::FqUpperMatrix(int n, int p, const PositionSet& domain, Role role)
    : n_(n), p_(p), role_(role), domain_(domain) {
  require_supported_n(n);
  require_supported_prime(p);
  if (domain.max_index() > n) throw std::invalid_argument("matrix domain exceeds [[n]]");
}

FqUpperMatrix FqUpperMatrix::from_entries(const Poset& poset, int p, Role role, const std::vector<Entry>& entries) {
  FqUpperMatrix m(poset, p, role);
  for (const auto& e : entries) m.add(e.pos, e.value);
  return m;
}

void FqUpperMatrix::set(int i, int j, long long value) {
  if (i < 1 || j <= i || j > n_) throw std::out_of_range("position (" + std::to_string(i) + "," + std::to_string(j) + ") outside [[n]]");
  const int v = mod_reduce(value, p_);
  if (v != 0 && !domain_.contains(i, j))
    throw SupportViolation("entry at (" + std::to_string(i) + "," + std::to_string(j) + ") outside the support poset",
                           Position{i, j});
  digits_[position_index(i, j)] = static_cast<std::uint8_t>(v);
}

PositionSet FqUpperMatrix::support() const {
  PositionSet out;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (get(i, j) != 0) out.insert({i, j});
  return out;
}

bool FqUpperMatrix::is_zero() const {
  for (auto d : digits_)
    if (d != 0) return false;
  return true;
}

std::vector<Entry> FqUpperMatrix::entries() const {
  std::vector<Entry> out;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (int v = get(i, j); v != 0) out.push_back({{i, j}, v});
  return out;
}

FqUpperMatrix FqUpperMatrix::with_domain(const PositionSet& domain) const {
  FqUpperMatrix out(n_, p_, domain, role_);
  for (const auto& e : entries()) out.set(e.pos, e.value);
  return out;
}

FqUpperMatrix FqUpperMatrix::restricted_to(const PositionSet& positions) const {
  FqUpperMatrix out(n_, p_, domain_, role_);
  for (const auto& e : entries())
    if (positions.contains(e.pos)) out.set(e.pos, e.value);
  return out;
}

FqUpperMatrix FqUpperMatrix::with_role(Role role) const {
  FqUpperMatrix out = *this;
  out.role_ = role;
  return out;
}

std::uint64_t FqUpperMatrix::key() const {
  std::uint64_t k = 0;
  for (const auto& pos : domain_.to_vector()) {
    if (__builtin_mul_overflow(k, static_cast<std::uint64_t>(p_), &k))
      throw std::overflow_error("matrix key does not fit in 64 bits");
    k += get(pos);
  }
  return k;
}

FqUpperMatrix FqUpperMatrix::from_key(int n, int p, const PositionSet& domain, Role role, std::uint64_t key) {
  FqUpperMatrix out(n, p, domain, role);
  const auto positions = domain.to_vector();
  for (auto it = positions.rbegin(); it != positions.rend(); ++it) {
    out.set(*it, static_cast<long long>(key % p));
    key /= p;
  }
  if (key != 0) throw std::out_of_range("matrix key out of range");
  return out;
}

void FqUpperMatrix::require_compatible(const FqUpperMatrix& other) const {
  require_same_shape(n_, p_, other.n_, other.p_);
  if (role_ != other.role_) throw RoleMismatch("cannot combine primal and dual matrices");
}

FqUpperMatrix FqUpperMatrix::operator+(const FqUpperMatrix& other) const {
  require_compatible(other);
  FqUpperMatrix out(n_, p_, domain_ | other.domain_, role_);
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j) out.set(i, j, get(i, j) + other.get(i, j));
  return out;
}

FqUpperMatrix FqUpperMatrix::operator-(const FqUpperMatrix& other) const { return *this + other.scaled(-1); }

FqUpperMatrix FqUpperMatrix::scaled(long long factor) const {
  FqUpperMatrix out(n_, p_, domain_, role_);
  for (const auto& e : entries()) out.set(e.pos, e.value * factor);
  return out;
}

bool operator==(const FqUpperMatrix& a, const FqUpperMatrix& b) {
  return a.n_ == b.n_ && a.p_ == b.p_ && a.role_ == b.role_ && a.digits_ == b.digits_;
}

std::strong_ordering operator<=>(const FqUpperMatrix& a, const FqUpperMatrix& b) {
  for (int i = 1; i <= a.n_; ++i)
    for (int j = i + 1; j <= a.n_; ++j)
      if (auto c = a.get(i, j) <=> b.get(i, j); c != 0) return c;
  return a.n_ <=> b.n_;
}

std::string FqUpperMatrix::to_string() const {
  std::string out;
  for (const auto& e : entries()) {
    if (!out.empty()) out += " + ";
    if (e.value != 1) out += std::to_string(e.value) + "*";
    out += role_ == Role::kDual ? "e*" : "e";
    out += std::to_string(e.pos.i) + "_" + std::to_string(e.pos.j);
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------

GroupElement::GroupElement(FqUpperMatrix off_diag) : off_diag_(std::move(off_diag)) {
  if (off_diag_.role() != Role::kPrimal) throw RoleMismatch("group elements are built from primal matrices");
}

GroupElement GroupElement::identity(int n, int p, const PositionSet& domain) {
  return GroupElement(FqUpperMatrix(n, p, domain, Role::kPrimal));
}

GroupElement GroupElement::elementary(int n, int p, Position pos, long long c) {
  FqUpperMatrix x(full_poset(n), p, Role::kPrimal);
  x.set(pos, c);
  return GroupElement(x);
}

namespace {

FqUpperMatrix strict_part(const Dense& d, const PositionSet& domain) {
  FqUpperMatrix out(d.n, d.p, domain, Role::kPrimal);
  for (int i = 1; i <= d.n; ++i)
    for (int j = i + 1; j <= d.n; ++j) out.set(i, j, d.at(i, j));
  return out;
}

}  // namespace

GroupElement mul(const GroupElement& g, const GroupElement& h) {
  require_same_shape(g.n(), g.p(), h.n(), h.p());
  const PositionSet domain = transitive_closure(g.n(), g.off_diag().domain() | h.off_diag().domain());
  return GroupElement(strict_part(Dense::unipotent(g.off_diag()) * Dense::unipotent(h.off_diag()), domain));
}

GroupElement inv(const GroupElement& g) {
  // (1 + X)^{-1} = sum_{k < n} (-X)^k
  const Dense neg_x = Dense::strict(g.off_diag().scaled(-1));
  Dense term = Dense::unipotent(FqUpperMatrix(g.n(), g.p(), PositionSet{}, Role::kPrimal));
  Dense sum = term;
  for (int k = 1; k < g.n(); ++k) {
    term = term * neg_x;
    for (int i = 1; i <= g.n(); ++i)
      for (int j = 1; j <= g.n(); ++j) sum.at(i, j) = mod_reduce(sum.at(i, j) + term.at(i, j), g.p());
  }
  return GroupElement(strict_part(sum, g.off_diag().domain()));
}

FqUpperMatrix act_matrix(const GroupElement& g, const FqUpperMatrix& x, const GroupElement& h) {
  if (x.role() != Role::kPrimal) throw RoleMismatch("act_matrix expects a primal matrix");
  require_same_shape(g.n(), g.p(), x.n(), x.p());
  require_same_shape(h.n(), h.p(), x.n(), x.p());
  const Dense product = Dense::unipotent(g.off_diag()) * Dense::strict(x) * Dense::unipotent(h.off_diag());
  FqUpperMatrix out(x.n(), x.p(), x.domain(), Role::kPrimal);
  for (int i = 1; i <= x.n(); ++i)
    for (int j = i + 1; j <= x.n(); ++j) out.set(i, j, product.at(i, j));
  return out;
}

FqUpperMatrix act_dual(const GroupElement& g, const FqUpperMatrix& lam, const GroupElement& h) {
  if (lam.role() != Role::kDual) throw RoleMismatch("act_dual expects a dual matrix");
  require_same_shape(g.n(), g.p(), lam.n(), lam.p());
  require_same_shape(h.n(), h.p(), lam.n(), lam.p());
  const Dense gi = Dense::unipotent(inv(g).off_diag()).transposed();
  const Dense hi = Dense::unipotent(inv(h).off_diag()).transposed();
  const Dense product = gi * Dense::strict(lam) * hi;
  FqUpperMatrix out(lam.n(), lam.p(), lam.domain(), Role::kDual);
  for (const auto& pos : lam.domain().to_vector()) out.set(pos, product.at(pos.i, pos.j));
  return out;
}

FqUpperMatrix act_dual_left_by_entries(const GroupElement& g, const FqUpperMatrix& lam) {
  // (g lam)_jk = lam_jk + sum_{i<j} (g^{-1})_ij lam_ik
  const FqUpperMatrix gi = inv(g).off_diag();
  FqUpperMatrix out(lam.n(), lam.p(), lam.domain(), Role::kDual);
  for (const auto& jk : lam.domain().to_vector()) {
    long long value = lam.get(jk);
    for (int i = 1; i < jk.i; ++i) value += static_cast<long long>(gi.get(i, jk.i)) * lam.get(i, jk.j);
    out.set(jk, value);
  }
  return out;
}

FqUpperMatrix act_dual_right_by_entries(const FqUpperMatrix& lam, const GroupElement& h) {
  // (lam h)_ij = lam_ij + sum_{k>j} (h^{-1})_jk lam_ik
  const FqUpperMatrix hi = inv(h).off_diag();
  FqUpperMatrix out(lam.n(), lam.p(), lam.domain(), Role::kDual);
  for (const auto& ij : lam.domain().to_vector()) {
    long long value = lam.get(ij);
    for (int k = ij.j + 1; k <= lam.n(); ++k) value += static_cast<long long>(hi.get(ij.j, k)) * lam.get(ij.i, k);
    out.set(ij, value);
  }
  return out;
}

int pairing(const FqUpperMatrix& lam, const FqUpperMatrix& x) {
  if (lam.role() != Role::kDual || x.role() != Role::kPrimal)
    throw RoleMismatch("pairing expects a dual functional and a primal matrix");
  require_same_shape(lam.n(), lam.p(), x.n(), x.p());
  if (lam.domain() != x.domain()) throw std::invalid_argument("pairing over different posets");
  long long sum = 0;
  for (const auto& e : lam.entries()) sum += static_cast<long long>(e.value) * x.get(e.pos);
  return mod_reduce(sum, lam.p());
}

std::uint64_t space_size(const Poset& poset, int p, std::uint64_t cap) {
  std::uint64_t size = 1;
  for (std::size_t k = 0; k < poset.size(); ++k) {
    size *= static_cast<std::uint64_t>(p);
    if (size > cap)
      throw std::length_error("group order " + std::to_string(p) + "^" + std::to_string(poset.size()) +
                              " exceeds cap " + std::to_string(cap));
  }
  return size;
}

std::vector<FqUpperMatrix> enumerate_space(const Poset& poset, int p, Role role, std::uint64_t cap) {
  const std::uint64_t size = space_size(poset, p, cap);
  std::vector<FqUpperMatrix> out;
  out.reserve(size);
  for (std::uint64_t key = 0; key < size; ++key)
    out.push_back(FqUpperMatrix::from_key(poset.n(), p, poset.relations(), role, key));
  return out;
}

std::vector<GroupElement> enumerate_group(const Poset& poset, int p, std::uint64_t cap) {
  std::vector<GroupElement> out;
  for (auto& x : enumerate_space(poset, p, Role::kPrimal, cap)) out.emplace_back(std::move(x));
  return out;
}

}  // namespace patternsc
