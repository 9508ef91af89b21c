#include "patternsc/poset.hpp"

#include <algorithm>

namespace patternsc {

std::string to_string(Position pos) {
  return "(" + std::to_string(pos.i) + "," + std::to_string(pos.j) + ")";
}

Position position_at(int index) {
  int j = 2;
  while ((j) * (j - 1) / 2 <= index) ++j;
  return Position{index - (j - 1) * (j - 2) / 2 + 1, j};
}

PositionSet::PositionSet(std::initializer_list<Position> positions) {
  for (const auto& pos : positions) insert(pos);
}

void PositionSet::insert(Position pos) {
  if (pos.i < 1 || pos.j <= pos.i || pos.j > kMaxN)
    throw std::invalid_argument("invalid position " + patternsc::to_string(pos));
  bits_.set(position_index(pos.i, pos.j));
}

std::vector<Position> PositionSet::to_vector() const {
  std::vector<Position> out;
  out.reserve(size());
  const int top = max_index();
  for (int i = 1; i < top; ++i)
    for (int j = i + 1; j <= top; ++j)
      if (contains(i, j)) out.push_back({i, j});
  return out;
}

int PositionSet::max_index() const {
  for (int index = kMaxPositions - 1; index >= 0; --index)
    if (bits_.test(index)) return position_at(index).j;
  return 0;
}

std::string PositionSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& pos : to_vector()) {
    if (!first) out += ",";
    out += patternsc::to_string(pos);
    first = false;
  }
  return out + "}";
}

// ---------------------------------------------------------------------------

void require_supported_n(int n) {
  if (n < 0 || n > kMaxN)
    throw std::invalid_argument("n = " + std::to_string(n) + " outside [0, " + std::to_string(kMaxN) + "]");
}

Poset::Poset(int n) : n_(n) { require_supported_n(n); }

Poset::Poset(int n, const PositionSet& relations) : n_(n), relations_(relations) {
  require_supported_n(n);
  if (relations.max_index() > n) throw NotAPoset("relation outside [[" + std::to_string(n) + "]]");
  if (!is_transitively_closed(relations))
    throw NotAPoset("relations " + relations.to_string() + " are not transitively closed");
  positions_ = relations_.to_vector();
}

Poset Poset::from_relations(int n, const std::vector<Position>& relations) {
  PositionSet set;
  for (const auto& pos : relations) set.insert(pos);
  return Poset(n, set);
}

bool is_transitively_closed(const PositionSet& relations) {
  const auto pairs = relations.to_vector();
  for (const auto& a : pairs)
    for (const auto& b : pairs)
      if (a.j == b.i && !relations.contains(a.i, b.j)) return false;
  return true;
}

PositionSet transitive_closure(int n, const PositionSet& relations) {
  PositionSet closed = relations;
  // Process by increasing length so every shorter relation is final when used.
  for (int len = 2; len < n; ++len)
    for (int i = 1; i + len <= n; ++i) {
      const int k = i + len;
      if (closed.contains(i, k)) continue;
      for (int j = i + 1; j < k; ++j)
        if (closed.contains(i, j) && closed.contains(j, k)) {
          closed.insert({i, k});
          break;
        }
    }
  return closed;
}

Poset empty_poset(int n) { return Poset(n); }

Poset full_poset(int n) {
  require_supported_n(n);
  PositionSet set;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) set.insert({i, j});
  return Poset(n, set);
}

Poset commutator_poset(int n) {
  require_supported_n(n);
  PositionSet set;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j) set.insert({i, j});
  return Poset(n, set);
}

Poset t_family(int m, int n2) {
  if (m < 0 || n2 < 0) throw std::invalid_argument("t_family sizes must be non-negative");
  const int n = m + n2;
  require_supported_n(n);
  PositionSet set;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= n; ++j) set.insert({i, j});
  return Poset(n, set);
}

Poset branch_poset(int n, int i) {
  require_supported_n(n);
  if (i < 1 || i > n) throw std::invalid_argument("branch_poset needs 1 <= i <= n");
  PositionSet set;
  for (int a = 2; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) set.insert({a, b});
  for (int b = i + 1; b <= n; ++b) set.insert({1, b});
  return Poset(n, set);
}

PositionSet covers(const Poset& poset) {
  PositionSet out;
  for (const auto& pos : poset.positions()) {
    bool is_cover = true;
    for (int j = pos.i + 1; j < pos.j && is_cover; ++j)
      if (poset.contains(pos.i, j) && poset.contains(j, pos.j)) is_cover = false;
    if (is_cover) out.insert(pos);
  }
  return out;
}

Poset from_covers(int n, const PositionSet& cover_set) {
  require_supported_n(n);
  if (cover_set.max_index() > n) throw NotAPoset("cover outside [[" + std::to_string(n) + "]]");
  Poset poset(n, transitive_closure(n, cover_set));
  if (covers(poset) != cover_set)
    throw NotAPoset("cover set " + cover_set.to_string() + " contains a non-cover of its closure");
  return poset;
}

std::optional<std::array<int, 4>> find_normality_violation(const Poset& poset) {
  const int n = poset.n();
  for (const auto& jk : poset.positions())
    for (int i = 1; i <= jk.i; ++i)
      for (int l = jk.j; l <= n; ++l)
        if (!poset.contains(i, l)) return std::array<int, 4>{i, jk.i, jk.j, l};
  return std::nullopt;
}

bool is_normal(const Poset& poset) { return !find_normality_violation(poset).has_value(); }

void require_normal(const Poset& poset) {
  if (auto w = find_normality_violation(poset)) {
    const auto& [i, j, k, l] = *w;
    throw NotNormal("poset is not normal in [[" + std::to_string(poset.n()) + "]]: (" + std::to_string(j) + "," +
                        std::to_string(k) + ") in P but (" + std::to_string(i) + "," + std::to_string(l) +
                        ") not in P",
                    *w);
  }
}

std::vector<int> boundary_vector(const Poset& poset) {
  require_normal(poset);
  const int n = poset.n();
  std::vector<int> r(n);
  for (int i = 1; i <= n; ++i) {
    int ri = n;
    while (ri > i && poset.contains(i, ri)) --ri;
    r[i - 1] = ri;
  }
  return r;
}

Poset poset_from_boundary(const std::vector<int>& boundary) {
  const int n = static_cast<int>(boundary.size());
  require_supported_n(n);
  PositionSet set;
  for (int i = 1; i <= n; ++i) {
    const int ri = boundary[i - 1];
    if (ri < i || ri > n || (i > 1 && ri < boundary[i - 2]))
      throw std::invalid_argument("boundary vector must be weakly increasing with i <= r_i <= n");
    for (int j = ri + 1; j <= n; ++j) set.insert({i, j});
  }
  return Poset(n, set);
}

namespace {

void extend_boundaries(int n, std::vector<int>& prefix, std::vector<Poset>& out) {
  const int i = static_cast<int>(prefix.size()) + 1;
  if (i > n) {
    out.push_back(poset_from_boundary(prefix));
    return;
  }
  const int lo = std::max(i, prefix.empty() ? 1 : prefix.back());
  for (int ri = lo; ri <= n; ++ri) {
    prefix.push_back(ri);
    extend_boundaries(n, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Poset> enumerate_normal(int n, int cap) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  if (n > cap || n > kMaxN)
    throw std::invalid_argument("enumerate_normal: n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  std::vector<Poset> out;
  out.reserve(catalan(n));
  std::vector<int> prefix;
  extend_boundaries(n, prefix, out);
  return out;
}

Poset dyck_index_poset(int n, std::size_t index) {
  auto all = enumerate_normal(n, kMaxN);
  if (index >= all.size())
    throw std::out_of_range("Dyck index " + std::to_string(index) + " out of range for n = " + std::to_string(n));
  return all[index];
}

std::size_t dyck_index(const Poset& poset) {
  const auto all = enumerate_normal(poset.n(), kMaxN);
  auto it = std::find(all.begin(), all.end(), poset);
  if (it == all.end()) throw std::invalid_argument("poset is not normal");
  return static_cast<std::size_t>(it - all.begin());
}

std::uint64_t catalan(int n) {
  std::uint64_t c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

std::vector<Poset> enumerate_all_posets(int n) {
  if (n < 0 || n > 6) throw std::invalid_argument("enumerate_all_posets supports n <= 6");
  std::vector<Position> slots;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) slots.push_back({i, j});
  std::vector<Poset> out;
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    PositionSet set;
    for (std::size_t b = 0; b < slots.size(); ++b)
      if (mask >> b & 1) set.insert(slots[b]);
    if (is_transitively_closed(set)) out.emplace_back(n, set);
  }
  return out;
}

}  // namespace patternsc
