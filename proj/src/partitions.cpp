#include "patternsc/partitions.hpp"

#include <cctype>
#include <map>
#include <stdexcept>

#include "patternsc/fq.hpp"

namespace patternsc {

bool is_set_partition_support(const PositionSet& support) {
  std::uint32_t rows = 0;
  std::uint32_t cols = 0;
  for (const auto& pos : support.to_vector()) {
    if (rows >> pos.i & 1U || cols >> pos.j & 1U) return false;
    rows |= 1U << pos.i;
    cols |= 1U << pos.j;
  }
  return true;
}

LabeledSetPartition::LabeledSetPartition(FqUpperMatrix matrix) : matrix_(std::move(matrix)) {
  if (!is_set_partition_support(matrix_.support()))
    throw std::invalid_argument("matrix " + matrix_.to_string() + " has two nonzero entries in a row or column");
}

namespace {

void extend_supports(const std::vector<Position>& slots, std::size_t start, std::uint32_t rows, std::uint32_t cols,
                     std::vector<Position>& chosen, std::vector<std::vector<Position>>& out) {
  out.push_back(chosen);
  for (std::size_t s = start; s < slots.size(); ++s) {
    const auto& pos = slots[s];
    if (rows >> pos.i & 1U || cols >> pos.j & 1U) continue;
    chosen.push_back(pos);
    extend_supports(slots, s + 1, rows | 1U << pos.i, cols | 1U << pos.j, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<LabeledSetPartition> enumerate_partitions(const Poset& poset, int p, Role role, std::uint64_t cap) {
  std::vector<std::vector<Position>> supports;
  std::vector<Position> chosen;
  extend_supports(poset.positions(), 0, 0, 0, chosen, supports);

  std::vector<LabeledSetPartition> out;
  for (const auto& support : supports) {
    const std::size_t k = support.size();
    std::vector<int> labels(k, 1);
    while (true) {
      if (out.size() >= cap) throw std::length_error("partition enumeration exceeds cap");
      FqUpperMatrix m(poset, p, role);
      for (std::size_t t = 0; t < k; ++t) m.set(support[t], labels[t]);
      out.emplace_back(std::move(m));
      // Next label vector in lexicographic order, last coordinate fastest.
      std::size_t t = k;
      while (t > 0 && labels[t - 1] == p - 1) labels[--t] = 1;
      if (t == 0) break;
      ++labels[t - 1];
    }
  }
  return out;
}

PositionSets position_sets(const Poset& poset, const LabeledSetPartition& lam) {
  PositionSets s;
  const int n = poset.n();
  for (const auto& arc : lam.arcs()) {
    const int a = arc.pos.i;
    const int b = arc.pos.j;
    // Superclass side: rows above the column of the arc, columns right of its row.
    for (int i = 1; i < a; ++i) {
      s.adjL_full.insert({i, b});
      if (poset.contains(i, a)) s.adjL_P.insert({i, b});
    }
    for (int k = b + 1; k <= n; ++k) {
      s.adjR_full.insert({a, k});
      if (poset.contains(b, k)) s.adjR_P.insert({a, k});
    }
    // Supercharacter side: (j,b) below the arc, (a,j) left of it.
    for (int j = a + 1; j < b; ++j) {
      if (poset.contains(j, b)) {
        s.coadjL_full.insert({j, b});
        if (poset.contains(a, j)) s.coadjL_P.insert({j, b});
      }
      if (poset.contains(a, j)) {
        s.coadjR_full.insert({a, j});
        if (poset.contains(j, b)) s.coadjR_P.insert({a, j});
      }
    }
  }
  s.adj_P = s.adjL_P | s.adjR_P;
  s.adj_full = s.adjL_full | s.adjR_full;
  s.auxL = s.adjL_full - s.adjL_P;
  s.auxR = s.adjR_full - s.adjR_P;
  s.aux = s.adj_full - s.adj_P;
  s.coadj_P = s.coadjL_P | s.coadjR_P;
  s.coadj_full = s.coadjL_full | s.coadjR_full;
  s.coauxL = s.coadjL_full - s.coadjL_P;
  s.coauxR = s.coadjR_full - s.coadjR_P;
  s.coaux = s.coadj_full - s.coadj_P;
  return s;
}

bool is_noncrossing(const LabeledSetPartition& lam) {
  const auto arcs = lam.arcs();
  for (const auto& x : arcs)
    for (const auto& y : arcs)
      if (x.pos.i < y.pos.i && y.pos.i < x.pos.j && x.pos.j < y.pos.j) return false;
  return true;
}

std::string to_arc_notation(const LabeledSetPartition& lam) {
  const auto arcs = lam.arcs();
  if (arcs.empty()) return "0";
  std::map<int, Entry> from;
  std::vector<bool> has_incoming(lam.n() + 1, false);
  for (const auto& e : arcs) {
    from[e.pos.i] = e;
    has_incoming[e.pos.j] = true;
  }
  std::string out;
  for (const auto& entry : from) {
    const int start = entry.first;
    if (has_incoming[start]) continue;
    if (!out.empty()) out += "|";
    int cur = start;
    out += std::to_string(cur);
    for (auto it = from.find(cur); it != from.end(); it = from.find(cur)) {
      out += "(" + std::to_string(it->second.value) + ")" + std::to_string(it->second.pos.j);
      cur = it->second.pos.j;
    }
  }
  return out;
}

LabeledSetPartition parse_arc_notation(const std::string& text, const Poset& poset, int p, Role role) {
  FqUpperMatrix m(poset, p, role);
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("bad arc notation '" + text + "': " + why);
  };
  std::size_t at = 0;
  auto read_int = [&]() {
    if (at >= text.size() || !std::isdigit(static_cast<unsigned char>(text[at]))) fail("expected a number");
    int v = 0;
    while (at < text.size() && std::isdigit(static_cast<unsigned char>(text[at]))) v = v * 10 + (text[at++] - '0');
    return v;
  };
  if (text == "0" || text.empty()) return LabeledSetPartition(m);
  while (at < text.size()) {
    int cur = read_int();
    while (at < text.size() && text[at] != '|') {
      int label = 1;
      if (text[at] == '(') {
        ++at;
        label = read_int();
        if (at >= text.size() || text[at] != ')') fail("unclosed label");
        ++at;
      } else if (text[at] == '-') {
        ++at;
      } else {
        fail("unexpected character");
      }
      const int next = read_int();
      if (next <= cur || next > poset.n()) fail("arcs must go up within [n]");
      if (mod_reduce(label, p) == 0) fail("labels must be nonzero");
      m.set(cur, next, label);
      cur = next;
    }
    if (at < text.size()) ++at;
  }
  return LabeledSetPartition(m);
}

}  // namespace patternsc
