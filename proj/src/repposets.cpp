#include "patternsc/repposets.hpp"

#include <algorithm>
#include <stdexcept>

#include "patternsc/parallel.hpp"

namespace patternsc {

LabeledPoset make_labeled_poset(const Poset& poset, const FqUpperMatrix& labels) {
  if (labels.support() != covers(poset))
    throw std::invalid_argument("labels must be nonzero exactly on the covers of the poset");
  return LabeledPoset{poset, labels.with_domain(full_poset(poset.n()).relations()).with_role(Role::kDual)};
}

bool is_independent(const PositionSet& cover_subset) { return is_set_partition_support(cover_subset); }

std::vector<int> length_vector(const PositionSet& cover_subset) {
  std::vector<int> out;
  for (const auto& pos : cover_subset.to_vector()) out.push_back(pos.length());
  std::sort(out.rbegin(), out.rend());
  return out;
}

PositionSet highest_cover_set(const Poset& poset, const std::vector<Position>& tie_order) {
  std::vector<Position> remaining = covers(poset).to_vector();
  if (!tie_order.empty()) {
    auto rank = [&](const Position& pos) {
      auto it = std::find(tie_order.begin(), tie_order.end(), pos);
      return it == tie_order.end() ? tie_order.size() : static_cast<std::size_t>(it - tie_order.begin());
    };
    std::stable_sort(remaining.begin(), remaining.end(),
                     [&](const Position& a, const Position& b) { return rank(a) < rank(b); });
  }
  PositionSet chosen;
  while (!remaining.empty()) {
    auto best = remaining.begin();
    for (auto it = remaining.begin(); it != remaining.end(); ++it)
      if (it->length() > best->length()) best = it;
    const Position pick = *best;
    chosen.insert(pick);
    std::erase_if(remaining, [&](const Position& pos) { return pos.i == pick.i || pos.j == pick.j; });
  }
  return chosen;
}

PositionSet highest_cover_set_bruteforce(const Poset& poset) {
  const auto cov = covers(poset).to_vector();
  if (cov.size() > 24) throw std::length_error("too many covers for exhaustive search");
  PositionSet best;
  std::vector<int> best_lengths;
  for (std::uint32_t mask = 0; mask < (1U << cov.size()); ++mask) {
    PositionSet subset;
    for (std::size_t b = 0; b < cov.size(); ++b)
      if (mask >> b & 1U) subset.insert(cov[b]);
    if (!is_independent(subset)) continue;
    auto lengths = length_vector(subset);
    if (lengths > best_lengths) {
      best_lengths = std::move(lengths);
      best = subset;
    }
  }
  return best;
}

bool decomposes_into_chains(const Poset& poset) { return covers(poset) == highest_cover_set(poset); }

bool decomposes_into_chains_direct(const Poset& poset) {
  const int n = poset.n();
  std::vector<int> component(n + 1);
  for (int v = 1; v <= n; ++v) component[v] = v;
  auto find = [&](int v) {
    while (component[v] != v) v = component[v] = component[component[v]];
    return v;
  };
  for (const auto& pos : poset.positions()) component[find(pos.i)] = find(pos.j);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (find(a) == find(b) && !poset.contains(a, b)) return false;
  return true;
}

bool is_p_representative(const Poset& ambient, const Poset& q) {
  if (q.n() != ambient.n() || !q.relations().is_subset_of(ambient.relations())) return false;
  const auto cov = covers(q).to_vector();
  for (const auto& ik : highest_cover_set(q).to_vector()) {
    for (const auto& c : cov) {
      if (c == ik) continue;
      // (i) (i,j) a cover of Q forces (j,k) outside P; (ii) (j,k) a cover forces (i,j) outside P.
      if (c.i == ik.i && ambient.contains(c.j, ik.j)) return false;
      if (c.j == ik.j && ambient.contains(ik.i, c.i)) return false;
    }
  }
  return true;
}

LabeledPoset index_to_poset(const SupercharacterIndex& idx) {
  const FqUpperMatrix sum = idx.lam.matrix() + idx.eta;
  const int n = idx.poset.n();
  const PositionSet support = sum.support();
  Poset q = from_covers(n, support);
  return make_labeled_poset(q, sum);
}

SupercharacterIndex poset_to_index(const Poset& ambient, const LabeledPoset& q) {
  if (!is_p_representative(ambient, q.poset)) throw std::invalid_argument("labeled poset is not P-representative");
  const int p = q.labels.p();
  const PositionSet high = highest_cover_set(q.poset);
  FqUpperMatrix lam(ambient, p, Role::kDual);
  FqUpperMatrix eta(ambient, p, Role::kDual);
  for (const auto& e : q.labels.entries()) (high.contains(e.pos) ? lam : eta).set(e.pos, e.value);
  SupercharacterIndex idx{ambient, LabeledSetPartition(lam), eta};
  const auto sets = position_sets(ambient, idx.lam);
  if (!eta.support().is_subset_of(sets.coaux))
    throw std::invalid_argument("non-highest covers are not auxiliary to the highest cover set");
  return idx;
}

std::vector<LabeledPoset> enumerate_representative(const Poset& ambient, int p, int jobs) {
  const auto indices = supercharacters(ambient, p, jobs);
  std::vector<LabeledPoset> out(indices.size(), LabeledPoset{Poset(ambient.n()), FqUpperMatrix(ambient, p, Role::kDual)});
  parallel_for(indices.size(), jobs, [&](std::size_t t) { out[t] = index_to_poset(indices[t]); });
  return out;
}

namespace {

// Calls visit(q) for every subposet of ambient that is P-representative.
template <typename Visit>
void for_each_representative_shape(const Poset& ambient, Visit&& visit) {
  const auto& slots = ambient.positions();
  if (slots.size() > 24) throw std::length_error("ambient poset too large for subset search");
  for (std::uint32_t mask = 0; mask < (1U << slots.size()); ++mask) {
    PositionSet set;
    for (std::size_t b = 0; b < slots.size(); ++b)
      if (mask >> b & 1U) set.insert(slots[b]);
    if (!is_transitively_closed(set)) continue;
    Poset q(ambient.n(), set);
    if (is_p_representative(ambient, q)) visit(q);
  }
}

}  // namespace

std::vector<LabeledPoset> enumerate_representative_search(const Poset& ambient, int p) {
  std::vector<LabeledPoset> out;
  const auto full = full_poset(ambient.n());
  for_each_representative_shape(ambient, [&](const Poset& q) {
    const auto cov = covers(q).to_vector();
    std::vector<int> labels(cov.size(), 1);
    while (true) {
      FqUpperMatrix m(full, p, Role::kDual);
      for (std::size_t t = 0; t < cov.size(); ++t) m.set(cov[t], labels[t]);
      out.push_back(LabeledPoset{q, m});
      std::size_t t = cov.size();
      while (t > 0 && labels[t - 1] == p - 1) labels[--t] = 1;
      if (t == 0) break;
      ++labels[t - 1];
    }
  });
  return out;
}

std::uint64_t count_representative_search(const Poset& ambient, int p) {
  std::uint64_t total = 0;
  for_each_representative_shape(ambient, [&](const Poset& q) {
    std::uint64_t labelings = 1;
    for (std::size_t c = 0; c < covers(q).size(); ++c) labelings *= static_cast<std::uint64_t>(p - 1);
    total += labelings;
  });
  return total;
}

bool degree_one_test(const Poset& ambient, const LabeledPoset& q) {
  return covers(q.poset).is_subset_of(covers(ambient));
}

bool is_irreducible_poset(const Poset& ambient, const LabeledPoset& q) {
  const auto high = highest_cover_set(q.poset).to_vector();
  for (const auto& ik : high)
    for (const auto& jl : high) {
      const int i = ik.i, k = ik.j, j = jl.i, l = jl.j;
      if (i < j && j < k && k < l && ambient.contains(i, j) && ambient.contains(j, k) && ambient.contains(k, l))
        return false;
    }
  return true;
}

}  // namespace patternsc
