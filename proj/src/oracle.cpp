#include "patternsc/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>

#include "patternsc/parallel.hpp"

namespace patternsc {

Oracle::Oracle(const Poset& poset, int p, std::uint64_t cap)
    : primal_(poset, p, Role::kPrimal, cap),
      dual_(poset, p, Role::kDual, cap),
      classes_(compute_orbits(primal_, Side::kTwoSided)),
      characters_(compute_orbits(dual_, Side::kTwoSided)) {
  const std::size_t count = characters_.count();
  member_offsets_.assign(count + 1, 0);
  for (std::size_t o = 0; o < count; ++o) member_offsets_[o + 1] = member_offsets_[o] + characters_.sizes[o];
  members_.resize(dual_.size());
  std::vector<std::uint64_t> fill(member_offsets_.begin(), member_offsets_.end() - 1);
  for (std::uint64_t key = 0; key < dual_.size(); ++key) members_[fill[characters_.orbit_of[key]]++] = key;
  left_sizes_.resize(count);
  for (std::size_t o = 0; o < count; ++o)
    left_sizes_[o] = orbit_keys(dual_, characters_.representatives[o], Side::kLeft).size();
}

std::vector<std::uint64_t> Oracle::dual_orbit_members(std::uint32_t orbit) const {
  return {members_.begin() + static_cast<std::ptrdiff_t>(member_offsets_.at(orbit)),
          members_.begin() + static_cast<std::ptrdiff_t>(member_offsets_.at(orbit + 1))};
}

std::uint64_t Oracle::left_right_intersection(const FqUpperMatrix& lam) const {
  const std::uint64_t key = dual_.key(lam);
  const auto left = orbit_keys(dual_, key, Side::kLeft);
  const auto right = orbit_keys(dual_, key, Side::kRight);
  std::vector<std::uint64_t> both;
  std::set_intersection(left.begin(), left.end(), right.begin(), right.end(), std::back_inserter(both));
  return both.size();
}

std::vector<std::int64_t> Oracle::exponent_histogram(std::uint32_t orbit, std::uint64_t x_key) const {
  const int p = this->p();
  std::vector<int> x;
  primal_.decode(x_key, x);
  std::vector<int> nonzero;
  for (int s = 0; s < static_cast<int>(x.size()); ++s)
    if (x[s] != 0) nonzero.push_back(s);
  std::vector<std::int64_t> counts(p, 0);
  std::vector<int> mu;
  for (std::uint64_t at = member_offsets_.at(orbit); at < member_offsets_.at(orbit + 1); ++at) {
    dual_.decode(members_[at], mu);
    int t = 0;
    for (int s : nonzero) t += mu[s] * x[s];
    ++counts[t % p];
  }
  return counts;
}

CyclotomicInt Oracle::value(std::uint32_t orbit, std::uint64_t x_key) const {
  const auto counts = exponent_histogram(orbit, x_key);
  return CyclotomicInt::from_exponent_counts(p(), counts)
      .scaled(static_cast<std::int64_t>(left_sizes_.at(orbit)))
      .divided_exactly(static_cast<std::int64_t>(characters_.sizes.at(orbit)));
}

CyclotomicRat Oracle::evaluate(const FqUpperMatrix& lam, const FqUpperMatrix& x) const {
  return CyclotomicRat(value(dual_orbit_of(lam), primal_.key(x)));
}

CyclotomicRat inner_product(const Oracle& oracle, const FqUpperMatrix& a, const FqUpperMatrix& b) {
  const auto& classes = oracle.superclass_table();
  const std::uint32_t oa = oracle.dual_orbit_of(a);
  const std::uint32_t ob = oracle.dual_orbit_of(b);
  CyclotomicInt sum(oracle.p());
  for (std::size_t c = 0; c < classes.count(); ++c) {
    const std::uint64_t rep = classes.representatives[c];
    sum += (oracle.value(oa, rep) * oracle.value(ob, rep).conj()).scaled(static_cast<std::int64_t>(classes.sizes[c]));
  }
  return CyclotomicRat(sum, static_cast<std::int64_t>(oracle.group_order()));
}

CharacterTable character_table(const Oracle& oracle, int jobs) {
  std::vector<std::uint32_t> rows(oracle.dual_table().count());
  std::vector<std::uint32_t> cols(oracle.superclass_table().count());
  for (std::size_t r = 0; r < rows.size(); ++r) rows[r] = static_cast<std::uint32_t>(r);
  for (std::size_t c = 0; c < cols.size(); ++c) cols[c] = static_cast<std::uint32_t>(c);
  return character_table(oracle, rows, cols, jobs);
}

CharacterTable character_table(const Oracle& oracle, const std::vector<std::uint32_t>& row_orbits,
                               const std::vector<std::uint32_t>& col_classes, int jobs) {
  CharacterTable table;
  table.p = oracle.p();
  table.group_order = oracle.group_order();
  table.row_orbits = row_orbits;
  table.col_classes = col_classes;
  const auto& classes = oracle.superclass_table();
  for (auto c : col_classes) table.class_sizes.push_back(classes.sizes.at(c));
  table.values.assign(row_orbits.size(), {});
  parallel_for(row_orbits.size(), jobs, [&](std::size_t r) {
    auto& row = table.values[r];
    row.reserve(col_classes.size());
    for (auto c : col_classes) row.push_back(oracle.value(row_orbits[r], classes.representatives.at(c)));
  });
  return table;
}

CyclotomicRat row_inner_product(const CharacterTable& table, std::size_t a, std::size_t b) {
  CyclotomicInt sum(table.p);
  for (std::size_t c = 0; c < table.cols(); ++c)
    sum += (table.values[a][c] * table.values[b][c].conj()).scaled(static_cast<std::int64_t>(table.class_sizes[c]));
  return CyclotomicRat(sum, static_cast<std::int64_t>(table.group_order));
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.expected_negative ? !c.passed : c.passed; });
}

void Report::add(std::string name, bool ok, std::string detail, bool expected_negative) {
  checks.push_back(Check{std::move(name), ok, std::move(detail), expected_negative});
}

Report verify_supercharacter_theory(const Oracle& oracle, const AxiomOptions& options) {
  Report report;
  const auto& classes = oracle.superclass_table();
  const auto& chars = oracle.dual_table();
  const int p = oracle.p();
  const std::uint64_t order = oracle.group_order();

  report.add("equal-counts", classes.count() == chars.count(),
             std::to_string(classes.count()) + " superclasses, " + std::to_string(chars.count()) + " supercharacters");

  report.add("identity-superclass", classes.sizes.at(classes.orbit_of.at(0)) == 1,
             "superclass of 1 has size " + std::to_string(classes.sizes.at(classes.orbit_of.at(0))));

  const CharacterTable table = character_table(oracle, options.jobs);

  // Constancy of every supercharacter on every superclass.
  const std::uint64_t cost = order * order * static_cast<std::uint64_t>(std::max<std::size_t>(oracle.poset().size(), 1));
  const bool full_scan = cost <= options.constancy_budget;
  std::vector<std::uint64_t> probes;
  if (full_scan) {
    probes.resize(order);
    for (std::uint64_t k = 0; k < order; ++k) probes[k] = k;
  } else {
    std::vector<std::uint64_t> largest(classes.count(), 0);
    for (std::uint64_t k = 0; k < order; ++k) largest[classes.orbit_of[k]] = k;
    probes = largest;
  }
  std::atomic<bool> constant{true};
  std::mutex witness_mutex;
  std::string witness;
  parallel_for(table.rows(), options.jobs, [&](std::size_t r) {
    for (std::uint64_t x : probes) {
      if (!constant.load()) return;
      const std::uint32_t c = classes.orbit_of[x];
      if (oracle.value(table.row_orbits[r], x) != table.values[r][c]) {
        constant = false;
        std::lock_guard lock(witness_mutex);
        witness = "row " + std::to_string(r) + " differs inside superclass " + std::to_string(c);
      }
    }
  });
  report.add("constancy", constant.load(),
             witness.empty() ? (full_scan ? "every element checked" : "representative and largest member checked")
                             : witness);

  // Regular character: sum over orbits of (|orbit| / |U_P lam|) chi = rho.
  bool regular = true;
  std::string regular_detail = "value " + std::to_string(order) + " at 1 and 0 elsewhere";
  for (std::size_t c = 0; c < table.cols() && regular; ++c) {
    CyclotomicRat sum(p);
    for (std::size_t r = 0; r < table.rows(); ++r) {
      const auto o = table.row_orbits[r];
      sum += CyclotomicRat(table.values[r][c]) *
             CyclotomicRat::rational(p, static_cast<std::int64_t>(chars.sizes[o]),
                                     static_cast<std::int64_t>(oracle.left_orbit_size(o)));
    }
    const bool at_identity = classes.representatives[table.col_classes[c]] == 0;
    const auto expected = CyclotomicRat::integer(p, at_identity ? static_cast<std::int64_t>(order) : 0);
    if (sum != expected) {
      regular = false;
      regular_detail = "superclass " + std::to_string(c) + " sums to " + sum.to_string();
    }
  }
  report.add("regular-character", regular, regular_detail);

  // Norms against |U_P lam intersect lam U_P|, and pairwise orthogonality when affordable.
  bool norms = true;
  std::string norm_detail;
  for (std::size_t r = 0; r < table.rows() && norms; ++r) {
    const auto lam = oracle.dual_space().matrix(chars.representatives[table.row_orbits[r]]);
    const auto expected = static_cast<std::int64_t>(oracle.left_right_intersection(lam));
    const auto got = row_inner_product(table, r, r);
    if (got != CyclotomicRat::integer(p, expected)) {
      norms = false;
      norm_detail = "row " + std::to_string(r) + " has norm " + got.to_string() + ", expected " + std::to_string(expected);
    }
  }
  report.add("norms", norms, norm_detail);

  if (table.rows() <= options.orthogonality_rows) {
    bool orthogonal = true;
    std::string detail;
    for (std::size_t a = 0; a < table.rows() && orthogonal; ++a)
      for (std::size_t b = a + 1; b < table.rows() && orthogonal; ++b)
        if (!row_inner_product(table, a, b).is_zero()) {
          orthogonal = false;
          detail = "rows " + std::to_string(a) + " and " + std::to_string(b) + " are not orthogonal";
        }
    report.add("orthogonality", orthogonal, detail);
  }
  return report;
}

}  // namespace patternsc
