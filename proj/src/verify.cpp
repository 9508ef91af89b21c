#include "patternsc/verify.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "patternsc/classify.hpp"
#include "patternsc/orbits.hpp"
#include "patternsc/partitions.hpp"
#include "patternsc/repposets.hpp"

namespace patternsc {

namespace {

constexpr std::uint64_t kNoCap = std::numeric_limits<std::uint64_t>::max();

// q^e, or nullopt on overflow.
std::optional<std::uint64_t> checked_power(int p, std::size_t e) {
  std::uint64_t out = 1;
  for (std::size_t t = 0; t < e; ++t) {
    if (out > kNoCap / static_cast<std::uint64_t>(p)) return std::nullopt;
    out *= static_cast<std::uint64_t>(p);
  }
  return out;
}

std::string arc(const LabeledSetPartition& lam) { return to_arc_notation(lam); }

void check_superclasses(Report& report, const Oracle& oracle, const std::vector<SuperclassIndex>& indices) {
  const auto& classes = oracle.superclass_table();
  std::vector<char> hit(classes.count(), 0);
  bool distinct = true;
  bool sizes = true;
  std::uint64_t total = 0;
  std::string detail;
  for (const auto& idx : indices) {
    const auto orbit = oracle.superclass_of(superclass_representative(idx));
    if (hit[orbit] && distinct) {
      distinct = false;
      detail = "two indices share superclass " + std::to_string(orbit) + " (lambda " + arc(idx.lam) + ")";
    }
    hit[orbit] = 1;
    const auto formula = superclass_size(idx);
    total += formula;
    if (formula != classes.sizes[orbit] && sizes) {
      sizes = false;
      detail = "superclass size " + std::to_string(formula) + " vs orbit " + std::to_string(classes.sizes[orbit]) +
               " for lambda " + arc(idx.lam);
    }
  }
  const bool complete = indices.size() == classes.count() && total == oracle.group_order();
  if (!complete && detail.empty())
    detail = std::to_string(indices.size()) + " indices for " + std::to_string(classes.count()) +
             " superclasses, sizes sum to " + std::to_string(total);
  report.add("superclass-bijection", distinct && complete, distinct && complete ? std::to_string(indices.size()) + " superclasses" : detail);
  report.add("superclass-size", sizes, sizes ? "" : detail);
}

struct CharacterData {
  std::vector<std::uint32_t> orbits;
};

CharacterData check_supercharacters(Report& report, const Oracle& oracle,
                                    const std::vector<SupercharacterIndex>& indices) {
  const auto& chars = oracle.dual_table();
  const int p = oracle.p();
  CharacterData data;
  std::vector<char> hit(chars.count(), 0);
  bool distinct = true, sizes = true, degrees = true, norms = true, irreducible = true;
  std::string distinct_detail, size_detail, degree_detail, norm_detail, irreducible_detail;
  std::uint64_t orbit_total = 0, regular_total = 0;
  for (const auto& idx : indices) {
    const auto nu = supercharacter_functional(idx);
    const auto orbit = oracle.dual_orbit_of(nu);
    data.orbits.push_back(orbit);
    if (hit[orbit] && distinct) {
      distinct = false;
      distinct_detail = "two indices share dual orbit " + std::to_string(orbit) + " (lambda " + arc(idx.lam) + ")";
    }
    hit[orbit] = 1;
    const auto sets = position_sets(idx.poset, idx.lam);
    const auto two_sided = *checked_power(p, sets.coadj_P.size());
    orbit_total += two_sided;
    if (two_sided != chars.sizes[orbit] && sizes) {
      sizes = false;
      size_detail = "orbit size " + std::to_string(two_sided) + " vs " + std::to_string(chars.sizes[orbit]) +
                    " for lambda " + arc(idx.lam);
    }
    const auto deg = degree(idx);
    regular_total += two_sided / deg * deg;
    if (deg != oracle.left_orbit_size(orbit) && degrees) {
      degrees = false;
      degree_detail = "degree " + std::to_string(deg) + " vs " + std::to_string(oracle.left_orbit_size(orbit)) +
                      " for lambda " + arc(idx.lam);
    }
    const auto norm = norm_sq(idx);
    const auto actual = oracle.left_right_intersection(nu);
    if (norm != actual && norms) {
      norms = false;
      norm_detail = "norm " + std::to_string(norm) + " vs " + std::to_string(actual) + " for lambda " + arc(idx.lam);
    }
    if (is_irreducible(idx) != (actual == 1) && irreducible) {
      irreducible = false;
      irreducible_detail = "irreducibility disagrees for lambda " + arc(idx.lam);
    }
  }
  const bool complete = indices.size() == chars.count() && orbit_total == oracle.group_order();
  if (!complete && distinct_detail.empty())
    distinct_detail = std::to_string(indices.size()) + " indices for " + std::to_string(chars.count()) +
                      " supercharacters, orbit sizes sum to " + std::to_string(orbit_total);
  report.add("supercharacter-bijection", distinct && complete,
             distinct && complete ? std::to_string(indices.size()) + " supercharacters" : distinct_detail);
  report.add("dual-orbit-size", sizes, size_detail);
  report.add("degree", degrees, degree_detail);
  report.add("norm", norms, norm_detail);
  report.add("irreducibility", irreducible, irreducible_detail);
  report.add("degree-sum", regular_total == oracle.group_order(),
             "sum of multiplicity times degree is " + std::to_string(regular_total));
  return data;
}

void check_representative_posets(Report& report, const Poset& poset, int p,
                                 const std::vector<SupercharacterIndex>& indices) {
  bool round_trip = true, high = true, representative = true, degree_one = true, irreducible = true;
  std::string detail;
  auto fail = [&](bool& flag, const std::string& what) {
    if (flag && detail.empty()) detail = what;
    flag = false;
  };
  for (const auto& idx : indices) {
    const LabeledPoset q = index_to_poset(idx);
    const std::string name = arc(idx.lam);
    if (!is_p_representative(poset, q.poset)) fail(representative, "not P-representative for lambda " + name);
    if (highest_cover_set(q.poset) != idx.lam.support()) fail(high, "highest cover set is not supp(lambda) for " + name);
    try {
      const auto back = poset_to_index(poset, q);
      if (!(back.lam == idx.lam) || !(back.eta == idx.eta)) fail(round_trip, "round trip changes lambda " + name);
    } catch (const std::invalid_argument& e) {
      fail(round_trip, std::string("round trip failed for lambda ") + name + ": " + e.what());
    }
    if (degree_one_test(poset, q) != (degree(idx) == 1)) fail(degree_one, "degree-one test disagrees for " + name);
    if (is_irreducible_poset(poset, q) != is_irreducible(idx)) fail(irreducible, "poset irreducibility disagrees for " + name);
  }
  report.add("representative-round-trip", round_trip && high && representative, detail);
  report.add("degree-one-test", degree_one, degree_one ? "" : detail);
  report.add("irreducible-poset", irreducible, irreducible ? "" : detail);
  if (poset.size() <= 20) {
    const auto count = count_representative_search(poset, p);
    report.add("representative-count", count == indices.size(),
               std::to_string(count) + " representative labeled posets, " + std::to_string(indices.size()) +
                   " supercharacters");
  }
}

void check_restriction(Report& report, const Poset& poset, const Oracle& oracle, const VerifyOptions& options) {
  const int n = poset.n();
  const int p = oracle.p();
  const auto un_order = checked_power(p, n * (n - 1) / 2);
  const auto& classes = oracle.superclass_table();
  if (!un_order || *un_order > options.cap ||
      *un_order > options.pointwise_budget / std::max<std::uint64_t>(classes.count(), 1)) {
    report.add("restriction", true, "skipped: U_n too large");
    return;
  }
  const Poset full = full_poset(n);
  const Oracle big(full, p, options.cap);
  const auto lams = enumerate_partitions(full, p, Role::kDual);
  for (const auto& lam : lams) {
    const Restriction r = restrict_from_un(poset, lam);
    const auto scale = static_cast<std::int64_t>(*checked_power(p, static_cast<std::size_t>(r.exponent)));
    std::vector<std::uint32_t> term_orbits;
    for (const auto& t : r.terms) term_orbits.push_back(oracle.dual_orbit_of(supercharacter_functional(t)));
    const auto lam_orbit = big.dual_orbit_of(lam.matrix());
    for (std::size_t c = 0; c < classes.count(); ++c) {
      const auto x_key = classes.representatives[c];
      const auto x = oracle.primal_space().matrix(x_key).with_domain(full.relations());
      const auto lhs = big.value(lam_orbit, big.primal_space().key(x));
      CyclotomicInt rhs(p);
      for (auto o : term_orbits) rhs += oracle.value(o, x_key);
      if (lhs != rhs.scaled(scale)) {
        report.add("restriction", false,
                   "lambda " + arc(lam) + " at superclass " + std::to_string(c) + ": " + lhs.to_string() + " vs " +
                       rhs.scaled(scale).to_string());
        return;
      }
    }
  }
  report.add("restriction", true, std::to_string(lams.size()) + " supercharacters of U_n restricted");
}

void check_factorization(Report& report, const Oracle& oracle, const std::vector<SupercharacterIndex>& indices,
                         const std::vector<std::uint32_t>& orbits, const VerifyOptions& options) {
  const auto& classes = oracle.superclass_table();
  const std::uint64_t cost = oracle.group_order() * std::max<std::uint64_t>(oracle.poset().size(), 1);
  if (cost > options.pointwise_budget / std::max<std::uint64_t>(indices.size(), 1)) {
    report.add("elementary-factorization", true, "skipped: too many indices for the witness search");
    return;
  }
  for (std::size_t t = 0; t < indices.size(); ++t) {
    const auto f = elementary_factorization(indices[t], kNoCap);
    std::vector<std::uint32_t> factor_orbits;
    for (const auto& m : f.factors) factor_orbits.push_back(oracle.dual_orbit_of(m));
    for (std::size_t c = 0; c < classes.count(); ++c) {
      const auto x_key = classes.representatives[c];
      CyclotomicInt product = CyclotomicInt::integer(oracle.p(), 1);
      for (auto o : factor_orbits) product = product * oracle.value(o, x_key);
      const auto expected = oracle.value(orbits[t], x_key);
      if (product != expected) {
        report.add("elementary-factorization", false,
                   "lambda " + arc(indices[t].lam) + " at superclass " + std::to_string(c) + ": " +
                       product.to_string() + " vs " + expected.to_string());
        return;
      }
    }
  }
  report.add("elementary-factorization", true, std::to_string(indices.size()) + " supercharacters factored");
}

}  // namespace

Report verify_poset(const Poset& poset, int p, const VerifyOptions& options) {
  Report report;
  report.subject = "P = " + poset.relations().to_string() + " on [" + std::to_string(poset.n()) + "], q = " +
                   std::to_string(p);
  if (const auto witness = find_normality_violation(poset)) {
    const auto& w = *witness;
    report.add("normal", false,
               "not normal: (" + std::to_string(w[1]) + "," + std::to_string(w[2]) + ") in P but (" +
                   std::to_string(w[0]) + "," + std::to_string(w[3]) + ") is not");
    return report;
  }
  const Oracle oracle(poset, p, options.cap);
  if (options.axioms)
    for (auto& check : verify_supercharacter_theory(oracle, options.axiom_options).checks)
      report.checks.push_back(std::move(check));

  const auto classes = superclasses(poset, p, options.jobs);
  check_superclasses(report, oracle, classes);
  const auto chars = supercharacters(poset, p, options.jobs);
  const auto data = check_supercharacters(report, oracle, chars);
  if (options.representative_posets) check_representative_posets(report, poset, p, chars);
  if (options.pointwise) {
    check_restriction(report, poset, oracle, options);
    check_factorization(report, oracle, chars, data.orbits, options);
  }
  return report;
}

Report verify_un_formula(int n, int p) {
  Report report;
  report.subject = "U_" + std::to_string(n) + ", q = " + std::to_string(p);
  const Poset full = full_poset(n);
  const Oracle oracle(full, p, kNoCap);
  const auto lams = enumerate_partitions(full, p, Role::kDual);
  const auto mus = enumerate_partitions(full, p, Role::kPrimal);
  std::size_t pairs = 0;
  for (const auto& lam : lams) {
    const auto orbit = oracle.dual_orbit_of(lam.matrix());
    for (const auto& mu : mus) {
      const auto expected = oracle.value(orbit, oracle.primal_space().key(mu.matrix()));
      const auto got = un_supercharacter_value(lam, mu);
      ++pairs;
      if (got != expected) {
        report.add("un-formula", false,
                   "lambda " + arc(lam) + ", mu " + arc(mu) + ": " + got.to_string() + " vs " + expected.to_string());
        return report;
      }
    }
  }
  report.add("un-formula", true, std::to_string(pairs) + " pairs");
  return report;
}

Report counterexample_report(int p, int a, int b) {
  Report report;
  report.subject = "commutator poset on [7], q = " + std::to_string(p);
  const Poset poset = commutator_poset(7);

  // Naive superclass map: 1 + mu + X and 1 + nu + X are conjugate.
  {
    FqUpperMatrix mu(poset, p, Role::kPrimal), nu(poset, p, Role::kPrimal), x(poset, p, Role::kPrimal);
    mu.set(4, 6, a);
    nu.set(1, 7, b);
    nu.set(4, 6, a);
    x.set(3, 6, 1);
    x.set(4, 7, 1);
    const LabeledSetPartition lm(mu), ln(nu);
    const PositionSet expected{{3, 6}, {4, 7}};
    const bool aux_ok = position_sets(poset, lm).aux == expected && position_sets(poset, ln).aux == expected;
    const OrbitSpace space(poset, p, Role::kPrimal, kNoCap);
    const auto from = mu + x;
    const auto to = nu + x;
    bool same = false;
    try {
      auto [g, h] = find_orbit_witness(space, space.key(from), space.key(to), Side::kTwoSided);
      same = act(Role::kPrimal, g, from, h) == to;
    } catch (const std::invalid_argument&) {
    }
    report.add("naive-superclass-map", aux_ok && same,
               std::string("aux sets ") + (aux_ok ? "agree" : "differ") + ", 1+mu+X and 1+nu+X " +
                   (same ? "conjugate" : "not conjugate"));
  }

  // Naive supercharacter map: mu + eta and nu + eta lie in one dual orbit.
  {
    const OrbitSpace space(poset, p, Role::kDual, kNoCap);
    FqUpperMatrix mu(poset, p, Role::kDual), nu(poset, p, Role::kDual), eta(poset, p, Role::kDual);
    mu.set(1, 7, b);
    nu.set(1, 7, b);
    nu.set(4, 6, a);
    eta.set(1, 6, 1);
    eta.set(2, 7, 1);
    const LabeledSetPartition lm(mu), ln(nu);
    const PositionSet expected{{1, 6}, {2, 7}};
    const bool coaux_ok =
        position_sets(poset, lm).coaux == expected && position_sets(poset, ln).coaux == expected;
    const auto orbit = orbit_keys(space, space.key(mu + eta), Side::kTwoSided);
    const bool same = std::binary_search(orbit.begin(), orbit.end(), space.key(nu + eta));
    report.add("naive-supercharacter-map", coaux_ok && same,
               std::string("coaux sets ") + (coaux_ok ? "agree" : "differ") + ", mu+eta and nu+eta " +
                   (same ? "share an orbit" : "lie in different orbits"));
  }

  // The superclass side has no covers-based poset description.
  {
    FqUpperMatrix lam(poset, p, Role::kPrimal), x(poset, p, Role::kPrimal);
    lam.set(1, 7, a);
    lam.set(2, 4, b);
    lam.set(4, 6, 1);
    x.set(1, 4, 1);
    x.set(4, 7, 1);
    const LabeledSetPartition l(lam);
    const bool in_aux = x.support().is_subset_of(position_sets(poset, l).aux);
    const auto support = (lam + x).support();
    bool covers_ok = true;
    try {
      (void)from_covers(7, support);
    } catch (const std::invalid_argument&) {
      covers_ok = false;
    }
    report.add("superclass-covers-failure", in_aux && !covers_ok,
               std::string("supp(X) ") + (in_aux ? "inside" : "outside") + " aux, supp(lambda+X) " +
                   (covers_ok ? "is" : "is not") + " a cover set");
  }
  return report;
}

Report branch_negative_control(int n, int i, int p) {
  Report report;
  const Poset poset = branch_poset(n, i);
  report.subject = "P_(" + std::to_string(i) + ") on [" + std::to_string(n) + "], q = " + std::to_string(p);
  report.add("non-normal", !is_normal(poset), is_normal(poset) ? "poset is normal" : "poset is not normal");
  const Oracle oracle(poset, p);
  const auto representatives = count_representative_search(poset, p);
  const auto orbits = oracle.dual_table().count();
  report.add("representative-count", representatives == orbits,
             std::to_string(representatives) + " representative labeled posets, " + std::to_string(orbits) +
                 " supercharacters",
             true);
  return report;
}

}  // namespace patternsc
