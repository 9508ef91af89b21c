// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "patternsc/classify.hpp"
#include "patternsc/oracle.hpp"
#include "patternsc/orbits.hpp"
#include "patternsc/partitions.hpp"
#include "patternsc/poset.hpp"
#include "patternsc/repposets.hpp"
#include "patternsc/verify.hpp"

using namespace patternsc;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

std::uint64_t power(int p, std::size_t e) { return int_pow(static_cast<std::uint64_t>(p), static_cast<int>(e)); }

std::string first_failure(const Report& r) {
  for (const auto& c : r.checks)
    if (c.passed == c.expected_negative) return r.subject + ": " + c.name + " " + c.detail;
  return {};
}

const Check* find_check(const Report& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

// ---------------------------------------------------------------------------

Outcome catalan_counts() {
  Outcome out;
  for (int n = 1; n <= 10; ++n) {
    const auto posets = enumerate_normal(n);
    out.expect(posets.size() == catalan(n), "n=" + std::to_string(n) + " gave " + std::to_string(posets.size()));
    for (const auto& p : posets) out.expect(is_normal(p), "non-normal poset at n=" + std::to_string(n));
  }
  if (out.ok) out.detail = "C_1..C_10 = 1 .. 16796";
  return out;
}

// Labelings of the representative posets of the commutator poset on [5], counted term by term.
std::uint64_t commutator_five_count(std::uint64_t q) {
  const std::uint64_t u = q - 1;
  return 1 + 3 * u + 3 * u * u + u * u * u + 3 * q * q * u + 3 * q * q * u * u + q * q * q * u * u;
}

Outcome commutator_five() {
  Outcome out;
  const Poset poset = commutator_poset(5);
  std::ostringstream summary;
  for (int p : {2, 3}) {
    const auto expected = commutator_five_count(static_cast<std::uint64_t>(p));
    const auto classes = superclasses(poset, p);
    const auto chars = supercharacters(poset, p);
    const auto reps = enumerate_representative(poset, p);
    const Oracle oracle(poset, p);
    const std::string tag = "q=" + std::to_string(p) + ": ";
    out.expect(classes.size() == expected, tag + std::to_string(classes.size()) + " superclasses");
    out.expect(chars.size() == expected, tag + std::to_string(chars.size()) + " supercharacters");
    out.expect(reps.size() == expected, tag + std::to_string(reps.size()) + " representative posets");
    out.expect(oracle.superclass_table().count() == expected, tag + "oracle superclass count differs");
    out.expect(oracle.dual_table().count() == expected, tag + "oracle dual orbit count differs");
    for (const auto& idx : chars) {
      out.expect(is_irreducible(idx) && norm_sq(idx) == 1, tag + "reducible supercharacter");
      out.expect(oracle.left_right_intersection(supercharacter_functional(idx)) == 1, tag + "oracle norm is not 1");
    }
    const std::uint64_t factored = power(p, 3) * (power(p, 2) + 1) * static_cast<std::uint64_t>(p - 1);
    summary << tag << expected << " indices";
    if (factored != expected) summary << " (factored closed form gives " << factored << ")";
    summary << "; ";
  }
  if (out.ok) out.detail = summary.str() + "all irreducible";
  return out;
}

Outcome bijection_exhaustiveness() {
  Outcome out;
  VerifyOptions options;
  options.axioms = false;
  options.representative_posets = false;
  options.pointwise = false;
  std::size_t posets = 0;
  for (int n = 1; n <= 5; ++n)
    for (const auto& poset : enumerate_normal(n))
      for (int p : {2, 3}) {
        ++posets;
        const Report r = verify_poset(poset, p, options);
        for (const char* name : {"superclass-bijection", "superclass-size", "supercharacter-bijection", "dual-orbit-size"}) {
          const Check* c = find_check(r, name);
          out.expect(c != nullptr && c->passed, r.subject + ": " + name + (c ? " " + c->detail : " missing"));
        }
        std::uint64_t class_total = 0;
        for (const auto& idx : superclasses(poset, p)) class_total += superclass_size(idx);
        out.expect(class_total == power(p, poset.size()), r.subject + ": superclass sizes do not sum to |U_P|");
        std::uint64_t dual_total = 0;
        for (const auto& idx : supercharacters(poset, p))
          dual_total += power(p, position_sets(poset, idx.lam).coadj_P.size());
        out.expect(dual_total == power(p, poset.size()), r.subject + ": dual orbit sizes do not sum to |U_P|");
      }
  if (out.ok) out.detail = std::to_string(posets) + " (poset, q) pairs";
  return out;
}

// ---------------------------------------------------------------------------

constexpr int kQ = 5;

FqUpperMatrix mat(const Poset& poset, Role role, std::initializer_list<Entry> entries) {
  FqUpperMatrix m(poset, kQ, role);
  for (const auto& e : entries) m.set(e.pos, e.value);
  return m;
}

int div5(int a, int b) { return (Fp(kQ, a) * Fp(kQ, b).inverse()).value(); }

Outcome worked_examples() {
  Outcome out;
  const Poset poset = commutator_poset(7);
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> unit(1, kQ - 1);
  const int samples = 200;
  for (int trial = 0; trial < samples; ++trial) {
    const int a = unit(rng), b = unit(rng), c = unit(rng), d = unit(rng);
    const int r = unit(rng), s = unit(rng), t = unit(rng), u = unit(rng), v = unit(rng), w = unit(rng);

    // Superclass side: lambda = 1-a-4-b-6 | 2-c-5 | 3-d-7.
    const LabeledSetPartition lam(mat(poset, Role::kPrimal, {{{1, 4}, a}, {{4, 6}, b}, {{2, 5}, c}, {{3, 7}, d}}));
    const auto sets = position_sets(poset, lam);
    out.expect(sets.adjL_full == PositionSet{{1, 5}, {1, 6}, {1, 7}, {2, 6}, {2, 7}, {3, 6}}, "adjL([[7]])");
    out.expect(sets.adjL_P == PositionSet{{1, 6}, {1, 7}, {2, 6}}, "adjL_P");
    out.expect(sets.auxL == PositionSet{{1, 5}, {2, 7}, {3, 6}}, "auxL");
    out.expect(sets.adjR_full == PositionSet{{1, 5}, {1, 6}, {1, 7}, {2, 6}, {2, 7}, {4, 7}}, "adjR([[7]])");
    out.expect(sets.adjR_P == PositionSet{{1, 6}, {1, 7}, {2, 7}}, "adjR_P");
    out.expect(sets.auxR == PositionSet{{1, 5}, {2, 6}, {4, 7}}, "auxR");
    out.expect(sets.aux == PositionSet{{1, 5}, {3, 6}, {4, 7}}, "aux");

    const auto x = mat(poset, Role::kPrimal, {{{1, 5}, r}, {{2, 7}, s}, {{3, 6}, t}});
    const auto y = mat(poset, Role::kPrimal, {{{1, 5}, u}, {{2, 6}, v}, {{4, 7}, w}});
    const auto xy = mat(poset, Role::kPrimal,
                        {{{1, 5}, (r + u) % kQ}, {{2, 7}, s}, {{3, 6}, t}, {{2, 6}, v}, {{4, 7}, w},
                         {{1, 6}, div5(r * v, c)}, {{3, 7}, div5(t * w, b)}});
    out.expect(star_primal(lam, x, y) == xy, "primal star product");

    const auto rx = mat(poset, Role::kPrimal, {{{1, 5}, r}, {{3, 6}, s}, {{4, 7}, t}});
    auto rx_expected = rx;
    rx_expected.set(3, 7, div5(s * t, b));
    out.expect(rep_map_primal(SuperclassIndex{poset, lam, rx}) == rx_expected, "R_lambda");

    // Supercharacter side: lambda = 1-a-4-b-6 | 2-c-7 | 3-d-5.
    const LabeledSetPartition lam_d(mat(poset, Role::kDual, {{{1, 4}, a}, {{4, 6}, b}, {{2, 7}, c}, {{3, 5}, d}}));
    const auto co = position_sets(poset, lam_d);
    out.expect(co.coadjL_full == PositionSet{{2, 4}, {3, 7}, {4, 7}, {5, 7}}, "coadjL([[7]])");
    out.expect(co.coadjL_P == PositionSet{{4, 7}, {5, 7}}, "coadjL_P");
    out.expect(co.coauxL == PositionSet{{2, 4}, {3, 7}}, "coauxL");
    out.expect(co.coadjR_full == PositionSet{{1, 3}, {2, 4}, {2, 5}, {2, 6}}, "coadjR([[7]])");
    out.expect(co.coadjR_P == PositionSet{{2, 4}, {2, 5}}, "coadjR_P");
    out.expect(co.coauxR == PositionSet{{1, 3}, {2, 6}}, "coauxR");
    out.expect(co.coaux == PositionSet{{1, 3}, {2, 6}, {3, 7}}, "coaux");

    const auto eta = mat(poset, Role::kDual, {{{2, 4}, r}, {{3, 7}, s}});
    const auto mu = mat(poset, Role::kDual, {{{1, 3}, t}, {{2, 6}, u}});
    const auto em = mat(poset, Role::kDual, {{{2, 4}, r}, {{3, 7}, s}, {{1, 3}, t}, {{2, 6}, u}, {{3, 6}, div5(s * u, c)}});
    out.expect(star_dual(lam_d, eta, mu) == em, "dual star product");

    const auto re = mat(poset, Role::kDual, {{{1, 3}, r}, {{2, 6}, s}, {{3, 7}, t}});
    auto re_expected = re;
    re_expected.set(3, 6, div5(s * t, c));
    out.expect(rep_map_dual(SupercharacterIndex{poset, lam_d, re}) == re_expected, "R*_lambda");
  }

  const Poset greedy = from_covers(6, PositionSet{{1, 2}, {1, 3}, {2, 6}, {3, 4}, {3, 5}, {4, 6}, {5, 6}});
  out.expect(highest_cover_set(greedy) == PositionSet{{1, 3}, {2, 6}, {3, 5}}, "n=6 highest cover set");

  const Poset t = t_family(5, 3);
  out.expect(is_p_representative(t, from_covers(8, PositionSet{{1, 3}, {3, 8}, {3, 7}, {2, 4}, {4, 7}, {4, 6}})),
             "T(5,3) P1 should be representative");
  out.expect(!is_p_representative(t, from_covers(8, PositionSet{{1, 4}, {4, 8}, {4, 7}, {2, 3}, {3, 7}, {3, 6}})),
             "T(5,3) P2 should not be representative");
  if (out.ok) out.detail = std::to_string(samples) + " label samples over F_5; R* extra term at e*_36";
  return out;
}

Outcome axioms() {
  Outcome out;
  std::vector<std::pair<Poset, int>> cases;
  for (int n = 1; n <= 4; ++n)
    for (const auto& poset : enumerate_normal(n))
      for (int p : {2, 3}) cases.emplace_back(poset, p);
  cases.emplace_back(commutator_poset(5), 2);
  cases.emplace_back(commutator_poset(6), 2);
  for (const auto& [poset, p] : cases) {
    AxiomOptions options;
    options.jobs = 4;
    const Report r = verify_supercharacter_theory(Oracle(poset, p), options);
    out.expect(r.passed(), first_failure(r));
    out.expect(find_check(r, "regular-character") != nullptr, r.subject + ": regular character not checked");
  }
  if (out.ok) out.detail = std::to_string(cases.size()) + " pattern groups";
  return out;
}

Outcome formula_vs_oracle() {
  Outcome out;
  std::size_t count = 0;
  for (int n = 1; n <= 4; ++n)
    for (const auto& poset : enumerate_normal(n))
      for (int p : {2, 3}) {
        VerifyOptions options;
        options.axioms = false;
        const Report r = verify_poset(poset, p, options);
        ++count;
        out.expect(r.passed(), first_failure(r));
        for (const char* name : {"superclass-size", "degree", "norm", "irreducibility", "restriction",
                                 "elementary-factorization"}) {
          const Check* c = find_check(r, name);
          out.expect(c != nullptr && c->detail.rfind("skipped", 0) != 0,
                     r.subject + ": " + name + (c ? " " + c->detail : " missing"));
        }
      }
  if (out.ok) out.detail = std::to_string(count) + " (poset, q) pairs, no check skipped";
  return out;
}

Outcome counterexamples() {
  Outcome out;
  for (int p : {2, 3, 5}) {
    const Report r = counterexample_report(p, 1, p - 1);
    out.expect(r.passed(), first_failure(r));
  }
  const Report control = branch_negative_control(5, 3, 2);
  out.expect(control.passed(), first_failure(control));
  if (out.ok) {
    const Check* c = find_check(control, "representative-count");
    out.detail = "naive maps collide for q=2,3,5; branch control " + (c ? c->detail : std::string{});
  }
  return out;
}

Outcome highest_cover_sets() {
  Outcome out;
  std::mt19937 rng(99);
  std::size_t checked = 0;
  auto check = [&](const Poset& p) {
    ++checked;
    const auto greedy = highest_cover_set(p);
    out.expect(greedy == highest_cover_set_bruteforce(p), "greedy differs from exhaustive maximizer");
    auto order = covers(p).to_vector();
    for (int k = 0; k < 3; ++k) {
      std::shuffle(order.begin(), order.end(), rng);
      out.expect(highest_cover_set(p, order) == greedy, "tie order changed the output");
    }
  };
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : enumerate_all_posets(n)) check(p);
  const auto six = enumerate_all_posets(6);
  std::uniform_int_distribution<std::size_t> pick(0, six.size() - 1);
  for (int k = 0; k < 1000; ++k) check(six[pick(rng)]);
  if (out.ok) out.detail = std::to_string(checked) + " posets";
  return out;
}

Outcome un_formula() {
  Outcome out;
  for (int p : {2, 3}) {
    const Report r = verify_un_formula(4, p);
    out.expect(r.passed(), first_failure(r));
  }
  if (out.ok) out.detail = "S_4* x S_4 at q=2,3";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> only;
  app.add_option("--criterion", only, "Run only these criteria (1-9)")->check(CLI::Range(1, 9));
  CLI11_PARSE(app, argc, argv);

  struct Criterion {
    std::string name;
    std::function<Outcome()> run;
    // Wall-clock limit in seconds, 0 for none.
    double limit = 0;
  };
  const std::vector<Criterion> criteria{
      {"catalan-counts", catalan_counts, 5},
      {"commutator-five-count", commutator_five, 30},
      {"bijection-exhaustiveness", bijection_exhaustiveness, 600},
      {"worked-examples", worked_examples},
      {"supercharacter-axioms", axioms},
      {"formula-vs-oracle", formula_vs_oracle},
      {"counterexamples", counterexamples},
      {"highest-cover-set", highest_cover_sets},
      {"un-formula", un_formula},
  };

  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int number = static_cast<int>(k) + 1;
    if (!only.empty() && std::find(only.begin(), only.end(), number) == only.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[k].run();
    } catch (const std::exception& e) {
      outcome.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criteria[k].limit > 0 && secs > criteria[k].limit)
      outcome.fail("took longer than " + std::to_string(static_cast<int>(criteria[k].limit)) + " s");
    failures += !outcome.ok;
    std::cout << (outcome.ok ? "PASS" : "FAIL") << "  AC" << number << " " << criteria[k].name << "  ["
              << std::fixed << std::setprecision(2) << secs << " s]  " << outcome.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
