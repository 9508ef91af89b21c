#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "patternsc/classify.hpp"
#include "patternsc/io.hpp"
#include "patternsc/oracle.hpp"
#include "patternsc/poset.hpp"
#include "patternsc/repposets.hpp"
#include "patternsc/verify.hpp"

using namespace patternsc;

namespace {

struct Config {
  int n = 0;
  int p = 2;
  std::string poset;
  std::string out;
  std::string format = "json";
  std::string table_format = "tsv";
  std::uint64_t cap = kDefaultGroupCap;
  int jobs = 1;
  bool counterexamples = false;
  bool un_formula = false;
};

std::vector<std::string> split_words(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

int to_int(const std::string& word) {
  std::size_t used = 0;
  const int v = std::stoi(word, &used);
  if (used != word.size()) throw std::invalid_argument("not an integer: " + word);
  return v;
}

Poset resolve_poset(const Config& cfg) {
  const auto words = split_words(cfg.poset);
  if (words.empty() || words[0] == "full") return full_poset(cfg.n);
  const std::string& name = words[0];
  auto arg = [&](std::size_t k) {
    if (words.size() <= k) throw std::invalid_argument("poset '" + name + "' needs more arguments");
    return to_int(words[k]);
  };
  if (name == "commutator") return commutator_poset(cfg.n);
  if (name == "empty") return empty_poset(cfg.n);
  if (name == "dyck-index") return dyck_index_poset(cfg.n, static_cast<std::uint64_t>(arg(1)));
  if (name == "t-family") return t_family(arg(1), arg(2));
  if (name == "branch") return branch_poset(cfg.n, arg(1));
  if (name == "hasse-example") return from_covers(4, PositionSet{{1, 3}, {2, 3}, {3, 4}});
  if (name == "greedy-example")
    return from_covers(6, PositionSet{{1, 2}, {1, 3}, {2, 6}, {3, 4}, {3, 5}, {4, 6}, {5, 6}});
  return read_poset_file(cfg.poset);
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::runtime_error("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::string witness_message(const NotNormal& e) {
  const auto& [i, j, k, l] = e.witness();
  return "error: poset is not normal: (" + std::to_string(j) + "," + std::to_string(k) + ") in P but (" +
         std::to_string(i) + "," + std::to_string(l) + ") is not (i,j,k,l = " + std::to_string(i) + "," +
         std::to_string(j) + "," + std::to_string(k) + "," + std::to_string(l) + ")";
}

int cmd_enumerate(const Config& cfg) {
  Output out(cfg.out);
  const auto posets = enumerate_normal(cfg.n);
  for (std::size_t k = 0; k < posets.size(); ++k) {
    Json line{{"dyck_index", k}, {"boundary", boundary_vector(posets[k])}, {"poset", to_json(posets[k])}};
    out.stream() << line.dump() << '\n';
  }
  out.stream() << Json{{"count", posets.size()}}.dump() << '\n';
  return 0;
}

int cmd_classify(const Config& cfg) {
  const Poset poset = resolve_poset(cfg);
  require_normal(poset);
  (void)space_size(poset, cfg.p, cfg.cap);
  const auto classes = superclasses(poset, cfg.p, cfg.jobs);
  const auto chars = supercharacters(poset, cfg.p, cfg.jobs);

  const bool split = !cfg.out.empty() && cfg.format == "json";
  Output class_out(split ? cfg.out + ".superclasses.jsonl" : cfg.out);
  std::unique_ptr<Output> char_file;
  if (split) char_file = std::make_unique<Output>(cfg.out + ".supercharacters.jsonl");
  std::ostream& cs = class_out.stream();
  std::ostream& hs = char_file ? char_file->stream() : class_out.stream();

  if (cfg.format == "json") {
    for (const auto& idx : classes) {
      Json j = split ? Json::object() : Json{{"kind", "superclass"}};
      j.update(to_json(idx));
      cs << j.dump() << '\n';
    }
    for (const auto& idx : chars) {
      Json j = split ? Json::object() : Json{{"kind", "supercharacter"}};
      j.update(to_json(idx));
      hs << j.dump() << '\n';
    }
  } else if (cfg.format == "tsv") {
    cs << "kind\tlambda\tdata\tsize_or_degree\tnorm\tirreducible\n";
    for (const auto& idx : classes)
      cs << "superclass\t" << to_arc_notation(idx.lam) << '\t' << idx.x.to_string() << '\t' << superclass_size(idx)
         << "\t\t\n";
    for (const auto& idx : chars)
      cs << "supercharacter\t" << to_arc_notation(idx.lam) << '\t' << idx.eta.to_string() << '\t' << degree(idx)
         << '\t' << norm_sq(idx) << '\t' << (is_irreducible(idx) ? "yes" : "no") << '\n';
  } else {
    for (std::size_t t = 0; t < chars.size(); ++t)
      cs << to_dot(index_to_poset(chars[t]), "Q" + std::to_string(t));
  }
  return 0;
}

int cmd_chartable(const Config& cfg) {
  const Poset poset = resolve_poset(cfg);
  const Oracle oracle(poset, cfg.p, cfg.cap);
  std::vector<std::uint32_t> rows, cols;
  std::vector<std::string> row_labels, col_labels;
  if (is_normal(poset)) {
    for (const auto& idx : supercharacters(poset, cfg.p, cfg.jobs)) {
      rows.push_back(oracle.dual_orbit_of(supercharacter_functional(idx)));
      row_labels.push_back(index_label(idx));
    }
    for (const auto& idx : superclasses(poset, cfg.p, cfg.jobs)) {
      cols.push_back(oracle.superclass_of(superclass_representative(idx)));
      col_labels.push_back(index_label(idx));
    }
  } else {
    const auto& dual = oracle.dual_table();
    const auto& primal = oracle.superclass_table();
    for (std::uint32_t o = 0; o < dual.count(); ++o) {
      rows.push_back(o);
      row_labels.push_back(oracle.dual_space().matrix(dual.representatives[o]).to_string());
    }
    for (std::uint32_t c = 0; c < primal.count(); ++c) {
      cols.push_back(c);
      col_labels.push_back(oracle.primal_space().matrix(primal.representatives[c]).to_string());
    }
  }
  const CharacterTable table = character_table(oracle, rows, cols, cfg.jobs);

  // Row constancy re-validated at the largest key of each superclass.
  const auto& classes = oracle.superclass_table();
  std::vector<std::uint64_t> largest(classes.count(), 0);
  for (std::uint64_t k = 0; k < oracle.group_order(); ++k) largest[classes.orbit_of[k]] = k;
  for (std::size_t r = 0; r < table.rows(); ++r)
    for (std::size_t c = 0; c < table.cols(); ++c)
      if (oracle.value(table.row_orbits[r], largest[table.col_classes[c]]) != table.values[r][c])
        throw std::logic_error("supercharacter " + row_labels[r] + " is not constant on " + col_labels[c]);

  Output out(cfg.out);
  if (cfg.table_format == "json")
    write_jsonl(out.stream(), table, row_labels, col_labels);
  else
    write_tsv(out.stream(), table, row_labels, col_labels);
  return 0;
}

std::optional<int> branch_index(const Poset& poset) {
  for (int i = 3; i < poset.n(); ++i)
    if (branch_poset(poset.n(), i) == poset) return i;
  return std::nullopt;
}

int cmd_verify(Config cfg) {
  VerifyOptions options;
  options.cap = cfg.cap;
  options.jobs = cfg.jobs;
  options.axiom_options.jobs = cfg.jobs;
  std::vector<Report> reports;
  if (cfg.poset.empty()) {
    for (const auto& poset : enumerate_normal(cfg.n)) reports.push_back(verify_poset(poset, cfg.p, options));
  } else {
    const Poset poset = resolve_poset(cfg);
    if (!is_normal(poset)) {
      if (const auto i = branch_index(poset)) {
        reports.push_back(branch_negative_control(poset.n(), *i, cfg.p));
      } else {
        require_normal(poset);
      }
    } else {
      reports.push_back(verify_poset(poset, cfg.p, options));
    }
  }
  if (cfg.counterexamples) reports.push_back(counterexample_report(cfg.p));
  if (cfg.un_formula) reports.push_back(verify_un_formula(cfg.n, cfg.p));

  bool ok = true;
  Json all = Json::array();
  for (const auto& r : reports) {
    ok = ok && r.passed();
    all.push_back(to_json(r));
  }
  Output out(cfg.out);
  out.stream() << Json{{"passed", ok}, {"reports", all}}.dump(2) << '\n';
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Superclasses and supercharacters of normal pattern subgroups of U_n(F_q)"};
  app.require_subcommand(1);
  Config cfg;

  auto common = [&](CLI::App* sub, bool with_poset) {
    sub->add_option("--n", cfg.n, "Matrix size")->check(CLI::Range(1, kMaxN));
    sub->add_option("--out", cfg.out, "Output path (stdout when omitted)");
    sub->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
    if (!with_poset) return;
    sub->add_option("--p", cfg.p, "Prime field size")->check(CLI::Range(2, kMaxPrime));
    sub->add_option("--poset", cfg.poset,
                    "full | commutator | empty | dyck-index K | t-family M N | branch I | hasse-example | "
                    "greedy-example | path to a JSON file");
    sub->add_option("--cap-group-order", cfg.cap, "Largest |U_P| to enumerate")->check(CLI::PositiveNumber);
  };

  auto* enumerate = app.add_subcommand("enumerate", "List the normal posets on [n] as JSON lines");
  common(enumerate, false);
  enumerate->get_option("--n")->required();

  auto* classify = app.add_subcommand("classify", "Superclass and supercharacter indices of U_P");
  common(classify, true);
  classify->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "tsv", "dot"}));

  auto* chartable = app.add_subcommand("chartable", "Supercharacter table of U_P");
  common(chartable, true);
  chartable->add_option("--format", cfg.table_format)->check(CLI::IsMember({"json", "tsv"}));

  auto* verify = app.add_subcommand("verify", "Check the classification against brute-force orbits");
  common(verify, true);
  verify->add_flag("--counterexamples", cfg.counterexamples, "Also run the naive-map counterexamples");
  verify->add_flag("--un-formula", cfg.un_formula, "Also check the closed-form U_n values");

  CLI11_PARSE(app, argc, argv);
  try {
    // Fixed-size sources carry their own n.
    const auto words = split_words(cfg.poset);
    const bool fixed = !words.empty() && (words[0] == "t-family" || words[0] == "hasse-example" ||
                                          words[0] == "greedy-example" || words[0].ends_with(".json"));
    if (fixed) cfg.n = resolve_poset(cfg).n();
    if (cfg.n == 0) throw std::invalid_argument("--n is required for this poset");
    if (app.got_subcommand(enumerate)) return cmd_enumerate(cfg);
    if (app.got_subcommand(classify)) return cmd_classify(cfg);
    if (app.got_subcommand(chartable)) return cmd_chartable(cfg);
    return cmd_verify(cfg);
  } catch (const NotNormal& e) {
    std::cerr << witness_message(e) << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
