#include "patternsc/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace patternsc {

Json to_json(const Poset& poset) {
  Json rel = Json::array();
  for (const auto& pos : poset.positions()) rel.push_back({pos.i, pos.j});
  return Json{{"n", poset.n()}, {"relations", rel}};
}

Poset poset_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  require_supported_n(n);
  std::vector<Position> rel;
  for (const auto& r : j.at("relations")) {
    if (!r.is_array() || r.size() != 2) throw std::invalid_argument("relations must be [i, j] pairs");
    rel.push_back({r[0].get<int>(), r[1].get<int>()});
  }
  return Poset::from_relations(n, rel);
}

Poset read_poset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return poset_from_json(Json::parse(in));
}

Json to_json(const FqUpperMatrix& m) {
  Json entries = Json::array();
  for (const auto& e : m.entries()) entries.push_back({e.pos.i, e.pos.j, e.value});
  return Json{{"n", m.n()}, {"p", m.p()}, {"role", to_string(m.role())}, {"entries", entries}};
}

FqUpperMatrix matrix_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  const int p = j.at("p").get<int>();
  require_supported_n(n);
  require_supported_prime(p);
  const Role role = role_from_string(j.at("role").get<std::string>());
  FqUpperMatrix m(full_poset(n), p, role);
  for (const auto& e : j.at("entries")) {
    if (!e.is_array() || e.size() != 3) throw std::invalid_argument("entries must be [i, j, v] triples");
    const int i = e[0].get<int>(), k = e[1].get<int>();
    if (i < 1 || i >= k || k > n) throw std::invalid_argument("entry position out of range");
    m.set(i, k, e[2].get<long long>());
  }
  return m;
}

Json to_json(const CyclotomicRat& value) { return Json{{"text", value.to_string()}, {"array", value.to_array()}}; }

std::string index_label(const SuperclassIndex& idx) { return to_arc_notation(idx.lam) + ";" + idx.x.to_string(); }

std::string index_label(const SupercharacterIndex& idx) {
  return to_arc_notation(idx.lam) + ";" + idx.eta.to_string();
}

Json to_json(const SuperclassIndex& idx) {
  return Json{{"lambda", to_arc_notation(idx.lam)},
              {"x", to_json(idx.x)},
              {"representative", to_json(superclass_representative(idx))},
              {"size", superclass_size(idx)}};
}

Json to_json(const SupercharacterIndex& idx) {
  const LabeledPoset q = index_to_poset(idx);
  return Json{{"lambda", to_arc_notation(idx.lam)},
              {"eta", to_json(idx.eta)},
              {"functional", to_json(supercharacter_functional(idx))},
              {"degree", degree(idx)},
              {"norm", norm_sq(idx)},
              {"irreducible", is_irreducible(idx)},
              {"poset", to_json(q.poset)},
              {"labels", to_json(q.labels)},
              {"dot", to_dot(q)}};
}

Json to_json(const Check& check) {
  Json j{{"name", check.name}, {"passed", check.passed}, {"detail", check.detail}};
  if (check.expected_negative) j["expected_negative"] = true;
  return j;
}

Json to_json(const Report& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) checks.push_back(to_json(c));
  return Json{{"subject", report.subject}, {"passed", report.passed()}, {"checks", checks}};
}

namespace {

std::string dot_header(const std::string& name, int n) {
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (int v = 1; v <= n; ++v) out << "  " << v << ";\n";
  return out.str();
}

}  // namespace

std::string to_dot(const Poset& poset, const std::string& name) {
  std::string out = dot_header(name, poset.n());
  for (const auto& c : covers(poset).to_vector())
    out += "  " + std::to_string(c.i) + " -> " + std::to_string(c.j) + " [arrowhead=none];\n";
  return out + "}\n";
}

std::string to_dot(const LabeledPoset& q, const std::string& name) {
  std::string out = dot_header(name, q.poset.n());
  const PositionSet high = highest_cover_set(q.poset);
  for (const auto& c : covers(q.poset).to_vector()) {
    out += "  " + std::to_string(c.i) + " -> " + std::to_string(c.j) + " [arrowhead=none, label=\"" +
           std::to_string(q.labels.get(c)) + "\"";
    if (!high.contains(c)) out += ", style=dashed";
    out += "];\n";
  }
  return out + "}\n";
}

void write_tsv(std::ostream& out, const CharacterTable& table, const std::vector<std::string>& row_labels,
               const std::vector<std::string>& col_labels) {
  out << "supercharacter";
  for (const auto& c : col_labels) out << '\t' << c;
  out << '\n';
  for (std::size_t r = 0; r < table.rows(); ++r) {
    out << row_labels.at(r);
    for (const auto& v : table.values[r]) out << '\t' << CyclotomicRat(v).to_string();
    out << '\n';
  }
}

void write_jsonl(std::ostream& out, const CharacterTable& table, const std::vector<std::string>& row_labels,
                 const std::vector<std::string>& col_labels) {
  for (std::size_t r = 0; r < table.rows(); ++r) {
    Json values = Json::array();
    for (std::size_t c = 0; c < table.cols(); ++c)
      values.push_back(Json{{"superclass", col_labels.at(c)},
                            {"class_size", table.class_sizes[c]},
                            {"value", to_json(CyclotomicRat(table.values[r][c]))}});
    out << Json{{"supercharacter", row_labels.at(r)}, {"values", values}}.dump() << '\n';
  }
}

}  // namespace patternsc
