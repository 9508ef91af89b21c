#include <pybind11/pybind11.h>
#include <pybind11/stl.h>


#include "patternsc/classify.hpp"
#include "patternsc/io.hpp"
#include "patternsc/oracle.hpp"
#include "patternsc/poset.hpp"
#include "patternsc/repposets.hpp"
#include "patternsc/verify.hpp"

namespace py = pybind11;
using namespace patternsc;

namespace {

std::vector<std::pair<int, int>> pairs(const PositionSet& set) {
  std::vector<std::pair<int, int>> out;
  for (const auto& pos : set.to_vector()) out.emplace_back(pos.i, pos.j);
  return out;
}

PositionSet position_set(const std::vector<std::pair<int, int>>& list) {
  PositionSet set;
  for (const auto& [i, j] : list) set.insert(Position{i, j});
  return set;
}

template <class Index>
std::string dump_indices(const std::vector<Index>& indices) {
  Json all = Json::array();
  for (const auto& idx : indices) all.push_back(to_json(idx));
  return all.dump();
}

std::string table_json(const Poset& poset, int p, std::uint64_t cap) {
  const Oracle oracle(poset, p, cap);
  const auto table = character_table(oracle);
  Json rows = Json::array();
  for (const auto& row : table.values) {
    Json cells = Json::array();
    for (const auto& v : row) cells.push_back(v.to_string());
    rows.push_back(cells);
  }
  return Json{{"class_sizes", table.class_sizes}, {"values", rows}}.dump();
}

}  // namespace

PYBIND11_MODULE(_patternsc, m) {
  m.doc() = "Superclasses and supercharacters of normal pattern subgroups of U_n(F_p)";

  py::register_exception<NotAPoset>(m, "NotAPoset", PyExc_ValueError);
  py::register_exception<NotNormal>(m, "NotNormal", PyExc_ValueError);

  py::class_<Poset>(m, "Poset")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& relations) {
             return Poset(n, position_set(relations));
           }),
           py::arg("n"), py::arg("relations"))
      .def_property_readonly("n", &Poset::n)
      .def_property_readonly("relations", [](const Poset& p) { return pairs(p.relations()); })
      .def("__len__", &Poset::size)
      .def("__contains__", [](const Poset& p, std::pair<int, int> r) { return p.contains(r.first, r.second); })
      .def("__eq__", [](const Poset& a, const Poset& b) { return a == b; })
      .def("__repr__", [](const Poset& p) { return "Poset(" + std::to_string(p.n()) + ", " + p.relations().to_string() + ")"; })
      .def("covers", [](const Poset& p) { return pairs(covers(p)); })
      .def("is_normal", [](const Poset& p) { return is_normal(p); })
      .def("boundary_vector", [](const Poset& p) { return boundary_vector(p); })
      .def("dyck_index", [](const Poset& p) { return dyck_index(p); })
      .def("highest_cover_set", [](const Poset& p) { return pairs(highest_cover_set(p)); })
      .def("to_dot", [](const Poset& p) { return to_dot(p); });

  m.def("full_poset", &full_poset, py::arg("n"));
  m.def("empty_poset", &empty_poset, py::arg("n"));
  m.def("commutator_poset", &commutator_poset, py::arg("n"));
  m.def("branch_poset", &branch_poset, py::arg("n"), py::arg("i"));
  m.def("t_family", &t_family, py::arg("m"), py::arg("n2"));
  m.def("dyck_index_poset", &dyck_index_poset, py::arg("n"), py::arg("index"));
  m.def("from_covers", [](int n, const std::vector<std::pair<int, int>>& c) { return from_covers(n, position_set(c)); },
        py::arg("n"), py::arg("covers"));
  m.def("enumerate_normal", [](int n) { return enumerate_normal(n); }, py::arg("n"));
  m.def("catalan", &catalan, py::arg("n"));

  m.def("_superclasses_json", [](const Poset& p, int q, int jobs) { return dump_indices(superclasses(p, q, jobs)); },
        py::arg("poset"), py::arg("p"), py::arg("jobs") = 1);
  m.def("_supercharacters_json",
        [](const Poset& p, int q, int jobs) { return dump_indices(supercharacters(p, q, jobs)); }, py::arg("poset"),
        py::arg("p"), py::arg("jobs") = 1);
  m.def("_character_table_json", &table_json, py::arg("poset"), py::arg("p"), py::arg("cap") = kDefaultGroupCap);
  m.def("count_representative_search", &count_representative_search, py::arg("poset"), py::arg("p"));
  m.def("_verify_json",
        [](const Poset& p, int q, bool axioms) {
          VerifyOptions options;
          options.axioms = axioms;
          return to_json(verify_poset(p, q, options)).dump();
        },
        py::arg("poset"), py::arg("p"), py::arg("axioms") = true);
}
