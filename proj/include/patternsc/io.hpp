#pragma once

// JSON, TSV and DOT forms of posets, matrices, indices, tables and reports.

#include <ostream>
#include <string>

#include <json.hpp>

#include "patternsc/classify.hpp"
#include "patternsc/fq.hpp"
#include "patternsc/oracle.hpp"
#include "patternsc/poset.hpp"
#include "patternsc/repposets.hpp"
#include "patternsc/uptri.hpp"

namespace patternsc {

using Json = nlohmann::ordered_json;

// {"n": n, "relations": [[i, j], ...]}, 1-based.
Json to_json(const Poset& poset);
Poset poset_from_json(const Json& j);
Poset read_poset_file(const std::string& path);

// {"n", "p", "role", "entries": [[i, j, v], ...]}; the domain is [[n]].
Json to_json(const FqUpperMatrix& m);
FqUpperMatrix matrix_from_json(const Json& j);

// {"text": "...", "array": [d, a0, ..., a_{p-2}]}.
Json to_json(const CyclotomicRat& value);

// "lambda;eta" with lambda in arc notation and eta as a sum of e*i_j terms ("0" when zero).
std::string index_label(const SuperclassIndex& idx);
std::string index_label(const SupercharacterIndex& idx);

Json to_json(const SuperclassIndex& idx);
// Includes degree, norm, irreducibility and the representative labeled poset.
Json to_json(const SupercharacterIndex& idx);

Json to_json(const Check& check);
Json to_json(const Report& report);

// Hasse diagram: one edge per cover.
std::string to_dot(const Poset& poset, const std::string& name = "P");
// Labeled Hasse diagram: solid edges for the highest cover set, dashed for the others.
std::string to_dot(const LabeledPoset& q, const std::string& name = "Q");

// Header row then one row per supercharacter; cells are exact values.
void write_tsv(std::ostream& out, const CharacterTable& table, const std::vector<std::string>& row_labels,
               const std::vector<std::string>& col_labels);
// One JSON object per row.
void write_jsonl(std::ostream& out, const CharacterTable& table, const std::vector<std::string>& row_labels,
                 const std::vector<std::string>& col_labels);

}  // namespace patternsc
