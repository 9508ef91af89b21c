#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "patternsc/io.hpp"

using namespace patternsc;

TEST(Io, PosetRoundTrip) {
  for (const auto& p : enumerate_normal(5)) EXPECT_EQ(poset_from_json(to_json(p)), p);
  const Json j = to_json(commutator_poset(3));
  EXPECT_EQ(j.dump(), R"({"n":3,"relations":[[1,3]]})");
  EXPECT_THROW(poset_from_json(Json::parse(R"({"n":3,"relations":[[1,2],[2,3]]})")), NotAPoset);
}

TEST(Io, PosetFile) {
  const std::string path = testing::TempDir() + "patternsc_io_poset.json";
  {
    std::ofstream out(path);
    out << to_json(t_family(2, 2)).dump();
  }
  EXPECT_EQ(read_poset_file(path), t_family(2, 2));
  std::remove(path.c_str());
  EXPECT_THROW(read_poset_file(path), std::exception);
}

TEST(Io, MatrixRoundTrip) {
  FqUpperMatrix m(full_poset(5), 5, Role::kDual);
  m.set(1, 4, 3);
  m.set(2, 5, 1);
  const Json j = to_json(m);
  EXPECT_EQ(j["role"], "dual");
  EXPECT_EQ(matrix_from_json(j), m);
}

TEST(Io, CyclotomicValue) {
  const CyclotomicRat x(CyclotomicInt::integer(5, 1) + theta(Fp(5, 1)).scaled(2), 3);
  const Json j = to_json(x);
  EXPECT_EQ(j["text"], "(1 + 2*z) / 3");
  EXPECT_EQ(j["array"], Json::parse("[3,1,2,0,0]"));
}

TEST(Io, IndicesAndDot) {
  const Poset poset = commutator_poset(5);
  const auto chars = supercharacters(poset, 2);
  const auto& last = chars.back();
  const Json j = to_json(last);
  for (const char* key : {"lambda", "eta", "functional", "degree", "norm", "irreducible", "poset", "labels", "dot"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_NE(index_label(last).find(';'), std::string::npos);
  const std::string dot = to_dot(index_to_poset(last));
  EXPECT_EQ(dot.rfind("digraph", 0), 0U);
  EXPECT_NE(dot.find("rankdir=BT"), std::string::npos);
  EXPECT_TRUE(to_json(superclasses(poset, 2).front()).contains("size"));
}

TEST(Io, ReportJson) {
  Report r;
  r.subject = "demo";
  r.add("a", true);
  r.add("b", false, "why", true);
  const Json j = to_json(r);
  EXPECT_EQ(j["passed"], true);
  EXPECT_FALSE(j["checks"][0].contains("expected_negative"));
  EXPECT_EQ(j["checks"][1]["expected_negative"], true);
}

TEST(Io, TableWriters) {
  const Oracle oracle(full_poset(3), 2);
  const auto table = character_table(oracle);
  std::vector<std::string> rows, cols;
  for (std::size_t r = 0; r < table.rows(); ++r) rows.push_back("r" + std::to_string(r));
  for (std::size_t c = 0; c < table.cols(); ++c) cols.push_back("c" + std::to_string(c));
  std::ostringstream tsv, jsonl;
  write_tsv(tsv, table, rows, cols);
  write_jsonl(jsonl, table, rows, cols);
  std::size_t tsv_lines = 0, json_lines = 0;
  for (char ch : tsv.str()) tsv_lines += ch == '\n';
  for (char ch : jsonl.str()) json_lines += ch == '\n';
  EXPECT_EQ(tsv_lines, table.rows() + 1);
  EXPECT_EQ(json_lines, table.rows());
  std::istringstream in(jsonl.str());
  std::string line;
  std::getline(in, line);
  EXPECT_TRUE(Json::parse(line).is_object());
}
