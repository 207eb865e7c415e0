#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include "json.hpp"

#include "jaco/export.hpp"
#include "jaco/oracles.hpp"

namespace jaco {
namespace {

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(JACO_GOLDEN_DIR) + "/" + name, std::ios::binary);
  EXPECT_TRUE(in) << "missing golden " << name;
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(DotTest, Examples) {
  EXPECT_EQ(to_dot(build(Order(1), 3)), "digraph jaco_a1_n3 {\n  v1 -> v2;\n  v2 -> v3;\n}\n");
  EXPECT_EQ(to_dot(build(Order(1), 1)), "digraph jaco_a1_n1 {\n  v1;\n}\n");
  EXPECT_EQ(to_dot(build(Order(2), 4)),
            "digraph jaco_a2_n4 {\n  v1 -> v2;\n  v1 -> v3;\n  v2 -> v3;\n  v2 -> v4;\n"
            "  v3 -> v4;\n}\n");
}

TEST(JsonTest, Examples) {
  EXPECT_EQ(to_json(build(Order(1), 3)),
            "{\"a\":1,\"n\":3,\"edges\":[[1,2],[2,3]],\"in_degree\":[0,1,1],"
            "\"out_degree\":[1,1,0],\"total_degree\":[1,2,1],\"delta\":2,\"jaconian\":[2],"
            "\"prime\":2,\"hope\":[3,3]}\n");
  const auto single = nlohmann::json::parse(to_json(build(Order(1), 1)));
  EXPECT_TRUE(single["edges"].empty());
  EXPECT_EQ(single["delta"], 0);
  EXPECT_EQ(single["jaconian"], nlohmann::json::array({1}));
  EXPECT_EQ(single["prime"], 1);
  EXPECT_TRUE(single["hope"].is_null());

  const auto j = nlohmann::json::parse(to_json(build(Order(2), 4)));
  EXPECT_EQ(j["delta"], 3);
  EXPECT_EQ(j["jaconian"], nlohmann::json::array({2, 3}));
  EXPECT_EQ(j["prime"], 2);
}

TEST(JsonTest, RoundTripArcSet) {
  for (Int a = 1; a <= 4; ++a) {
    for (Int n : {1, 2, 9, 64, 250}) {
      const JacoGraph g = build(Order(a), n);
      const auto doc = nlohmann::json::parse(to_json(g));
      ASSERT_EQ(doc["a"], a);
      ASSERT_EQ(doc["n"], n);
      std::vector<std::pair<Int, Int>> arcs;
      for (const auto& e : doc["edges"]) arcs.emplace_back(e[0].get<Int>(), e[1].get<Int>());
      ASSERT_EQ(arcs, oracle::arc_list(g)) << "a=" << a << " n=" << n;
      const DegreeProfile p = degree_profile(g);
      for (Int i = 1; i <= n; ++i)
        ASSERT_EQ(doc["total_degree"][static_cast<std::size_t>(i - 1)].get<Int>(), p.at(i).total);
    }
  }
}

TEST(CsvTest, Examples) {
  EXPECT_EQ(to_csv(build(Order(1), 3)), "tail,head\n1,2\n2,3\n");
  EXPECT_EQ(to_csv(build(Order(1), 1)), "tail,head\n");
  EXPECT_EQ(to_csv(build(Order(2), 4)), "tail,head\n1,2\n1,3\n2,3\n2,4\n3,4\n");
}

TEST(SeqDumpTest, Examples) {
  const std::string header = "n\tc\td_minus\td_plus\treach\n";
  EXPECT_EQ(seq_dump(SequenceTable(Order(1), 3)),
            header + "0\t0\t0\t0\t0\n1\t1\t0\t1\t2\n2\t1\t1\t1\t3\n3\t2\t1\t2\t5\n");
  EXPECT_EQ(seq_dump(SequenceTable(Order(2), 1)), header + "0\t0\t0\t0\t0\n1\t1\t0\t2\t3\n");
  EXPECT_EQ(seq_dump(SequenceTable(Order(1), 0)), header + "0\t0\t0\t0\t0\n");
}

TEST(FormatTest, Parse) {
  EXPECT_EQ(parse_export_format("dot"), ExportFormat::dot);
  EXPECT_EQ(parse_export_format("json"), ExportFormat::json);
  EXPECT_EQ(parse_export_format("csv"), ExportFormat::csv);
  EXPECT_EQ(parse_export_format("tsv-seq"), ExportFormat::tsv_seq);
  EXPECT_THROW(parse_export_format("graphml"), DomainError);
}

TEST(FormatTest, PrefixSharesTableButExportsOwnSize) {
  const JacoGraph full = build(Order(1), 50);
  EXPECT_EQ(to_dot(full.prefix(8)), to_dot(build(Order(1), 8)));
  EXPECT_EQ(to_json(full.prefix(8)), to_json(build(Order(1), 8)));
}

class GoldenTest : public testing::TestWithParam<std::pair<Int, Int>> {};

TEST_P(GoldenTest, ByteIdentical) {
  const auto [a, n] = GetParam();
  const std::string stem = "a" + std::to_string(a) + "_n" + std::to_string(n);
  const JacoGraph g = build(Order(a), n);
  EXPECT_EQ(render(g, ExportFormat::dot), read_golden(stem + ".dot"));
  EXPECT_EQ(render(g, ExportFormat::json), read_golden(stem + ".json"));
  EXPECT_EQ(render(g, ExportFormat::csv), read_golden(stem + ".csv"));
  EXPECT_EQ(seq_dump(SequenceTable(Order(a), n)), read_golden(stem + ".tsv"));
}

INSTANTIATE_TEST_SUITE_P(Committed, GoldenTest,
                         testing::Values(std::pair<Int, Int>{1, 8}, std::pair<Int, Int>{2, 7}));

}  // namespace
}  // namespace jaco
