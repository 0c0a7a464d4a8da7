#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "breadthkit/document.hpp"
#include "breadthkit/error.hpp"
#include "breadthkit/generators.hpp"
#include "cli.hpp"

namespace breadthkit {
namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("breadthkit_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& contents) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << contents;
    return p.string();
  }

  int run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return cli::run(args, out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

const char* kCycle = "0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n";

TEST_F(Cli, DecomposeWithExplicitPath) {
  const std::string g = file("c6.txt", kCycle);
  ASSERT_EQ(run({"decompose", g, "--path", "0,1,2,3"}), cli::kSuccess) << err_.str();
  const auto doc = nlohmann::json::parse(out_.str());
  EXPECT_EQ(doc["centers"], nlohmann::json::array({0, 2}));
  EXPECT_EQ(doc["radius"], 2);
  EXPECT_EQ(doc["bags"], nlohmann::json::parse("[[0,1,2,4,5],[0,1,2,3,4]]"));
  EXPECT_NE(err_.str().find("strong_breadth=2"), std::string::npos);
}

TEST_F(Cli, DecomposeIsDeterministic) {
  const std::string g = file("c6.txt", kCycle);
  ASSERT_EQ(run({"decompose", g}), cli::kSuccess);
  const std::string first = out_.str();
  ASSERT_EQ(run({"decompose", g}), cli::kSuccess);
  EXPECT_EQ(out_.str(), first);
}

TEST_F(Cli, DecomposePathGraphWithExactFinder) {
  const std::string g = file("p5.txt", "0 1\n1 2\n2 3\n3 4\n");
  ASSERT_EQ(run({"decompose", g, "--finder", "exact-small"}), cli::kSuccess) << err_.str();
  EXPECT_EQ(nlohmann::json::parse(out_.str())["radius"], 1);
  EXPECT_NE(err_.str().find("strong_breadth=1"), std::string::npos);
}

TEST_F(Cli, DecomposeRejectsNonShortestPath) {
  const std::string g = file("c6.txt", kCycle);
  EXPECT_EQ(run({"decompose", g, "--path", "0,1,2,3,4"}), cli::kPreconditionFailed);
}

TEST_F(Cli, ValidateRoundTrip) {
  const std::string g = file("c6.txt", kCycle);
  const std::string doc = (dir_ / "phi.json").string();
  ASSERT_EQ(run({"decompose", g, "--path", "0,1,2,3", "-o", doc}), cli::kSuccess);
  ASSERT_EQ(run({"validate", g, "-d", doc}), cli::kSuccess) << out_.str() << err_.str();
  EXPECT_NE(out_.str().find("Valid"), std::string::npos);
  EXPECT_NE(out_.str().find("breadth=2"), std::string::npos);
  EXPECT_NE(out_.str().find("strong_breadth=2"), std::string::npos);
}

TEST_F(Cli, ValidateReportsViolationAndMalformedInput) {
  const std::string g = file("p3.txt", "0 1\n1 2\n");
  const std::string bad = file("bad.json", R"({"bags": [[0,1],[1,2],[0,1]]})");
  EXPECT_EQ(run({"validate", g, "-d", bad}), cli::kInvalidDecomposition);
  EXPECT_NE(out_.str().find("NonConsecutive"), std::string::npos);

  const std::string empty = file("empty.json", R"({"bags": [[]]})");
  EXPECT_EQ(run({"validate", g, "-d", empty}), cli::kInputError);
  const std::string junk = file("junk.json", "{not json");
  EXPECT_EQ(run({"validate", g, "-d", junk}), cli::kInputError);
  EXPECT_EQ(run({"validate", (dir_ / "missing.txt").string(), "-d", bad}), cli::kInputError);
}

TEST_F(Cli, LabelsArePreserved) {
  const std::string g = file("labels.txt", "10 20\n20 30\n");
  ASSERT_EQ(run({"decompose", g, "--path", "10,20,30"}), cli::kSuccess) << err_.str();
  const std::string doc = file("doc.json", out_.str());
  EXPECT_EQ(nlohmann::json::parse(out_.str())["bags"][0], nlohmann::json::array({10, 20}));
  EXPECT_EQ(run({"validate", g, "-d", doc}), cli::kSuccess) << out_.str();
}

TEST_F(Cli, Graph6Input) {
  const std::string g = file("star.g6", "D?{\n");
  EXPECT_EQ(run({"oracle", "spb", g}), cli::kSuccess) << err_.str();
  EXPECT_EQ(nlohmann::json::parse(out_.str())["parameter"], 1);
  const std::string txt = file("star.txt", "D?{\n");
  EXPECT_EQ(run({"oracle", "pb", txt, "--format", "graph6"}), cli::kSuccess) << err_.str();
}

TEST_F(Cli, OracleRespectsCap) {
  const std::string g = file("p9.txt", "0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 8\n");
  EXPECT_EQ(run({"oracle", "pb", g}), cli::kPreconditionFailed);
}

TEST_F(Cli, AtFree) {
  const std::string c6 = file("c6.txt", kCycle);
  EXPECT_EQ(run({"atfree", c6}), cli::kPreconditionFailed);
  EXPECT_NE(err_.str().find("witness=0,2,4"), std::string::npos);
  const std::string p7 = file("p7.txt", "0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n");
  EXPECT_EQ(run({"atfree", p7}), cli::kSuccess);
  EXPECT_EQ(nlohmann::json::parse(out_.str())["radius"], 1);
}

TEST_F(Cli, Sweep) {
  ASSERT_EQ(run({"sweep", "--n", "3"}), cli::kSuccess);
  EXPECT_NE(out_.str().find("ALL-HOLD graphs=2"), std::string::npos);
  ASSERT_EQ(run({"sweep", "--n", "1"}), cli::kSuccess);
  EXPECT_NE(out_.str().find("ALL-HOLD graphs=1"), std::string::npos);
  EXPECT_EQ(run({"sweep", "--n", "8"}), cli::kPreconditionFailed);
  EXPECT_EQ(run({"sweep"}), cli::kInputError);

  const std::string corpus = file("corpus.g6", "A_\nBw\nC~\n");
  ASSERT_EQ(run({"sweep", "--corpus", corpus}), cli::kSuccess);
  EXPECT_NE(out_.str().find("ALL-HOLD graphs=3"), std::string::npos);
}

TEST_F(Cli, Bench) {
  ASSERT_EQ(run({"bench", "--family", "cycle", "--sizes", "1000"}), cli::kSuccess);
  EXPECT_NE(out_.str().find("OK"), std::string::npos);
  ASSERT_EQ(run({"bench", "--family", "grid", "--sizes", "100,400"}), cli::kSuccess);
  EXPECT_EQ(run({"bench", "--family", "tree", "--sizes", "10"}), cli::kInputError);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({}), cli::kInputError);
  EXPECT_EQ(run({"frobnicate"}), cli::kInputError);
  const std::string bad = file("bad.txt", "0 1\n1 x\n");
  EXPECT_EQ(run({"decompose", bad}), cli::kInputError);
  const std::string split = file("split.txt", "0 1\n2 3\n");
  EXPECT_EQ(run({"decompose", split}), cli::kInputError);
}

TEST(Document, ParseAndSerialize) {
  const auto doc = parse_document(R"({"bags":[[2,1],[3]],"centers":[1,3],"radius":1,"parameter":1})");
  EXPECT_EQ(doc.bags.size(), 2u);
  EXPECT_EQ(doc.centers, (std::vector<std::int64_t>{1, 3}));
  EXPECT_EQ(serialize(doc), R"({"bags":[[1,2],[3]],"centers":[1,3],"parameter":1,"radius":1})");
  for (const char* bad : {"[]", R"({"bags":3})", R"({"bags":[[1,"x"]]})", R"({"bags":[[]]})", R"({"bags":[[1]],"radius":"a"})"}) {
    try {
      parse_document(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::MalformedDocument);
    }
  }
}

TEST(Document, UnknownLabel) {
  const Graph g = path_graph(3);
  EXPECT_THROW(to_decomposition(g, parse_document(R"({"bags":[[0,7]]})")), Error);
}

}  // namespace
}  // namespace breadthkit
