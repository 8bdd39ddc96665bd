#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rx3/cli.hpp"
#include "rx3/errors.hpp"
#include "rx3/graph_io.hpp"

namespace rx3::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), {}};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("rx3_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, GenThenAnalyzeHairyClique) {
  ASSERT_EQ(invoke({"gen", "--family", "hairy", "--param", "3", "--out", path("g.json")}).code, kOk);
  const auto result = invoke({"analyze", "--in", path("g.json"), "--exact-rx3", "--json"});
  ASSERT_EQ(result.code, kOk) << result.err;
  const auto doc = nlohmann::json::parse(result.out);
  EXPECT_EQ(doc["sdiam3"], 5);
  EXPECT_EQ(doc["rx3_exact"], 5);
  EXPECT_EQ(doc["n"], 6);
  EXPECT_EQ(doc["free_of"]["K1,3"], true);
  EXPECT_EQ(doc["free_of"]["K3h"], false);
  EXPECT_LE(doc["rx3_lower"].get<int>(), doc["rx3_exact"].get<int>());
  EXPECT_LE(doc["rx3_exact"].get<int>(), doc["rx3_upper"].get<int>());

  const auto text = invoke({"analyze", "--in", path("g.json"), "--exact-rx3"});
  EXPECT_NE(text.out.find("rx3_exact: 5"), std::string::npos);
}

TEST_F(CliTest, GenOutputIsStable) {
  for (const std::string ext : {".json", ".txt"}) {
    const std::string first = path("a" + ext);
    const std::string second = path("b" + ext);
    ASSERT_EQ(invoke({"gen", "--family", "cycle", "--param", "7", "--out", first}).code, kOk);
    const Graph g = load_graph(first);
    EXPECT_EQ(g, build_named({FamilyKind::cycle, 7}));
    save_graph(second, g);
    EXPECT_EQ(slurp(first), slurp(second));
  }
}

TEST_F(CliTest, ColorRejectsInducedP4) {
  ASSERT_EQ(invoke({"gen", "--family", "path", "--param", "5", "--out", path("p5.json")}).code, kOk);
  const auto result = invoke({"color", "--in", path("p5.json"), "--method", "thm7", "--r", "3"});
  EXPECT_EQ(result.code, kPreconditionViolated);
  EXPECT_NE(result.err.find("induced P4 on {0,1,2,3}"), std::string::npos) << result.err;
}

TEST_F(CliTest, VerifyDistinctColoringOfStar) {
  ASSERT_EQ(invoke({"gen", "--family", "star", "--param", "4", "--out", path("star4.json")}).code,
            kOk);
  const Graph g = load_graph(path("star4.json"));
  save_coloring(path("distinct.json"), g, EdgeColoring::all_distinct(g));
  const auto result = invoke({"verify", "--graph", path("star4.json"), "--coloring",
                              path("distinct.json")});
  EXPECT_EQ(result.code, kOk);
  EXPECT_EQ(result.out.rfind("valid", 0), 0u);

  save_coloring(path("bad.json"), g, EdgeColoring(g, {1, 1, 2, 3}));
  const auto bad = invoke({"verify", "--graph", path("star4.json"), "--coloring", path("bad.json")});
  EXPECT_EQ(bad.code, kVerificationFailed);
  EXPECT_NE(bad.out.find("invalid: no rainbow tree for {0,1,2}"), std::string::npos) << bad.out;
}

TEST_F(CliTest, ColorThenVerifyRoundTrip) {
  struct Case {
    std::string family;
    std::string param;
    std::vector<std::string> method;
  };
  const std::vector<Case> cases{{"complete", "6", {"--method", "thm7"}},
                                {"star", "5", {"--method", "thm7", "--r", "6", "--save-color"}},
                                {"cycle", "7", {"--method", "layered", "--l", "7"}},
                                {"complete", "5", {"--method", "layered"}}};
  for (const auto& c : cases) {
    ASSERT_EQ(invoke({"gen", "--family", c.family, "--param", c.param, "--out", path("g.txt")}).code,
              kOk);
    std::vector<std::string> args{"color", "--in", path("g.txt"), "--out", path("c.json")};
    args.insert(args.end(), c.method.begin(), c.method.end());
    const auto colored = invoke(args);
    ASSERT_EQ(colored.code, kOk) << c.family << c.param << ": " << colored.err;
    EXPECT_EQ(
        invoke({"verify", "--graph", path("g.txt"), "--coloring", path("c.json")}).code, kOk);
  }
}

TEST_F(CliTest, MalformedInputsExitOne) {
  std::ofstream(path("broken.txt")) << "3 2\n0 1\n";
  EXPECT_EQ(invoke({"analyze", "--in", path("broken.txt")}).code, kMalformedInput);
  std::ofstream(path("broken.json")) << "{\"n\": 3, \"edges\": [[0, 1], [1]]}";
  EXPECT_EQ(invoke({"analyze", "--in", path("broken.json")}).code, kMalformedInput);
  EXPECT_EQ(invoke({"analyze", "--in", path("missing.json")}).code, kMalformedInput);
  EXPECT_EQ(invoke({"frobnicate"}).code, kMalformedInput);
  EXPECT_EQ(invoke({}).code, kMalformedInput);
  EXPECT_EQ(invoke({"gen", "--family", "petersen", "--param", "3"}).code, kMalformedInput);
  EXPECT_EQ(invoke({"gen", "--family", "cycle", "--param", "2"}).code, kMalformedInput);
  EXPECT_EQ(invoke({"bound", "--l", "4"}).code, kMalformedInput);
  EXPECT_EQ(invoke({"classify", "Q7"}).code, kMalformedInput);
  std::ofstream(path("split.txt")) << "4 2\n0 1\n2 3\n";
  const auto split = invoke({"analyze", "--in", path("split.txt")});
  EXPECT_EQ(split.code, kMalformedInput);
  EXPECT_NE(split.err.find("not connected"), std::string::npos);
}

TEST_F(CliTest, BudgetExhaustionPrintsBracket) {
  ASSERT_EQ(invoke({"gen", "--family", "hairy", "--param", "6", "--out", path("h.json")}).code,
            kOk);
  const auto result = invoke({"analyze", "--in", path("h.json"), "--exact-rx3", "--budget", "0"});
  EXPECT_EQ(result.code, kBudgetExceeded);
  EXPECT_NE(result.out.find("budget exceeded, in ["), std::string::npos) << result.out;
}

TEST_F(CliTest, HelpExitsZero) {
  const auto result = invoke({"--help"});
  EXPECT_EQ(result.code, kOk);
  EXPECT_NE(result.out.find("reproduce"), std::string::npos);
}

TEST(Classify, Battery) {
  const std::vector<std::pair<std::vector<std::string>, std::string>> cases{
      {{"P3"}, "bounded (subfamily 1"},
      {{"K1,3", "P4"}, "bounded (subfamily 2"},
      {{"K1,4", "K3", "P6"}, "bounded (subfamily 3"},
      {{"K1,3", "C4"}, "unbounded"},
      {{"K4"}, "unbounded"},
      {{"P5"}, "unbounded"}};
  for (const auto& [patterns, expected] : cases) {
    std::vector<std::string> args{"classify"};
    args.insert(args.end(), patterns.begin(), patterns.end());
    const auto result = invoke(args);
    EXPECT_EQ(result.code, kOk);
    EXPECT_NE(result.out.find(expected), std::string::npos) << result.out;
  }
}

TEST(Bound, JsonValues) {
  const auto result = invoke({"bound", "--r", "3", "--s", "3", "--l", "5", "--json"});
  ASSERT_EQ(result.code, kOk);
  const auto doc = nlohmann::json::parse(result.out);
  EXPECT_EQ(doc["alpha0"][0], "3");
  EXPECT_EQ(doc["alpha0"][1], "45");
  EXPECT_EQ(doc["alpha0"].size(), 3u);
}

TEST(ParsePattern, MiniLanguage) {
  EXPECT_EQ(parse_pattern("P4"), build_named({FamilyKind::path, 4}));
  EXPECT_EQ(parse_pattern("K1,3"), build_named({FamilyKind::star, 3}));
  EXPECT_EQ(parse_pattern("K3h"), build_named({FamilyKind::hairy_clique, 3}));
  EXPECT_EQ(parse_pattern("C5"), build_named({FamilyKind::cycle, 5}));
  EXPECT_EQ(parse_pattern("K4"), build_named({FamilyKind::complete, 4}));
  EXPECT_EQ(parse_pattern("K1").order(), 1);
  EXPECT_EQ(parse_pattern("K2").size(), 1);
  EXPECT_THROW(parse_pattern("K1,"), InputError);
  EXPECT_THROW(parse_pattern("X5"), InputError);
  EXPECT_THROW(parse_pattern("@/nonexistent/graph.json"), InputError);
}

TEST(Reproduce, OnlyTheCycleRowsDeviate) {
  const auto rows = reproduce(std::chrono::seconds(60));
  int cycle_mismatches = 0;
  for (const auto& row : rows) {
    if (row.claim == "sdiam3(C_t)") {
      const int t = std::stoi(row.params.substr(2));
      EXPECT_EQ(row.computed, std::to_string(2 * t / 3)) << row.params;
      EXPECT_EQ(row.verdict, t % 3 == 0 ? "match" : "mismatch") << row.params;
      if (row.verdict == "mismatch") {
        ++cycle_mismatches;
        EXPECT_FALSE(row.note.empty());
      }
    } else {
      EXPECT_NE(row.verdict, "mismatch") << row.claim << " " << row.params;
    }
  }
  EXPECT_EQ(cycle_mismatches, 6);

  const auto csv = reproduce_csv(rows);
  EXPECT_NE(csv.find("rx3(K_n),n=6,3,3,match"), std::string::npos);
  EXPECT_NE(csv.find("rx3(K1_t),t=5,5,5,match"), std::string::npos);
  EXPECT_NE(csv.find("rx3(K_t^h) lower bound,t=3,>=5,5,bound-satisfied"), std::string::npos);
}

}  // namespace
}  // namespace rx3::cli
