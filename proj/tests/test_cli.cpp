#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "narayana/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = narayana::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> no_cache(std::vector<std::string> args) {
  args.insert(args.begin(), "--no-cache");
  return args;
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / "narayana-cli-test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Cli, PolyPlain) {
  auto r = run(no_cache({"poly", "--n", "3", "--m", "2"}));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1 3 1\n");
  EXPECT_EQ(run(no_cache({"poly", "--n", "1", "--m", "5"})).out, "1\n");
}

TEST(Cli, PolyJson) {
  auto r = run(no_cache({"poly", "--n", "4", "--m", "3", "--format", "json"}));
  ASSERT_EQ(r.code, 0);
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["catalan"], "462");
  EXPECT_EQ(doc["coefficients"],
            nlohmann::json::array({"1", "22", "113", "190", "113", "22", "1"}));
  EXPECT_EQ(doc["degree"], 6);
  EXPECT_EQ(doc["real_rooted"], true);
  EXPECT_EQ(doc["newton"], true);
}

TEST(Cli, PolyCsv) {
  auto r = run(no_cache({"poly", "--n", "3", "--m", "2", "--format", "csv"}));
  EXPECT_EQ(r.out, "n,m,k,coefficient\n3,2,0,1\n3,2,1,3\n3,2,2,1\n");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run(no_cache({"poly", "--n", "3"})).code, 2);
  EXPECT_EQ(run(no_cache({"poly", "--n", "-1", "--m", "2"})).code, 2);
  EXPECT_EQ(run(no_cache({"poly", "--n", "3", "--m", "2", "--format", "xml"})).code, 2);
  EXPECT_EQ(run({"analyze", "--coeffs", "0,0"}).code, 2);
  EXPECT_EQ(run({"analyze", "--coeffs", "1,a"}).code, 2);
  EXPECT_EQ(run(no_cache({"enumerate", "--kind", "words"})).code, 2);
  EXPECT_EQ(run(no_cache({"wpoly"})).code, 2);
  EXPECT_EQ(run(no_cache({"wpoly", "--shape", "2,2", "--labeling", "1,1,2,3"})).code, 2);
}

TEST(Cli, BudgetExceeded) {
  auto r = run(no_cache({"poly", "--n", "12", "--m", "2", "--cell-budget", "20"}));
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("exceeded"), std::string::npos);
  EXPECT_EQ(run(no_cache({"verify", "--suite", "ordergf", "--max-cells", "9"})).code, 3);
  EXPECT_EQ(run(no_cache({"poly", "--n", "6", "--m", "4"})).code, 3);
}

TEST(Cli, VerifySuites) {
  auto r = run(no_cache({"verify", "--suite", "sulanke", "--max-cells", "6"}));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("summary: suite=sulanke"), std::string::npos);
  EXPECT_NE(r.out.find("failed=0"), std::string::npos);
  auto all = run(no_cache({"verify", "--max-cells", "6"}));
  EXPECT_EQ(all.code, 0);
  for (const char* suite : {"theorem21", "sulanke", "realrooted", "eq33", "ordergf"}) {
    EXPECT_NE(all.out.find(suite), std::string::npos) << suite;
  }
}

TEST(Cli, Analyze) {
  auto r = run({"analyze", "--coeffs", "1,1,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("real_rooted=false"), std::string::npos);
  EXPECT_NE(r.out.find("log_concave=true"), std::string::npos);
  EXPECT_NE(r.out.find("newton=false"), std::string::npos);
  auto j = run({"analyze", "--coeffs", "1,3,1", "--format", "json"});
  ASSERT_EQ(j.code, 0);
  EXPECT_EQ(nlohmann::json::parse(j.out)["real_rooted"], true);
}

TEST(Cli, Enumerate) {
  auto words = run(no_cache({"enumerate", "--kind", "words", "--n", "2", "--m", "2"}));
  EXPECT_EQ(words.out, "1122\n1212\n");
  auto syt = run(no_cache({"enumerate", "--kind", "syt", "--shape", "2,1"}));
  EXPECT_EQ(syt.out, "1,2;3\n1,3;2\n");
  auto paths = run(no_cache({"enumerate", "--kind", "paths", "--n", "3", "--m", "2", "--limit", "2"}));
  EXPECT_EQ(paths.out, "212121\n212211\n");
}

TEST(Cli, WpolyFromShapeAndFile) {
  EXPECT_EQ(run(no_cache({"wpoly", "--shape", "4,2,1"})).out, "0 0 15 20\n");
  auto file = scratch("antichain.txt");
  std::ofstream(file) << "size 3\n";
  auto r = run(no_cache({"wpoly", "--poset", file.string(), "--format", "json"}));
  ASSERT_EQ(r.code, 0);
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["coefficients"], nlohmann::json::array({"1", "4", "1"}));
  EXPECT_EQ(doc["natural_labeling"], true);
  EXPECT_EQ(run(no_cache({"wpoly", "--poset", scratch("missing.txt").string()})).code, 2);
}

TEST(Cli, CacheHitReturnsSameOutput) {
  auto cache = scratch("cli-cache.json");
  fs::remove(cache);
  auto first = run({"--cache", cache.string(), "poly", "--n", "4", "--m", "3", "--format", "json"});
  ASSERT_EQ(first.code, 0);
  ASSERT_TRUE(fs::exists(cache));
  auto second = run({"--cache", cache.string(), "poly", "--n", "4", "--m", "3", "--format", "json"});
  EXPECT_EQ(second.out, first.out);
  std::ofstream(cache) << "garbage";
  auto third = run({"--cache", cache.string(), "poly", "--n", "3", "--m", "2"});
  EXPECT_EQ(third.code, 0);
  EXPECT_EQ(third.out, "1 3 1\n");
  EXPECT_NE(third.err.find("warning"), std::string::npos);
  fs::remove(cache);
}

TEST(Cli, ConfigFile) {
  auto config = scratch("narayana.toml");
  std::ofstream(config) << "cell-budget = 4\nno-cache = true\n";
  EXPECT_EQ(run({"--config", config.string(), "poly", "--n", "3", "--m", "2"}).code, 3);
  fs::remove(config);
}
