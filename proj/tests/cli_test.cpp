#include "cli.hpp"

#include <gtest/gtest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "nu3/report.hpp"

namespace nu3 {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(CliCompute, BaseCase) {
  const Result r = run({"compute", "1", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["S"], "3");
  EXPECT_EQ(j["valuation"], 1);
  EXPECT_EQ(j["predicted"], 1);
  EXPECT_EQ(j["parity"], "odd");
  EXPECT_EQ(j["digit_argument"], "0");
  EXPECT_TRUE(j["match"].get<bool>());
}

TEST(CliCompute, ZeroIsFlagged) {
  const Result r = run({"compute", "0", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["S"], "1");
  EXPECT_EQ(j["valuation"], 0);
  EXPECT_FALSE(j["in_theorem_range"].get<bool>());
  EXPECT_NE(run({"compute", "0"}).out.find("outside the theorem's range"), std::string::npos);
}

TEST(CliCompute, TwoInTable) {
  const Result r = run({"compute", "2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("S_n            = 21\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("nu_3(S_n)      = 1\n"), std::string::npos);
  EXPECT_NE(r.out.find("predicted      = 1\n"), std::string::npos);
}

TEST(CliCompute, UsageErrors) {
  EXPECT_EQ(run({"compute", "12x"}).code, cli::kUsageError);
  EXPECT_EQ(run({"compute", "-3"}).code, cli::kUsageError);
  EXPECT_EQ(run({"compute"}).code, cli::kUsageError);
  EXPECT_EQ(run({"compute", "5", "--format", "xml"}).code, cli::kUsageError);
  EXPECT_EQ(run({"compute", "1000000000000000000"}).code, cli::kUsageError);
  EXPECT_EQ(run({}).code, cli::kUsageError);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsageError);
}

TEST(CliCompute, PredictedOnlyHandlesHugeN) {
  const Result r = run({"compute", "--predicted-only", "1000000000000000000", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["predicted"], 40);
  EXPECT_TRUE(j["S"].is_null());
  EXPECT_LT(j["predict_elapsed_ns"].get<long long>(), 1000000);
  const std::string googol_plus_one = "1" + std::string(99, '0') + "1";
  EXPECT_EQ(run({"compute", "--predicted-only", googol_plus_one}).code, 0);
}

TEST(CliCompute, FullIntegersFlag) {
  const Result elided = run({"compute", "12000", "--format", "json"});
  ASSERT_EQ(elided.code, 0);
  const std::string s = nlohmann::json::parse(elided.out)["S"];
  EXPECT_EQ(s.front(), '<');
  EXPECT_NE(s.find("-digit integer>"), std::string::npos);
  const Result full = run({"compute", "12000", "--format", "json", "--full-integers"});
  EXPECT_GT(nlohmann::json::parse(full.out)["S"].get<std::string>().size(), kElideDigits);
}

TEST(CliTerms, Rows) {
  Result r = run({"terms", "2", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "r,value,valuation,lower_bound,dominant\n0,9,2,2,false\n1,12,1,-,true\n");

  r = run({"terms", "1", "--format", "json"});
  auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["terms"].size(), 1U);
  EXPECT_EQ(j["terms"][0]["valuation"], 1);
  EXPECT_TRUE(j["terms"][0]["dominant"].get<bool>());

  r = run({"terms", "4", "--format", "json"});
  j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["terms"][2]["valuation"], 2);
  EXPECT_EQ(j["terms"][2]["value"], "360");
  EXPECT_TRUE(j["terms"][2]["dominant"].get<bool>());

  EXPECT_EQ(run({"terms", "0"}).code, cli::kUsageError);
}

TEST(CliTerms, LargeNUsesValuationPath) {
  const Result r = run({"terms", "30001", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["terms"].size(), 15001U);
  EXPECT_TRUE(j["terms"][15000]["value"].is_null());
  EXPECT_EQ(j["terms"][15000]["valuation"], 1 + 10);  // s_3(15000) = 10
}

TEST(CliVerify, SuitesAndExitCodes) {
  EXPECT_EQ(run({"verify", "theorem", "--from", "1", "--to", "80", "--jobs", "2"}).code, 0);
  EXPECT_EQ(run({"verify", "macmahon", "--n-max", "20", "--xy-max", "3"}).code, 0);
  EXPECT_EQ(run({"verify", "eq1", "--k-max", "300"}).code, 0);
  EXPECT_EQ(run({"verify", "dominance", "--n-max", "60"}).code, 0);
  EXPECT_EQ(run({"verify", "subadditivity", "--trials", "100", "--n-max", "30"}).code, 0);
  EXPECT_EQ(run({"verify", "rewriting"}).code, 0);
  EXPECT_EQ(run({"verify", "legendre", "--n-max", "1000"}).code, 0);

  EXPECT_EQ(run({"verify", "theorem", "--from", "1", "--to", "0"}).code, cli::kUsageError);
  EXPECT_EQ(run({"verify", "theorem", "--from", "0", "--to", "3"}).code, cli::kUsageError);
  EXPECT_EQ(run({"verify", "nonsense"}).code, cli::kUsageError);
  EXPECT_EQ(run({"verify", "all", "--n-max", "3"}).code, cli::kUsageError);
  EXPECT_EQ(run({"verify", "dominance", "--n-max", "1"}).code, cli::kUsageError);
}

TEST(CliVerify, JsonReportIsDeterministic) {
  const std::vector<std::string> args = {"verify", "subadditivity", "--trials", "300", "--seed", "9",
                                         "--n-max", "20", "--format", "json"};
  const Result a = run(args);
  const Result b = run(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["suites"][0]["parameters"]["seed"], "9");
  EXPECT_TRUE(j["passed"].get<bool>());
}

TEST(CliSweep, CsvAndFiles) {
  Result r = run({"sweep", "1", "10", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  std::istringstream is(r.out);
  const auto rows = read_sweep_csv(is);
  ASSERT_EQ(rows.size(), 10U);
  for (const auto& row : rows) EXPECT_TRUE(row.match);

  const auto path = std::filesystem::temp_directory_path() / "nu3_cli_sweep_test.csv";
  r = run({"sweep", "--from", "3", "--to", "5", "--out", path.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream file(path);
  EXPECT_EQ(read_sweep_csv(file).size(), 3U);
  std::filesystem::remove(path);

  EXPECT_EQ(run({"sweep", "5", "1"}).code, cli::kUsageError);
  EXPECT_EQ(run({"sweep", "0", "1"}).code, cli::kUsageError);
  EXPECT_EQ(run({"sweep", "1", "3", "--out", "/nonexistent-dir/x.csv"}).code, cli::kIoError);
}

}  // namespace
}  // namespace nu3
