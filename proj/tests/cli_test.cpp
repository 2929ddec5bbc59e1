#include "subsum/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace subsum::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, Count) {
  const auto r = invoke({"count", "--moduli", "4", "--k", "2", "--target", "0"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "1\n");
  EXPECT_EQ(invoke({"count", "--moduli", "6", "--k", "3", "--target", "9"}).out, "4\n");
  EXPECT_EQ(invoke({"count", "--moduli", "4", "--k", "7", "--target", "0"}).out, "0\n");
}

TEST(Cli, CountRejectsArityMismatch) {
  const auto r = invoke({"count", "--moduli", "2,2", "--k", "2", "--target", "1"});
  EXPECT_EQ(r.code, kUsageError);
  EXPECT_NE(r.err.find("coordinates"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kUsageError);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsageError);
  EXPECT_EQ(invoke({"count", "--moduli", "4", "--k", "2"}).code, kUsageError);
  EXPECT_EQ(invoke({"count", "--moduli", "4,0", "--k", "2", "--target", "0,0"}).code, kUsageError);
  EXPECT_EQ(invoke({"ratio", "--moduli", "4", "--k", "2", "--precision", "0"}).code, kUsageError);
  EXPECT_EQ(invoke({"table", "--moduli", "4", "--k", "2", "--format", "xml"}).code, kUsageError);
  EXPECT_EQ(invoke({"verify", "--max-order", "21", "--oracle", "enum"}).code, kUsageError);
  const auto degenerate = invoke({"ratio", "--moduli", "4", "--k", "0"});
  EXPECT_EQ(degenerate.code, kUsageError);
  EXPECT_NE(degenerate.err.find("1 <= k <= n-1"), std::string::npos);
}

TEST(Cli, HelpExitsCleanly) {
  const auto r = invoke({"--help"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("sweep"), std::string::npos);
}

TEST(Cli, TablePlainCsvJson) {
  EXPECT_EQ(invoke({"table", "--moduli", "2,2", "--k", "2"}).out, "0,0\t0\n0,1\t2\n1,0\t2\n1,1\t2\n");
  EXPECT_EQ(invoke({"table", "--moduli", "4", "--k", "2", "--format", "csv"}).out,
            "element,count\n\"0\",1\n\"1\",2\n\"2\",1\n\"3\",2\n");
  const auto r = invoke({"table", "--moduli", "6", "--k", "3", "--format", "json"});
  ASSERT_EQ(r.code, kOk);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["k"], 3);
  ASSERT_EQ(doc["entries"].size(), 6u);
  EXPECT_EQ(doc["entries"][0]["count"], "4");
  EXPECT_TRUE(doc["entries"][0]["count"].is_string());
  EXPECT_EQ(doc["entries"][5]["element"], nlohmann::json::array({5}));
}

TEST(Cli, JsonKeepsHugeCountsExact) {
  const auto r = invoke({"table", "--moduli", "100", "--k", "50", "--format", "json"});
  const auto doc = nlohmann::json::parse(r.out);
  const std::string first = doc["entries"][0]["count"];
  EXPECT_GT(first.size(), 20u);
}

TEST(Cli, Ratio) {
  const auto coprime = invoke({"ratio", "--moduli", "5", "--k", "2"});
  EXPECT_EQ(coprime.code, kOk);
  EXPECT_NE(coprime.out.find("ratio: 1\n"), std::string::npos);
  EXPECT_NE(coprime.out.find("ratio_decimal: 1.000000000000\n"), std::string::npos);

  const auto z6 = invoke({"ratio", "--moduli", "6", "--k", "3", "--precision", "3", "--format", "json"});
  const auto doc = nlohmann::json::parse(z6.out);
  EXPECT_EQ(doc["ratio"], "3/4");
  EXPECT_EQ(doc["ratio_decimal"], "0.750");
  EXPECT_EQ(doc["min_count"], "3");
  EXPECT_EQ(doc["argmin"], nlohmann::json::array({1}));
}

TEST(Cli, Bounds) {
  const auto even = invoke({"bounds", "--n", "8", "--k", "4"});
  EXPECT_EQ(even.code, kOk);
  EXPECT_NE(even.out.find("main_term: 35/4\n"), std::string::npos);
  EXPECT_NE(even.out.find("deviation_bound: 24\n"), std::string::npos);
  EXPECT_NE(even.out.find("vanishing_expr: "), std::string::npos);
  EXPECT_NE(even.out.find("l_value: "), std::string::npos);

  const auto odd = invoke({"bounds", "--n", "9", "--k", "4", "--format", "json"});
  const auto doc = nlohmann::json::parse(odd.out);
  EXPECT_EQ(doc["main_term"], "14");
  EXPECT_FALSE(doc.contains("deviation_bound"));
  EXPECT_FALSE(doc.contains("vanishing_expr"));
  EXPECT_TRUE(doc.contains("l_value"));

  EXPECT_EQ(invoke({"bounds", "--n", "4", "--k", "5"}).code, kUsageError);
}

TEST(Cli, Verify) {
  const auto r = invoke({"verify", "--max-order", "12", "--oracle", "both"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("all match"), std::string::npos);
  EXPECT_EQ(invoke({"verify", "--max-order", "24", "--oracle", "dp"}).code, kOk);
}

TEST(Cli, SweepToStdoutAndFile) {
  const auto r = invoke({"sweep", "--family", "cyclic", "--orders", "5,4", "--k-rule", "fixed:2"});
  EXPECT_EQ(r.code, kOk);
  std::istringstream lines(r.out);
  std::string header, first, second;
  std::getline(lines, header);
  std::getline(lines, first);
  std::getline(lines, second);
  EXPECT_EQ(header, "family,n,k,min_count,max_count,ratio_decimal,vanishing_expr,l_value");
  EXPECT_EQ(first.rfind("cyclic,4,2,1,2,0.500000000000,", 0), 0u);
  EXPECT_EQ(second.rfind("cyclic,5,2,2,2,1.000000000000,,", 0), 0u);

  const auto path = std::filesystem::temp_directory_path() / "subsum_cli_sweep.csv";
  const auto to_file = invoke({"sweep", "--family", "cyclic", "--orders", "5,4", "--k-rule", "fixed:2", "--out",
                               path.string()});
  EXPECT_EQ(to_file.code, kOk);
  EXPECT_TRUE(to_file.out.empty());
  std::ifstream file(path);
  std::stringstream contents;
  contents << file.rdbuf();
  EXPECT_EQ(contents.str(), r.out);
  std::filesystem::remove(path);
}

TEST(Cli, SweepWarnsAboutInfeasibleOrders) {
  const auto r = invoke({"sweep", "--family", "elementary-2", "--orders", "8,12", "--k-rule", "fixed:4"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.err.find("n=12"), std::string::npos);
  EXPECT_NE(r.out.find("elementary-2,12,4,,,,,\n"), std::string::npos);
  EXPECT_EQ(invoke({"sweep", "--family", "torus", "--orders", "8", "--k-rule", "fixed:4"}).code, kUsageError);
  EXPECT_EQ(invoke({"sweep", "--family", "cyclic", "--orders", "8", "--k-rule", "fixed"}).code, kUsageError);
}

TEST(Cli, Deterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"table", "--moduli", "3,4", "--k", "5", "--format", "json"},
           {"sweep", "--family", "two-factor", "--orders", "16,8,32", "--k-rule", "half-plus-one"},
           {"bounds", "--n", "100", "--k", "4", "--format", "json"}}) {
    EXPECT_EQ(invoke(args).out, invoke(args).out);
  }
}

}  // namespace
}  // namespace subsum::cli
