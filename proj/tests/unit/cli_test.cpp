#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "commands.hpp"

namespace quatype::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "quatype");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& text) { return text.substr(0, text.find('\n')); }

TEST(CliVerify, AllPassesAtDefaultSignature) {
  const auto r = run_cli({"verify", "--p", "2", "--q", "2", "--suite", "all", "--seed", "42"});
  EXPECT_EQ(r.code, kSuccess) << r.out << r.err;
  EXPECT_NE(r.out.find("0 failed"), std::string::npos);
}

TEST(CliVerify, InvalidSignatureIsUsageError) {
  EXPECT_EQ(run_cli({"verify", "--p", "0", "--q", "0"}).code, kUsageError);
  EXPECT_EQ(run_cli({"verify", "--p", "13", "--q", "0"}).code, kUsageError);
  EXPECT_EQ(run_cli({"verify", "--p", "-1"}).code, kUsageError);
}

TEST(CliVerify, BadFlagsAreUsageErrors) {
  EXPECT_EQ(run_cli({"verify", "--suite", "bogus"}).code, kUsageError);
  EXPECT_EQ(run_cli({"verify", "--format", "xml"}).code, kUsageError);
  EXPECT_EQ(run_cli({"verify", "--samples", "-3"}).code, kUsageError);
  EXPECT_EQ(run_cli({"verify", "--tol", "abc"}).code, kUsageError);
  EXPECT_EQ(run_cli({"verify", "--unknown"}).code, kUsageError);
  EXPECT_EQ(run_cli({}).code, kUsageError);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kUsageError);
  EXPECT_EQ(run_cli({"verify", "--strategy", "random", "--samples", "0"}).code, kUsageError);
}

TEST(CliVerify, HelpShowsDefaults) {
  const auto r = run_cli({"verify", "--help"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_NE(r.out.find("[200]"), std::string::npos);
  EXPECT_NE(r.out.find("[1e-12]"), std::string::npos);
  EXPECT_NE(r.out.find("[0]"), std::string::npos);
}

TEST(CliVerify, RankCoincidenceInLowDimension) {
  const auto r = run_cli({"verify", "--p", "1", "--q", "0", "--suite", "rank"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_NE(r.out.find("PASS  rank"), std::string::npos);
}

TEST(CliVerify, RankSkippedInHighDimension) {
  const auto r = run_cli({"verify", "--p", "4", "--q", "0", "--suite", "rank"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_NE(r.out.find("SKIPPED  rank"), std::string::npos);
}

TEST(CliVerify, JsonReport) {
  const auto r = run_cli({"verify", "--p", "2", "--q", "1", "--suite", "theorems", "--format",
                          "json", "--seed", "7"});
  ASSERT_EQ(r.code, kSuccess);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["signature"]["p"], 2);
  EXPECT_EQ(doc["seed"], 7);
  EXPECT_EQ(doc["summary"]["fail"], 0);
  EXPECT_EQ(doc["reports"].size(), 43u + 1u + 4u + 4u);
  EXPECT_TRUE(doc["reports"][0]["counterexample"].is_null());
}

TEST(CliVerify, JsonIsByteIdenticalAcrossRuns) {
  const std::vector<std::string> args{"verify", "--suite", "all", "--seed", "42", "--format",
                                      "json"};
  EXPECT_EQ(run_cli(args).out, run_cli(args).out);
}

TEST(CliTable, Cells) {
  auto cell = [](const std::string& op, int i, int j) {
    const auto r = run_cli({"table", "--op", op, "--format", "json"});
    EXPECT_EQ(r.code, kSuccess);
    return nlohmann::json::parse(r.out)["cells"][i][j].get<std::string>();
  };
  EXPECT_EQ(cell("anticomm", 0, 0), "0");
  EXPECT_EQ(cell("comm", 0, 0), "2");
  EXPECT_EQ(cell("product", 0, 0), "02");
  EXPECT_EQ(cell("product", 0, 1), "13");
}

TEST(CliTable, JsonSchema) {
  const auto doc = nlohmann::json::parse(run_cli({"table", "--op", "comm", "--format", "json"}).out);
  EXPECT_EQ(doc["op"], "comm");
  ASSERT_EQ(doc["order"].size(), 15u);
  EXPECT_EQ(doc["order"][14], "0123");
  ASSERT_EQ(doc["cells"].size(), 15u);
  for (const auto& row : doc["cells"]) EXPECT_EQ(row.size(), 15u);
}

TEST(CliTable, CsvAndMarkdown) {
  const auto csv = run_cli({"table", "--op", "product", "--format", "csv"});
  EXPECT_EQ(first_line(csv.out), "product,0,1,2,3,01,02,03,12,13,23,012,013,023,123,0123");
  const auto md = run_cli({"table", "--op", "anticomm"});
  EXPECT_EQ(md.code, kSuccess);
  EXPECT_EQ(md.out.find("| anticomm |"), 0u);
  EXPECT_EQ(run_cli({"table", "--op", "product"}).out, run_cli({"table", "--op", "product"}).out);
  EXPECT_EQ(run_cli({"table", "--op", "wedge"}).code, kUsageError);
}

TEST(CliType, Classification) {
  auto r = run_cli({"type", "--p", "4", "--q", "0", "--expr", "1 + e1234"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_NE(r.out.find("type: 0\n"), std::string::npos);
  EXPECT_NE(r.out.find("parity: even"), std::string::npos);
  r = run_cli({"type", "--p", "2", "--q", "0", "--expr", "e1 + 2e12"});
  EXPECT_NE(r.out.find("type: 12\n"), std::string::npos);
  EXPECT_NE(r.out.find("parity: mixed"), std::string::npos);
  r = run_cli({"type", "--p", "2", "--q", "0", "--expr", "(0+1i) + e12"});
  EXPECT_NE(r.out.find("pattern: 2+i0"), std::string::npos);
  r = run_cli({"type", "--p", "2", "--q", "0", "--expr", "0"});
  EXPECT_NE(r.out.find("type: {}"), std::string::npos);
  EXPECT_NE(r.out.find("parity: zero"), std::string::npos);
}

TEST(CliType, Errors) {
  auto r = run_cli({"type", "--p", "2", "--q", "0", "--expr", "e21"});
  EXPECT_EQ(r.code, kUsageError);
  EXPECT_NE(r.err.find("position 2"), std::string::npos);
  EXPECT_EQ(run_cli({"type", "--p", "2", "--q", "0"}).code, kUsageError);
  EXPECT_EQ(run_cli({"type", "--expr", "e1"}).code, kUsageError);
  EXPECT_EQ(run_cli({"type", "--p", "2", "--q", "0", "--expr", "e1", "--input", "x.json"}).code,
            kUsageError);
  EXPECT_EQ(run_cli({"type", "--input", "/nonexistent/file.json"}).code, kUsageError);
}

TEST(CliType, DocumentInput) {
  const std::string path = ::testing::TempDir() + "quatype_cli_doc.json";
  {
    std::ofstream f(path);
    f << R"({"p":3,"q":0,"field":"C","terms":[{"blade":[1,2],"re":0,"im":2}]})";
  }
  auto r = run_cli({"type", "--input", path});
  EXPECT_EQ(r.code, kSuccess) << r.err;
  EXPECT_NE(r.out.find("pattern: i2"), std::string::npos);
  EXPECT_EQ(run_cli({"type", "--input", path, "--p", "2"}).code, kUsageError);
  std::remove(path.c_str());
}

TEST(CliEval, Examples) {
  auto r = run_cli({"eval", "--p", "3", "--q", "0", "--op", "comm", "--lhs", "e12", "--rhs", "e1"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(first_line(r.out), "-2e2");
  r = run_cli({"eval", "--op", "conj", "--lhs", "(0+1i)e1", "--p", "1", "--q", "0"});
  EXPECT_EQ(first_line(r.out), "(0-1i)e1");
  r = run_cli({"eval", "--op", "exp", "--lhs", "0e1", "--p", "1", "--q", "0"});
  EXPECT_EQ(first_line(r.out), "1");
}

TEST(CliEval, DocumentOutputRoundTrips) {
  const auto r =
      run_cli({"eval", "--p", "2", "--q", "0", "--op", "gp", "--lhs", "e1 + 0.1", "--rhs", "e2"});
  const auto doc = nlohmann::json::parse(r.out.substr(r.out.find('\n') + 1));
  EXPECT_EQ(doc["field"], "R");
  EXPECT_EQ(doc["terms"].size(), 2u);
}

TEST(CliEval, MixedFieldsPromote) {
  const auto r = run_cli(
      {"eval", "--p", "2", "--q", "0", "--op", "anticomm", "--lhs", "(0+1i)e1", "--rhs", "e1"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(first_line(r.out), "(0+2i)");
}

TEST(CliEval, Errors) {
  EXPECT_EQ(run_cli({"eval", "--p", "2", "--q", "0", "--op", "gp", "--lhs", "e1"}).code,
            kUsageError);
  EXPECT_EQ(run_cli({"eval", "--p", "2", "--q", "0", "--op", "conj", "--lhs", "e1", "--rhs",
                     "e2"})
                .code,
            kUsageError);
  EXPECT_EQ(run_cli({"eval", "--p", "2", "--q", "0", "--op", "gp", "--lhs", "e3", "--rhs", "e1"})
                .code,
            kUsageError);
  EXPECT_EQ(run_cli({"eval", "--p", "2", "--q", "0", "--op", "log", "--lhs", "e1"}).code,
            kUsageError);
}

TEST(CliExitCodes, NonConvergence) {
  EXPECT_EQ(run_cli({"eval", "--p", "1", "--q", "0", "--op", "exp", "--lhs", "e1",
                     "--exp-max-terms", "1"})
                .code,
            kNonConvergence);
  EXPECT_EQ(run_cli({"verify", "--suite", "unitary_subgroups", "--exp-max-terms", "2"}).code,
            kNonConvergence);
}

TEST(CliDiscrepancies, ReportsGenericTable) {
  const auto r = run_cli({"discrepancies"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_NE(r.out.find("20 discrepant cells"), std::string::npos);
  const auto doc = nlohmann::json::parse(
      run_cli({"discrepancies", "--table", "product", "--format", "json"}).out);
  EXPECT_TRUE(doc.empty());
}

}  // namespace
}  // namespace quatype::cli
