#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qbk/cli.hpp"
#include "qbk/errors.hpp"
#include "qbk/qsums.hpp"

using namespace qbk;
using namespace qbk::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args, const IdentityRegistry& registry = IdentityRegistry::standard()) {
  std::ostringstream out, err;
  const int code = run(args, out, err, registry);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

IdentityRegistry corrupted_registry() {
  IdentityRegistry r = IdentityRegistry::standard();
  // Right-hand side off by q^n: the sort of slip a transcription error produces.
  r.set(IdentityId::warnaar, [](const std::vector<int>& p) {
    const int n = p.at(0);
    return VerificationReport::compare(IdentityId::warnaar, {n}, warnaar_lhs(n),
                                       sum_of_cubes_rhs(n) + QRatio::p_power(2 * n));
  });
  return r;
}

}  // namespace

TEST(ParseIntList, Forms) {
  EXPECT_EQ(parse_int_list("3"), (std::vector<int>{3}));
  EXPECT_EQ(parse_int_list("2,4,6"), (std::vector<int>{2, 4, 6}));
  EXPECT_EQ(parse_int_list("1..4"), (std::vector<int>{1, 2, 3, 4}));
  EXPECT_EQ(parse_int_list("1..2,7"), (std::vector<int>{1, 2, 7}));
  EXPECT_THROW(parse_int_list("x"), std::invalid_argument);
  EXPECT_THROW(parse_int_list("5..2"), std::invalid_argument);
  EXPECT_THROW(parse_int_list(""), std::invalid_argument);
}

TEST(Cli, VerifyWarnaarJsonLines) {
  const Outcome o = invoke({"verify", "--identity", "warnaar", "--n-max", "30", "--format", "json"});
  EXPECT_EQ(o.code, kExitOk) << o.err;
  const auto ls = lines(o.out);
  ASSERT_EQ(ls.size(), 30u);
  for (std::size_t i = 0; i < ls.size(); ++i) {
    const auto j = nlohmann::ordered_json::parse(ls[i]);
    EXPECT_EQ(j["status"], "equal");
    EXPECT_EQ(j["params"][0], static_cast<int>(i) + 1);
    EXPECT_EQ(VerificationReport::from_json(j).to_json_line(), ls[i]);
  }
}

TEST(Cli, OddOrderIsUsageError) {
  const Outcome o = invoke({"beta", "--n", "3", "--k", "1"});
  EXPECT_EQ(o.code, kExitUsage);
  EXPECT_TRUE(o.out.empty());
  EXPECT_NE(o.err.find("OddOrder"), std::string::npos) << o.err;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--identity", "nope"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--identity", "schlosser", "--m", "1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"beta", "--n", "2", "--k", "1", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(invoke({"zeta", "--s", "3", "--q", "1/2", "--tolerance", "1/1000"}).code, kExitUsage);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST(Cli, SumTheorem3) {
  const Outcome o = invoke({"sum", "--theorem3", "--n", "2", "--k", "2"});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_EQ(o.out, "1*q^(3/2)\n");
  EXPECT_EQ(invoke({"sum", "--theorem3", "--closed", "--n", "2", "--k", "2"}).out, "1*q^(3/2)\n");
  EXPECT_EQ(invoke({"sum", "--m", "3", "--n", "2"}).out, "1 + 2*q^1 + 3*q^2 + 2*q^3 + 1*q^4\n");
  EXPECT_EQ(invoke({"sum", "--m", "3", "--n", "2", "--q", "2"}).out, "49\n");
}

TEST(Cli, BetaCommands) {
  EXPECT_EQ(invoke({"beta", "--n", "2", "--k", "1"}).out, "0\n");
  EXPECT_EQ(invoke({"beta-poly", "--n", "4", "--k", "2", "--method", "oracle"}).out, "4*q^(5/2)\n");
  EXPECT_EQ(invoke({"beta-poly", "--n", "2", "--k", "2", "--printed"}).out, "2*q^(3/2) - 2*q^(5/2)\n");
  const Outcome o = invoke({"beta-poly", "--n", "2", "--k", "2", "--format", "json"});
  EXPECT_EQ(o.out, "{\"n\":2,\"k\":2,\"kind\":\"polynomial\",\"method\":\"closed_form\",\"value\":\"2*q^(3/2)\"}\n");
}

TEST(Cli, LimitCommand) {
  EXPECT_EQ(invoke({"limit", "--quantity", "theorem3-closed", "--n", "2", "--k", "3"}).out, "5\n");
  EXPECT_EQ(invoke({"limit", "--expr", "(1 - 1*q^3)/(1 - 1*q^1)"}).out, "3\n");
  EXPECT_EQ(invoke({"limit", "--expr", "(1)/(1 - 1*q^1)"}).code, kExitUsage);
}

TEST(Cli, ZetaCommand) {
  const Outcome o = invoke({"zeta", "--s", "3", "--q", "4", "--tolerance", "1/1000000", "--format", "json"});
  EXPECT_EQ(o.code, kExitOk) << o.err;
  const auto j = nlohmann::ordered_json::parse(o.out);
  EXPECT_EQ(j["variant"], "shifted");
  EXPECT_EQ(j["tolerance"], "1/1000000");
  EXPECT_EQ(invoke({"zeta", "--special", "--n", "2", "--k", "1"}).out, "0\n");
}

TEST(Cli, TableShapeAndOrder) {
  const Outcome o = invoke({"table", "--quantity", "beta-poly", "--n", "4,2", "--k", "2,1", "--format", "csv"});
  EXPECT_EQ(o.code, kExitOk);
  const auto ls = lines(o.out);
  ASSERT_EQ(ls.size(), 5u);
  EXPECT_EQ(ls[0], "n,k,value");
  EXPECT_EQ(ls[1].rfind("2,1,", 0), 0u);
  EXPECT_EQ(ls[2], "2,2,2*q^(3/2)");
  EXPECT_EQ(ls[3].rfind("4,1,", 0), 0u);
  EXPECT_EQ(ls[4], "4,2,4*q^(5/2)");
  const auto j = nlohmann::json::parse(invoke({"table", "--n", "2,4", "--k", "1,2", "--format", "json"}).out);
  ASSERT_EQ(j.size(), 4u);
  EXPECT_EQ(j[0]["n"], 2);
  EXPECT_EQ(invoke({"table", "--n", "2..4"}).code, kExitUsage);
}

TEST(Cli, EmitTableDirect) {
  CliConfig config;
  config.n_values = {2, 3};
  EXPECT_THROW(emit_table(config), OddOrder);
  config.n_values = {2};
  config.k_values = {1};
  config.format = OutputFormat::csv;
  EXPECT_EQ(emit_table(config), "n,k,value\n2,1,0\n");
}

TEST(Cli, CorruptedIdentityGivesMismatchExit) {
  const IdentityRegistry corrupted = corrupted_registry();
  const Outcome o = invoke({"verify", "--identity", "warnaar", "--n-max", "5", "--format", "json"}, corrupted);
  EXPECT_EQ(o.code, kExitMismatch);
  EXPECT_EQ(lines(o.out).size(), 5u);
  EXPECT_NE(o.out.find("\"status\":\"mismatch\""), std::string::npos);
  EXPECT_NE(o.err.find("warnaar mismatch"), std::string::npos);
}

TEST(Cli, ThrowingCheckIsReportedAsError) {
  IdentityRegistry r = IdentityRegistry::standard();
  r.set(IdentityId::kim_linear, [](const std::vector<int>&) -> VerificationReport {
    throw std::runtime_error("boom");
  });
  const Outcome o = invoke({"verify", "--identity", "kim_linear", "--n-max", "2", "--format", "json"}, r);
  EXPECT_EQ(o.code, kExitMismatch);
  EXPECT_NE(o.out.find("\"status\":\"error\""), std::string::npos);
}

TEST(Cli, DeterministicAcrossThreadCounts) {
  const std::vector<std::string> args{"verify", "--identity", "all", "--n-max", "6", "--format", "csv"};
  ::unsetenv("QBK_THREADS");
  const Outcome sequential = invoke(args);
  ::setenv("QBK_THREADS", "4", 1);
  const Outcome parallel = invoke(args);
  const Outcome again = invoke(args);
  ::unsetenv("QBK_THREADS");
  EXPECT_EQ(sequential.code, kExitOk) << sequential.err;
  EXPECT_EQ(sequential.out, parallel.out);
  EXPECT_EQ(parallel.out, again.out);
  EXPECT_EQ(lines(sequential.out).front(), "identity,params,status,lhs,rhs");
}

TEST(Cli, RunCasesSortsReports) {
  const std::vector<IdentityCase> cases{
      {IdentityId::kim_linear, {2}}, {IdentityId::warnaar, {3}}, {IdentityId::warnaar, {1}}};
  const auto reports = run_cases(cases, IdentityRegistry::standard(), 3);
  ASSERT_EQ(reports.size(), 3u);
  EXPECT_EQ(reports[0].identity, IdentityId::warnaar);
  EXPECT_EQ(reports[0].params, (std::vector<int>{1}));
  EXPECT_EQ(reports[2].identity, IdentityId::kim_linear);
}

TEST(Cli, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "qbk_cli_table.csv";
  const Outcome o = invoke({"table", "--format", "csv", "--out", path.string()});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_TRUE(o.out.empty());
  std::ifstream in(path);
  std::stringstream contents;
  contents << in.rdbuf();
  EXPECT_EQ(contents.str(), invoke({"table", "--format", "csv"}).out);
  std::filesystem::remove(path);

  const Outcome bad = invoke({"table", "--out", "/nonexistent-dir/x.csv"});
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_NE(bad.err.find("IoError"), std::string::npos);
}
