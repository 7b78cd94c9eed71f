#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "pibeta/cli.hpp"
#include "pibeta/error.hpp"

namespace pibeta {
namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class ScopedEnv {
 public:
  ScopedEnv(const char* name, const char* value) : name_(name) { ::setenv(name, value, 1); }
  ~ScopedEnv() { ::unsetenv(name_); }

 private:
  const char* name_;
};

TEST(Cli, BoundsText) {
  CliResult r = cli({"bounds", "--q", "1", "--digits", "6"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("lower: 1979/630\n"), std::string::npos);
  EXPECT_NE(r.out.find("upper: 3959/1260\n"), std::string::npos);
  EXPECT_NE(r.out.find("lower_decimal: 3.141269\n"), std::string::npos);
  EXPECT_NE(r.out.find("width: 1/1260\n"), std::string::npos);
}

TEST(Cli, BoundsJsonRoundMode) {
  CliResult r = cli({"bounds", "--q", "5", "--digits", "34", "--mode", "round", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["lower_decimal"], "3.1415926535897930996904718896604452");
  EXPECT_EQ(doc["upper_decimal"], "3.1415926535897934452718625110802259");
  EXPECT_EQ(doc["mode"], "round_half_up");
  EXPECT_TRUE(doc["a_value"]["num"].is_string());
  EXPECT_EQ(doc["a_value"]["den"], "8548690331301120");
}

TEST(Cli, TableCsv) {
  CliResult r = cli({"table", "--which", "beta1", "--from", "2", "--to", "2", "--format", "csv"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "p,beta_8p1\n2,1/19835652870\n");
}

TEST(Cli, TableMarkdownAndJson) {
  CliResult md = cli({"table", "--which", "a", "--from", "1", "--to", "1", "--format", "md"});
  EXPECT_EQ(md.out, "| p | A_p |\n|---|---|\n| 1 | 22/7 |\n");
  CliResult js = cli({"table", "--which", "bounds", "--from", "2", "--to", "3", "--format", "json", "--digits", "10"});
  auto doc = nlohmann::json::parse(js.out);
  EXPECT_EQ(doc["rows"][1]["q"], 3);
  EXPECT_EQ(doc["rows"][1]["lower_decimal"], "3.1415926534");
}

TEST(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(cli({"table", "--which", "a", "--from", "3", "--to", "2"}).code, kExitUsage);
  EXPECT_EQ(cli({"table", "--which", "nope"}).code, kExitUsage);
  EXPECT_EQ(cli({"bounds"}).code, kExitUsage);
  EXPECT_EQ(cli({"bounds", "--q", "0"}).code, kExitUsage);
  EXPECT_EQ(cli({"bounds", "--q", "x"}).code, kExitUsage);
  EXPECT_EQ(cli({}).code, kExitUsage);
  EXPECT_EQ(cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(cli({"hyper", "--q", "1", "--terms", "1"}).code, kExitUsage);
  CliResult r = cli({"verify", "--q-max", "3", "--digits", "20"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_FALSE(r.err.empty());
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, HelpExitsZero) {
  CliResult r = cli({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}

TEST(Cli, VerifyPasses) {
  CliResult r = cli({"verify", "--q-max", "11", "--digits", "40"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("q=2 brackets_pi=true paper_row=mismatch annotation=expected_inconsistent"), std::string::npos);
  EXPECT_NE(r.out.find("q=3 brackets_pi=true paper_row=match annotation=expected_consistent"), std::string::npos);
  EXPECT_NE(r.out.find("rounding_resolution: round_half_up\n"), std::string::npos);
  EXPECT_NE(r.out.find("result: PASS\n"), std::string::npos);
}

TEST(Cli, VerifyPrecisionError) {
  CliResult r = cli({"verify", "--q-max", "20", "--digits", "40"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("insufficient precision"), std::string::npos);
}

TEST(Cli, VerifyFailureExitsTwo) {
  std::string path = ::testing::TempDir() + "pibeta_bad_fixtures.csv";
  {
    std::ofstream f(path);
    f << "bounds,3,3.1415926534037147847889535869075599,3.1415926538659662229456279799529227,expected_consistent\n";
  }
  CliResult r = cli({"verify", "--q-max", "3", "--fixtures", path});
  EXPECT_EQ(r.code, kExitVerificationFailed);
  EXPECT_NE(r.out.find("result: FAIL"), std::string::npos);
}

TEST(Cli, VerifyExternalFixtureCopy) {
  CliResult r = cli({"verify", "--q-max", "11", "--fixtures", PIBETA_FIXTURE_FILE, "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["summary"]["inconsistent_rows_confirmed"], 5);
  EXPECT_EQ(cli({"verify", "--fixtures", "/nonexistent/file.csv"}).code, kExitUsage);
}

TEST(Cli, Hyper) {
  CliResult r = cli({"hyper", "--q", "1", "--terms", "2", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["prefactor"]["num"], "1");
  EXPECT_EQ(doc["prefactor"]["den"], "630");
  EXPECT_EQ(doc["n_terms"], 2);
  EXPECT_EQ(doc["bracket_high"]["den"], "630");

  CliResult text = cli({"hyper", "--q", "3"});
  EXPECT_EQ(text.code, kExitOk);
  EXPECT_NE(text.out.find("within_sandwich: true"), std::string::npos);
}

TEST(Cli, MaxQEnvironmentCap) {
  {
    ScopedEnv env("PIBETA_MAX_Q", "4");
    EXPECT_EQ(max_q_from_environment(), 4);
    EXPECT_EQ(cli({"bounds", "--q", "5"}).code, kExitUsage);
    EXPECT_EQ(cli({"bounds", "--q", "4"}).code, kExitOk);
    EXPECT_EQ(cli({"table", "--which", "a", "--from", "1", "--to", "5"}).code, kExitUsage);
  }
  {
    ScopedEnv env("PIBETA_MAX_Q", "ten");
    EXPECT_THROW(max_q_from_environment(), Error);
    EXPECT_EQ(cli({"bounds", "--q", "1"}).code, kExitUsage);
  }
  EXPECT_EQ(max_q_from_environment(), kDefaultMaxQ);
  EXPECT_EQ(cli({"bounds", "--q", "1001"}).code, kExitUsage);
}

}  // namespace
}  // namespace pibeta
