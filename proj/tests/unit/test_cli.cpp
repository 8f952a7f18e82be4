#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "commands.hpp"
#include "format.hpp"

namespace {

struct CliRun {
  int status = -1;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  CliRun r;
  r.status = hhb::cli::run_command(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) v.push_back(line);
  return v;
}

class EnvGuard {
 public:
  explicit EnvGuard(const char* value) { ::setenv("HH_BOUNDS_TOL", value, 1); }
  ~EnvGuard() { ::unsetenv("HH_BOUNDS_TOL"); }
};

}  // namespace

TEST(Cli, BoundsExample) {
  const CliRun r = run({"bounds", "--function", "recip", "--a", "1", "--b", "2", "--alpha", "0.5", "--lambda",
                     "0.3333333333", "--q", "2", "--theorem", "T4"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["theorem"], "T4");
  EXPECT_EQ(j["function"], "recip");
  EXPECT_TRUE(j["hypothesis_ok"].get<bool>());
  EXPECT_GE(j["slack"].get<double>(), 0.0);
}

TEST(Cli, IdentityExample) {
  const CliRun r = run({"identity", "--function", "square", "--a", "0", "--b", "1", "--alpha", "0.5", "--lambda", "0"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 3u);
  EXPECT_EQ(ls[0], hhb::cli::kCsvSchemaLine);
  EXPECT_EQ(ls[1], "alpha,lambda,a,b,function,lhs,rhs,residual,oracle_error");
  const auto cells = hhb::cli::split_list(ls[2]);
  ASSERT_EQ(cells.size(), 9u);
  EXPECT_NEAR(std::stod(cells[5]), -1.0 / 12, 1e-12);
  EXPECT_LT(std::stod(cells[7]), 1e-10);
}

TEST(Cli, IdentityGrid) {
  const CliRun r = run({"identity", "--function", "exp", "--a", "1", "--b", "2", "--grid", "5"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(lines(r.out).size(), 2u + 25u);
}

TEST(Cli, SweepExample) {
  const CliRun r = run({"sweep", "--grid", "9", "--functions", "square,recip,log", "--q", "1,2", "--theorems", "T2,T3"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_GT(ls.size(), 3u);
  EXPECT_EQ(ls.front(), hhb::cli::kCsvSchemaLine);
  // 3 functions x 81 points x 2 q x 2 theorems
  EXPECT_EQ(ls.size(), 2u + 3u * 81u * 2u * 2u + 1u);
  EXPECT_EQ(ls.back().rfind("# summary rows=972 violations=0", 0), 0u) << ls.back();
  const auto pos = ls.back().find("min_slack=");
  ASSERT_NE(pos, std::string::npos);
  EXPECT_GE(std::stod(ls.back().substr(pos + 10)), -1e-10);
}

TEST(Cli, SweepRowOrderIsLexicographic) {
  const CliRun r = run({"sweep", "--grid", "3", "--functions", "recip,exp", "--q", "2,1", "--theorems", "T2",
                     "--threads", "3"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto ls = lines(r.out);
  const auto header = hhb::cli::split_list(ls[1]);
  std::size_t fcol = 0;
  for (; fcol < header.size() && header[fcol] != "function"; ++fcol) {}
  ASSERT_LT(fcol, header.size());
  std::vector<std::string> keys;
  for (std::size_t i = 2; i + 1 < ls.size(); ++i) {
    keys.push_back(hhb::cli::split_list(ls[i])[fcol]);
  }
  ASSERT_EQ(keys.size(), 2u * 9u * 2u);
  EXPECT_EQ(keys.front(), "exp");
  EXPECT_EQ(keys.back(), "recip");
  EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end()));
}

TEST(Cli, Determinism) {
  const std::vector<std::string> args{"sweep", "--grid", "4", "--functions", "log,exp", "--q", "1,1.5,3"};
  const CliRun one = run(args);
  std::vector<std::string> threaded = args;
  threaded.insert(threaded.end(), {"--threads", "4"});
  const CliRun two = run(threaded);
  EXPECT_EQ(one.status, 0);
  EXPECT_EQ(one.out, two.out);
  EXPECT_EQ(run(args).out, one.out);
}

TEST(Cli, FaultInjectionFlipsStatus) {
  const CliRun r = run({"bounds", "--function", "square", "--a", "0", "--b", "1", "--alpha", "0.5", "--lambda", "0",
                     "--q", "2", "--theorem", "T2", "--inject-fault", "0.5"});
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("violation:"), std::string::npos);
  const CliRun s = run({"sweep", "--grid", "3", "--functions", "square", "--q", "2", "--inject-fault", "0.5"});
  EXPECT_EQ(s.status, 1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"bogus"}).status, 2);
  EXPECT_EQ(run({"bounds", "--no-such-flag"}).status, 2);
  EXPECT_EQ(run({"bounds", "--function", "nope"}).status, 2);
  EXPECT_EQ(run({"bounds", "--alpha", "1.5"}).status, 2);
  EXPECT_EQ(run({}).status, 2);
  EXPECT_EQ(run({"means", "--constant", "other"}).status, 2);
}

TEST(Cli, HelpSucceeds) {
  const CliRun r = run({"--help"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("sweep"), std::string::npos);
  EXPECT_EQ(run({"quadrature", "--help"}).status, 0);
}

TEST(Cli, Coeffs) {
  const CliRun r = run({"coeffs", "--alpha", "0.5", "--lambda", "0", "--q", "2"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["regime"], "C1");
  EXPECT_NEAR(j["phi1"].get<double>(), 1.0 / 24, 1e-15);
  const auto j1 = nlohmann::json::parse(run({"coeffs", "--alpha", "0.5", "--lambda", "0", "--q", "1"}).out);
  EXPECT_TRUE(j1["phi1"].is_null());
}

TEST(Cli, Quadrature) {
  const CliRun r = run({"quadrature", "--function", "exp", "--a", "0", "--b", "1", "--rule", "simpson", "--cells", "4",
                     "--q", "2", "--theorem", "T4", "--oracle"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["cells"], 4);
  EXPECT_LE(j["true_error"].get<double>(), j["error_bound"].get<double>());
  const auto plain = nlohmann::json::parse(run({"quadrature"}).out);
  EXPECT_FALSE(plain.contains("true_error"));
}

TEST(Cli, QuadratureHypothesisFailureIsViolation) {
  const CliRun r = run({"quadrature", "--function", "pow_n:2.5", "--a", "0.5", "--b", "2", "--theorem", "T2"});
  EXPECT_EQ(r.status, 1) << r.out;
}

TEST(Cli, Means) {
  const CliRun r = run({"means", "--a", "1", "--b", "2", "--q", "2", "--n", "3"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto ls = lines(r.out);
  EXPECT_EQ(ls[1], "family,variant,a,b,q,n,lhs,rhs,slack");
  EXPECT_EQ(ls.size(), 2u + 9u);
  EXPECT_EQ(run({"means", "--q", "1"}).status, 2);
}

TEST(Cli, ReduceCheckAgrees) {
  const CliRun r = run({"reduce-check", "--lambdas", "0,0.25,0.5,0.75,1", "--q", "1,2"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 2u + 10u);
  for (std::size_t i = 2; i < ls.size(); ++i) {
    EXPECT_EQ(hhb::cli::split_list(ls[i]).back(), "true");
  }
}

TEST(Cli, ToleranceFromEnvironment) {
  {
    EnvGuard g("1e-6");
    EXPECT_EQ(run({"identity", "--function", "exp", "--a", "0", "--b", "1"}).status, 0);
  }
  {
    EnvGuard g("banana");
    EXPECT_EQ(run({"identity", "--function", "exp"}).status, 2);
  }
  {
    EnvGuard g("1e-20");
    EXPECT_EQ(run({"identity", "--function", "exp"}).status, 2);
  }
}

TEST(Cli, OutputFile) {
  const std::string path = ::testing::TempDir() + "hhb_cli_out.csv";
  const CliRun r = run({"means", "--family", "log", "--variant", "simpson", "--output", path});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  EXPECT_EQ(first, hhb::cli::kCsvSchemaLine);
}

TEST(Format, SeventeenDigits) {
  EXPECT_EQ(hhb::cli::fmt_double(0.1), "0.10000000000000001");
  EXPECT_EQ(hhb::cli::fmt_double(1.0), "1");
  EXPECT_EQ(hhb::cli::fmt_double(-2.5e-300), "-2.5e-300");
}
