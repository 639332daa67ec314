#include "mzv/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace mzv;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST(Cli, EvalPrintsValueWithBound) {
  const auto r = run({"eval", "2,1", "--eps", "1e-12"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("1.20205690315959"), std::string::npos) << r.out;
}

TEST(Cli, EvalJsonAndTruncation) {
  const auto r = run({"eval", "3", "--json"});
  ASSERT_EQ(r.code, cli::kOk);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j.at("value").get<std::string>().substr(0, 12), "1.2020569031");
  EXPECT_EQ(run({"eval", "2,-1", "--trunc", "1000"}).code, cli::kOk);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({"eval", "2,,1"}).code, cli::kUsage);
  EXPECT_EQ(run({"eval", "1,2"}).code, cli::kUsage);
  EXPECT_EQ(run({"derive", "nonsense", "2", "3"}).code, cli::kUsage);
  EXPECT_EQ(run({"derive", "partial_integration_length2", "1", "3"}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"eval", "2", "--eps", "1e-80"}).code, cli::kUsage);
}

TEST(Cli, DeriveJsonRoundTripsThroughVerify) {
  const auto r = run({"derive", "reflection", "2", "3", "--json"});
  ASSERT_EQ(r.code, cli::kOk);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j.at("family"), "reflection");
  EXPECT_EQ(combination_from_json(j.at("combination")), reflection(2, 3).combination);
  const auto path = temp_file("mzv_cli_reflection.json", r.out);
  EXPECT_EQ(run({"verify", path}).code, cli::kOk);

  auto broken = j;
  broken["combination"][0]["coefficient"] = "7/1";
  const auto bad = temp_file("mzv_cli_broken.json", broken.dump());
  EXPECT_EQ(run({"verify", bad}).code, cli::kVerificationFailed);
  EXPECT_EQ(run({"verify", "/nonexistent/identity.json"}).code, cli::kUsage);
}

TEST(Cli, DeriveWithVariantAndTrace) {
  const auto r = run({"derive", "partial_integration_length3", "2", "2", "1", "--variant", "alternative", "--trace"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("= 0"), std::string::npos);
}

TEST(Cli, RankPrintsRankFirst) {
  const auto r = run({"rank", "--length", "4"});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "18");
  EXPECT_EQ(run({"rank", "--length", "3", "--pattern", "abb"}).out.substr(0, 1), "2");
  const auto b = run({"rank", "--length", "3", "--basis", "--json"});
  ASSERT_EQ(b.code, cli::kOk);
  EXPECT_EQ(Json::parse(b.out).at("rank"), 4);
}

TEST(Cli, ReduceDiagrams) {
  const auto r = run({"reduce", "--peacock", "0|2|2", "--strategy", "shuffle"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("4*ζ(3,1)"), std::string::npos) << r.out;
  const auto e = run({"reduce", "--seashell", "3,1", "--eliminate", "--json"});
  ASSERT_EQ(e.code, cli::kOk);
  EXPECT_EQ(combination_from_json(Json::parse(e.out).at("value")), zeta({4}) - zeta({2, 2}));
  const auto dot = run({"reduce", "--seashell", "2,1", "--dot"});
  EXPECT_NE(dot.out.find("digraph"), std::string::npos);
  const auto path = temp_file("mzv_cli_diagram.json", to_json(build_seashell({2, 3})).dump());
  EXPECT_EQ(run({"reduce", path, "--strategy", "reversal", "--eliminate"}).code, cli::kOk);
  EXPECT_EQ(run({"reduce", "--seashell", "2,1", "--strategy", "diagonal"}).code, cli::kUsage);
}

TEST(Cli, SweepPassesAndPerturbationFails) {
  EXPECT_EQ(run({"sweep", "--max-weight", "5"}).code, cli::kOk);
  EXPECT_EQ(run({"sweep", "--max-weight", "5", "--perturb"}).code, cli::kVerificationFailed);
  const auto j = run({"sweep", "--max-weight", "4", "--family", "reflection", "--json"});
  ASSERT_EQ(j.code, cli::kOk);
  EXPECT_TRUE(Json::parse(j.out).is_object());
}

TEST(Cli, PrecisionEnvironmentVariable) {
  ::setenv("MZV_PRECISION_DIGITS", "30", 1);
  EXPECT_EQ(run({"eval", "2", "--eps", "1e-25"}).code, cli::kUsage);
  ::unsetenv("MZV_PRECISION_DIGITS");
  EXPECT_EQ(run({"eval", "2", "--eps", "1e-25"}).code, cli::kOk);
}
