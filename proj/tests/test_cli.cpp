#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "gns/cli.hpp"
#include "json.hpp"

namespace gns {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, VerifyReportsMissingPSet) {
  const CliRun r = run({"verify", "11,22,25,36,47"});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.out.find("P_{{2,5,1}}"), std::string::npos);
  const CliRun ok = run({"verify", "00,01,11"});
  EXPECT_EQ(ok.code, kExitOk);
}

TEST(Cli, Close) {
  EXPECT_EQ(run({"close", "01,11"}).out, "00,01,11\n");
  EXPECT_EQ(run({"close", "11"}).out, "11\n");
  EXPECT_EQ(run({"close", ""}).out, "{}\n");
}

TEST(Cli, CaseAndOrbit) {
  EXPECT_EQ(run({"case", "00,12"}).out, "D\n");
  EXPECT_EQ(run({"case", "11,22,25,36,47"}).code, kExitFailure);
  const CliRun orbit = run({"orbit", "67"});
  EXPECT_EQ(orbit.code, kExitOk);
  EXPECT_EQ(orbit.out, "orbit_size: 21\nstabilizer_size: 8\ncanonical: 12\n");
}

TEST(Cli, Collineations) {
  const CliRun r = run({"collineations", "12", "67"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 8);
  EXPECT_EQ(run({"collineations", "12", "11"}).code, kExitFailure);
}

TEST(Cli, MalformedInputExitsTwo) {
  EXPECT_EQ(run({"verify", "1x"}).code, kExitMalformed);
  EXPECT_EQ(run({"close", "99"}).code, kExitMalformed);
  EXPECT_EQ(run({}).code, kExitMalformed);
  EXPECT_EQ(run({"frobnicate"}).code, kExitMalformed);
  EXPECT_EQ(run({"enumerate", "--format", "xml"}).code, kExitMalformed);
  EXPECT_EQ(run({"enumerate", "--jobs", "two"}).code, kExitMalformed);
  EXPECT_NE(run({"verify", "1x"}).err.find("malformed"), std::string::npos);
}

TEST(Cli, EnumerateIsDeterministicAcrossJobs) {
  const CliRun one = run({"enumerate", "--jobs", "1"});
  const CliRun two = run({"enumerate", "--jobs", "2"});
  EXPECT_EQ(one.code, kExitOk);
  EXPECT_EQ(one.out, two.out);
  EXPECT_EQ(nlohmann::json::parse(one.out).at("classes").size(), 246u);
  EXPECT_EQ(run({"enumerate", "--format", "csv"}).out.rfind("canonical,", 0), 0u);
}

TEST(Cli, EnumerateWritesFile) {
  const std::string path = ::testing::TempDir() + "census.md";
  const CliRun r = run({"enumerate", "--format", "md", "--out", path});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_NE(text.str().find("246 classes"), std::string::npos);
  std::remove(path.c_str());
}

TEST(Cli, CheckPaper) {
  const CliRun r = run({"check-paper"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("OK: 246 classes (published 245 classes + 1 documented omission)"), std::string::npos);
  const CliRun j = run({"check-paper", "--format", "json"});
  EXPECT_TRUE(nlohmann::json::parse(j.out).at("passed").get<bool>());
}

TEST(Cli, Selfcheck) {
  const CliRun r = run({"selfcheck", "--seed", "7"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  EXPECT_EQ(r.out.find("FAIL "), std::string::npos);
  EXPECT_NE(r.out.find("selfcheck passed (seed 7)"), std::string::npos);
}

TEST(Cli, Help) {
  const CliRun r = run({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("check-paper"), std::string::npos);
}

}  // namespace
}  // namespace gns
