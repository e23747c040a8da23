#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <sys/wait.h>

#ifndef PSEUDOHAM_BIN
#error "PSEUDOHAM_BIN must point at the pseudoham executable"
#endif

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int exit_code = -1;
  std::string out;
};

Run run(const std::string& args) {
  Run r;
  const std::string cmd = std::string(PSEUDOHAM_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = fs::temp_directory_path() / "pseudoham_cli_test";
    fs::create_directories(dir_);
    const auto r = run("build --family gq --q 2 -o " + (dir_ / "gq2.el").string());
    ASSERT_EQ(r.exit_code, 0);
    ASSERT_EQ(run("build --family furedi --t 2 --q 5 -o " + (dir_ / "z12.el").string()).exit_code, 0);
  }
  static void TearDownTestSuite() { fs::remove_all(dir_); }
  static std::string path(const std::string& name) { return (dir_ / name).string(); }
  static fs::path dir_;
};

fs::path Cli::dir_;

}  // namespace

TEST_F(Cli, BuildWritesThirtyVertices) {
  std::ifstream in(path("gq2.el"));
  std::size_t n = 0, m = 0;
  in >> n >> m;
  EXPECT_EQ(n, 30u);
  EXPECT_EQ(m, 45u);
}

TEST_F(Cli, CertifyReportsLambdaTwo) {
  const auto r = run("certify " + path("gq2.el"));
  ASSERT_EQ(r.exit_code, 0);
  const auto j = json::parse(r.out);
  EXPECT_LE(j["certificate"]["lambda"].get<double>(), 2.0 + 1e-9);
  EXPECT_EQ(j["certificate"]["mode"], "bipartite-regular");
  EXPECT_EQ(j["config"]["command"], "certify");
}

TEST_F(Cli, BoundWithAutomaticCount) {
  const auto r = run("bound --target c6 --free-graph " + path("gq2.el") + " --h-log auto");
  ASSERT_EQ(r.exit_code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["report"]["direction"], "upper");
  EXPECT_EQ(j["hamilton_count"]["cycles"], "144");
  EXPECT_NEAR(j["report"]["log_value"].get<double>(), j["replayed_log_value"].get<double>(), 1e-9);
}

TEST_F(Cli, BoundRejectsGraphContainingTarget) {
  EXPECT_EQ(run("bound --target c4 --free-graph " + path("z12.el") + " --h-log 0").exit_code, 2);
}

TEST_F(Cli, ReportsAreByteIdentical) {
  const std::string args = "mixing-check " + path("z12.el") + " --samples 500 --seed 7 --corollaries";
  const auto a = run(args);
  const auto b = run(args);
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto r1 = run("rotate " + path("gq2.el") + " --seed 4");
  const auto r2 = run("rotate " + path("gq2.el") + " --seed 4");
  EXPECT_EQ(r1.out, r2.out);
  EXPECT_EQ(json::parse(r1.out)["replay_ok"], true);
}

TEST_F(Cli, ReportFileOption) {
  const auto r = run("--report " + path("count.json") + " hamilton-count " + path("gq2.el"));
  ASSERT_EQ(r.exit_code, 0);
  std::ifstream in(path("count.json"));
  const auto j = json::parse(in);
  EXPECT_EQ(j["count"]["cycles"], "144");
}

TEST_F(Cli, ExhaustedBudgetExitsOne) {
  const auto r = run("hamilton-count " + path("gq2.el") + " --method bb --max-nodes 10");
  EXPECT_EQ(r.exit_code, 1);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["exit_code"], 1);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run("").exit_code, 2);
  EXPECT_EQ(run("frobnicate").exit_code, 2);
  EXPECT_EQ(run("certify " + path("gq2.el") + " --bogus").exit_code, 2);
  EXPECT_EQ(run("certify /nonexistent/graph.el").exit_code, 2);
  EXPECT_EQ(run("build --family gq --q 6 -o " + path("x.el")).exit_code, 2);
  EXPECT_EQ(run("--help").exit_code, 0);
}

TEST_F(Cli, OtherSubcommands) {
  EXPECT_EQ(run("permanent " + path("z12.el")).exit_code, 0);
  const auto tf = run("two-factors " + path("z12.el"));
  ASSERT_EQ(tf.exit_code, 0);
  EXPECT_EQ(json::parse(tf.out)["identity"]["equal"], true);
  const auto k = run("k23-family --m 4");
  ASSERT_EQ(k.exit_code, 0);
  EXPECT_EQ(json::parse(k.out)["verdict"]["passed"], true);
  const auto p = run("params-search --k 2 --delta 0.5 --limit 100");
  ASSERT_EQ(p.exit_code, 0);
  EXPECT_NE(p.out.find("13"), std::string::npos);
}
