#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

/// Runs the CLI through the shell; stderr is folded into the output when
/// `merge` is set.
Run run(const std::string& args, bool merge = false, const std::string& env = "") {
  std::string cmd = env + " " + std::string(DISCLAB_CLI) + " " + args + (merge ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) r.out.append(buf.data(), n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

fs::path scratch(const std::string& name) {
  auto p = fs::temp_directory_path() / ("disclab_cli_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST(Cli, Disc) {
  auto r = run("disc --poly 'a*x^3+b*x^2*y+c*x*y^2+d*y^3' --vars x,y --coeff-vars a,b,c,d");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "b^2*c^2-4*a*c^3-4*b^3*d+18*a*b*c*d-27*a^2*d^2\n");
}

TEST(Cli, ResAndDegree) {
  EXPECT_EQ(run("res --poly 'x-1' --poly 'x+1' --var x").out, "2\n");
  EXPECT_EQ(run("degree --num-vars 3 --degrees 4").out, "27\n");
  EXPECT_EQ(run("degree --groups 3,3 --group-degrees 2,2").out, "129\n");
}

TEST(Cli, UsageAndDomainErrorsExitOne) {
  auto r = run("disc --poly 'x^2+y' --vars x,y", true);
  EXPECT_EQ(r.code, 1);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["error"], "NotHomogeneous");
  EXPECT_EQ(run("frobnicate").code, 1);
  EXPECT_EQ(run("degree --num-vars 3 --degrees 1,1").code, 1);
}

TEST(Cli, BudgetExitsTwo) {
  auto dir = scratch("budget");
  fs::create_directories(dir);
  std::ofstream(dir / "job.json") << json{{"vars", {"x1", "x2"}},
                                          {"params", {"a", "b", "c", "d"}},
                                          {"f", "x1^2+a*x1*x2+b*x1+c*x2+d"},
                                          {"equalities", {"x1^2+x2^2-1"}},
                                          {"mode", "kkt"}}
                                          .dump();
  auto r = run("eliminate --job " + (dir / "job.json").string(), true, "DISCLAB_BUDGET=3");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("BudgetExceeded"), std::string::npos);
  fs::remove_all(dir);
}

TEST(Cli, EliminateWritesManifest) {
  auto dir = scratch("elim");
  fs::create_directories(dir);
  std::ofstream(dir / "job.json") << json{{"vars", {"x"}}, {"params", {"b", "c"}}, {"f", "x^2+b*x+c"}}.dump();
  auto r = run("eliminate --job " + (dir / "job.json").string() + " --out " + (dir / "out").string());
  ASSERT_EQ(r.code, 0);
  auto res = json::parse(r.out);
  EXPECT_EQ(res["systems"][0]["generators"][0], "b^2-4*c");
  std::ifstream mf(dir / "out" / "manifest.json");
  auto m = json::parse(mf);
  EXPECT_EQ(m["command"], "eliminate");
  EXPECT_TRUE(m.contains("version"));
  EXPECT_TRUE(m.contains("seed"));
  EXPECT_TRUE(fs::exists(dir / "out" / "result.json"));
  fs::remove_all(dir);
}

TEST(Cli, ScanReportsSeedAndValue) {
  auto r = run("scan --poly 'x1^4+x2^4' --vars x1,x2 --seed 5");
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  EXPECT_NEAR(j["value"].get<double>(), 0.5, 1e-8);
  EXPECT_EQ(j["seed"], 5);
  auto c = run("scan --poly '(x1^2+x2^2)^2-a*x1^4' --vars x1,x2 --params a --at a=2 --kind classify");
  ASSERT_EQ(c.code, 0);
  EXPECT_EQ(json::parse(c.out)["verdict"], "Exterior");
  EXPECT_EQ(run("scan --poly 'x1+x2' --vars x1,x2 --eq 'x1^2+x2^2-1' --kind classify").code, 1);
}

TEST(Cli, CopositiveAndCurve) {
  auto dir = scratch("cop");
  fs::create_directories(dir);
  std::ofstream(dir / "m.json") << json{{"n", 2}, {"entries", {{"1,1", "1"}, {"1,2", "a"}, {"2,2", "1"}}}}.dump();
  auto r = run("copositive --matrix " + (dir / "m.json").string() + " --at a=-0.9");
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["check"]["verdict"], "Interior");
  EXPECT_EQ(j["expanded"], "-a^2+1");

  auto c = run("curve --phi 'a^2+b^2-1' --resolution 16 --out " + (dir / "curve").string());
  ASSERT_EQ(c.code, 0);
  EXPECT_TRUE(fs::exists(dir / "curve" / "grid.csv"));
  EXPECT_TRUE(fs::exists(dir / "curve" / "curve.svg"));
  EXPECT_EQ(json::parse(c.out)["components"], 1);
  fs::remove_all(dir);
}
