#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(SAGBI_FORGE_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  while (auto n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::ordered_json json_of(const Run& r) { return nlohmann::ordered_json::parse(r.out); }

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("sagbi_forge_cli_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST(Cli, VerifyPasses) {
  auto r = run("verify --a 2 --b 3");
  ASSERT_EQ(r.code, 0) << r.out;
  auto j = json_of(r);
  EXPECT_EQ(j["dimension"], 6);
  EXPECT_EQ(j["graded"], true);
  EXPECT_EQ(j["field"], "q");
  for (const auto& s : j["steps"]) EXPECT_TRUE(s["pass"].get<bool>());
}

TEST(Cli, VerifyTextAndPrimeField) {
  auto r = run("verify --a 2 --b 2 --format text --field fp:32003");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("overall: PASS"), std::string::npos);
  EXPECT_NE(r.out.find("fp:32003"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("verify --a 1 --b 3").code, 2);
  EXPECT_EQ(run("verify --a 4 --b 3").code, 2);
  EXPECT_EQ(run("verify --a 2 --b 2 --field fp:12").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("dim --named cube").code, 2);
  EXPECT_EQ(run("dim --named complete_bipartite:2,3 --strategy lattice").code, 2);
}

TEST(Cli, DimNamed) {
  auto g1 = json_of(run("dim --named g1"));
  EXPECT_EQ(g1["dimension"], 11);
  EXPECT_EQ(g1["upper_bound"], 12);
  EXPECT_EQ(g1["bipartite"], false);
  EXPECT_EQ(g1["fallback"], false);
  auto p5 = run("dim --named path:5");
  ASSERT_EQ(p5.code, 0);
  EXPECT_EQ(json_of(p5)["dimension"], 4);
}

TEST(Cli, DimFromGraphFile) {
  auto path = temp_file("k23.json");
  std::ofstream(path) << R"({"vertices":5,"edges":[[1,3],[1,4],[1,5],[2,3],[2,4],[2,5]]})";
  auto r = run("dim --graph " + path.string());
  auto lattice = run("dim --graph " + path.string() + " --strategy lattice");
  std::filesystem::remove(path);
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json_of(r)["dimension"], 6);
  EXPECT_EQ(json_of(r)["strategy"], "kernel");
  // edge binomials of K_{2,3} are not a SAGBI basis
  EXPECT_EQ(lattice.code, 2);
}

TEST(Cli, Poset) {
  auto count = run("poset --a 2 --b 2 count");
  ASSERT_EQ(count.code, 0);
  EXPECT_EQ(count.out, "5\n");
  EXPECT_EQ(run("poset --a 3 --b 4 graded").out, "false\n");
  EXPECT_EQ(run("poset --a 3 --b 3 graded").out, "true\n");
  auto ideals = run("poset --a 2 --b 2 ideals");
  EXPECT_EQ(ideals.out, "{}\n{e1}\n{f2}\n{e1, f2}\n{e1, fp1, f2}\n");
  auto j = json_of(run("poset --a 2 --b 3 count --format json"));
  EXPECT_EQ(j["result"], 9);
}

TEST(Cli, Sagbi) {
  auto ok = run("sagbi --kab 2,2");
  ASSERT_EQ(ok.code, 0);
  EXPECT_EQ(json_of(ok)["pass"], true);
  auto bad = run("sagbi --kab 2,2 --quadrics-only");
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(json_of(bad)["pass"], false);
}

TEST(Cli, OutFileAndDeterminism) {
  auto path = temp_file("report.json");
  ASSERT_EQ(run("verify --a 2 --b 2 --out " + path.string()).code, 0);
  std::stringstream ss;
  ss << std::ifstream(path).rdbuf();
  std::filesystem::remove(path);
  auto direct = run("verify --a 2 --b 2");
  EXPECT_EQ(ss.str(), direct.out);
  EXPECT_EQ(direct.out, run("verify --a 2 --b 2").out);
}
