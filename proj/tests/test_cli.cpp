#include <gtest/gtest.h>

#ifdef TORISTACK_CLI_PATH

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(TORISTACK_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r{-1, {}};
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto p = std::filesystem::temp_directory_path() / ("toristack_cli_" + name);
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST(Cli, CertifyFixturesSucceed) {
  for (const char* f : {"p2_labels_1_1_2", "p2_labels_2_2_2", "wp112", "conehead_3", "interval_unlabelled"})
    EXPECT_EQ(run(std::string("certify ") + f).status, 0) << f;
}

TEST(Cli, EverySubcommandRuns) {
  for (const char* c : {"validate", "fan", "groups", "charts", "isotropy", "moment", "certify"}) {
    EXPECT_EQ(run(std::string(c) + " wp112").status, 0) << c;
    const auto j = run(std::string(c) + " wp112 --json --jobs 3");
    EXPECT_EQ(j.status, 0) << c;
    EXPECT_EQ(j.out.front(), '{') << c;
  }
}

TEST(Cli, FailedCheckExitsWithOne) {
  const auto p = write_temp("wedge.json", R"({"kind": "polytope", "dim": 2, "facets": [
    {"normal": [1, 0], "eta": 0}, {"normal": [0, 1], "eta": 0}]})");
  EXPECT_EQ(run("validate " + p.string()).status, 1);
  const auto q = write_temp("touching.json", R"({"kind": "stacky_fan", "dim": 2,
    "rays": [[1, 0], [0, 1], [-1, -1], [1, 1]], "max_cones": [[1, 3], [1, 4], [2, 3], [2, 4]],
    "eta": [0, 0, 1, 0]})");
  EXPECT_EQ(run("certify " + q.string()).status, 1);
  EXPECT_EQ(run("groups " + q.string()).status, 0);
}

TEST(Cli, BadInputExitsWithTwo) {
  EXPECT_EQ(run("certify /nonexistent/file.json").status, 2);
  EXPECT_EQ(run("certify " + write_temp("float.json", R"({"kind": "polytope", "dim": 1.0})").string()).status, 2);
  EXPECT_EQ(run("certify " + write_temp("empty.json", "").string()).status, 2);
  EXPECT_EQ(run("certify " + write_temp("syntax.json", "{\"kind\": ").string()).status, 2);
  EXPECT_EQ(run("explode wp112").status, 2);
  EXPECT_EQ(run("certify wp112 --jobs 0").status, 2);
  const auto noeta = write_temp("noeta.json", R"({"kind": "stacky_fan", "dim": 1, "rays": [[1], [-1]],
    "max_cones": [[1], [2]]})");
  EXPECT_EQ(run("moment " + noeta.string()).status, 2);
  EXPECT_EQ(run("groups " + noeta.string()).status, 0);
}

TEST(Cli, VerifyRoundTrip) {
  const auto cert = run("certify p2_labels_1_1_2 --json");
  ASSERT_EQ(cert.status, 0);
  const auto p = write_temp("cert.json", cert.out);
  EXPECT_EQ(run("verify " + p.string()).status, 0);
  auto edited = cert.out;
  const auto pos = edited.find("\"verdict\": true");
  ASSERT_NE(pos, std::string::npos);
  edited.replace(pos, 15, "\"verdict\": false");
  EXPECT_EQ(run("verify " + write_temp("edited.json", edited).string()).status, 1);
}

TEST(Cli, JsonIsStableAcrossJobCounts) {
  EXPECT_EQ(run("certify wp112 --json --jobs 1").out, run("certify wp112 --json --jobs 8").out);
}

#endif
