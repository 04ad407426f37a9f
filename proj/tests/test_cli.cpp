// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct Outcome {
  int code = -1;
  std::string out;
};

Outcome run(const std::string& args) {
  const std::string cmd = std::string("FORCING_LAB_CATALOG=") + FORCING_LAB_CATALOG_FILE + " " + FORCING_LAB_CLI + " " +
                          args + " 2>/dev/null";
  Outcome r;
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) return r;
  std::array<char, 4096> buf{};
  for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), p)) > 0;) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = std::filesystem::temp_directory_path() / "forcing_lab_cli_test";
    std::filesystem::remove_all(dir_);
    std::filesystem::create_directories(dir_);
    write("c6.g", "p 6 6\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 1 6\n");
    write("k4.g", "p 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n");
    write("k33.g", "p 6 9\ne 1 4\ne 1 5\ne 1 6\ne 2 4\ne 2 5\ne 2 6\ne 3 4\ne 3 5\ne 3 6\n");
    write("c5.g", "p 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 1 5\n");
    write("bad.g", "p 3 1\ne 1 1\n");
  }
  static void TearDownTestSuite() { std::filesystem::remove_all(dir_); }

  static void write(const std::string& name, const std::string& text) { std::ofstream(dir_ / name) << text; }
  static std::string file(const std::string& name) { return (dir_ / name).string(); }

  static std::filesystem::path dir_;
};

std::filesystem::path Cli::dir_;

TEST_F(Cli, Analyze) {
  Outcome r = run("analyze " + file("c6.g"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "n=6 m=6 bipartite=true matchable=true mc=true pm=2 gf=1 Af=1 c=1 bn=true\n");
  Outcome t = run("--tsv analyze " + file("k33.g"));
  EXPECT_EQ(t.code, 0);
  EXPECT_EQ(t.out, file("k33.g") + "\t6\t9\ttrue\ttrue\ttrue\ttrue\t6\t4\t3\t4\n");
  Outcome odd = run("analyze " + file("c5.g"));
  EXPECT_EQ(odd.code, 0);
  EXPECT_NE(odd.out.find("matchable=false"), std::string::npos);
}

TEST_F(Cli, AntiForcing) {
  Outcome r = run("--witness af " + file("k4.g") + " --matching 1-2,3-4");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "af=2\nwitness 1-3,1-4\n");
  EXPECT_EQ(run("af " + file("k33.g")).out, "Af=3\n");
  EXPECT_EQ(run("af " + file("k4.g") + " --matching 1-2").code, 2);
}

TEST_F(Cli, Minors) {
  Outcome r = run("minors " + file("k33.g"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "found A4\n");
  EXPECT_EQ(run("minors " + file("c6.g") + " --only A").out, "none\n");
}

TEST_F(Cli, ClassifyAndUniform) {
  EXPECT_EQ(run("--tsv classify " + file("k4.g")).out, file("k4.g") + "\tG0\tH1\n");
  EXPECT_EQ(run("--tsv classify " + file("k33.g")).out, file("k33.g") + "\tnone\t-\n");
  EXPECT_EQ(run("uniform " + file("c6.g")).code, 0);
  Outcome no = run("uniform " + file("k33.g"));
  EXPECT_EQ(no.code, 1);
  EXPECT_EQ(no.out.rfind("strongly_uniform=no\n", 0), 0U);
  EXPECT_EQ(run("--max-matchings 1 uniform " + file("k33.g")).code, 3);
}

TEST_F(Cli, SurgeryAndEars) {
  Outcome s = run("surgery " + file("c6.g") + " --bisubdivide 1-2:3");
  EXPECT_EQ(s.code, 0);
  EXPECT_EQ(s.out.rfind("p 8 8\n", 0), 0U);
  EXPECT_NE(s.out.find("# 1-2 1-7-8-2\n"), std::string::npos);
  EXPECT_EQ(run("surgery " + file("c6.g")).code, 2);
  EXPECT_EQ(run("surgery " + file("c6.g") + " --bisubdivide 1-2:2").code, 2);
  Outcome e = run("eardecomp " + file("k33.g"));
  EXPECT_EQ(e.code, 0);
  EXPECT_NE(e.out.find("ears=4\n"), std::string::npos);
}

TEST_F(Cli, VerifyTables) {
  Outcome r = run("verify-tables");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("A4 A expected=4/3 computed=4/3 ok\n"), std::string::npos);
  EXPECT_NE(r.out.find("entries=55 failed=0\n"), std::string::npos);
}

TEST_F(Cli, VerifyTheorems) {
  Outcome r = run("verify-theorems --property ear_decomposition --pool exhaustive:n=6,filter=bipartite+mc");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("ear_decomposition exhaustive:n=6,filter=bipartite+mc passed=", 0), 0U) << r.out;
  EXPECT_EQ(run("verify-theorems --property nope --pool exhaustive:n=4").code, 2);
  EXPECT_EQ(run("verify-theorems --property gf_ge_af --pool exhaustive:n=12").code, 2);
  Outcome seeded = run("--seed 5 --tsv verify-theorems --property gf_ge_af --pool random:n=8,p=0.5,count=5");
  EXPECT_EQ(seeded.code, 0);
  EXPECT_NE(seeded.out.find("seed=5"), std::string::npos);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("analyze").code, 2);
  EXPECT_EQ(run("analyze " + file("missing.g")).code, 2);
  EXPECT_EQ(run("analyze " + file("bad.g")).code, 2);
  EXPECT_EQ(run("eardecomp " + file("k4.g")).code, 2);
  EXPECT_EQ(run("--bogus analyze " + file("c6.g")).code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

}  // namespace
