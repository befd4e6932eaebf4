#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "tsirelson");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = tsirelson::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  std::string write(const std::string& name, const std::string& text) {
    auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("tsirelson_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::filesystem::path dir_;
};

TEST_F(Cli, TsirelsonNorm) {
  auto r = invoke({"norm", "--def", "tsirelson", write("x.txt", "3 1\n4 1\n5 1\n")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "3/2 (1.5)\n");
}

TEST_F(Cli, OtherDefinitions) {
  const auto file = write("x.txt", "# three ones\n3 1\n4 1\n5 1\n");
  EXPECT_EQ(invoke({"norm", "--def", "norm_n", "--n", "2", file}).out, "1 (1)\n");
  EXPECT_EQ(invoke({"norm", "--def", "seminorm_jn", "--j", "1", "--n", "2", file}).out, "3/2 (1.5)\n");
  EXPECT_EQ(invoke({"norm", "--def", "schreier", "--m", "1", file}).out, "3 (3)\n");
  EXPECT_EQ(invoke({"norm", "--def", "implicit", "--k", "2", "--theta", "1/4", file}).out, "1 (1)\n");
  EXPECT_EQ(invoke({"norm", "--def", "mixed", "--coef", "one", file}).out, "3/2 (1.5)\n");
  EXPECT_EQ(invoke({"norm", "--def", "tree", "--base", "sup", file}).out, "3/2 (1.5)\n");
}

TEST_F(Cli, CertificateLines) {
  auto r = invoke({"norm", "--cert", write("x.txt", "3 1\n4 1\n5 1\n")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "3/2 (1.5)\n{3,4,5}@0\n  {3}@1 = 1\n  {4}@1 = 1\n  {5}@1 = 1\n");
}

TEST_F(Cli, MalformedFileReportsLine) {
  auto r = invoke({"norm", write("bad.txt", "3 1\n2 1\n")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
  EXPECT_EQ(invoke({"norm", (dir_ / "missing.txt").string()}).code, 2);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, 1);
  EXPECT_EQ(invoke({"bogus"}).code, 1);
  EXPECT_EQ(invoke({"norm", "--def", "nope", "x"}).code, 1);
  EXPECT_EQ(invoke({"schreier", "member", "{2,3}"}).code, 1);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST_F(Cli, DomainErrors) {
  const auto file = write("x.txt", "3 1\n");
  EXPECT_EQ(invoke({"norm", "--def", "implicit", "--theta", "3/2", file}).code, 2);
  EXPECT_EQ(invoke({"norm", "--def", "mixed", "--coef", "half", file}).code, 2);
  EXPECT_EQ(invoke({"average", "--n", "2", "--eps", "1/8"}).code, 2);
  EXPECT_EQ(invoke({"schreier", "maximal", "--n", "1", "{2,3,4}"}).code, 2);
}

TEST_F(Cli, SchreierChecks) {
  EXPECT_EQ(invoke({"schreier", "member", "--n", "1", "{2,3,4}"}).out, "false\n");
  EXPECT_EQ(invoke({"schreier", "member", "--n", "2", "{2,3,4,5,6,7}"}).out, "true\n");
  EXPECT_EQ(invoke({"schreier", "maximal", "--n", "1", "{3,4,5}"}).out, "true\n");
  EXPECT_EQ(invoke({"schreier", "admissible", "--k", "1", "[{1},{2}]"}).out, "false\n");
  EXPECT_EQ(invoke({"schreier", "admissible", "--k", "1", "--scale", "2", "[{1},{5}]"}).out, "true\n");
}

TEST_F(Cli, OracleSweep) {
  auto r = invoke({"oracle-check", "--support", "6", "--trials", "100", "--seed", "7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "100/100 exact matches\n");
  EXPECT_EQ(invoke({"oracle-check", "--support", "11"}).code, 2);
}

TEST_F(Cli, AverageOutputIsAVectorFile) {
  auto r = invoke({"average", "--n", "1", "--eps", "1/4", "--k", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("# A = {9,10,11,12,13,14,15,16,17}"), std::string::npos);
  EXPECT_NE(r.out.find("\n17 2/9\n"), std::string::npos);
  auto norm = invoke({"norm", write("z.txt", r.out)});
  EXPECT_EQ(norm.out, "1 (1)\n");
}

TEST_F(Cli, StabilizeTableAndCsv) {
  auto r = invoke({"stabilize", "--n", "1", "--eps", "1/8", "--csv", "-"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("ratio = 1 (1)"), std::string::npos);
  EXPECT_NE(r.out.find("experiment,n,j,value_exact,value_decimal,d,ratio\nstabilize,1,0,1,1,1,1\n"),
            std::string::npos);
}

TEST_F(Cli, RunConfigWritesCsv) {
  const auto csv = (dir_ / "out.csv").string();
  const auto cfg = write("run.cfg", "# stability\nexperiment = stabilize\nn = 1\neps = 1/8\ncsv = " + csv + "\n");
  auto r = invoke({"run", "--config", cfg});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(csv);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(text.str(), "experiment,n,j,value_exact,value_decimal,d,ratio\nstabilize,1,0,1,1,1,1\nstabilize,1,1,1,1,1,1\n");
  EXPECT_EQ(invoke({"run", "--config", write("bad.cfg", "experiment = nope\n")}).code, 2);
}

TEST_F(Cli, OutputIsStable) {
  const auto file = write("x.txt", "2 1/3\n3 -2\n5 7/4\n6 1\n9 -1/2\n");
  auto a = invoke({"norm", "--cert", file});
  auto b = invoke({"norm", "--cert", file});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.code, 0);
}

}  // namespace
