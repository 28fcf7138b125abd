#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "twoseg/cli.hpp"

using namespace twoseg;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(TWOSEG_FIXTURE_DIR) + "/" + name; }

class Cli : public ::testing::Test {
protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("twoseg-cli-" + std::to_string(::getpid()) + "-" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string tmp(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

} // namespace

TEST_F(Cli, CheckTwoSegalJson) {
  auto r = run({"--report", "json", "check", "2segal", fixture("nerve-poset-3.sset")});
  EXPECT_EQ(r.code, kExitPass);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verdict"], "pass");
  for (const char* key : {"scope", "checked", "instances", "subreports", "notes"}) EXPECT_TRUE(j.contains(key)) << key;
}

TEST_F(Cli, TextReport) {
  auto r = run({"check", "unital", fixture("nerve-poset-3.sset")});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("pass"), std::string::npos);
}

TEST_F(Cli, RoundtripOnPathFixture) {
  EXPECT_EQ(run({"roundtrip", fixture("path-simplex-2.sigma")}).code, kExitPass);
  EXPECT_EQ(run({"roundtrip", fixture("nerve-poset-3.sset")}).code, kExitPass);
}

TEST_F(Cli, CorruptEpsFailsAugmentation) {
  auto r = run({"--report", "json", "check", "sadss", fixture("corrupt-eps.sigma")});
  EXPECT_EQ(r.code, kExitFail);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verdict"], "fail");
  EXPECT_EQ(j["subreports"]["augmentation"]["verdict"], "fail");
  EXPECT_EQ(j["subreports"]["double-segal"]["verdict"], "pass");
  const auto& inst = j["subreports"]["augmentation"]["instances"][0];
  EXPECT_FALSE(inst["witness"].empty());
  EXPECT_FALSE(inst["index"].empty());
}

TEST_F(Cli, CorruptFaceIsInvalid) {
  auto r = run({"--report", "json", "check", "2segal", fixture("corrupt-face.sset")});
  EXPECT_EQ(r.code, kExitValidation);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["instances"][0]["condition"], "d_i d_j = d_{j-1} d_i");
  EXPECT_EQ(run({"validate", fixture("corrupt-face.sset")}).code, kExitValidation);
}

TEST_F(Cli, MissingFaceAndUnbalanced) {
  auto missing = run({"validate", fixture("missing-face.sset")});
  EXPECT_EQ(missing.code, kExitValidation);
  EXPECT_NE((missing.out + missing.err).find("index 9"), std::string::npos);
  EXPECT_EQ(run({"validate", fixture("unbalanced.sset")}).code, kExitParse);
  EXPECT_EQ(run({"validate", tmp("absent.sset")}).code, kExitParse);
}

TEST_F(Cli, SwappedMonoEpi) {
  auto r = run({"nerve-exact", "--proto-exact", fixture("swapped.proto"), "--bidegree", "1", "1", "-o", tmp("x.gsigma")});
  EXPECT_EQ(r.code, kExitValidation);
  EXPECT_NE(r.out.find("initial"), std::string::npos);
  auto c = run({"--report", "json", "check", "sadss-groupoid", fixture("swapped.gsigma")});
  EXPECT_EQ(c.code, kExitFail);
  auto j = nlohmann::json::parse(c.out);
  EXPECT_EQ(j["subreports"]["augmentation"]["verdict"], "fail");
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"check", "3segal", fixture("nerve-poset-3.sset")}).code, kExitUsage);
  EXPECT_EQ(run({"check", "sadss", fixture("nerve-poset-3.sset")}).code, kExitUsage);
  EXPECT_EQ(run({"--jobs", "0", "check", "2segal", fixture("nerve-poset-3.sset")}).code, kExitUsage);
  EXPECT_EQ(run({"--render", tmp("a.svg"), "check", "2segal", fixture("nerve-poset-3.sset")}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitPass);
}

TEST_F(Cli, PipelineNervePathSdot) {
  ASSERT_EQ(run({"nerve", "--poset", "0<1<2", "-t", "3", "-o", tmp("n.sset")}).code, kExitPass);
  ASSERT_EQ(run({"--render", tmp("p.svg"), "path", tmp("n.sset"), "-o", tmp("p.sigma")}).code, kExitPass);
  EXPECT_TRUE(fs::exists(tmp("p.svg")));
  EXPECT_EQ(run({"check", "sadss", tmp("p.sigma")}).code, kExitPass);
  ASSERT_EQ(run({"sdot", tmp("p.sigma"), "-o", tmp("s.sset")}).code, kExitPass);
  EXPECT_EQ(run({"check", "2segal", tmp("s.sset")}).code, kExitPass);
  ASSERT_EQ(run({"nerve", "--category", fixture("category-z2.category"), "-t", "3", "-o", tmp("z.sset")}).code, kExitPass);
  EXPECT_EQ(run({"check", "2segal", tmp("z.sset")}).code, kExitPass);
}

TEST_F(Cli, NerveExactPointedSets) {
  auto r = run({"--report", "json", "nerve-exact", "--pointed-sets", "3", "--bidegree", "1", "1", "-o", tmp("e.gsigma")});
  ASSERT_EQ(r.code, kExitPass);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["objects"]["1,1"], 26);
  EXPECT_EQ(run({"check", "sadss-groupoid", tmp("e.gsigma")}).code, kExitPass);
}

TEST_F(Cli, SearchAndHall) {
  auto found = run({"--report", "json", "search", "--max-x0", "1", "--max-x1", "2", "--truncation", "3", "-o", tmp("a.sset")});
  EXPECT_EQ(found.code, kExitPass);
  EXPECT_TRUE(nlohmann::json::parse(found.out).contains("examined"));
  auto none = run({"search", "--max-x0", "1", "--max-x1", "1", "--truncation", "3"});
  EXPECT_EQ(none.code, kExitFail);
  auto hall = run({"--report", "json", "hall", tmp("a.sset")});
  EXPECT_EQ(hall.code, kExitFail);
  EXPECT_EQ(nlohmann::json::parse(hall.out)["instances"][0]["condition"], "associativity");
  EXPECT_EQ(run({"hall", fixture("nerve-poset-3.sset")}).code, kExitPass);
}

TEST_F(Cli, JobsDoNotChangeOutput) {
  auto one = run({"--report", "json", "roundtrip", fixture("path-simplex-2.sigma")});
  auto four = run({"--report", "json", "--jobs", "4", "roundtrip", fixture("path-simplex-2.sigma")});
  EXPECT_EQ(one.out, four.out);
  ASSERT_EQ(run({"sdot", fixture("path-simplex-2.sigma"), "-o", tmp("a.sset")}).code, 0);
  ASSERT_EQ(run({"--jobs", "3", "sdot", fixture("path-simplex-2.sigma"), "-o", tmp("b.sset")}).code, 0);
  std::ifstream a(tmp("a.sset")), b(tmp("b.sset"));
  std::stringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  EXPECT_EQ(sa.str(), sb.str());
}

TEST_F(Cli, ExecutableExitCodes) {
  const std::string exe = TWOSEG_CLI;
  auto status = [&](const std::string& args) {
    int s = std::system((exe + " " + args + " > /dev/null 2>&1").c_str());
    return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
  };
  EXPECT_EQ(status("check 2segal " + fixture("nerve-poset-3.sset")), 0);
  EXPECT_EQ(status("check sadss " + fixture("corrupt-eps.sigma")), 1);
  EXPECT_EQ(status("validate " + fixture("unbalanced.sset")), 2);
  EXPECT_EQ(status("validate " + fixture("corrupt-face.sset")), 3);
  EXPECT_EQ(status("frobnicate"), 64);
}
