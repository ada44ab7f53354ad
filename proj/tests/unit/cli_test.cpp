#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "toric/cli.hpp"
#include "toric/io.hpp"

namespace toric {
namespace {

using io::Json;

struct Invocation {
  int code;
  std::string out;
  std::string err;
  Json report() const { return Json::parse(out); }
};

Invocation toric(std::vector<std::string> args) {
  for (auto& a : args)
    if (a.ends_with(".json") && a.find('/') == std::string::npos) a = std::string(TORIC_DATA_DIR "/") + a;
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Check, TriangleHasSevenPassingStrata) {
  const Invocation r = toric({"check", "triangle.json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json report = r.report();
  EXPECT_EQ(report["strata_count"], 7);
  EXPECT_EQ(report["all_pass"], true);
  EXPECT_EQ(report["config"]["seed"], 0);
  EXPECT_EQ(report["config"]["samples"], 1000);
  EXPECT_EQ(report["config"]["h"], 1e-4);
}

TEST(Check, TeardropNamesTheFailingVertex) {
  const Invocation r = toric({"check", "teardrop.json"});
  ASSERT_EQ(r.code, 1) << r.err;
  const Json report = r.report();
  std::vector<Json> failing;
  for (const auto& s : report["strata"])
    if (s["unimodular"] == false) failing.push_back(s);
  ASSERT_EQ(failing.size(), 1u);
  EXPECT_EQ(failing[0]["dimension"], 0);
  EXPECT_EQ(failing[0]["point"], Json::parse(R"(["0", "1"])"));
  EXPECT_EQ(failing[0]["elementary_divisors"], Json::parse("[1, 2]"));
  EXPECT_NE(failing[0]["reason"].get<std::string>().find("(1,2)"), std::string::npos);
}

TEST(Check, InputErrorsExitTwo) {
  Invocation r = toric({"check", "bad_rational.json"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("cells[0].halfspaces[1].offset"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());

  EXPECT_EQ(toric({"check", "rp2.json"}).code, 2);
  EXPECT_EQ(toric({"check", "missing.json"}).code, 2);
  EXPECT_EQ(toric({"check"}).code, 2);
  EXPECT_EQ(toric({"frobnicate"}).code, 2);
  EXPECT_EQ(toric({"classify", "triangle.json"}).code, 2);  // --n is required
  EXPECT_EQ(toric({"classify", "triangle.json", "--n", "0"}).code, 2);
  EXPECT_EQ(toric({"local", "--model", "0,0"}).code, 2);
  EXPECT_EQ(toric({"local", "--model", "2"}).code, 2);
  EXPECT_EQ(toric({"classify", "half_plane.json", "--n", "1"}).code, 2);  // unbounded, no box
}

TEST(Classify, ContractibleDomainsHaveOneClass) {
  for (const char* file : {"triangle.json", "square.json", "two_squares.json", "half_plane_boxed.json"}) {
    const Invocation r = toric({"classify", file, "--n", "2"});
    ASSERT_EQ(r.code, 0) << file << r.err;
    const Json report = r.report();
    EXPECT_EQ(report["stm_count"], 1) << file;
    EXPECT_EQ(report["classes"].size(), 1u) << file;
    EXPECT_EQ(report["picard"]["free_rank"], 0);
    EXPECT_EQ(report["picard"]["real_dim"], 0);
    EXPECT_TRUE(report["picard"]["torsion"].empty());
  }
}

TEST(Classify, ProjectivePlaneHasFourClasses) {
  const Invocation r = toric({"classify", "rp2.json", "--n", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json report = r.report();
  EXPECT_EQ(report["picard"]["torsion"], Json::parse("[2, 2]"));
  EXPECT_EQ(report["stm_count"], 4);
  EXPECT_EQ(report["classes"].size(), 4u);
}

TEST(Classify, SphereHasInfinitelyManyClasses) {
  const Invocation r = toric({"classify", "boundary_tetrahedron.json", "--n", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json report = r.report();
  EXPECT_EQ(report["stm_count"], "infinite");
  EXPECT_EQ(report["picard"]["free_rank"], 1);
  EXPECT_EQ(report["picard"]["real_dim"], 1);
  EXPECT_FALSE(report.contains("classes"));
  EXPECT_EQ(report["description"], "torsor over Z + R, based at the class of the trivial bundle");
}

TEST(Classify, FailingDomainExitsOne) {
  const Invocation r = toric({"classify", "teardrop.json", "--n", "2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.report()["failing_strata"].size(), 1u);
}

TEST(Torsor, AxiomsHoldOnTheThreeInputs) {
  const Invocation finite = toric({"torsor", "rp2.json", "--n", "2"});
  ASSERT_EQ(finite.code, 0) << finite.err;
  EXPECT_EQ(finite.report()["mode"], "exhaustive");
  EXPECT_EQ(finite.report()["torsor_axioms"]["compatibility"]["witnesses"], 64);

  const Invocation sampled = toric({"torsor", "boundary_tetrahedron.json", "--n", "1", "--seed", "7"});
  ASSERT_EQ(sampled.code, 0) << sampled.err;
  EXPECT_EQ(sampled.report()["mode"], "sampled(7)");
  EXPECT_EQ(sampled.report()["samples"], 1000);

  EXPECT_EQ(toric({"torsor", "triangle.json", "--n", "2"}).code, 0);
  EXPECT_EQ(toric({"torsor", "teardrop.json", "--n", "2"}).code, 1);
}

TEST(Local, SuitePassesAndEchoesConfig) {
  const Invocation r = toric({"local", "--model", "1,1", "--samples", "200", "--h", "1e-4", "--seed", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json report = r.report();
  EXPECT_EQ(report["config"]["model"], Json::parse("[1, 1]"));
  EXPECT_EQ(report["config"]["samples"], 200);
  EXPECT_EQ(report["config"]["seed"], 3);
  EXPECT_EQ(report["pass"], true);
  EXPECT_EQ(report["tensor_reduction_non_basic_control"]["detected"], true);
}

TEST(Determinism, RepeatedRunsAreByteIdentical) {
  const std::vector<std::vector<std::string>> commands = {
      {"check", "pyramid.json"},
      {"classify", "rp2.json", "--n", "2"},
      {"torsor", "boundary_tetrahedron.json", "--n", "1", "--seed", "11"},
      {"local", "--model", "2,1", "--samples", "100"},
  };
  for (const auto& args : commands) {
    const Invocation a = toric(args), b = toric(args);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out) << args[0];
    EXPECT_FALSE(a.out.empty());
  }
}

TEST(Determinism, SeedChangesSampledReports) {
  EXPECT_NE(toric({"local", "--model", "1,0", "--seed", "1"}).out,
            toric({"local", "--model", "1,0", "--seed", "2"}).out);
}

TEST(Output, WritesTheReportToAFile) {
  const std::string path = ::testing::TempDir() + "toric_cli_test_report.json";
  const Invocation r = toric({"check", "square.json", "-o", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream file(path);
  std::stringstream text;
  text << file.rdbuf();
  EXPECT_EQ(toric({"check", "square.json"}).out, text.str());
  std::remove(path.c_str());
}

}  // namespace
}  // namespace toric
