#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "hooleyff_cli/config.hpp"
#include "hooleyff_cli/runner.hpp"
#include "hooleyff_cli/toml.hpp"
#include "test_util.hpp"

namespace hooleyff::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliRun : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("hooleyff_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& file, const std::string& text) {
    const auto p = dir_ / file;
    std::ofstream(p, std::ios::binary) << text;
    return p;
  }

  int run(const fs::path& cfg, const fs::path& out, RunOptions opts = {}) {
    opts.out_dir = out;
    out_.str("");
    err_.str("");
    return run_config_file(cfg, opts, out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

constexpr const char* kControl = R"(
experiment = "control"
name = "control"
g = [2, 1, 0, 0, 0, 0, 1]
[field]
p = 3
)";

constexpr const char* kVariance = R"(
experiment = "variance"
name = "var"
seed = 4
g = [2, 0, 1]
[field]
p = 5
[family]
kind = "mixed-char"
exponents = [1]
F = [0, 1]
[parameters]
centers = "sample"
)";

TEST_F(CliRun, NonSquarefreeModulusExitsOneNamingTheCode) {
  const auto cfg = write("bad.toml", R"(
experiment = "sweep"
g = [0, 0, 1, 1]
[field]
p = 3
[family]
kind = "kloosterman"
)");
  EXPECT_EQ(run(cfg, dir_ / "out"), kExitConfigError);
  EXPECT_NE(err_.str().find("NotSquarefree"), std::string::npos) << err_.str();
}

TEST_F(CliRun, ControlExitsZeroWithExpectedViolationRow) {
  const auto cfg = write("control.toml", kControl);
  ASSERT_EQ(run(cfg, dir_ / "out"), kExitPass) << err_.str();
  const auto csv = slurp(dir_ / "out" / "control.csv");
  EXPECT_EQ(csv.rfind("g,m_small,sum_re,sum_im,expected,identity_ok,naive_bound,naive_pass,expected_violation\n", 0),
            0u);
  // deg g = 6 admits m_small = 0, 1, 2; m = 2 breaks the naive expectation.
  EXPECT_NE(csv.find("u^6+u+2,2,9,0,9,true,5.19615242271,false,true\n"), std::string::npos) << csv;
  EXPECT_NE(out_.str().find("-> PASS"), std::string::npos);
}

TEST_F(CliRun, ReportJsonCarriesSchemaAndEcho) {
  const auto cfg = write("var.toml", kVariance);
  ASSERT_EQ(run(cfg, dir_ / "out"), kExitPass) << err_.str();
  const auto j = json::parse(slurp(dir_ / "out" / "var.json"));
  EXPECT_EQ(j["schema"], "hooley-ff/report/v1");
  EXPECT_EQ(j["experiment"], "variance");
  EXPECT_EQ(j["config"]["seed"], 4);
  EXPECT_EQ(j["summary"]["identity_failures"], 0);
  EXPECT_EQ(j["rows"], 3);
  EXPECT_EQ(j["config"], config_to_json(config_from_json(j["config"])));
}

TEST_F(CliRun, SameConfigTwiceIsByteIdentical) {
  const auto cfg = write("var.toml", kVariance);
  ASSERT_EQ(run(cfg, dir_ / "a"), kExitPass);
  RunOptions threaded;
  threaded.jobs = 3;
  ASSERT_EQ(run(cfg, dir_ / "b", threaded), kExitPass);
  EXPECT_EQ(slurp(dir_ / "a" / "var.csv"), slurp(dir_ / "b" / "var.csv"));
  EXPECT_EQ(slurp(dir_ / "a" / "var.json"), slurp(dir_ / "b" / "var.json"));
}

TEST_F(CliRun, SeedFlagOverridesConfig) {
  const auto cfg = write("var.toml", kVariance);
  RunOptions o;
  o.seed = 99;
  ASSERT_EQ(run(cfg, dir_ / "out", o), kExitPass);
  EXPECT_EQ(json::parse(slurp(dir_ / "out" / "var.json"))["config"]["seed"], 99);
}

TEST_F(CliRun, FailedAssertedBoundExitsTwo) {
  // A declared rank-1, conductor-0 table that is nowhere near weight 0.
  std::string table = "residue_index,residue_poly,re,im\n";
  for (int x = 0; x < 5; ++x) table += std::to_string(x) + "," + std::to_string(x) + "," + (x ? "0" : "1000") + ",0\n";
  write("t.csv", table);
  const auto cfg = write("custom.toml", R"(
experiment = "sweep"
name = "custom"
g = [0, 1]
[field]
p = 5
[family]
kind = "custom"
table = "t.csv"
rank = 1
conductor = 0
)");
  EXPECT_EQ(run(cfg, dir_ / "out"), kExitCheckFailed) << err_.str();
  EXPECT_NE(out_.str().find("-> FAIL"), std::string::npos);
}

TEST_F(CliRun, JsonAndTomlConfigsAgree) {
  const auto toml_cfg = write("var.toml", kVariance);
  const auto json_cfg = write("var.json", config_to_json(load_config(toml_cfg)).dump());
  ASSERT_EQ(run(toml_cfg, dir_ / "a"), kExitPass);
  ASSERT_EQ(run(json_cfg, dir_ / "b"), kExitPass);
  EXPECT_EQ(slurp(dir_ / "a" / "var.csv"), slurp(dir_ / "b" / "var.csv"));
}

TEST_F(CliRun, GnuplotAndTableExport) {
  const auto cfg = write("var.toml", std::string(kVariance) + "export_table = true\n");
  RunOptions o;
  o.gnuplot = true;
  ASSERT_EQ(run(cfg, dir_ / "out", o), kExitPass) << err_.str();
  EXPECT_NE(slurp(dir_ / "out" / "var.gp").find("'var.csv'"), std::string::npos);
  EXPECT_EQ(slurp(dir_ / "out" / "var_table.csv").rfind("residue_index,residue_poly,re,im\n", 0), 0u);
  EXPECT_EQ(json::parse(slurp(dir_ / "out" / "var_table.json"))["rank"], 1);
}

TEST_F(CliRun, MalformedTomlExitsOne) {
  const auto cfg = write("broken.toml", "experiment = \n");
  EXPECT_EQ(run(cfg, dir_ / "out"), kExitConfigError);
  EXPECT_NE(err_.str().find("ConfigParse"), std::string::npos);
}

TEST(Config, UnknownKeysAreNamed) {
  try {
    config_from_json(json::parse(R"({"experiment":"control","g":[0,1],"field":{"p":3},"colour":1})"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Validation);
    EXPECT_NE(std::string(e.what()).find("colour"), std::string::npos);
  }
}

TEST(Config, Validation) {
  EXPECT_HFF_ERROR(config_from_json(json::parse(R"({"experiment":"plot"})")), Validation);
  EXPECT_HFF_ERROR(config_from_json(json::parse(R"({"experiment":"sweep","g":[0,1],"field":{"p":3}})")), Validation);
  EXPECT_HFF_ERROR(config_from_json(json::parse(
                       R"({"experiment":"covariance","g":[0,1],"field":{"p":3},"family":{"kind":"kloosterman"}})")),
                   Validation);
  EXPECT_HFF_ERROR(
      config_from_json(json::parse(R"({"experiment":"sweep","g":[0,1],"field":{"p":3},"family":{"kind":"value-set"}})")),
      Validation);
  EXPECT_HFF_ERROR(config_from_json(json::parse(
                       R"({"experiment":"sweep","g":[0,1],"field":{"p":3},"family":{"kind":"kloosterman","P":[1]}})")),
                   Validation);
  EXPECT_HFF_ERROR(config_from_json(json::parse(R"({"experiment":"sweep","seed":"x","family":{"kind":"catalog"}})")),
                   ConfigParse);
}

TEST(Catalog, ListsRequiredFamilies) {
  const auto all = list_catalog();
  auto has = [&](const std::string& s) {
    for (const auto& line : all)
      if (line.find(s) != std::string::npos) return true;
    return false;
  };
  EXPECT_TRUE(has("kloosterman k=2"));
  EXPECT_TRUE(has("hooley e(a·h̄/g)"));
  EXPECT_TRUE(has("burgess χ(F(h))"));
  for (const auto& line : all) EXPECT_EQ(line.find("FAIL"), std::string::npos) << line;
  EXPECT_EQ(list_catalog(""), all);
  EXPECT_EQ(list_catalog("kloosterman").size(), 2u);
  EXPECT_TRUE(list_catalog("no such entry").empty());
}

}  // namespace
}  // namespace hooleyff::cli
