#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "svh/svh.hpp"

using namespace svh;

namespace {

const std::string kSamples = SVH_SAMPLES_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cfg(const RunConfig& cfg) {
  std::ostringstream out, err;
  int code = run(cfg, out, err);
  return {code, out.str(), err.str()};
}

RunConfig cfg_of(std::string command, std::string spec, std::optional<int> window, Format fmt = Format::text) {
  RunConfig c;
  c.command = std::move(command);
  c.spec = std::move(spec);
  c.window = window;
  c.format = fmt;
  return c;
}

int run_binary(const std::string& args) {
  std::string cmd = std::string(SVH_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  auto p = std::filesystem::temp_directory_path() / ("svh_test_" + name);
  std::ofstream(p) << content;
  return p;
}

} // namespace

TEST(Report, RationalsAreIntegerPairs) {
  auto j = rat_json(Rat(BigInt(-3), BigInt(4)));
  EXPECT_EQ(j.dump(), R"({"num":-3,"den":4})");
  EXPECT_EQ(rat_from_json(j), Rat(BigInt(-3), BigInt(4)));
  BigInt big = BigInt(1) << 100;
  auto b = rat_json(Rat(big, BigInt(3)));
  EXPECT_TRUE(b["num"].is_string());
  EXPECT_EQ(rat_from_json(b), Rat(big, BigInt(3)));
}

TEST(Report, TwistedSvJson) {
  auto spec = twisted_sv_spec();
  auto j = to_json(spec, analyze_cohomology(spec, Window(6), 0, Mode::leibniz, 3));
  for (const char* key : {"algebra", "window", "inner", "degree", "mode", "dim_cocycle", "dim_coboundary",
                          "dim_cocycle_inner", "dim_coboundary_inner", "dim_cohomology_inner", "representatives",
                          "skipped_triples", "c", "raw_representatives", "lemma_verdicts"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["dim_cohomology_inner"], 1);
  ASSERT_EQ(j["representatives"].size(), 1u);
  bool found = false;
  for (const auto& e : j["representatives"][0])
    if (e["left_family"] == "L" && e["left_index"] == 2 && e["right_index"] == -2) {
      found = true;
      EXPECT_EQ(e["num"], 1);
      EXPECT_EQ(e["den"], 2);
    }
  EXPECT_TRUE(found);
  EXPECT_EQ(j.dump().find('.'), std::string::npos);  // no floats anywhere
}

TEST(Report, JsonRepresentativesReloadAsCocycles) {
  auto spec = twisted_sv_spec();
  auto j = to_json(spec, analyze_cohomology(spec, Window(8), 0, Mode::leibniz, 4));
  auto sys = build_cocycle_system(spec, Window(4), 0, Mode::leibniz);
  for (const char* key : {"representatives", "raw_representatives"})
    for (const auto& rep : j[key]) {
      auto phi = form_from_json(spec, rep, Window(4), 0);
      EXPECT_FALSE(phi.is_zero());
      EXPECT_TRUE(sys.satisfied_by(phi)) << key;
    }
}

TEST(Report, ZeroFormLemmaReport) {
  auto spec = twisted_sv_spec();
  auto j = to_json(spec, lemma_assertions(spec, BilinearForm("twisted-sv", Window(2), 0), 2));
  EXPECT_EQ(j["c"].dump(), R"({"num":0,"den":1})");
  for (const auto& v : j["lemma_verdicts"]) EXPECT_EQ(v["verdict"], "pass");
}

TEST(Report, EmptyScanCsvIsHeaderOnly) {
  auto csv = scan_csv({});
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1);
  EXPECT_EQ(csv.rfind("degree,window,inner,", 0), 0u);
}

TEST(Report, WriteArtifactToUnwritablePathThrows) {
  std::ostringstream fallback;
  EXPECT_THROW(write_artifact(std::string("/nonexistent/dir/out.json"), "x", fallback), IoError);
  write_artifact(std::nullopt, "abc", fallback);
  EXPECT_EQ(fallback.str(), "abc");
}

TEST(Cli, CheckReportsZeroViolations) {
  auto r = run_cfg(cfg_of("check", "twisted-sv", 6));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("0 violations, ", 0), 0u);
  EXPECT_NE(r.out.find("triples checked"), std::string::npos);
}

TEST(Cli, CohomologyTextAndJson) {
  auto cfg = cfg_of("cohomology", "twisted-sv", 6, Format::json);
  auto r = run_cfg(cfg);
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["dim_cohomology_inner"], 1);
  EXPECT_EQ(j["inner"], 3);
  cfg.format = Format::text;
  EXPECT_NE(run_cfg(cfg).out.find("dim cohomology (inner)    1"), std::string::npos);
}

TEST(Cli, AbelianSampleFile) {
  auto cfg = cfg_of("cohomology", kSamples + "/abelian.alg", 1, Format::json);
  cfg.inner = 1;
  auto r = run_cfg(cfg);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["dim_cohomology_inner"], 3);
}

TEST(Cli, Determinism) {
  for (Format f : {Format::text, Format::json, Format::csv}) {
    auto cfg = cfg_of("cohomology", "twisted-sv", 5, f);
    cfg.degrees = {0, 1, -2};
    EXPECT_EQ(run_cfg(cfg).out, run_cfg(cfg).out);
  }
  auto scan = cfg_of("scan", "witt", std::nullopt, Format::csv);
  scan.windows = {2, 4, 6};
  EXPECT_EQ(run_cfg(scan).out, run_cfg(scan).out);
}

TEST(Cli, ScanCsvRows) {
  auto cfg = cfg_of("scan", "twisted-sv", std::nullopt, Format::csv);
  cfg.windows = {4, 6};
  auto r = run_cfg(cfg);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\n0,4,2,"), std::string::npos);
  EXPECT_NE(r.out.find("\n0,6,3,"), std::string::npos);
}

TEST(Cli, OutputFileIsWritten) {
  auto path = std::filesystem::temp_directory_path() / "svh_test_out.json";
  auto cfg = cfg_of("cocycles", "witt", 2, Format::json);
  cfg.out = path.string();
  auto r = run_cfg(cfg);
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  auto j = Json::parse(in);
  EXPECT_EQ(j["dim_cocycle"], cocycle_space(witt_spec(), Window(2), 0, Mode::leibniz).size());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cfg(cfg_of("check", kSamples + "/corrupted-lm.alg", 3)).code, exit_failed);
  EXPECT_EQ(run_cfg(cfg_of("check", "no-such-preset", 3)).code, exit_bad_config);
  EXPECT_EQ(run_cfg(cfg_of("check", "witt", std::nullopt)).code, exit_bad_config);
  EXPECT_EQ(run_cfg(cfg_of("frobnicate", "witt", 2)).code, exit_bad_config);
  auto bad_inner = cfg_of("cohomology", "witt", 2);
  bad_inner.inner = 5;
  EXPECT_EQ(run_cfg(bad_inner).code, exit_bad_config);
  auto unwritable = cfg_of("check", "witt", 2);
  unwritable.out = "/nonexistent/dir/out.txt";
  EXPECT_EQ(run_cfg(unwritable).code, exit_bad_config);
  auto r = run_cfg(cfg_of("cohomology", kSamples + "/malformed.alg", 2));
  EXPECT_EQ(r.code, exit_parse_error);
  EXPECT_NE(r.err.find("line 4, column 22"), std::string::npos) << r.err;
}

TEST(Cli, CorruptedSpecFilesGiveParseExit) {
  const std::vector<std::pair<std::string, std::string>> files{
      {"dup.alg", "families L\nbracket L L -> m L\nbracket L L -> m L\n"},
      {"unknown.alg", "families L\nbracket L L -> m Q\n"},
      {"directive.alg", "families L\nrules everywhere\n"},
      {"empty.alg", ""},
  };
  for (const auto& [name, text] : files) {
    auto p = temp_file(name, text);
    EXPECT_EQ(run_cfg(cfg_of("check", p.string(), 2)).code, exit_parse_error) << name;
  }
}

TEST(Cli, BinaryExitCodes) {
  EXPECT_EQ(run_binary("check --spec twisted-sv --window 4"), 0);
  EXPECT_EQ(run_binary("check --spec " + kSamples + "/corrupted-lm.alg --window 3"), 1);
  EXPECT_EQ(run_binary("check --spec twisted-sv --window nope"), 2);
  EXPECT_EQ(run_binary("cohomology --spec twisted-sv --window 2 --mode sideways"), 2);
  EXPECT_EQ(run_binary("cohomology --spec " + kSamples + "/malformed.alg --window 2"), 3);
  EXPECT_EQ(run_binary("cohomology --spec " + kSamples + "/twisted-sv.alg --window 4"), 0);
}
