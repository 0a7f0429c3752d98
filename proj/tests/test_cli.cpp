#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "qcr/json_io.hpp"

namespace qcr {
namespace {

using io::Json;

struct CliRun {
  int status = -1;
  std::string out;
};

// Runs a shell line with QCR bound to the CLI binary; stderr is discarded.
CliRun shell(const std::string& line) {
  const std::string command = "QCR='" QCR_BINARY "'; " + line + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return {};
  CliRun r;
  char buffer[4096];
  std::size_t n = 0;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) r.out.append(buffer, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

Json json_of(const CliRun& r) { return Json::parse(r.out); }

std::string write_temp(const std::string& name, const Json& doc) {
  const auto dir = std::filesystem::temp_directory_path() / "qcr_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << doc.dump();
  return path.string();
}

Pair whole_quaternions() {
  return Pair(standard_structure(1), Subspace<Rational>::span(4, RationalMatrix::identity(4)));
}

TEST(Cli, ModelPipedIntoSplitting) {
  const CliRun r = shell("$QCR model --factor CoV:1 | $QCR splitting");
  ASSERT_EQ(r.status, 0);
  const Json j = json_of(r);
  EXPECT_EQ(j["cocr"], true);
  EXPECT_EQ(j["cr"], false);
  EXPECT_EQ(j["plus"], Json::parse("[2]"));
  EXPECT_EQ(j["minus"], Json::array());
  EXPECT_EQ(json_of(shell("$QCR model --factor CoVp:1 | $QCR splitting"))["plus"], Json::parse("[3,3]"));
  EXPECT_EQ(json_of(shell("$QCR model --factor CrV:2 | $QCR splitting"))["minus"], Json::parse("[-4]"));
}

TEST(Cli, ClassifyStoredDirectSum) {
  const CliRun built = shell("$QCR model --factor CoVp:1 --factor CoV:1");
  ASSERT_EQ(built.status, 0);
  const std::string path = write_temp("sum.json", json_of(built));
  const CliRun r = shell("$QCR classify " + path);
  ASSERT_EQ(r.status, 0);
  const Decomposition expected = {{FactorTag::CoV, 1}, {FactorTag::CoVp, 1}};
  EXPECT_EQ(io::decomposition_from_json(json_of(r)), expected);
}

TEST(Cli, ThreeStagePipelineRecoversFactors) {
  const CliRun r = shell("$QCR model --factor CrV:1 --factor CrVp:0 | $QCR splitting | $QCR classify");
  ASSERT_EQ(r.status, 0);
  const Decomposition expected = {{FactorTag::CrV, 1}, {FactorTag::CrVp, 0}};
  EXPECT_EQ(io::decomposition_from_json(json_of(r)), expected);
}

TEST(Cli, CheckCoCrOnWholeSpace) {
  const std::string path = write_temp("whole.json", io::to_json(whole_quaternions()));
  const CliRun r = shell("$QCR check --kind cocr " + path);
  ASSERT_EQ(r.status, 0);
  const Json j = json_of(r);
  EXPECT_EQ(j["cocr"], false);
  EXPECT_FALSE(j.contains("cr"));
  EXPECT_EQ(json_of(shell("$QCR check --kind cr < " + path))["cr"], true);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(shell("echo '{' | $QCR check").status, 2);
  EXPECT_EQ(shell("echo '{\"structure\": 3}' | $QCR check").status, 2);
  EXPECT_EQ(shell("$QCR frobnicate").status, 2);
  EXPECT_EQ(shell("$QCR model --factor Nope:1").status, 2);
  const CliRun invalid = shell("$QCR model --factor CoV:0");
  EXPECT_EQ(invalid.status, 1);
  EXPECT_EQ(json_of(invalid)["error"]["name"], "invalid-input");

  RationalMatrix span(2, 4);
  span(0, 0) = 1;
  span(1, 1) = 1;
  const std::string torsion = write_temp("torsion.json", io::to_json(Pair(standard_structure(1), Subspace<Rational>::span(4, span))));
  const CliRun r = shell("$QCR classify " + torsion);
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(json_of(r)["error"]["module"], "models-classification");
  EXPECT_EQ(shell("$QCR check --max-dim 2 " + torsion).status, 1);
}

TEST(Cli, ErrorsPropagateThroughPipes) {
  const CliRun r = shell("$QCR model --factor CoV:0 | $QCR splitting | $QCR classify");
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(json_of(r)["error"]["name"], "invalid-input");
}

TEST(Cli, OutputIsByteStableAndCarriesSeed) {
  for (const std::string line : {"$QCR random --count 3 --seed 5", "$QCR conjugation-recover --random 2 --seed 9",
                                 "$QCR model --factor CoV:2 | $QCR splitting --seed 4"}) {
    const CliRun a = shell(line), b = shell(line);
    EXPECT_EQ(a.status, 0) << line;
    EXPECT_EQ(a.out, b.out) << line;
    EXPECT_TRUE(json_of(a).contains("seed")) << line;
  }
  EXPECT_NE(shell("$QCR random --count 3 --seed 5").out, shell("$QCR random --count 3 --seed 6").out);
}

TEST(Cli, VerbOutputsRoundTripThroughParsers) {
  const Json model = json_of(shell("$QCR model --factor CoV:1 --factor CoVp:0"));
  EXPECT_EQ(io::to_json(io::pair_from_json(model)), model["pair"]);
  EXPECT_EQ(io::to_json(io::decomposition_from_json(model["factors"])), model["factors"]);

  Json split = json_of(shell("$QCR model --factor CoV:2 | $QCR splitting"));
  EXPECT_EQ(io::to_json(io::pair_from_json(split)), split["pair"]);
  const Json report = io::to_json(io::report_from_json(split));
  for (const auto& [key, value] : report.items()) EXPECT_EQ(split[key], value) << key;

  const Json dual = json_of(shell("$QCR model --factor CoV:1 | $QCR dual"));
  EXPECT_EQ(io::to_json(io::pair_from_json(dual)), dual["pair"]);

  const Json ftriple = json_of(shell("$QCR ftriple --model 2,1"));
  EXPECT_EQ(io::to_json(io::triple_from_json(ftriple)), ftriple["triple"]);
  EXPECT_EQ(io::to_json(io::report_from_json(ftriple["cocr_side"])), ftriple["cocr_side"]);

  const Json recovered = json_of(shell("$QCR conjugation-recover --random 1"));
  EXPECT_EQ(io::to_json(io::real_form_from_json(recovered)), recovered["real_form"]);
  const std::string input = write_temp("conj.json", recovered["input"]);
  EXPECT_EQ(json_of(shell("$QCR conjugation-recover " + input))["real_form"], recovered["real_form"]);

  const Json random = json_of(shell("$QCR random --count 2"));
  for (const auto& trial : random["trials"])
    EXPECT_EQ(io::to_json(io::decomposition_from_json(trial["input"])), trial["input"]);
}

TEST(Cli, FtripleConformalAndFileInputs) {
  const Json conformal = {{"gram", io::to_json(RationalMatrix::identity(3))},
                          {"frame", io::to_json(RationalMatrix::identity(3))}};
  const CliRun r = shell("$QCR ftriple --conformal " + write_temp("conformal.json", conformal));
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(json_of(r)["triple"], io::to_json(model_f_triple(1, 0)));
  EXPECT_EQ(json_of(r)["cocr_side"]["plus"], Json::parse("[2]"));

  Json flipped = conformal;
  flipped["frame"] = io::to_json(-RationalMatrix::identity(3));
  const CliRun bad = shell("$QCR ftriple --conformal " + write_temp("flipped.json", flipped));
  EXPECT_EQ(bad.status, 1);
  EXPECT_EQ(json_of(bad)["error"]["name"], "wrong-orientation");

  FQuatTriple broken = model_f_triple(1, 1);
  broken.v = broken.u;
  const CliRun invalid = shell("$QCR ftriple " + write_temp("broken.json", io::to_json(broken)));
  EXPECT_EQ(invalid.status, 0);
  EXPECT_EQ(json_of(invalid)["valid"], false);
  EXPECT_FALSE(json_of(invalid)["violations"].empty());
}

TEST(Cli, RandomRoundTripsAllMatch) {
  const CliRun r = shell("$QCR random --count 6 --max-qdim 4 --seed 11");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(json_of(r)["matched"], 6);
}

TEST(Cli, SelftestAndMutation) {
  const CliRun ok = shell("$QCR selftest --seed 3");
  EXPECT_EQ(ok.status, 0);
  EXPECT_EQ(json_of(ok)["failed"], 0);
  const CliRun bad = shell("$QCR selftest --mutate");
  EXPECT_EQ(bad.status, 1);
  const Json failures = json_of(bad)["failures"];
  ASSERT_FALSE(failures.empty());
  EXPECT_EQ(failures[0]["module"], "quaternion-structures");
  EXPECT_EQ(failures[0]["invariant"], "unit table matches the quaternion product");
}

TEST(Cli, TextOutput) {
  const CliRun r = shell("$QCR model --factor CoV:1 | $QCR check --text");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "cr: false\ncocr: true\nseed: 1\n");
}

}  // namespace
}  // namespace qcr
