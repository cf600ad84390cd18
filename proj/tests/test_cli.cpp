#include "hats/cli.hpp"
#include "hats/json_io.hpp"
#include "hats/verifier.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace hats;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("hats_test_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), {}};
}

const char* kBarJoke =
    "Three logicians walk into a bar. The waitress asks, \"Do you know the color of your own hat?\"\n"
    "The first logician answers, \"I do not know.\"\n"
    "The second logician answers, \"I do not know.\"\n"
    "The third logician answers, \"Yes.\"\n";

}  // namespace

TEST_CASE("render_joke") {
  Transcript bar;
  bar.push(0, DontKnow{});
  bar.push(1, DontKnow{});
  bar.push(2, Know{kRed});
  CHECK(cli::render_joke(bar, Palette(2), cli::kKnowQuestion) == kBarJoke);

  Transcript single;
  single.push(0, Know{kRed});
  CHECK(cli::render_joke(single, Palette(2), cli::kKnowQuestion) ==
        "One logician walks into a bar. The waitress asks, \"Do you know the color of your own hat?\"\n"
        "The first logician answers, \"Yes.\"\n");

  const auto spec = PuzzleSpec::repeated(5, 2);
  const auto run = run_transcript(spec, parity(spec), parse_assignment("R,R,B,B,R", Palette(2)));
  CHECK(cli::render_joke(run.transcript, Palette(2), cli::kGuessQuestion) ==
        "Five logicians walk into a bar. The waitress asks, \"What color is your hat?\"\n"
        "The first logician answers, \"Red.\"\n"
        "The second logician answers, \"Blue.\"\n"
        "The third logician answers, \"Blue.\"\n"
        "The fourth logician answers, \"Red.\"\n"
        "The fifth logician answers, \"Red.\"\n");
}

TEST_CASE("input parsers") {
  CHECK(cli::parse_supply("R:3,B:2") == std::vector<std::size_t>{3, 2});
  CHECK(cli::parse_supply("B:2") == std::vector<std::size_t>{0, 2});
  CHECK_THROWS_AS(cli::parse_supply("R3"), InvalidInput);
  CHECK_THROWS_AS(cli::parse_supply("R:x"), InvalidInput);
  CHECK(cli::parse_statuses("idk,idk,know") ==
        std::vector<Status>{Status::DontKnow, Status::DontKnow, Status::Know});
  CHECK_THROWS_AS(cli::parse_statuses("idk,maybe"), InvalidInput);
}

TEST_CASE("exit-code matrix") {
  struct Case {
    std::vector<std::string> args;
    int code;
  };
  const std::vector<Case> cases = {
      {{"verify", "--puzzle", "repeated", "--n", "5", "--colors", "2", "--strategy", "parity",
        "--format", "json"}, 0},
      {{"verify", "--puzzle", "distinct", "--n", "4", "--strategy", "distinct3"}, 0},
      {{"verify", "--puzzle", "repeated", "--n", "3", "--colors", "2", "--strategy", "copy_front"}, 2},
      {{"verify", "--puzzle", "repeated", "--n", "3", "--colors", "2", "--strategy", "same_different"}, 0},
      {{"verify", "--puzzle", "repeated", "--n", "4", "--colors", "3", "--strategy", "modular_sum"}, 0},
      {{"verify", "--puzzle", "repeated", "--n", "30", "--colors", "2", "--strategy", "parity",
        "--samples", "1000", "--seed", "3"}, 0},
      {{"verify", "--puzzle", "repeated", "--n", "30", "--colors", "2", "--strategy", "parity"}, 2},
      {{"verify", "--puzzle", "repeated", "--n", "5", "--colors", "2", "--strategy", "parity",
        "--assignment", "R,R,B,B,R"}, 0},
      {{"verify", "--puzzle", "repeated", "--n", "5", "--colors", "2", "--strategy", "parity",
        "--assignment", "R,R,Q"}, 2},
      {{"verify", "--puzzle", "triangle", "--n", "3", "--strategy", "parity"}, 2},
      {{"verify", "--puzzle", "repeated", "--n", "3", "--colors", "2"}, 2},
      {{"verify", "--bogus"}, 2},
      {{"verify", "--puzzle", "repeated", "--n", "5", "--colors", "2", "--strategy", "parity",
        "--format", "xml"}, 2},
      {{}, 2},
      {{"synth", "--puzzle", "distinct", "--n", "3", "--max-mistakes", "1"}, 0},
      {{"synth", "--puzzle", "repeated", "--n", "2", "--colors", "2", "--max-mistakes", "0"}, 1},
      {{"synth", "--puzzle", "distinct", "--n", "12"}, 2},
      {{"synth", "--puzzle", "repeated", "--n", "3", "--colors", "2"}, 0},
      {{"epistemic", "--supply", "R:3,B:2", "--logicians", "3", "--transcript", "idk,idk,know",
        "--query", "3"}, 0},
      {{"epistemic", "--supply", "R:3,B:2", "--logicians", "3", "--assignment", "R,R,R"}, 0},
      {{"epistemic", "--supply", "R:1,B:1", "--logicians", "3", "--assignment", "R,B,R"}, 2},
      {{"epistemic", "--supply", "R:3,B:2", "--logicians", "3", "--transcript", "know,idk,know",
        "--query", "1"}, 1},
      {{"epistemic", "--supply", "R:3,B:2", "--logicians", "3", "--assignment", "B,B,B"}, 2},
      {{"epistemic", "--supply", "R:3,B:2", "--logicians", "3"}, 2},
      {{"joke", "--transcript", "idk,idk,know"}, 0},
      {{"joke"}, 2},
      {{"joke", "--from", "/nonexistent/transcript.json"}, 2},
  };
  for (const auto& c : cases) {
    const auto r = run_cli(c.args);
    std::string joined;
    for (const auto& a : c.args) joined += a + " ";
    CAPTURE(joined);
    CAPTURE(r.err);
    CHECK(r.code == c.code);
  }
}

TEST_CASE("verify text and json output") {
  auto r = run_cli({"verify", "--puzzle", "repeated", "--n", "5", "--colors", "2", "--strategy",
                    "parity", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["worstCaseMistakes"] == 1);
  CHECK(j["assignmentsChecked"] == 32);
  CHECK(j["mode"] == "exhaustive");
  CHECK(j["guaranteedCorrectPositions"] == Json::parse("[0,1,2,3]"));
  CHECK(j["counterexample"].is_string());
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"puzzle", "strategyId", "mode", "assignmentsChecked",
                                         "worstCaseMistakes", "guaranteedCorrectPositions",
                                         "counterexample", "violationsTotal", "elapsedMs"});

  r = run_cli({"verify", "--puzzle", "distinct", "--n", "4", "--strategy", "distinct3"});
  CHECK(r.out.find("worst-case mistakes: 3") != std::string::npos);
  CHECK(r.out.find("violations: 0") != std::string::npos);

  r = run_cli({"verify", "--puzzle", "repeated", "--n", "5", "--colors", "2", "--strategy", "parity",
               "--assignment", "R,R,B,B,R"});
  CHECK(r.out.find("speaker 1 (position 4): Red  [correct]") != std::string::npos);
  CHECK(r.out.find("mistakes: none") != std::string::npos);
}

TEST_CASE("json documents round-trip byte-identically") {
  const std::vector<std::vector<std::string>> commands = {
      {"verify", "--puzzle", "repeated", "--n", "5", "--colors", "2", "--strategy", "parity", "--format", "json"},
      {"verify", "--puzzle", "distinct", "--n", "5", "--strategy", "distinct3", "--format", "json",
       "--samples", "300", "--seed", "9"},
      {"verify", "--puzzle", "distinct", "--n", "4", "--strategy", "distinct3", "--format", "json",
       "--assignment", "0,2,4,3", "--names", "Yellow,Red,Purple,Blue,Green"},
      {"synth", "--puzzle", "distinct", "--n", "2", "--format", "json"},
      {"synth", "--puzzle", "repeated", "--n", "2", "--colors", "2", "--max-mistakes", "0", "--format", "json"},
      {"epistemic", "--supply", "R:3,B:2", "--logicians", "3", "--assignment", "R,R,R", "--format", "json"},
      {"epistemic", "--supply", "R:3,B:2", "--logicians", "3", "--transcript", "idk,idk,know", "--query",
       "3", "--format", "json"},
  };
  for (const auto& args : commands) {
    const auto r = run_cli(args);
    CAPTURE(args[0]);
    CHECK(r.code <= 1);
    CHECK(dump(Json::parse(r.out)) == r.out);
  }
}

TEST_CASE("sampled reports are reproducible") {
  const std::vector<std::string> args = {"verify", "--puzzle", "distinct", "--n", "8", "--strategy",
                                         "distinct3", "--samples", "500", "--seed", "77", "--format", "json"};
  auto a = Json::parse(run_cli(args).out);
  auto b = Json::parse(run_cli(args).out);
  a.erase("elapsedMs");
  b.erase("elapsedMs");
  CHECK(a == b);
  CHECK(a["mode"] == "sampled");
  CHECK(a["seed"] == 77);
}

TEST_CASE("epistemic output") {
  auto r = run_cli({"epistemic", "--supply", "R:3,B:2", "--logicians", "3", "--transcript",
                    "idk,idk,know", "--query", "3"});
  CHECK(r.out == "Red\n");
  r = run_cli({"epistemic", "--supply", "R:3,B:2", "--logicians", "3", "--assignment", "R,R,R"});
  CHECK(r.out.find("transcript: idk, idk, know(Red)") != std::string::npos);
  r = run_cli({"epistemic", "--supply", "R:3,B:2", "--logicians", "3", "--query", "1"});
  CHECK(r.out == "Red, Blue\n");
}

TEST_CASE("joke from an emitted transcript reproduces the bar dialogue") {
  const auto path = temp_path("bar.json");
  auto r = run_cli({"epistemic", "--supply", "R:3,B:2", "--logicians", "3", "--assignment", "R,R,R",
                    "--format", "json", "--out", path});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  r = run_cli({"joke", "--from", path});
  CHECK(r.code == 0);
  CHECK(r.out == kBarJoke);
  CHECK(run_cli({"joke", "--transcript", "idk,idk,know"}).out == kBarJoke);

  const auto guess_path = temp_path("parity.json");
  REQUIRE(run_cli({"verify", "--puzzle", "repeated", "--n", "5", "--colors", "2", "--strategy", "parity",
                   "--assignment", "R,R,B,B,R", "--format", "json", "--out", guess_path})
              .code == 0);
  r = run_cli({"joke", "--from", guess_path});
  CHECK(r.out.find("Five logicians walk into a bar.") == 0);
  CHECK(r.out.find("The second logician answers, \"Blue.\"") != std::string::npos);

  const auto doc = transcript_from_json(Json::parse(slurp(guess_path)));
  CHECK(doc.transcript.size() == 5);
  CHECK(doc.mistakes == std::vector<Position>{});
  std::remove(path.c_str());
  std::remove(guess_path.c_str());
}

TEST_CASE("synth witness replays through verify --table") {
  const auto path = temp_path("witness.json");
  REQUIRE(run_cli({"synth", "--puzzle", "distinct", "--n", "3", "--max-mistakes", "1", "--format",
                   "json", "--out", path})
              .code == 0);
  const auto doc = Json::parse(slurp(path));
  CHECK(doc["found"] == true);
  CHECK(doc["bound"] == 1);
  CHECK(doc["witness"].size() > 0);
  auto r = run_cli({"verify", "--table", path, "--format", "json"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["worstCaseMistakes"] == 1);
  CHECK(run_cli({"verify", "--table", path, "--puzzle", "distinct", "--n", "4"}).code == 2);
  std::remove(path.c_str());
}
