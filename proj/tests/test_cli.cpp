#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "loewy/cli.hpp"

using namespace loewy;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return (fs::path(LOEWY_DATA_DIR) / name).string(); }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path temp_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("loewy_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run({}).code == kExitParse);
  CHECK(run({"frobnicate"}).code == kExitParse);
  CHECK(run({"analyze", data("sym3_p3.json")}).code == kExitOk);
  CHECK(run({"check", "dagger", data("sym3_p3.json")}).code == kExitOk);
  CHECK(run({"check", "dagger", data("sym3_p3.json"), "--require-hypotheses"}).code == kExitHypothesis);
  CHECK(run({"check", "dagger", data("sym3_p3_murphy_cells.json"), "--require-hypotheses"}).code == kExitOk);
  CHECK(run({"check", "lemma9", data("upper_triangular3_p3.json")}).code == kExitFailed);
  CHECK(run({"check", "cellular", data("corrupt_tl3_involution_cells.json")}).code == kExitFailed);
  CHECK(run({"predict", data("sl3_p5.json"), "--weight", "9"}).code == kExitFailed);
  CHECK(run({"analyze", data("missing.json")}).code == kExitParse);

  const auto dir = temp_dir("bad");
  std::ofstream(dir / "bad.json") << "{\"dim\": ";
  const auto bad = run({"analyze", (dir / "bad.json").string()});
  CHECK(bad.code == kExitParse);
  CHECK(bad.err.find("bad.json:1:") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("analyze with the oracle") {
  const auto r = run({"analyze", data("sym3_p3.json"), "--oracle", "--format", "ascii"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("P(sign)") != std::string::npos);
  const auto j = run({"analyze", data("sym3_p3.json"), "--oracle", "--format", "json"});
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc.dump().find("[[2,1],[1,2]]") != std::string::npos);
}

TEST_CASE("predict and render") {
  const auto dir = temp_dir("predict");
  const auto out = (dir / "t5.json").string();
  const auto r = run({"predict", data("sl3_p5.json"), "--weight", "2", "--socle-side", "--out", out});
  CHECK(r.code == kExitOk);
  const auto doc = nlohmann::json::parse(slurp(out));
  CHECK(doc.at("rigid") == true);
  const auto ascii = run({"render", out, "--format", "ascii"});
  CHECK(ascii.code == kExitOk);
  CHECK(ascii.out.rfind("1: [2]\n", 0) == 0);
  const auto dot = run({"render", out, "--format", "dot"});
  CHECK(dot.out.find("digraph") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("make-example reproduces the shipped data byte for byte") {
  const auto dir = temp_dir("make");
  const std::vector<std::vector<std::string>> commands = {
      {"symgroup", "--n", "3", "--p", "3", "--murphy"}, {"symgroup", "--n", "3", "--p", "2", "--murphy"},
      {"symgroup", "--n", "3", "--p", "5"},             {"symgroup", "--n", "4", "--p", "2", "--murphy"},
      {"symgroup", "--n", "4", "--p", "3", "--murphy"}, {"tl", "--n", "3", "--delta", "1", "--p", "5"},
      {"tl", "--n", "4", "--delta", "1", "--p", "5"},   {"schur2", "--r", "2", "--p", "2"},
      {"schur2", "--r", "3", "--p", "3"},               {"schur2", "--r", "2", "--p", "3"},
      {"schur2", "--r", "4", "--p", "2"},               {"semisimple", "--blocks", "1,1", "--p", "2"},
      {"semisimple", "--blocks", "1,2", "--p", "3"},    {"truncated", "--p", "3"},
      {"upper-triangular", "--n", "3", "--p", "3"}};
  for (auto args : commands) {
    args.insert(args.begin(), "make-example");
    args.push_back("--out");
    args.push_back(dir.string());
    CHECK(run(args).code == kExitOk);
  }
  std::size_t compared = 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const auto name = entry.path().filename();
    const auto shipped = fs::path(LOEWY_DATA_DIR) / name;
    REQUIRE_MESSAGE(fs::exists(shipped), name.string());
    CHECK_MESSAGE(slurp(entry.path()) == slurp(shipped), name.string());
    ++compared;
  }
  CHECK(compared >= 30);
  fs::remove_all(dir);
}

TEST_CASE("verify-all on the bundled data") {
  const auto r = run({"verify-all", "--data", LOEWY_DATA_DIR, "--jobs", "2"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("outcomes as expected") != std::string::npos);
}
