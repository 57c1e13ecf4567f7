#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using nlohmann::json;
namespace cli = treeramsey::cli;

namespace {

struct Run {
  int code;
  std::string out, err;
  json report() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("treeramsey_" + name)).string();
}

}  // namespace

TEST_CASE("enumerate") {
  auto r = run({"enumerate", "--S", "chain:2", "--T", "chain:4", "--flavor", "EMB", "--json"});
  CHECK(r.code == cli::kPass);
  CHECK(r.report()["schema"] == 1);
  CHECK(r.report()["result"]["count"] == 6);
  auto leaf = run({"enumerate", "--S", "chain:1", "--T", "regular:2,2", "--flavor", "LEAF", "--json", "--list"});
  CHECK(leaf.report()["result"]["count"] == 2);
  CHECK(leaf.report()["result"]["images"].size() == 2);
  auto parents = run({"enumerate", "--S", R"({"parent": [-1, 0]})", "--T", "(()())", "--flavor", "EMB", "--json"});
  // the child must go to the first successor of the root image
  CHECK(parents.report()["result"]["count"] == 1);
}

TEST_CASE("parse errors exit with the usage code and name a position") {
  auto bad = run({"enumerate", "--S", R"({"parent": [-1, 0)", "--T", "chain:2"});
  CHECK(bad.code == cli::kUsage);
  CHECK(bad.err.find("byte") != std::string::npos);
  auto code = run({"enumerate", "--S", "(()", "--T", "chain:2"});
  CHECK(code.code == cli::kUsage);
  auto order = run({"enumerate", "--S", R"({"parent": [-1, 1]})", "--T", "chain:2"});
  CHECK(order.code == cli::kUsage);
  CHECK(run({"enumerate", "--S", "chain:1"}).code == cli::kUsage);
  CHECK(run({"search", "--kind", "NOPE"}).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kPass);
}

TEST_CASE("verify: classical R and certificate replay") {
  auto pass = run({"verify", "--instance", "classical", "--condition", "R", "--F", "6,3", "--P", "3,2", "--json"});
  CHECK(pass.code == cli::kPass);
  const auto path = temp_path("r5.json");
  auto fail = run({"verify", "--instance", "classical", "--condition", "R", "--F", "5,3", "--P", "3,2",
                   "--certificate", path});
  CHECK(fail.code == cli::kFail);
  auto replay = run({"replay", path, "--json"});
  CHECK(replay.code == cli::kPass);
  CHECK(replay.report()["result"]["certificates"] == 1);
  CHECK(replay.report()["result"]["verified"] == 1);

  // a tampered certificate no longer replays
  std::ifstream in(path);
  json j = json::parse(in);
  in.close();
  auto& c = j["result"]["verdict"]["certificate"]["coloring"];
  for (auto& x : c) x = 0;
  std::ofstream(path) << j.dump();
  CHECK(run({"replay", path}).code == cli::kFail);
  std::filesystem::remove(path);
}

TEST_CASE("verify: instance conditions and guards") {
  CHECK(run({"verify", "--instance", "star", "--condition", "AXIOMS", "--bound", "3"}).code == cli::kPass);
  CHECK(run({"verify", "--instance", "branch", "--condition", "B", "--bound", "3"}).code == cli::kPass);
  CHECK(run({"verify", "--instance", "milliken", "--condition", "STAR", "--bound", "2"}).code == cli::kPass);
  CHECK(run({"verify", "--instance", "star", "--condition", "AXIOMS", "--bound", "6"}).code == cli::kUndecided);
  CHECK(run({"verify", "--instance", "star", "--condition", "P", "--q", "2", "--p", "1", "--max-r", "5"}).code ==
        cli::kPass);
  CHECK(run({"verify", "--instance", "branch", "--condition", "P", "--shape", "regular:2,2", "--level", "3",
             "--bound", "4"})
            .code == cli::kPass);
  CHECK(run({"verify", "--instance", "classical", "--condition", "P", "--F", "6,4", "--P", "4,2", "--y", "1"})
            .code == cli::kPass);
}

TEST_CASE("search") {
  auto hj = run({"search", "--kind", "HJ", "--k", "2", "--m", "1", "--d", "2", "--json"});
  CHECK(hj.code == cli::kPass);
  CHECK(hj.report()["result"]["n"] == 2);
  auto gen = run({"search", "--kind", "GEN", "--S", "chain:1", "--T", "chain:2", "--d", "2", "--flavor", "EMB",
                  "--json"});
  CHECK(gen.code == cli::kPass);
  CHECK(gen.report()["result"]["V"] == "((()))");
  auto hl = run({"search", "--kind", "HL", "--k", "2", "--t", "1", "--m", "1", "--d", "2", "--json"});
  CHECK(hl.report()["result"]["n"] == 1);
  auto big = run({"search", "--kind", "GEN", "--S", "chain:2", "--T", "regular:2,3", "--d", "2"});
  CHECK(big.code == cli::kUndecided);
}

TEST_CASE("translate") {
  auto tr = run({"translate", "--k", "2", "--t", "1", "--m", "2", "--d", "2", "--json"});
  CHECK(tr.code == cli::kPass);
  const auto rep = tr.report();
  CHECK(rep["result"]["n"] == 3);
  CHECK(rep["result"]["hl_below"]["status"] == "FAIL");
  auto word = run({"translate", "--t", "2", "--word",
                   R"({"m":1,"k":2,"arity":2,"letters":[{"kind":"letter","value":1},{"kind":"param","value":1}]})",
                   "--json"});
  CHECK(word.code == cli::kPass);
  CHECK(word.report()["result"]["sequence"].size() == 2);
  auto bad = run({"translate", "--t", "1", "--word",
                  R"({"m":1,"k":2,"arity":2,"letters":[{"kind":"param","value":1}]})"});
  CHECK(bad.code == cli::kUsage);
}

TEST_CASE("reports are deterministic apart from timing") {
  auto a = run({"search", "--kind", "HJ", "--k", "2", "--m", "1", "--d", "2", "--json"}).report();
  auto b = run({"search", "--kind", "HJ", "--k", "2", "--m", "1", "--d", "2", "--json"}).report();
  a.erase("wall_ms");
  b.erase("wall_ms");
  CHECK(a.dump() == b.dump());
}
