// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "riskorder/cli.hpp"
#include "riskorder/report.hpp"

using namespace riskorder;
using namespace riskorder::test;

namespace {

struct RunResult {
  int code;
  std::string out, err;
};

RunResult run_cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run(std::move(args), in, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path fixture_dir() {
  auto dir = std::filesystem::temp_directory_path() / "riskorder-cli-fixtures";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_fixture(const std::string& name, const std::string& text) {
  const auto path = fixture_dir() / name;
  std::ofstream out(path);
  out << text;
  return path.string();
}

const char* kE1 =
    R"({"alternatives": ["a", "b", "c"], "u": {"a": 0, "b": 1, "c": 4}, "v": {"a": 0, "b": 1, "c": 2}})";
const char* kE2 =
    R"({"alternatives": ["a", "b"], "u": {"a": 0, "b": 1}, "v": {"a": 1, "b": 0}})";
const char* kE3 =
    R"({"alternatives": ["a", "b", "c"], "u": {"a": 0, "b": 1, "c": 2}, "v": {"a": 0, "b": 1, "c": 4}})";
const char* kSrmFamily =
    R"({"poset": {"elements": ["a", "b"], "relation": [["a", "b"]]},
        "functions": {"phi": {"a": -1, "b": -3}, "psi": {"a": 1, "b": 1}}})";

}  // namespace

TEST_CASE("check-lra --method all: E1 passes every route") {
  const std::string file = write_fixture("e1.json", kE1);
  RunResult result = run_cli({"check-lra", "--method", "all", file});
  CHECK(result.code == 0);
  CHECK(result.out.find("definition route: holds") != std::string::npos);
  CHECK(result.out.find("pratt route: holds") != std::string::npos);
  CHECK(result.out.find("transform route: holds") != std::string::npos);
}

TEST_CASE("check-lra: E3 prints the exact lottery witness and exits 1") {
  const std::string file = write_fixture("e3.json", kE3);
  RunResult result = run_cli({"check-lra", "--method", "definition", file});
  CHECK(result.code == 1);
  CHECK(result.out.find("y = b") != std::string::npos);
  CHECK(result.out.find("{a: 1/2, c: 1/2}") != std::string::npos);
  CHECK(result.out.find("E_p[v] = 2") != std::string::npos);
}

TEST_CASE("check-lra --json round-trips to the same verdict") {
  const std::string file = write_fixture("e3.json", kE3);
  RunResult result = run_cli({"check-lra", "--method", "definition", "--json", file});
  CHECK(result.code == 1);
  const UtilityPair pair = std::get<UtilityPair>(parse_instance(kE3));
  const RiskOrderVerdict reparsed =
      risk_verdict_from_json(Json::parse(result.out), pair.u.domain());
  CHECK(reparsed == check_lra_definition(pair.u, pair.v));
}

TEST_CASE("check-lra reads stdin when the input is -") {
  RunResult result = run_cli({"check-lra", "--method", "pratt", "-"}, kE2);
  CHECK(result.code == 1);
  CHECK(result.out.find("ordinal violation") != std::string::npos);
}

TEST_CASE("malformed inputs exit 2 without crashing") {
  const std::string bad_rational = write_fixture(
      "bad1.json",
      R"({"alternatives": ["a"], "u": {"a": "3/0"}, "v": {"a": 0}})");
  CHECK(run_cli({"check-lra", bad_rational}).code == 2);

  const std::string not_json = write_fixture("bad2.json", "{nope");
  CHECK(run_cli({"check-lra", not_json}).code == 2);

  CHECK(run_cli({"check-lra", "/no/such/file.json"}).code == 2);
  CHECK(run_cli({"check-lra"}).code == 2);            // missing input
  CHECK(run_cli({"no-such-command"}).code == 2);      // unknown subcommand
  CHECK(run_cli({"check-lra", "--method", "nope", "-"}).code == 2);
  // --denom-bound is a grid-only flag, validated before reading input.
  CHECK(run_cli({"check-lra", "--method", "pratt", "--denom-bound", "4", "-"}).code == 2);
  CHECK(run_cli({"check-aggregate", "--method", "exact", "--denom-bound", "4", "-"}).code == 2);
}

TEST_CASE("wrong instance shape for a command exits 2") {
  const std::string fam = write_fixture("fam.json", kSrmFamily);
  CHECK(run_cli({"check-lra", fam}).code == 2);
  const std::string pair = write_fixture("e1.json", kE1);
  CHECK(run_cli({"check-srm", pair}).code == 2);
  CHECK(run_cli({"check-proposition", pair}).code == 2);
}

TEST_CASE("help exits 0") {
  CHECK(run_cli({"--help"}).code == 0);
  CHECK(run_cli({"check-lra", "--help"}).code == 0);
}

TEST_CASE("build-transform prints knots or the construction failure") {
  const std::string e1 = write_fixture("e1.json", kE1);
  RunResult ok = run_cli({"build-transform", e1});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("phi(2) = 4") != std::string::npos);

  const std::string e3 = write_fixture("e3.json", kE3);
  RunResult fail = run_cli({"build-transform", "--json", e3});
  CHECK(fail.code == 1);
  const Json j = Json::parse(fail.out);
  CHECK(j.at("success") == Json(false));
  CHECK(j.at("error").at("kind") == Json("not_convex"));
  CHECK(j.at("error").at("knot_index") == Json(1));
}

TEST_CASE("check-sc and check-srm on a family instance") {
  const std::string fam = write_fixture("fam.json", kSrmFamily);
  CHECK(run_cli({"check-sc", fam}).code == 0);  // both members single-crossing

  RunResult srm = run_cli({"check-srm", fam});
  CHECK(srm.code == 1);
  CHECK(srm.out.find("signed-ratio violation") != std::string::npos);
}

TEST_CASE("check-aggregate: family form, grid form, parameterized form") {
  const std::string fam = write_fixture("fam.json", kSrmFamily);
  RunResult exact = run_cli({"check-aggregate", fam});
  CHECK(exact.code == 1);
  CHECK(exact.out.find("mixture violation") != std::string::npos);
  CHECK(exact.out.find("phi: 1/2") != std::string::npos);

  RunResult grid = run_cli({"check-aggregate", "--method", "grid",
                            "--denom-bound", "2", fam});
  CHECK(grid.code == 1);

  // A parameterized instance is aggregated per reference alternative.
  Alternatives dom = abc(3);
  Poset poset = chain({"lo", "hi"});
  ParamUtilityTable table(dom, poset, {q(0), q(0), q(1), q(1), q(4), q(2)});
  const std::string par =
      write_fixture("par.json", to_json(ParamInstance{table}).dump());
  RunResult param_run = run_cli({"check-aggregate", "--json", par});
  CHECK(param_run.code == 0);
  const Json j = Json::parse(param_run.out);
  CHECK(j.at("holds") == Json(true));
  CHECK(j.at("per_y").size() == 3);
}

TEST_CASE("check-proposition: verdict, exit codes, and JSON shape") {
  Alternatives dom = abc(3);
  Poset poset = chain({"lo", "hi"});
  ParamUtilityTable table(dom, poset, {q(0), q(0), q(1), q(1), q(4), q(2)});
  const std::string file =
      write_fixture("prop.json", to_json(ParamInstance{table}).dump());
  RunResult result = run_cli({"check-proposition", "--json", file});
  CHECK(result.code == 0);
  const Json j = Json::parse(result.out);
  CHECK(j.at("agree") == Json(true));
  CHECK(j.at("holds") == Json(true));
  CHECK(j.at("side_a").at("pairs").size() == 1);
  CHECK(j.at("side_b").at("srm").size() == 3);

  ParamUtilityTable bad(abc(2), poset, {q(0), q(1), q(1), q(0)});
  const std::string bad_file =
      write_fixture("prop-bad.json", to_json(ParamInstance{bad}).dump());
  RunResult failing = run_cli({"check-proposition", bad_file});
  CHECK(failing.code == 1);
  CHECK(failing.out.find("sides agree: yes") != std::string::npos);
}

TEST_CASE("gen-random output is deterministic and reparses") {
  RunResult a = run_cli({"gen-random", "--seed", "123", "--alternatives", "4",
                         "--params", "3", "--density", "1/2"});
  RunResult b = run_cli({"gen-random", "--seed", "123", "--alternatives", "4",
                         "--params", "3", "--density", "1/2"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(std::holds_alternative<ParamInstance>(parse_instance(a.out)));

  RunResult positive = run_cli({"gen-random", "--seed", "9", "--positive"});
  CHECK(positive.code == 0);
  auto instance = std::get<ParamInstance>(parse_instance(positive.out));
  CHECK(check_prop_a(instance.table).holds);

  CHECK(run_cli({"gen-random", "--density", "3/2"}).code == 2);
  CHECK(run_cli({"gen-random", "--alternatives", "9"}).code == 2);
}

TEST_CASE("identical argv and input produce identical output bytes") {
  const std::string file = write_fixture("e3.json", kE3);
  for (std::vector<std::string> args :
       {std::vector<std::string>{"check-lra", "--method", "all", file},
        std::vector<std::string>{"check-lra", "--method", "all", "--json", file},
        std::vector<std::string>{"selftest", "--instances", "5", "--seed", "3",
                                 "--reproducer-dir",
                                 std::filesystem::temp_directory_path().string()}}) {
    RunResult first = run_cli(args);
    RunResult second = run_cli(args);
    CHECK(first.code == second.code);
    CHECK(first.out == second.out);
    CHECK(first.err == second.err);
  }
}

TEST_CASE("JSON and human outputs encode the same verdict") {
  const std::string file = write_fixture("e2.json", kE2);
  RunResult human = run_cli({"check-lra", "--method", "definition", file});
  RunResult json = run_cli({"check-lra", "--method", "definition", "--json", file});
  CHECK(human.code == json.code);
  const UtilityPair pair = std::get<UtilityPair>(parse_instance(kE2));
  const RiskOrderVerdict verdict =
      risk_verdict_from_json(Json::parse(json.out), pair.u.domain());
  // The human text contains exactly the witness the JSON encodes.
  const auto& w = std::get<LotteryViolation>(*verdict.witness);
  CHECK(human.out.find("y = " + w.y) != std::string::npos);
  CHECK(human.out.find(to_string(w.part) + " part") != std::string::npos);
}

TEST_CASE("selftest: exit 0 when clean, exit 3 with reproducer when faulted") {
  const auto dir = std::filesystem::temp_directory_path() / "riskorder-cli-selftest";
  std::filesystem::create_directories(dir);

  RunResult clean = run_cli({"selftest", "--instances", "10", "--seed", "7",
                             "--reproducer-dir", dir.string()});
  CHECK(clean.code == 0);
  CHECK(clean.out.find("OK") != std::string::npos);

  RunResult single = run_cli({"selftest", "--instances", "1", "--seed", "31",
                              "--reproducer-dir", dir.string()});
  CHECK(single.code == 0);

  RunResult faulted = run_cli({"selftest", "--instances", "4", "--seed", "7",
                               "--inject-fault", "--reproducer-dir", dir.string()});
  CHECK(faulted.code == 3);
  CHECK(faulted.out.find("route disagreements:    1") != std::string::npos);
  CHECK(faulted.out.find("reproducer written") != std::string::npos);

  std::filesystem::remove_all(dir);
}

TEST_CASE("RISKORDER_THREADS must be a positive integer") {
  ::setenv("RISKORDER_THREADS", "0", 1);
  CHECK(run_cli({"selftest", "--instances", "2"}).code == 2);
  ::setenv("RISKORDER_THREADS", "garbage", 1);
  CHECK(run_cli({"selftest", "--instances", "2"}).code == 2);
  ::setenv("RISKORDER_THREADS", "2", 1);
  CHECK(run_cli({"selftest", "--instances", "2", "--seed", "1"}).code == 0);
  ::unsetenv("RISKORDER_THREADS");
}
