#include <fstream>
#include <sstream>

#include "doctest.h"

#include "commands.hpp"

using namespace gwt::cli;

namespace {

Options make(std::string command, std::vector<std::string> argv) {
  Options o;
  o.command = std::move(command);
  o.argv = std::move(argv);
  return o;
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(GWTOWER_GOLDEN_DIR) + "/" + name, std::ios::binary);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kConstant36 = "alt 36 product\ntail: constant\nhorizon: 3\n";

std::vector<Options> all_commands() {
  std::vector<Options> out;
  auto build = make("build", {"build"});
  build.spec_text = "psl2 5 product\npsl2 5 product\n";
  out.push_back(build);
  auto lemma = make("verify-lemma", {"verify-lemma"});
  lemma.a = "alt:5";
  lemma.b = "cyclic:2";
  lemma.action = "imprimitive";
  out.push_back(lemma);
  auto kernel = make("verify-kernel", {"verify-kernel"});
  kernel.spec_text = "alt 5 product\nalt 5 product\n";
  kernel.level = 1;
  out.push_back(kernel);
  auto eul = make("eulerian", {"eulerian"});
  eul.group = "alt:5";
  out.push_back(eul);
  auto mc = eul;
  mc.trials = 5000;
  mc.seed = 99;
  out.push_back(mc);
  auto lower = make("certify-lower-rank", {"certify-lower-rank"});
  lower.spec_text = "alt 5 product\nalt 5 product\n";
  out.push_back(lower);
  auto notfp = make("certify-not-fp", {"certify-not-fp"});
  notfp.spec_text = kConstant36;
  out.push_back(notfp);
  auto growth = make("growth-check", {"growth-check"});
  growth.primes = {5, 19, 1609};
  out.push_back(growth);
  return out;
}

}  // namespace

TEST_CASE("every report carries the fixed top-level schema") {
  for (const auto& o : all_commands()) {
    CAPTURE(o.command);
    auto j = to_json(run_command(o));
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"manifest", "inputs", "verdicts", "evidence"});
    CHECK(j["verdicts"].is_array());
    CHECK_FALSE(j["verdicts"].empty());
    for (const auto& v : j["verdicts"]) {
      CHECK(v.contains("name"));
      CHECK(v.contains("status"));
    }
    std::vector<std::string> mkeys;
    for (const auto& [k, v] : j["manifest"].items()) mkeys.push_back(k);
    CHECK(mkeys == std::vector<std::string>{"tool", "version", "command", "argv", "seed",
                                            "budgets", "input_digest"});
  }
}

TEST_CASE("reports are byte-identical across reruns") {
  for (const auto& o : all_commands()) {
    CAPTURE(o.command);
    CHECK(render_structured(run_command(o)) == render_structured(run_command(o)));
    CHECK(render_text(run_command(o)) == render_text(run_command(o)));
  }
}

TEST_CASE("golden reports") {
  auto growth = make("growth-check", {"growth-check", "--primes", "5,19,1609"});
  growth.primes = {5, 19, 1609};
  CHECK(render_structured(run_command(growth)) == golden("growth_check.json"));

  auto notfp = make("certify-not-fp", {"certify-not-fp", "--spec", "constant36.txt"});
  notfp.spec_text = kConstant36;
  CHECK(render_structured(run_command(notfp)) == golden("certify_not_fp.json"));

  auto eul = make("eulerian", {"eulerian", "--group", "alt:5", "--d", "2"});
  eul.group = "alt:5";
  CHECK(render_structured(run_command(eul)) == golden("eulerian_alt5.json"));
}

TEST_CASE("command results") {
  auto eul = make("eulerian", {});
  eul.group = "alt:5";
  auto j = to_json(run_command(eul));
  CHECK(j["evidence"][0]["count"] == "2280");
  CHECK(j["evidence"][0]["probability"] == "19/30");
  CHECK(j["evidence"][0]["hall_power_bound"] == "19");

  auto growth = make("growth-check", {});
  growth.primes = {5, 19};
  CHECK(to_json(run_command(growth))["verdicts"][0]["status"] == "holds_with_equality");

  auto notfp = make("certify-not-fp", {});
  notfp.spec_text = "alt 36 product\ntail: constant\nhorizon: 20\n";
  auto n = to_json(run_command(notfp));
  CHECK(n["evidence"].size() == 20);
  CHECK(n["evidence"][19]["d"] == 20);
  CHECK(n["verdicts"][3]["status"] == "flagged");
}

TEST_CASE("errors become structured reports") {
  auto bad = make("certify-not-fp", {});
  bad.spec_text = "alt 4 product\n";
  auto r = run_command(bad);
  CHECK(r.error["kind"] == "invalid_input");
  CHECK(exit_code(r) == kExitInvalidInput);
  CHECK(to_json(r).contains("error"));

  auto budget = make("eulerian", {});
  budget.group = "psl2:19";
  budget.d = 3;
  auto b = run_command(budget);
  CHECK(b.error["kind"] == "budget_exceeded");
  CHECK(exit_code(b) == kExitBudget);

  auto missing = make("build", {});
  CHECK(exit_code(run_command(missing)) == kExitInvalidInput);

  auto unknown = make("frobnicate", {});
  CHECK(exit_code(run_command(unknown)) == kExitInvalidInput);

  auto group = make("eulerian", {});
  group.group = "klein:4";
  CHECK(exit_code(run_command(group)) == kExitInvalidInput);
}

TEST_CASE("beyond the degree budget the build report is symbolic") {
  auto build = make("build", {});
  build.spec_text = kConstant36;
  auto j = to_json(run_command(build));
  CHECK(j["verdicts"][0]["status"] == "symbolic");
  CHECK(j["evidence"][2]["degree"]["expression"] == "36^(36^36)");
}

TEST_CASE("supplied Eulerian values need a citation") {
  auto o = make("certify-lower-rank", {});
  o.spec_text = "psl2 5 product\npsl2 1609 product\n";
  o.phi_values = {"psl2:1609:2=1000000000000000000000"};
  CHECK(run_command(o).error["kind"] == "invalid_input");
  o.phi_citation = "hand computation";
  auto j = to_json(run_command(o));
  CHECK_FALSE(j.contains("error"));
  CHECK(j["verdicts"][1]["status"] == "holds");
}
