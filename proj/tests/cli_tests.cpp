#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "psc/text.hpp"

// Drives the installed binary end to end: exit codes, the human report
// lines, and the structured output schema.

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

RunResult run(const std::string& args) {
  static int counter = 0;
  const std::string out_path =
      "/tmp/psc_cli_test_" + std::to_string(++counter) + ".out";
  const std::string command =
      std::string(PSC_CLI_PATH) + " " + args + " > " + out_path + " 2>/dev/null";
  const int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WEXITSTATUS(status);
  result.out = slurp(out_path);
  std::remove(out_path.c_str());
  return result;
}

std::string fixture(const std::string& name) {
  return std::string(PSC_FIXTURE_DIR) + "/" + name;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("solve reports stable and preferred models") {
  const RunResult result = run("solve " + fixture("example1.psc"));
  CHECK(result.exit_code == 0);
  CHECK(contains(result.out, "stable models: 2"));
  CHECK(contains(result.out, "{cal,j1,r}"));
  CHECK(contains(result.out, "{j2,ncal,t}"));
  CHECK(contains(result.out, "preferred: 1"));
  CHECK(contains(result.out, "mode: ic"));
}

TEST_CASE("solve picks the weak-sum order for measure programs") {
  const RunResult result = run("solve " + fixture("example2.psc"));
  CHECK(result.exit_code == 0);
  CHECK(contains(result.out, "mode: w-is"));
  CHECK(contains(result.out, "sum=620"));
  CHECK(contains(result.out, "sum=700"));
  CHECK(contains(result.out, "preferred: 1"));
}

TEST_CASE("solve exit codes") {
  CHECK(run("solve " + fixture("oddloop.psc")).exit_code == 1);
  CHECK(run("solve " + fixture("badparse.psc")).exit_code == 2);
  CHECK(run("solve " + fixture("badsemantic.psc")).exit_code == 3);
  CHECK(run("solve --cap 2 " + fixture("example1.psc")).exit_code == 4);
  CHECK(run("solve --cap 2 --force " + fixture("example1.psc")).exit_code == 0);
  CHECK(run("solve --mode w-is " + fixture("example1.psc")).exit_code == 3);
}

TEST_CASE("structured output is schema-stable and round-trips") {
  const RunResult result =
      run("solve --format structured --enumerate-all " + fixture("example1.psc"));
  CHECK(result.exit_code == 0);
  const auto parsed = nlohmann::json::parse(result.out);
  CHECK(parsed.at("kind") == "preordered");
  CHECK(parsed.at("mode") == "ic");
  CHECK(parsed.at("stable_models").size() == 2);
  CHECK(parsed.at("stable_models")[0] ==
        nlohmann::json::array({"cal", "j1", "r"}));
  CHECK(parsed.at("preferred_models").size() == 1);
  CHECK(parsed.at("verdicts")[0][1] == "first-preferred");
  CHECK(parsed.at("verdicts")[1][0] == "second-preferred");

  // the embedded program text parses back to the same canonical form
  const auto reparsed = psc::text::parse_program(parsed.at("program").get<std::string>());
  REQUIRE(reparsed.ok());
  CHECK(psc::text::serialize(*reparsed.value) == parsed.at("program").get<std::string>());
}

TEST_CASE("structured measure reports carry aligned weak sums") {
  const RunResult result =
      run("solve --format structured " + fixture("example2.psc"));
  CHECK(result.exit_code == 0);
  const auto parsed = nlohmann::json::parse(result.out);
  CHECK(parsed.at("kind") == "measure");
  CHECK(parsed.at("mode") == "w-is");
  REQUIRE(parsed.at("stable_models").size() == 2);
  CHECK(parsed.at("weak_sums") == nlohmann::json::array({620.0, 700.0}));
  CHECK(parsed.at("preferred_models").size() == 1);
}

TEST_CASE("the mode flag switches the order") {
  const RunResult result = run("solve --mode it " + fixture("example3.psc"));
  CHECK(result.exit_code == 0);
  CHECK(contains(result.out, "mode: it"));
  CHECK(contains(result.out, "preferred: 2"));  // in-total leaves both models

  const RunResult ic = run("solve --mode ic " + fixture("example3.psc"));
  CHECK(contains(ic.out, "preferred: 1"));
}

TEST_CASE("ranked-option runs check the translation") {
  const RunResult result = run("aso " + fixture("small.aso"));
  CHECK(result.exit_code == 0);
  CHECK(contains(result.out, "optimal models: 1"));
  CHECK(contains(result.out, "aso/psc agreement: PASS"));

  const RunResult empty_pref = run("aso " + fixture("emptypref.aso"));
  CHECK(empty_pref.exit_code == 0);
  CHECK(contains(empty_pref.out, "optimal models: 2"));
  CHECK(contains(empty_pref.out, "aso/psc agreement: PASS"));

  CHECK(run("aso " + fixture("unsat.aso")).exit_code == 1);
}

TEST_CASE("formula runs compare both paths") {
  const RunResult all_pairs = run("pp " + fixture("basic.pp"));
  CHECK(all_pairs.exit_code == 0);
  CHECK(contains(all_pairs.out, "pairs: 64"));  // 8 subsets of 3 desires, squared
  CHECK(contains(all_pairs.out, "strict agreement: 64/64"));
  CHECK(contains(all_pairs.out, "preorder: reflexive=yes"));

  const RunResult listed =
      run("pp " + fixture("basic.pp") + " --pairs " + fixture("pairs_basic.txt"));
  CHECK(listed.exit_code == 0);
  CHECK(contains(listed.out, "pairs: 3"));
  CHECK(contains(listed.out, "strict agreement: 3/3"));
}

TEST_CASE("the vertex-cover generator emits a solvable program") {
  const RunResult generated = run("gen vertex-cover " + fixture("path4.edges") + " 3 b");
  CHECK(generated.exit_code == 0);
  CHECK(contains(generated.out, "meas({a,b,c,d}, card(0..2), indicator(b, 0, 1))"));

  // solve the generated text: the pivot-containing cover wins
  const std::string path = "/tmp/psc_cli_test_vc.psc";
  {
    std::ofstream out(path);
    out << generated.out;
  }
  const RunResult solved = run("solve " + path);
  CHECK(solved.exit_code == 0);
  CHECK(contains(solved.out, "stable models: 2"));
  CHECK(contains(solved.out, "preferred: 1"));
  CHECK(contains(solved.out, "{b,d}"));
  std::remove(path.c_str());

  // a single edge with the pivot on it: the pivot endpoint wins
  const RunResult one_edge = run("gen vertex-cover " + fixture("single.edges") + " 2 u");
  CHECK(one_edge.exit_code == 0);
  const std::string one_path = "/tmp/psc_cli_test_vc1.psc";
  {
    std::ofstream out(one_path);
    out << one_edge.out;
  }
  const RunResult one_solved = run("solve " + one_path);
  CHECK(contains(one_solved.out, "preferred: 1"));
  CHECK(contains(one_solved.out, "{u}"));
  std::remove(one_path.c_str());

  CHECK(run("gen vertex-cover " + fixture("path4.edges") + " 3 z").exit_code == 3);
}

TEST_CASE("a cover bound of one leaves no stable model") {
  const RunResult generated = run("gen vertex-cover " + fixture("single.edges") + " 1 u");
  CHECK(generated.exit_code == 0);
  const std::string path = "/tmp/psc_cli_test_k1.psc";
  {
    std::ofstream out(path);
    out << generated.out;
  }
  CHECK(run("solve " + path).exit_code == 1);
  std::remove(path.c_str());
}
