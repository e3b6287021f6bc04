#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "balance/cli.hpp"

namespace {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  RunResult r;
  r.code = balance::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream f(path);
  f << body;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

const char* kOneRelationFile = "cli_one_relation.poset";
const char* kChainFile = "cli_chain.poset";
const char* kWideFile = "cli_wide.poset";

struct Fixtures {
  Fixtures() {
    write_file(kOneRelationFile, "poset 3\nrel 0 1\n");
    write_file(kChainFile, "poset 2\nrel 0 1\n");
    write_file(kWideFile, "poset 3\n");
  }
};
const Fixtures fixtures;

}  // namespace

TEST_CASE("delta subcommand reports the balance constant") {
  RunResult grid = run_cli({"delta", kOneRelationFile});
  REQUIRE(grid.code == 0);
  REQUIRE(grid.out == "delta = 1/3 (~0.333333), witness (a2, b1)\n");
  REQUIRE(grid.err.empty());

  RunResult oracle = run_cli({"delta", kOneRelationFile, "--method", "oracle"});
  REQUIRE(oracle.code == 0);
  REQUIRE(oracle.out == "delta = 1/3 (~0.333333), witness (0, 2)\n");

  RunResult both = run_cli({"delta", kOneRelationFile, "--method", "both"});
  REQUIRE(both.code == 0);
  REQUIRE(both.out == "delta = 1/3 (~0.333333), witness (a2, b1)\n");

  RunResult chain = run_cli({"delta", kChainFile});
  REQUIRE(chain.code == 0);
  REQUIRE(chain.out == "delta = 0/1 (~0.000000), witness none\n");
}

TEST_CASE("delta subcommand emits json on request") {
  RunResult r = run_cli({"--json", "delta", kOneRelationFile, "--method", "both"});
  REQUIRE(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  REQUIRE(j["method"] == "both");
  REQUIRE(j["delta"] == "1/3");
  REQUIRE(j["decimal"] == "0.333333");
  REQUIRE(j["extensions"] == "3");
  REQUIRE(j["witness"] == "(a2, b1)");

  RunResult chain = run_cli({"--json", "delta", kChainFile});
  nlohmann::json jc = nlohmann::json::parse(chain.out);
  REQUIRE(jc["witness"].is_null());
  REQUIRE(jc["extensions"] == "1");
}

TEST_CASE("probabilities subcommand prints the exact matrix") {
  RunResult r = run_cli({"probabilities", kOneRelationFile});
  REQUIRE(r.code == 0);
  REQUIRE(r.out == "2/3\n1/3\n");

  RunResult j = run_cli({"--json", "probabilities", kOneRelationFile});
  nlohmann::json parsed = nlohmann::json::parse(j.out);
  REQUIRE(parsed["rows"] == 2);
  REQUIRE(parsed["cols"] == 1);
  REQUIRE(parsed["matrix"][0][0] == "2/3");
  REQUIRE(parsed["matrix"][1][0] == "1/3");
}

TEST_CASE("grid subcommand renders the diagram with the boundary") {
  RunResult r = run_cli({"grid", kOneRelationFile});
  REQUIRE(r.code == 0);
  REQUIRE(r.out ==
          "* +\n"
          " . \n"
          "* *\n"
          " . \n"
          "+ *\n");

  RunResult j = run_cli({"--json", "grid", kOneRelationFile});
  nlohmann::json parsed = nlohmann::json::parse(j.out);
  REQUIRE(parsed["rows"] == 2);
  REQUIRE(parsed["cols"] == 1);
  REQUIRE(parsed["s_boundary"].size() == 4);
  REQUIRE(parsed["s_boundary"][0] == nlohmann::json({0, 0}));
  REQUIRE(parsed["s_boundary"][3] == nlohmann::json({2, 1}));
}

TEST_CASE("tn subcommand prints the family member's constant") {
  RunResult r = run_cli({"tn", "--n", "1"});
  REQUIRE(r.code == 0);
  REQUIRE(r.out == "delta(T_1) = 80771587/231541060 (~0.348843)\n");

  RunResult v = run_cli({"tn", "--n", "1", "--verify"});
  REQUIRE(v.code == 0);
  std::vector<std::string> lines = lines_of(v.out);
  REQUIRE(lines.size() == 1 + 7 + 1);  // delta line, checks, result
  REQUIRE(lines.front() == "delta(T_1) = 80771587/231541060 (~0.348843)");
  for (size_t i = 1; i + 1 < lines.size(); ++i) {
    REQUIRE(lines[i].rfind("CHECK ", 0) == 0);
    REQUIRE(lines[i].find(" PASS") != std::string::npos);
  }
  REQUIRE(lines.back() == "RESULT PASS");

  RunResult j = run_cli({"--json", "tn", "--n", "2", "--verify"});
  REQUIRE(j.code == 0);
  nlohmann::json parsed = nlohmann::json::parse(j.out);
  REQUIRE(parsed["n"] == 2);
  REQUIRE(parsed["verify"]["pass"] == true);
  REQUIRE(parsed["verify"]["checks"].size() == 9);
}

TEST_CASE("verify-appendix subcommand lists each check") {
  RunResult r = run_cli({"verify-appendix", "--n", "1"});
  REQUIRE(r.code == 0);
  std::vector<std::string> lines = lines_of(r.out);
  REQUIRE(lines.size() == 8);
  for (size_t i = 0; i + 1 < lines.size(); ++i) {
    REQUIRE(lines[i].rfind("CHECK ", 0) == 0);
  }
  REQUIRE(lines.back() == "RESULT PASS");

  RunResult j = run_cli({"--json", "verify-appendix", "--n", "3"});
  REQUIRE(j.code == 0);
  nlohmann::json parsed = nlohmann::json::parse(j.out);
  REQUIRE(parsed["n"] == 3);
  REQUIRE(parsed["pass"] == true);
  REQUIRE(parsed["checks"].size() == 12);
}

TEST_CASE("verify-cases subcommand certifies all nine systems") {
  RunResult r = run_cli({"verify-cases"});
  REQUIRE(r.code == 0);
  std::vector<std::string> lines = lines_of(r.out);
  REQUIRE(lines.size() == 9);
  for (size_t i = 0; i < lines.size(); ++i) {
    const std::string prefix = "CASE " + std::to_string(i + 1) + " BOUND ";
    REQUIRE(lines[i].rfind(prefix, 0) == 0);
    REQUIRE(lines[i].find(" STATUS PASS") != std::string::npos);
  }

  RunResult j = run_cli({"--json", "verify-cases"});
  nlohmann::json parsed = nlohmann::json::parse(j.out);
  REQUIRE(parsed["pass"] == true);
  REQUIRE(parsed["cases"].size() == 9);
  REQUIRE(parsed["cases"][2]["bound"] == "1/2");
}

TEST_CASE("search subcommand prints records then a summary block") {
  RunResult r = run_cli({"search", "--max-size", "3"});
  REQUIRE(r.code == 0);
  std::vector<std::string> lines = lines_of(r.out);
  REQUIRE(lines.size() == 7 + 5);
  for (int i = 0; i < 7; ++i) {
    REQUIRE(lines[i].find('\t') != std::string::npos);
  }
  REQUIRE(lines[7] == "# max-size 3");
  REQUIRE(lines[8] == "# posets 7");
  REQUIRE(lines[9] == "# distinct-deltas 3");
  REQUIRE(lines[10] == "# spectrum 0/1 1/3 1/2");
  REQUIRE(lines[11].rfind("# min-non-aigner 1/2 key=", 0) == 0);

  RunResult j = run_cli({"--json", "search", "--max-size", "4", "--jobs", "2"});
  REQUIRE(j.code == 0);
  nlohmann::json parsed = nlohmann::json::parse(j.out);
  REQUIRE(parsed["max_size"] == 4);
  REQUIRE(parsed["posets"] == 17);
  REQUIRE(parsed["records"].size() == 17);
  REQUIRE(parsed["min_non_aigner"]["delta"] == "2/5");
}

TEST_CASE("oracle subcommand counts linear extensions") {
  RunResult r = run_cli({"oracle", kOneRelationFile});
  REQUIRE(r.code == 0);
  REQUIRE(r.out == "extensions = 3\n");

  RunResult j = run_cli({"--json", "oracle", kWideFile});
  nlohmann::json parsed = nlohmann::json::parse(j.out);
  REQUIRE(parsed["extensions"] == "6");
}

TEST_CASE("usage problems exit with code one") {
  RunResult missing = run_cli({"delta", "no_such_file.poset"});
  REQUIRE(missing.code == 1);
  REQUIRE(missing.err == "error: cannot open file: no_such_file.poset\n");

  RunResult wide = run_cli({"delta", kWideFile});
  REQUIRE(wide.code == 1);
  REQUIRE(wide.err == "error: poset width exceeds 2; grid methods unavailable\n");

  RunResult bad_flag = run_cli({"delta", kOneRelationFile, "--method", "psychic"});
  REQUIRE(bad_flag.code == 1);

  RunResult no_sub = run_cli({});
  REQUIRE(no_sub.code == 1);

  RunResult bad_file = run_cli({"delta"});
  REQUIRE(bad_file.code == 1);

  // The oracle path has no width restriction.
  RunResult wide_oracle = run_cli({"delta", kWideFile, "--method", "oracle"});
  REQUIRE(wide_oracle.code == 0);
  REQUIRE(wide_oracle.out == "delta = 1/2 (~0.500000), witness (0, 1)\n");
}

TEST_CASE("help exits cleanly") {
  RunResult help = run_cli({"--help"});
  REQUIRE(help.code == 0);
  REQUIRE(help.out.find("delta") != std::string::npos);

  RunResult sub_help = run_cli({"delta", "--help"});
  REQUIRE(sub_help.code == 0);
}

TEST_CASE("verification failures exit with code two") {
  const char* cache = "cli_poisoned_cache.tsv";
  std::remove(cache);
  {
    // Poison the cached value of some size <= 3 class with an impossible
    // delta; the sweep must trust the cache, then fail its range check.
    RunResult warm = run_cli({"search", "--max-size", "1", "--cache", cache});
    REQUIRE(warm.code == 0);
    std::ifstream in(cache);
    std::string line;
    REQUIRE(std::getline(in, line));
    const std::string key = line.substr(0, line.find('\t'));
    std::ofstream out(cache, std::ios::trunc);
    out << key << "\t7/1\t1\n";
  }
  RunResult poisoned = run_cli({"search", "--max-size", "3", "--cache", cache});
  REQUIRE(poisoned.code == 2);
  REQUIRE(poisoned.err.rfind("verification failure:", 0) == 0);
  std::remove(cache);
}

TEST_CASE("malformed poset files exit with code one and name the line") {
  const char* bad = "cli_bad.poset";
  write_file(bad, "poset 3\nrel 0\n");
  RunResult r = run_cli({"delta", bad});
  REQUIRE(r.code == 1);
  REQUIRE(r.err == "error: line 2: bad rel line\n");

  write_file(bad, "poset 3\nrel 0 3\n");
  RunResult range = run_cli({"delta", bad});
  REQUIRE(range.code == 1);
  REQUIRE(range.err == "error: relation index out of range\n");
  std::remove(bad);
}
