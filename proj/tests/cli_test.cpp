// Integration tests that drive the installed CLI binary end to end.

#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#ifndef PELLBRAID_CLI_PATH
#error "PELLBRAID_CLI_PATH must point at the pellbraid binary"
#endif
#ifndef PELLBRAID_GOLDEN_DIR
#error "PELLBRAID_GOLDEN_DIR must point at the golden file directory"
#endif

namespace {

using nlohmann::json;

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  std::string command =
      std::string(PELLBRAID_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    output.append(buffer.data(), got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("seq reproduces the Pell row of table 1") {
  RunResult result = run_cli("seq --kind pell --start 0 --count 11 --format csv");
  CHECK(result.exit_code == 0);
  auto lines = split_lines(result.output);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "kind,0,1,2,3,4,5,6,7,8,9,10");
  CHECK(lines[1] == "pell,0,1,2,5,12,29,70,169,408,985,2378");
}

TEST_CASE("seq with count 0 emits an empty table and succeeds") {
  RunResult result = run_cli("seq --kind pell --count 0 --format csv");
  CHECK(result.exit_code == 0);
  auto lines = split_lines(result.output);
  REQUIRE(lines.size() == 2);  // header + label-only row
  CHECK(lines[0] == "kind");
  CHECK(lines[1] == "pell");
}

TEST_CASE("seq --all-kinds emits six rows of eleven terms") {
  RunResult result = run_cli("seq --all-kinds --count 11 --format csv");
  CHECK(result.exit_code == 0);
  auto lines = split_lines(result.output);
  REQUIRE(lines.size() == 7);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::size_t commas = 0;
    for (char ch : lines[i]) commas += ch == ',';
    CHECK(commas == 11);  // kind label + 11 terms
  }
  CHECK(lines[6] ==
        "lucas-cobalancing,-1,1,7,41,239,1393,8119,47321,275807,1607521,"
        "9369319");
}

TEST_CASE("unknown kind is a usage error") {
  CHECK(run_cli("seq --kind fib --count 3").exit_code == 2);
  CHECK(run_cli("curl --kind fib --k 2").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("tables --which 9").exit_code == 2);
}

TEST_CASE("curl agrees with the reference rows") {
  RunResult q6 = run_cli("curl --kind qell --k 6 --format json");
  CHECK(q6.exit_code == 0);
  json report = json::parse(q6.output);
  CHECK(report.at("closed_form") == "14");
  CHECK(report.at("oracle") == "14");
  CHECK(report.at("agree") == true);

  RunResult b1 = run_cli("curl --kind balancing --k 1 --format json");
  json report_b1 = json::parse(b1.output);
  CHECK(report_b1.at("closed_form") == "1");
  CHECK(report_b1.at("oracle") == "1");

  RunResult b8 = run_cli("curl --kind cobalancing --k 8 --format json");
  json report_b8 = json::parse(b8.output);
  CHECK(report_b8.at("closed_form") == "8");
  CHECK(report_b8.at("oracle") == "8");
}

TEST_CASE("curl marks oracle-only queries without failing") {
  RunResult result = run_cli("curl --kind balancing --k 2 --m 2 --format json");
  CHECK(result.exit_code == 0);
  json report = json::parse(result.output);
  CHECK(report.at("closed_form").is_null());
  CHECK(report.at("agree") == true);

  RunResult ascii = run_cli("curl --kind balancing --k 2 --m 2");
  CHECK(ascii.exit_code == 0);
  CHECK(ascii.output.find("oracle-only") != std::string::npos);
}

TEST_CASE("tables match the checked-in golden files byte for byte") {
  for (int which = 1; which <= 4; ++which) {
    RunResult result =
        run_cli("tables --which " + std::to_string(which) + " --format csv");
    CHECK(result.exit_code == 0);
    std::string golden = read_file(std::string(PELLBRAID_GOLDEN_DIR) +
                                   "/table" + std::to_string(which) + ".csv");
    CHECK(result.output == golden);
  }
}

TEST_CASE("tables --braid renders the source view") {
  RunResult result = run_cli("tables --which 2 --braid");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("braid view") != std::string::npos);
  CHECK(result.output.find("2P_2") != std::string::npos);
}

TEST_CASE("verify exits zero on passing sweeps") {
  RunResult result = run_cli("verify --suite sums --max-k 1");
  CHECK(result.exit_code == 0);
  RunResult cassini = run_cli("verify --suite cassini --max-k 40 --format json");
  CHECK(cassini.exit_code == 0);
  json body = json::parse(cassini.output);
  CHECK(body.at("failures_total") == 0);
  CHECK(body.at("reports").size() == 2);
  for (const auto& report : body.at("reports"))
    CHECK(report.at("failures").empty());
}

TEST_CASE("verify csv summarises per identity") {
  RunResult result = run_cli("verify --suite gcd-lemmas --max-n 20 --format csv");
  CHECK(result.exit_code == 0);
  auto lines = split_lines(result.output);
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == "identity_id,checked,failures,params,lhs,rhs");
  CHECK(lines[1] == "gcd_pell_adjacent,20,0,,,");
}

TEST_CASE("scan-conjecture reports the worked instance and exits zero") {
  RunResult result = run_cli("scan-conjecture --max-k 21 --format json");
  CHECK(result.exit_code == 0);
  json body = json::parse(result.output);
  CHECK(body.at("counterexamples") == 0);
  REQUIRE(body.at("findings").size() == 21);
  const json& k21 = body.at("findings")[20];
  CHECK(k21.at("k") == 21);
  CHECK(k21.at("gcd_qk_k") == "7");
  CHECK(k21.at("holds") == true);
  REQUIRE(k21.at("witnesses").size() == 1);
  CHECK(k21.at("witnesses")[0].at("p") == 7);
  CHECK(k21.at("witnesses")[0].at("entry") == 3);

  RunResult tiny = run_cli("scan-conjecture --max-k 1 --format json");
  CHECK(tiny.exit_code == 0);
  CHECK(json::parse(tiny.output).at("findings").size() == 1);

  RunResult full = run_cli("scan-conjecture --max-k 500 --format json");
  CHECK(full.exit_code == 0);
  json body500 = json::parse(full.output);
  CHECK(body500.at("findings").size() == 500);
  CHECK(body500.at("counterexamples") == 0);
}

TEST_CASE("curl accepts a custom horizon") {
  RunResult result = run_cli("curl --kind pell --k 4 --horizon 8 --format json");
  CHECK(result.exit_code == 0);
  json report = json::parse(result.output);
  CHECK(report.at("horizon") == 8);
  CHECK(report.at("oracle") == "4");
  CHECK(run_cli("curl --kind pell --k 4 --horizon 1").exit_code == 2);
}

TEST_CASE("json output parses and re-emits identically") {
  for (const char* args :
       {"curl --kind pell --k 4 --format json",
        "scan-conjecture --max-k 10 --format json",
        "verify --suite braids --max-n 10 --format json",
        "tables --which 3 --format json",
        "seq --all-kinds --count 5 --format json"}) {
    RunResult result = run_cli(args);
    INFO(args);
    CHECK(result.exit_code == 0);
    json parsed = json::parse(result.output);
    CHECK(json::parse(parsed.dump(2)) == parsed);
  }
}

TEST_CASE("--out writes the same bytes as stdout") {
  std::string path = "/tmp/pellbraid_cli_test_out.csv";
  RunResult direct = run_cli("tables --which 2 --format csv");
  RunResult filed = run_cli("tables --which 2 --format csv --out " + path);
  CHECK(filed.exit_code == 0);
  CHECK(filed.output.empty());
  CHECK(read_file(path) == direct.output);
  std::remove(path.c_str());
}

TEST_CASE("deterministic output across runs") {
  std::string args = "scan-conjecture --max-k 50 --format json";
  CHECK(run_cli(args).output == run_cli(args).output);
}
