#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RunResult run(const std::string& args) {
  const std::string err_path = "cli_stderr.tmp";
  const std::string cmd = std::string(POLYPS_CLI_PATH) + " " + args + " 2>" + err_path;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char chunk[4096];
  std::size_t got = 0;
  while ((got = fread(chunk, 1, sizeof chunk, pipe)) > 0) r.out.append(chunk, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream err(err_path, std::ios::binary);
  std::ostringstream buf;
  buf << err.rdbuf();
  r.err = buf.str();
  std::remove(err_path.c_str());
  return r;
}

std::string fixture(const std::string& name) {
  return std::string(POLYPS_FIXTURE_DIR) + "/" + name;
}

std::string golden(const std::string& name) {
  return std::string(POLYPS_GOLDEN_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("passing check matches the golden report byte for byte") {
  const std::string args =
      "check-polysymplectic --input " + fixture("poly_1_2.json") + " --format json";
  RunResult r = run(args);
  CHECK(r.exit_code == 0);
  CHECK(r.out == slurp(golden("check_poly12.json")));

  RunResult text = run("check-polysymplectic --input " + fixture("poly_1_2.json") +
                       " --format text");
  CHECK(text.exit_code == 0);
  CHECK(text.out == slurp(golden("check_poly12.txt")));
}

TEST_CASE("repeated runs are byte identical") {
  const std::string args = "cotangent-group --algebra so3 --k 2 --mu [[0,0,1],[1,0,0]]"
                           " --crosscheck gstar --samples 3 --seed 1 --format json";
  RunResult first = run(args);
  RunResult second = run(args);
  CHECK(first.exit_code == 0);
  CHECK(first.out == second.out);
  CHECK(first.out == slurp(golden("cotangent_so3_k2.json")));
}

TEST_CASE("json reports reparse and redump to the same bytes") {
  for (const char* name :
       {"check_poly12.json", "cotangent_so3_k2.json", "integrability_broken.json",
        "reduce_so3.json"}) {
    const std::string text = slurp(golden(name));
    const nlohmann::json parsed = nlohmann::json::parse(text);
    CHECK(parsed.dump(2) + "\n" == text);
  }
}

TEST_CASE("reduction golden carries the sample proxy note") {
  const std::string args =
      "reduce --input " + fixture("reduce_so3.json") + " --scalar exact --format json";
  RunResult r = run(args);
  CHECK(r.exit_code == 0);
  CHECK(r.out == slurp(golden("reduce_so3.json")));
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  REQUIRE(doc["conventions"]["notes"].size() > 0);
  CHECK(doc["conventions"]["notes"][0].get<std::string>().find("sample") != std::string::npos);
}

TEST_CASE("math failure exits 1 and reports a witness") {
  RunResult r = run("integrability --algebra broken_so3 --format json");
  CHECK(r.exit_code == 1);
  CHECK(r.out == slurp(golden("integrability_broken.json")));
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["status"] == "fail");
  bool found = false;
  for (const auto& v : doc["verdicts"])
    if (v["check"] == "section-closure" && v["ok"] == false && !v["witness"].is_null())
      found = true;
  CHECK(found);
}

TEST_CASE("malformed input exits 2 with a line and column diagnostic") {
  RunResult r = run("check-polysymplectic --input " + fixture("malformed.json"));
  CHECK(r.exit_code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("input error") != std::string::npos);
  CHECK(r.err.find("line") != std::string::npos);
  CHECK(r.err.find("column") != std::string::npos);
}

TEST_CASE("schema violation exits 2 naming the offending field") {
  const std::string bad = "cli_bad_payload.tmp";
  {
    std::ofstream out(bad);
    out << "{\"version\":\"1\",\"payload\":{\"type\":\"polyform\",\"m\":2,\"k\":1,"
           "\"matrices\":[[[0,1],[1,0]]]}}\n";
  }
  RunResult r = run("check-polysymplectic --input " + bad);
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("input error") != std::string::npos);
  CHECK(r.err.find("matrices") != std::string::npos);
  std::remove(bad.c_str());
}

TEST_CASE("unknown flags and missing subcommands exit 2") {
  CHECK(run("check-polysymplectic --no-such-flag").exit_code == 2);
  CHECK(run("").exit_code == 2);
  CHECK(run("integrability --algebra no_such_algebra").exit_code == 2);
}

TEST_CASE("exact and float modes agree on the dirac example") {
  RunResult exact = run("dirac --input " + fixture("dirac_r4.json") +
                        " --scalar exact --format json");
  RunResult approx = run("dirac --input " + fixture("dirac_r4.json") +
                         " --scalar float --format json");
  CHECK(exact.exit_code == 0);
  CHECK(approx.exit_code == 0);
  const nlohmann::json je = nlohmann::json::parse(exact.out);
  const nlohmann::json jf = nlohmann::json::parse(approx.out);
  CHECK(je["status"] == jf["status"]);
  CHECK(je["data"]["dim_S"] == jf["data"]["dim_S"]);
}

TEST_CASE("exact only subcommands reject float mode") {
  RunResult r = run("gstar --algebra so3 --k 1 --mu [[1,0,0]] --scalar float");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("exact") != std::string::npos);
}
