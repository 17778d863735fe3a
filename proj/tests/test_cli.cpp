#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

using nlohmann::json;

namespace {

const std::string kCli = LIFTCERT_CLI_PATH;
const std::string kRepo = LIFTCERT_REPO_DIR;
const std::string kData = kRepo + "/tests/data";

struct RunResult {
  int code;
  std::string out;
};

// Runs the binary with the given arguments, capturing stdout; stderr is dropped.
RunResult run_cli(const std::string& args) {
  std::string cmd = kCli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
  std::filesystem::path p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST_CASE("partition values match the documented examples") {
  RunResult r = run_cli("z --graph " + kData + "/c4.edges --model ind");
  CHECK(r.code == 0);
  CHECK(r.out == "7\n");

  r = run_cli("z --graph " + kData + "/k2.edges --rc --q 2 --w 1");
  CHECK(r.code == 0);
  CHECK(r.out == "6\n");

  // Exact rational flags stay exact: q^2 + q*w at q=1/2, w=1/3.
  r = run_cli("z --graph " + kData + "/k2.edges --rc --q 1/2 --w 1/3");
  CHECK(r.code == 0);
  CHECK(r.out == "5/12\n");

  r = run_cli("--format json z --graph " + kData + "/c4.edges --model ind");
  CHECK(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["value"] == "7");

  // Global flags are accepted after the subcommand too.
  r = run_cli("z --graph " + kData + "/c4.edges --model ind --format json");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["value"] == "7");

  r = run_cli("z --graph " + kData + "/c4.edges --hom " + kData + "/k3.edges");
  CHECK(r.code == 0);
  CHECK(r.out == "18\n");
}

TEST_CASE("exit codes distinguish the failure kinds") {
  // 2: missing file.
  CHECK(run_cli("z --graph " + kData + "/nope.edges --model ind").code == 2);

  // 3: malformed graph file.
  auto bad = temp_file("liftcert_bad.edges", "2 1\n0\n");
  CHECK(run_cli("z --graph " + bad.string() + " --model ind").code == 3);

  // 3: unknown model name.
  CHECK(run_cli("z --graph " + kData + "/c4.edges --model frobnicate").code == 3);

  // 4: assignment cap exceeded via config.
  auto cfg = temp_file("liftcert_tiny.cfg", "assignments_cap = 2\n");
  CHECK(run_cli("--config " + cfg.string() + " z --graph " + kData +
                "/c4.edges --model ind").code == 4);

  // 5: conflicting modes.
  CHECK(run_cli("z --graph " + kData + "/c4.edges --model ind --rc --q 2 --w 1").code == 5);

  // 5: no mode at all.
  CHECK(run_cli("z --graph " + kData + "/c4.edges").code == 5);
}

TEST_CASE("counts subcommand prints both count vectors") {
  RunResult r = run_cli("counts --graph " + kData + "/c4.edges --lambda 1/2");
  CHECK(r.code == 0);
  CHECK(r.out.find("independent_sets: 1 4 2") != std::string::npos);
  CHECK(r.out.find("matchings: 1 4 2") != std::string::npos);
  CHECK(r.out.find("I(1/2) = 7/2") != std::string::npos);
}

TEST_CASE("classify emits a machine-readable verdict") {
  RunResult r = run_cli("classify --model " + kData + "/wr.json");
  CHECK(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["verdict"] == "ClassA_certified");
  CHECK(doc["tp2"] == true);
  CHECK(doc["tn2"] == false);
  REQUIRE(doc["certificate"].is_array());
  for (const auto& s : doc["certificate"]) CHECK((s == 1 || s == -1));
  CHECK(doc["d1"].size() == 3);

  r = run_cli("classify --model ind");
  CHECK(r.code == 0);
  doc = json::parse(r.out);
  CHECK(doc["verdict"] == "ClassB_certified");
  CHECK(doc["tn2"] == true);
}

TEST_CASE("lift apply output re-parses to the same graph") {
  // Index 0 keeps both fibers separate: two disjoint squares.
  RunResult r = run_cli("lift apply --graph " + kData + "/c4.edges --index 0");
  CHECK(r.code == 0);
  std::istringstream in(r.out);
  int n = 0, m = 0;
  in >> n >> m;
  CHECK(n == 8);
  CHECK(m == 8);

  // --signs with the matching pattern agrees exactly.
  RunResult r2 = run_cli("lift apply --graph " + kData + "/c4.edges --signs ++++");
  CHECK(r2.code == 0);
  CHECK(r2.out == r.out);

  // The all-crossed lift of c4 is c8.
  r = run_cli("lift apply --graph " + kData + "/c4.edges --signs ----");
  CHECK(r.code == 0);
  RunResult r3 = run_cli("lift apply --graph " + kData + "/c4.edges --index 15");
  CHECK(r3.out == r.out);

  // Wrong sign count is a domain error.
  CHECK(run_cli("lift apply --graph " + kData + "/c4.edges --signs ++").code == 5);
  CHECK(run_cli("lift apply --graph " + kData + "/c4.edges --index 16").code == 5);
}

TEST_CASE("lift enumerate lists every signing with girth and components") {
  RunResult r = run_cli("lift enumerate --graph " + kData + "/k2.edges");
  CHECK(r.code == 0);
  // Crossing the only edge of k2 still yields two disjoint edges.
  CHECK(r.out.find("0 + girth=inf components=2") != std::string::npos);
  CHECK(r.out.find("1 - girth=inf components=2") != std::string::npos);

  RunResult rj = run_cli("--format json lift enumerate --graph " + kData + "/k3.edges");
  CHECK(rj.code == 0);
  json rows = json::parse(rj.out);
  REQUIRE(rows.size() == 8);
  CHECK(rows[0]["index"] == 0);
  CHECK(rows[0]["signs"] == "+++");
  CHECK(rows[0]["girth"] == 3);
  CHECK(rows[0]["components"] == 2);
  CHECK(rows[7]["signs"] == "---");
  CHECK(rows[7]["girth"] == 6);
  CHECK(rows[7]["components"] == 1);

  // Signing cap stops enumeration before it starts.
  auto cfg = temp_file("liftcert_signcap.cfg", "signings_cap = 4\n");
  CHECK(run_cli("--config " + cfg.string() + " lift enumerate --graph " + kData +
                "/c4.edges").code == 4);
}

TEST_CASE("extremal-search exit status reflects the scan outcome") {
  RunResult r = run_cli("lift extremal-search --graph " + kData +
                        "/c4.edges --model wr --claim union");
  CHECK(r.code == 0);
  CHECK(r.out.find("status=pass") != std::string::npos);

  // The disjoint-union claim is false for independent sets on a triangle.
  r = run_cli("lift extremal-search --graph " + kData + "/k3.edges --model ind --claim union");
  CHECK(r.code == 1);
  CHECK(r.out.find("status=fail") != std::string::npos);
  CHECK(r.out.find("violation") != std::string::npos);

  r = run_cli("--format json lift extremal-search --graph " + kData +
              "/k3.edges --model ind --claim cross");
  CHECK(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["status"] == "pass");
  CHECK(doc["scanned"] == 8);
  CHECK(doc["exhaustive"] == true);
}

TEST_CASE("girth-boost reaches a modest target from a triangle") {
  // The exhaustive first step finds the crossed hexagon, girth 3 -> 6.
  RunResult r = run_cli("girth-boost --graph " + kData + "/k3.edges --target 6");
  CHECK(r.code == 0);
  CHECK(r.out.find("girths: 3 6") != std::string::npos);
  CHECK(r.out.find("reached: true") != std::string::npos);

  // A zero sampling budget is a domain error.
  CHECK(run_cli("girth-boost --graph " + kData + "/k3.edges --target 6 --budget 0").code == 5);
}

TEST_CASE("bethe values agree with the frozen constants") {
  RunResult r = run_cli("--format json bethe --hardcore 1 --d 3");
  CHECK(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["hardcore"][0]["alpha"].get<double>() ==
        doctest::Approx(0.24108590671857705).epsilon(1e-12));
  CHECK(doc["hardcore"][0]["phi"].get<double>() ==
        doctest::Approx(0.4354342827226756).epsilon(1e-12));

  r = run_cli("--format json bethe --beta 1 --d 3");
  CHECK(r.code == 0);
  doc = json::parse(r.out);
  CHECK(doc["two_state"][0]["h_star"].get<double>() ==
        doctest::Approx(1.8291361594235163).epsilon(1e-9));
  CHECK(doc["two_state"][0]["phi"].get<double>() ==
        doctest::Approx(1.5031586943215063).epsilon(1e-9));

  r = run_cli("--format json bethe --model ind --d 3 --restarts 8");
  CHECK(r.code == 0);
  doc = json::parse(r.out);
  REQUIRE(!doc["solutions"].empty());
  CHECK(doc["solutions"][0]["converged"] == true);
  CHECK(doc["solutions"][0]["value"].get<double>() ==
        doctest::Approx(0.4354342827226756).epsilon(1e-8));
  CHECK(doc["product_bound"].get<double>() <=
        doc["solutions"][0]["value"].get<double>() + 1e-9);
}

TEST_CASE("verify reports validate against the published schema") {
  auto out = std::filesystem::temp_directory_path() / "liftcert_report.json";
  std::filesystem::remove(out);
  RunResult r = run_cli("verify --suite klift --out " + out.string());
  CHECK(r.code == 0);
  CHECK(r.out.find("ALL SUITES PASS") != std::string::npos);

  std::ifstream in(out);
  REQUIRE(in.good());
  json report = json::parse(in);
  std::ifstream sin(kRepo + "/schemas/report.schema.json");
  REQUIRE(sin.good());
  json schema = json::parse(sin);

  // Minimal subset validation: required keys present, no extra keys, enum respected.
  for (const auto& key : schema["required"]) CHECK(report.contains(key.get<std::string>()));
  CHECK(report["all_pass"].is_boolean());
  REQUIRE(report["suites"].is_array());
  const json& suite_schema = schema["properties"]["suites"]["items"];
  const json& row_schema = suite_schema["properties"]["rows"]["items"];
  for (const auto& suite : report["suites"]) {
    for (const auto& key : suite_schema["required"])
      CHECK(suite.contains(key.get<std::string>()));
    for (auto it = suite.begin(); it != suite.end(); ++it)
      CHECK(suite_schema["properties"].contains(it.key()));
    for (const auto& row : suite["rows"]) {
      for (const auto& key : row_schema["required"])
        CHECK(row.contains(key.get<std::string>()));
      for (auto it = row.begin(); it != row.end(); ++it)
        CHECK(row_schema["properties"].contains(it.key()));
      bool status_ok = false;
      for (const auto& s : row_schema["properties"]["status"]["enum"])
        if (row["status"] == s) status_ok = true;
      CHECK(status_ok);
      CHECK(row["scanned"].is_number_integer());
      CHECK(row["margin"].is_number());
      CHECK(row["violations"].is_array());
    }
  }
  CHECK(report["all_pass"] == true);
}

TEST_CASE("verify csv output starts with the frozen header") {
  RunResult r = run_cli("--format csv verify --suite coloring");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("suite,graph,model,claim,scanned,exhaustive,margin,status\n", 0) == 0);
  CHECK(r.out.find("coloring,c4,") != std::string::npos);

  CHECK(run_cli("verify --suite nonsense").code == 5);
}

TEST_CASE("verify accepts a custom catalog with file-backed entries") {
  auto cat = temp_file("liftcert_cat.txt",
                       "# two bases\nk3\nmysquare = " + kData + "/c4.edges\n");
  RunResult r = run_cli("--format csv verify --suite lifts --catalog " + cat.string());
  CHECK(r.code == 0);
  CHECK(r.out.find("mysquare") != std::string::npos);
  CHECK(r.out.find("fail") == std::string::npos);
}

TEST_CASE("flags override config file values") {
  auto cfg = temp_file("liftcert_fmt.cfg", "format = json\nseed = 5\n");
  // --format text wins over format=json from the file.
  RunResult r = run_cli("--config " + cfg.string() + " --format text z --graph " + kData +
                        "/c4.edges --model ind");
  CHECK(r.code == 0);
  CHECK(r.out == "7\n");

  // Without the flag the config file format applies.
  r = run_cli("--config " + cfg.string() + " z --graph " + kData + "/c4.edges --model ind");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["value"] == "7");

  // Invalid config values are parse errors.
  auto bad = temp_file("liftcert_badcfg.cfg", "assignments_cap = banana\n");
  CHECK(run_cli("--config " + bad.string() + " z --graph " + kData +
                "/c4.edges --model ind").code == 3);

  // Thread override is accepted.
  r = run_cli("--threads 2 z --graph " + kData + "/c4.edges --model ind");
  CHECK(r.code == 0);
  CHECK(r.out == "7\n");
}
