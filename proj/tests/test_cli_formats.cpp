// Exercises the installed CLI binary end to end: formats, exit codes, and
// JSON round-tripping. The binary path is injected by the build system.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(INGHAM_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == '\n') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

} // namespace

TEST_CASE("table1 row 1 passes the published band with exit 0") {
  RunResult r = run("table1 --row 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("5.36") != std::string::npos);
}

TEST_CASE("table1 csv has a header and sixteen rows") {
  RunResult r = run("table1 --all --format csv");
  CHECK(r.exit_code == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 17);
  CHECK(ls[0] == "row,sigma1,sigma2,d,kappa,delta,log10_A0,B1,B2,B3");
}

TEST_CASE("table1 json round-trips byte-identically") {
  RunResult r = run("table1 --all --format json");
  CHECK(r.exit_code == 0);
  auto parsed = nlohmann::json::parse(r.out);
  CHECK(parsed.size() == 16);
  std::string once = parsed.dump();
  std::string twice = nlohmann::json::parse(once).dump();
  CHECK(once == twice);
}

TEST_CASE("digits flag controls csv formatting") {
  RunResult r = run("table1 --row 1 --format csv --digits 3");
  CHECK(r.exit_code == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 2);
  CHECK(ls[1].find("5.36") != std::string::npos);
  CHECK(ls[1].find("5.359") == std::string::npos); // capped at 3 digits
}

TEST_CASE("usage errors exit 1") {
  CHECK(run("table1 --definitely-not-a-flag").exit_code == 1);
  CHECK(run("verify").exit_code != 0);              // --suite is required
  CHECK(run("moment --bound third --T 10").exit_code == 1); // domain error
  CHECK(run("table1").exit_code == 1);              // needs --row or --all
}

TEST_CASE("moment numeric on a tiny range, json output") {
  RunResult r = run("moment --numeric --k 1 --a 0 --b 10 --format json");
  CHECK(r.exit_code == 0);
  auto parsed = nlohmann::json::parse(r.out);
  double v = parsed["numeric"]["value"];
  CHECK(v > 0.0);
  CHECK(v < 100.0);
}

TEST_CASE("moment with equal endpoints is zero") {
  RunResult r = run("moment --numeric --k 2 --a 5 --b 5 --format json");
  CHECK(r.exit_code == 0);
  auto parsed = nlohmann::json::parse(r.out);
  CHECK(double(parsed["numeric"]["value"]) == 0.0);
}

TEST_CASE("verify emits NDJSON and is deterministic under a fixed seed") {
  RunResult a = run("verify --suite gamma-chi --samples 10 --seed 1 --format json");
  RunResult b = run("verify --suite gamma-chi --samples 10 --seed 1 --format json");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  for (const auto& line : lines(a.out)) {
    auto rep = nlohmann::json::parse(line);
    CHECK(rep.contains("id"));
    CHECK(rep["holds"] == true);
  }
}

TEST_CASE("optimize c1 from the published seed stays in band") {
  RunResult r = run("optimize --target c1 --trials 0 --format json");
  CHECK(r.exit_code == 0);
  auto parsed = nlohmann::json::parse(r.out);
  double best = parsed["best_value"];
  CHECK(best <= 20.73);
  CHECK(parsed["feasible"] == true);
}
