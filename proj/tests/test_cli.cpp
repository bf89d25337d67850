// End-to-end tests of the kunzcount binary: flags, output formats,
// determinism and the exit-code contract (0 ok / 1 discrepancy / 2 usage /
// 3 resource limit).

#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct run_result {
  int exit_code = -1;
  std::string out;
};

run_result run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(KUNZCOUNT_CLI_PATH) + " " + args + " 2>/dev/null";
  run_result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("count: basic queries") {
  CHECK(run_cli("count -m 4 -g 9").out == "11\n");
  CHECK(run_cli("count -m 4 -g 8 --med").out == "5\n");
  CHECK(run_cli("count -m 3 -f 6").out == "0\n");  // 3 | F
  CHECK(run_cli("count -m 2 -g 7").out == "1\n");
}

TEST_CASE("count: --list prints Kunz points and generator sets") {
  const auto r = run_cli("count -m 3 -f 7 --list");
  CHECK(r.exit_code == 0);
  CHECK_THAT(r.out, Catch::Matchers::StartsWith("2\n"));
  CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("(3,1) <3,5>"));
  CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("(3,2) <3,8,10>"));
  CHECK(run_cli("count -m 4 -f 6 --list").out ==
        "2\n(1,2,1) <4,5,7>\n(2,2,1) <4,7,9,10>\n");
}

TEST_CASE("count: auto falls back to enumeration below a formula's domain") {
  CHECK(run_cli("count -m 3 -g 1").out == "0\n");
  CHECK(run_cli("count -m 4 -g 2").out == "0\n");
}

TEST_CASE("count: sources agree") {
  for (const char* src : {"auto", "polytope", "formula", "oracle"})
    CHECK(run_cli(std::string("count -m 4 -g 9 --source ") + src).out == "11\n");
  for (const char* src : {"polytope", "oracle"})
    CHECK(run_cli(std::string("count -m 6 -g 10 --source ") + src).out == "37\n");
}

TEST_CASE("count: json output") {
  const auto r = run_cli("count -m 3 -f 7 --list --format json");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["query"]["multiplicity"] == 3);
  CHECK(j["query"]["frobenius"] == 7);
  CHECK(j["query"]["med"] == false);
  CHECK(j["count"] == 2);
  CHECK(j["points"] == nlohmann::json::parse("[[3,1],[3,2]]"));
}

TEST_CASE("count: usage errors exit 2") {
  CHECK(run_cli("count -m 1 -g 3").exit_code == 2);
  CHECK(run_cli("count -m 4").exit_code == 2);
  CHECK(run_cli("count -m 5 -g 7 --source formula").exit_code == 2);  // no closed form
  CHECK(run_cli("count -m 4 -g 9 --source nonsense").exit_code == 2);
  CHECK(run_cli("bogus-subcommand").exit_code == 2);
}

TEST_CASE("count: oracle beyond the depth cap exits 3") {
  CHECK(run_cli("count -m 2 -g 25 --source oracle").exit_code == 3);
}

TEST_CASE("table: csv golden rows") {
  const auto r = run_cli("table --max-genus 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "g,m2,m3,m4,total\n"
        "1,1,,,1\n"
        "2,1,1,,2\n"
        "3,1,2,1,4\n");
}

TEST_CASE("table: census row g=15") {
  const auto r = run_cli("table --max-genus 15");
  REQUIRE(r.exit_code == 0);
  CHECK_THAT(r.out, Catch::Matchers::StartsWith(
                        "g,m2,m3,m4,m5,m6,m7,m8,m9,m10,m11,m12,m13,m14,m15,m16,total\n"));
  CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring(
                        "15,1,6,26,51,133,191,325,409,492,486,409,234,79,14,1,2857\n"));
  // the genus-6 row total is the computed 23, not the published misprint 33
  CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("6,1,3,6,7,5,1,,,,,,,,,,23\n"));
}

TEST_CASE("table: MED census row g=13") {
  const auto r = run_cli("table --max-genus 13 --med");
  REQUIRE(r.exit_code == 0);
  CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("13,1,4,14,16,25,18,17,9,7,4,2,1,1,119\n"));
}

TEST_CASE("table: deterministic output, csv and json") {
  const auto a = run_cli("table --max-genus 8");
  const auto b = run_cli("table --max-genus 8");
  CHECK(a.out == b.out);
  const auto ja = run_cli("table --max-genus 6 --format json");
  const auto jb = run_cli("table --max-genus 6 --format json");
  CHECK(ja.out == jb.out);
  const auto j = nlohmann::json::parse(ja.out);
  CHECK(j["rows"][5]["total"] == 23);
  CHECK(j["rows"][5]["counts"] == nlohmann::json::parse("[1,3,6,7,5,1]"));
}

TEST_CASE("verify: fast window is clean and exits 0") {
  const auto r = run_cli(
      "verify --max-genus 30 --max-frobenius 40 --grid-genus 12 --oracle-depth 8 --format json");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["summary"]["discrepancies"] == 0);
  CHECK(j["summary"]["documented_discrepancies"].get<int>() > 0);
  bool found_med_adjudication = false;
  for (const auto& row : j["rows"])
    if (row["status"] == "FORMULA_DISCREPANCY" && row["documented"] == true &&
        row["query"].get<std::string>().find("MED printed 8-branch") != std::string::npos)
      found_med_adjudication = true;
  CHECK(found_med_adjudication);
}

TEST_CASE("verify: text report carries a summary line") {
  const auto r = run_cli("verify --max-genus 20 --max-frobenius 25 --grid-genus 8 --oracle-depth 6");
  CHECK(r.exit_code == 0);
  CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("0 discrepancies"));
  CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("documented misprints"));
}

TEST_CASE("oracle cache round trip via KUNZCOUNT_CACHE") {
  const auto dir = std::filesystem::temp_directory_path() / "kunzcount_cache_test";
  std::filesystem::remove_all(dir);
  const std::string env = "KUNZCOUNT_CACHE=" + dir.string();
  const auto first = run_cli("count -m 5 -g 9 --source oracle", env);
  CHECK(first.out == "16\n");
  REQUIRE(std::filesystem::exists(dir / "levels.txt"));
  const auto second = run_cli("count -m 5 -g 9 --source oracle", env);
  CHECK(second.out == "16\n");
  // a corrupt cache is ignored and recomputed
  std::ofstream(dir / "levels.txt") << "garbage\n";
  const auto third = run_cli("count -m 5 -g 9 --source oracle", env);
  CHECK(third.out == "16\n");
  std::filesystem::remove_all(dir);
}
