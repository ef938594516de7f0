#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "cycmds/cli.hpp"
#include "cycmds/tables.hpp"

using namespace cycmds;

namespace {

struct Run {
  int rc;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "cycmds");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int rc = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {rc, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("census JSON round-trips exactly") {
  for (auto spec : {CodeSpec::make(7, {0, 1, 3}), CodeSpec::make(12, {0, 1, 2, 5}), CodeSpec::make(18, {0, 1, 5, 8})}) {
    const auto r = compute_bad_primes(spec);
    const json j = to_json(r, true);
    CHECK(bad_prime_report_from_json(json::parse(j.dump())) == r);
    // Big integers are decimal strings.
    CHECK(j["verdicts"]["bad_primes"][0].is_string());
  }
}

TEST_CASE("certificates are elided above the threshold") {
  const auto r = compute_bad_primes(CodeSpec::make(13, {0, 1, 3, 6}));
  const json j = to_json(r, false, 200);
  CHECK(j["certificates"].is_null());
  CHECK(j["certificates_elided"] == 715);
  CHECK_THROWS(bad_prime_report_from_json(j));
  CHECK(to_json(r, true)["certificates"].size() == 715);
}

TEST_CASE("code report JSON round-trips exactly") {
  for (auto [spec, p] : std::vector<std::pair<CodeSpec, std::uint64_t>>{
           {CodeSpec::make(7, {0, 1, 3}), 29}, {CodeSpec::make(9, {0, 2, 4}), 2}, {CodeSpec::make(13, {0, 1, 2, 5}), 2}}) {
    AnalyzeOptions o;
    o.codewords.max_codewords = 1000;  // forces a notice on some rows
    const auto r = analyze(spec, p, o);
    const json j = to_json(r);
    CHECK(code_report_from_json(json::parse(j.dump())) == r);
    CHECK(j["field"]["p"].is_string());
    CHECK(j["field"]["modulus"].is_array());
  }
}

TEST_CASE("human output") {
  const auto r = compute_bad_primes(CodeSpec::make(7, {0, 1, 3}));
  CHECK(to_human(r).find("{2, 7}") != std::string::npos);
  CHECK(join_bigints({}) == "{}");
}

}

TEST_SUITE("cli") {

TEST_CASE("defining-set parsing") {
  std::vector<std::string> w;
  CHECK(parse_defining_set("0,1,3", &w) == std::vector<int>{0, 1, 3});
  CHECK(w.empty());
  CHECK(parse_defining_set("0..2,5", &w) == std::vector<int>{0, 1, 2, 5});
  CHECK(w.empty());
  CHECK(parse_defining_set("3,1,0,1", &w) == std::vector<int>{0, 1, 3});
  CHECK(w.size() == 1);
  CHECK(parse_defining_set(" 4 , 2 ") == std::vector<int>{2, 4});
  CHECK_THROWS_AS(parse_defining_set("0,,1"), Error);
  CHECK_THROWS_AS(parse_defining_set("0,a"), Error);
  CHECK_THROWS_AS(parse_defining_set("3..1"), Error);
  CHECK_THROWS_AS(parse_defining_set(""), Error);
}

TEST_CASE("badprimes command") {
  auto r = cli({"badprimes", "--n", "7", "--j", "0,1,3"});
  CHECK(r.rc == 0);
  CHECK(r.out.find("{2, 7}") != std::string::npos);
  r = cli({"badprimes", "--n", "13", "--j", "0,1,3,6", "--format", "json"});
  CHECK(r.rc == 0);
  const auto j = json::parse(r.out);
  CHECK(j["verdicts"]["bad_primes"] == json{"3", "5", "13", "53", "521", "1327"});
  CHECK(j.contains("spec"));
  CHECK(j.contains("field"));
  CHECK(j["certificates"].is_null());
  r = cli({"badprimes", "--n", "13", "--j", "0,1,3,6", "--format", "json", "--full"});
  CHECK(json::parse(r.out)["certificates"].size() == 715);
  r = cli({"badprimes", "--n", "4", "--j", "0..3", "--format", "json"});
  CHECK(json::parse(r.out)["certificates"].size() == 1);
}

TEST_CASE("analyze command") {
  auto r = cli({"analyze", "--n", "7", "--j", "0,1,3", "--auto", "100", "1"});
  CHECK(r.rc == 0);
  CHECK(r.out.find("NonRS") != std::string::npos);
  r = cli({"analyze", "--n", "9", "--j", "0,2,4", "--auto", "100", "1", "--format", "json"});
  CHECK(r.rc == 0);
  CHECK(json::parse(r.out)["verdicts"][0]["classification"] == "RS");
  r = cli({"analyze", "--n", "5", "--j", "0,1,3", "--p", "11", "--format", "json"});
  CHECK(r.rc == 0);
  const auto j = json::parse(r.out);
  CHECK(j["verdicts"]["is_mds"] == true);
  CHECK(j["field"]["q"] == "11");
}

TEST_CASE("exit codes") {
  CHECK(cli({"analyze", "--n", "7", "--j", "0,1,3", "--p", "2"}).rc == exit_code::kBadPrime);
  CHECK(cli({"analyze", "--n", "7", "--j", "0,1,3", "--p", "7"}).rc == exit_code::kBadPrime);
  CHECK(cli({"analyze", "--n", "9", "--j", "0,1,4", "--p", "5"}).rc == exit_code::kZeroMinor);
  CHECK(cli({"analyze", "--n", "7", "--j", "0,1,3"}).rc == exit_code::kUsage);
  CHECK(cli({"analyze", "--n", "7", "--j", "0,1,9", "--p", "3"}).rc == exit_code::kUsage);
  CHECK(cli({"badprimes", "--n", "7"}).rc == exit_code::kUsage);
  CHECK(cli({"frobnicate"}).rc == exit_code::kUsage);
  CHECK(cli({"badprimes", "--n", "23", "--j", "0,1,2,4", "--minor-budget", "100"}).rc == exit_code::kBudget);
  CHECK(cli({"badprimes", "--n", "7", "--j", "0,1,3", "--minor-budget", "0"}).rc == exit_code::kUsage);
  CHECK(cli({"chebotarev", "12"}).rc == exit_code::kUsage);
  CHECK(cli({"reproduce", "T9"}).rc == exit_code::kUsage);
  CHECK(cli({"--help"}).rc == 0);
}

TEST_CASE("chebotarev command") {
  auto r = cli({"chebotarev", "5"});
  CHECK(r.rc == 0);
  CHECK(r.out.find("251 square submatrices") != std::string::npos);
  r = cli({"chebotarev", "7", "--format", "json"});
  CHECK(r.rc == 0);
  const auto j = json::parse(r.out);
  CHECK(j["verdicts"]["all_nonzero"] == true);
  CHECK(j["verdicts"]["submatrices"] == j["verdicts"]["expected_submatrices"]);
}

TEST_CASE("lift command") {
  auto r = cli({"lift", "--n", "7", "--j", "0,1,3", "--p", "29", "--seed", "5", "--format", "json"});
  CHECK(r.rc == 0);
  auto j = json::parse(r.out);
  CHECK(j["verdicts"]["mds_over_Fq"] == true);
  CHECK(j["verdicts"]["lift_is_mds"] == true);
  // Same seed, same scaling.
  CHECK(json::parse(cli({"lift", "--n", "7", "--j", "0,1,3", "--p", "29", "--seed", "5", "--format", "json"}).out) == j);
  // At a bad prime the reduction is not MDS; the lift itself still is.
  r = cli({"lift", "--n", "7", "--j", "0,1,3", "--p", "2", "--format", "json"});
  CHECK(r.rc == 0);
  j = json::parse(r.out);
  CHECK(j["verdicts"]["mds_over_Fq"] == false);
}

TEST_CASE("reproduce command with a cache directory") {
  const auto dir = std::filesystem::temp_directory_path() / "cycmds_cli_cache_test";
  std::filesystem::remove_all(dir);
  auto r = cli({"reproduce", "T1", "--cache-dir", dir.string()});
  CHECK(r.rc == 0);
  CHECK(r.out.find("17 rows, 0 mismatches") != std::string::npos);
  CHECK(std::distance(std::filesystem::directory_iterator(dir), std::filesystem::directory_iterator{}) == 17);
  // Second run is served from the cache and must agree.
  auto again = cli({"reproduce", "T1", "--cache-dir", dir.string(), "--format", "json"});
  CHECK(again.rc == 0);
  const auto j = json::parse(again.out);
  CHECK(j["verdicts"]["all_match"] == true);
  CHECK(j["paper_expected"]["n=7 J={0,1,3}"] == "zero-minor-free=Yes P_bad={2,7}");
  std::filesystem::remove_all(dir);
}

}
