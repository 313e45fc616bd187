#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "majdist/json.hpp"

using namespace majdist;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

Json poly(std::vector<std::string> coeffs) { return Json{{"coeffs", coeffs}}; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("dist") {
  auto r = run({"dist", "--shape", "2,2"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["by_descents"].size() == 2);
  CHECK(j["by_descents"]["1"] == poly({"0", "0", "1"}));
  CHECK(j["by_descents"]["2"] == poly({"0", "0", "0", "0", "1"}));

  r = run({"dist", "--shape", "2,2", "--inner", "1"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["by_descents"]["1"] == poly({"0", "1", "1"}));
  CHECK(run({"dist", "--shape", "2,2/1"}).out == r.out);
}

TEST_CASE("errors map to exit codes") {
  auto r = run({"dist", "--shape", "2,2/3"});
  CHECK(r.code == 2);
  CHECK(r.err.find("inner not contained in outer") != std::string::npos);
  CHECK(r.out.empty());
  CHECK(run({"dist"}).code == 2);
  CHECK(run({"dist", "--shape", "2,x"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"koh", "--n", "-1", "--a", "2"}).code == 2);
  CHECK(run({"dist", "--shape", "4,4,3", "--max-cells", "10"}).code == 2);
  CHECK(run({"dist", "--shape", "2,1", "--format", "xml"}).code == 2);
  CHECK(run({"formula", "--id", "two_row", "--n", "1", "--k", "2", "--i", "1"}).code == 2);
  CHECK(run({"verify", "--suite", "nope"}).code == 2);
  auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("verify") != std::string::npos);
}

TEST_CASE("koh") {
  const auto r = run({"koh", "--n", "2", "--a", "2"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["value"] == poly({"1", "1", "2", "1", "1"}));
  CHECK(j["binomial_match"] == true);
  CHECK(j["terms"].size() == 2);
}

TEST_CASE("formula") {
  auto r = run({"formula", "--id", "two_row_skew", "--n", "3", "--k", "2", "--j", "1", "--i", "1"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["value"] == poly({"0", "1", "2", "1"}));
  CHECK(j["status"] == "theorem");
  r = run({"formula", "--id", "nk3_i2", "--params", "n=3,k=3"});
  REQUIRE(r.code == 0);
  j = Json::parse(r.out);
  CHECK(j["status"] == "conjecture");
  CHECK(j["value"] == poly({"0", "0", "0", "0", "0", "0", "0", "0", "0", "1"}));
  CHECK(run({"formula", "--id", "two_row", "--params", "n=3,k"}).code == 2);
}

TEST_CASE("schur, kr, rsk, sagan") {
  auto r = run({"schur", "--shape", "2,1", "--vars", "3", "--method", "e"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["value"] == poly({"0", "1", "2", "2", "2", "1"}));
  CHECK(j["cross_check"]["agree"] == true);

  r = run({"kr", "--shape", "2,1", "--descents", "1"});
  REQUIRE(r.code == 0);
  j = Json::parse(r.out);
  CHECK(j["value"] == poly({"0", "1", "1"}));
  CHECK(j["identity_holds"] == true);
  CHECK(j["reversal_check"] == true);

  r = run({"rsk", "--perm", "2,1,3"});
  REQUIRE(r.code == 0);
  j = Json::parse(r.out);
  CHECK(j["shape"] == "2,1");
  CHECK(j["descents_Q"] == Json::array({1}));
  CHECK(run({"rsk", "--perm", "2,2,1"}).code == 2);

  r = run({"sagan", "--n", "4"});
  REQUIRE(r.code == 0);
  j = Json::parse(r.out);
  CHECK(j["A"]["1"] == poly({"0", "3", "5", "3"}));
  CHECK(j["status"] == "all-pass");
  CHECK(run({"sagan", "--n", "9", "--perm-limit", "8"}).code == 2);
}

TEST_CASE("verify output and environment overrides") {
  auto r = run({"verify", "--suite", "koh", "--bound", "6"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["status"] == "all-pass");
  CHECK(r.err.find("koh: all-pass") != std::string::npos);
  // Byte-identical on repeat, and independent of worker count.
  CHECK(run({"verify", "--suite", "koh", "--bound", "6", "--jobs", "3"}).out == r.out);

  r = run({"verify", "--suite", "three_row_recurrence_printed", "--bound", "6"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["status"] == "conjecture-refuted");

  CHECK(run({"verify", "--suite", "all", "--bound", "4"}).code == 2);

  ::setenv("MAJDIST_FORMAT", "csv", 1);
  r = run({"verify", "--suite", "koh", "--bound", "3"});
  CHECK(r.out.rfind("suite_id,shape,params", 0) == 0);
  // Flags beat the environment.
  r = run({"verify", "--suite", "koh", "--bound", "3", "--format", "json"});
  CHECK(r.out.front() == '{');
  ::unsetenv("MAJDIST_FORMAT");

  ::setenv("MAJDIST_MAX_CELLS", "5", 1);
  CHECK(run({"dist", "--shape", "3,2,1"}).code == 2);
  CHECK(run({"dist", "--shape", "3,2,1", "--max-cells", "6"}).code == 0);
  ::unsetenv("MAJDIST_MAX_CELLS");
}

TEST_CASE("output file") {
  const auto path = std::filesystem::temp_directory_path() / "majdist_cli_test.json";
  const auto r = run({"koh", "--n", "1", "--a", "1", "--out", path.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  CHECK(Json::parse(in)["value"] == poly({"1", "1"}));
  std::filesystem::remove(path);
}

}  // TEST_SUITE
