#include <doctest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "cdalg_cli/cli.hpp"

using cdalg::cli::run_command;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("solve-sim JSON") {
  const Result r = run({"solve-sim", "--a", "i", "--b", "j", "--level", "2", "--output", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["variant"] == "ParametricModule");
  CHECK(j["completeness"] == "General");
  CHECK(j["level_semantics"] == "IffCondition");
  CHECK(j["representatives_text"][0] == "e1 + e2");
  CHECK(j["representatives"][0]["coeffs"] == nlohmann::json::array({"0", "1", "1", "0"}));
  CHECK(run({"solve-sim", "--a", "i", "--b", "j", "--level", "2", "--output", "json"}).out == r.out);
}

TEST_CASE("empty solution sets exit with 1") {
  const Result r = run({"solve-sim", "--a", "i", "--b", "1+j", "--output", "json"});
  CHECK(r.code == 1);
  CHECK(nlohmann::json::parse(r.out)["variant"] == "Empty");
  CHECK(run({"solve-consim", "--a", "1", "--b", "2", "--level", "2"}).code == 1);
}

TEST_CASE("table") {
  const Result r = run({"table", "--level", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("e1 +e1  -1 +e3 -e2") != std::string::npos);
  CHECK(r.out.find("e2 +e2 -e3  -1 +e1") != std::string::npos);
  const Result j = run({"table", "--level", "2", "--output", "json"});
  const auto t = nlohmann::json::parse(j.out);
  CHECK(t["entries"][1][2] == nlohmann::json({{"sign", 1}, {"index", 3}}));
}

TEST_CASE("identity-scan") {
  const std::vector<std::string> args{"identity-scan", "--level", "4", "--trials", "200", "--seed", "1", "--output",
                                      "json"};
  const Result r = run(args);
  CHECK(r.code == 0);
  bool saw_alternativity = false;
  std::istringstream lines(r.out);
  for (std::string line; std::getline(lines, line);) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j["matches_claim"] == true);
    if (j["law"] == "alternativity") {
      saw_alternativity = true;
      CHECK(j["verdict"] == "Counterexample");
    }
  }
  CHECK(saw_alternativity);
  CHECK(run(args).out == r.out);
}

TEST_CASE("other verbs") {
  CHECK(run({"eval", "e1*e2", "--level", "2"}).out == "e3\n");
  CHECK(run({"eval", "(1+e1)*(1-e1)"}).out == "2\n");
  CHECK(run({"eval", "0.5 e1 * 2"}).out == "1.0 e1\n");

  const Result sq = run({"sqrt", "--a", "e1", "--level", "2", "--output", "json"});
  CHECK(sq.code == 0);
  const auto sj = nlohmann::json::parse(sq.out);
  CHECK(sj["backend"] == "float");
  CHECK(sj["notes"] == nlohmann::json::array({"float-fallback"}));
  CHECK(sj["representatives"].size() == 2);

  CHECK(run({"sqrt", "--a", "-3 + 4e1", "--level", "2"}).out.find("1 + 2 e1") != std::string::npos);
  CHECK(run({"root", "--a", "e1", "--m", "3", "--level", "2"}).code == 0);
  CHECK(run({"solve-conj-transform", "--a", "2e1", "--b", "e1", "--level", "2"}).code == 0);
  CHECK(run({"solve-conj-transform", "--a", "1+e1", "--b", "-1-e1", "--level", "2"}).code == 1);
  CHECK(run({"solve-xax", "--a", "1", "--b", "4", "--level", "2"}).out.find("-2") != std::string::npos);

  const Result cl = run({"classify", "--a", "4+3e2", "--b", "4+3e1", "--output", "json"});
  CHECK(cl.code == 0);
  const auto cj = nlohmann::json::parse(cl.out);
  CHECK(cj["canonical"]["coeffs"] == nlohmann::json::array({"4", "3", "0", "0"}));
  CHECK(cj["similar"] == true);

  const Result zd = run({"zero-divisors", "--level", "4", "--output", "json"});
  CHECK(zd.code == 0);
  CHECK(nlohmann::json::parse(zd.out)["found"] == true);
  CHECK(nlohmann::json::parse(run({"zero-divisors", "--level", "3", "--output", "json"}).out)["found"] == false);

  const Result span = run({"span-experiment", "--level", "2", "--trials", "5", "--seed", "3"});
  CHECK(span.code == 0);
  CHECK(span.out.rfind("level,trial,d_oracle,d_pair,d_module,equal\n", 0) == 0);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"eval", "e1", "--bogus"}).code == 2);
  CHECK(run({"eval", "e1", "--output", "yaml"}).code == 2);
  const Result parse = run({"eval", "e1 + + e2"});
  CHECK(parse.code == 2);
  CHECK(parse.err.find("offset 5") != std::string::npos);
  CHECK(run({"eval", "e4", "--level", "2"}).code == 2);
  CHECK(run({"eval", "0.5", "--backend", "exact"}).code == 2);
  CHECK(run({"solve-sim", "--a", "i"}).code == 2);
  CHECK(run({"table"}).code == 2);
  CHECK(run({"solve-xax", "--a", "e1", "--b", "e1", "--level", "4"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
