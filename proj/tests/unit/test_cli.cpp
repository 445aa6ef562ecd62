#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "phv/cli.hpp"

using phv::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("dim") {
  auto r = call({"dim", "GL1^2 x Sp2 x SL3 : (w1 # w1) + (w2 # 1) + (1 # w1*)"});
  CHECK(r.code == 0);
  CHECK(r.out == "dim G = 20, dim V = 20, etale-candidate: yes\n");
  r = call({"dim", "SK I-11"});
  CHECK(r.code == 0);
  CHECK(r.out.find("dim V = 40") != std::string::npos);
  r = call({"--json", "dim", "Ks A-3(n=4)"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["dim_V"] == 20);
  CHECK(j["etale_candidate"] == true);
}

TEST_CASE("usage and parse errors give 2") {
  CHECK(call({"dim", "GL1 x SL0 : w1"}).code == 2);
  CHECK(call({"dim", "GL1 x SL3 : w1 # w1"}).code == 2);
  CHECK(call({"dim", "no such entry"}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({}).code == 2);
  CHECK(call({"castle", "GL1 x SL2 : 3w1", "--factor", "1"}).code == 2);
  CHECK(call({"check", "baues", "KI I-2"}).code == 2);
}

TEST_CASE("verifier failures give 1") {
  auto r = call({"check", "theorem-a", "GL1 x SL3 x SL2 x SL4 : (2w1 # w1 # w1)"});
  CHECK(r.code == 1);
  CHECK(r.out.find("GCD-PAIR") != std::string::npos);
  r = call({"--json", "check", "theorem-a", "GL1 x SL3 x SL2 x SL4 : (2w1 # w1 # w1)"});
  CHECK(r.code == 1);
  CHECK(nlohmann::json::parse(r.out)["verdict"] == "fail");
}

TEST_CASE("passing commands give 0") {
  CHECK(call({"check", "theorem-a", "SK I-8"}).code == 0);
  CHECK(call({"check", "chain", "SK I-8", "--max-steps", "3"}).code == 0);
  CHECK(call({"check", "baues", "Ks A-2(n=3)", "--max-steps", "3"}).code == 0);
  CHECK(call({"scan", "theorem-b", "--max-steps", "3", "--max-dim", "100000"}).code == 0);
  CHECK(call({"verify", "catalog"}).code == 0);
  CHECK(call({"promote", "SK I-4"}).code == 0);
  CHECK(call({"castle", "GL1 x SL2 x SL3 : (3w1 # w1)", "--factor", "2"}).code == 0);
  CHECK(call({"reduce", "GL1 x SL2 x SL3 : (3w1 # w1)"}).code == 0);
  CHECK(call({"equiv", "SK I-4", "GL1 x SL2 x SL3 : (3w1 # w1)"}).code == 0);

  auto r = call({"orbit", "SK I-4", "--max-steps", "5", "--max-dim", "1000000000"});
  CHECK(r.code == 0);
  r = call({"--json", "orbit", "SK I-4", "--max-steps", "5", "--max-dim", "1000000000"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["members"].size() == 13);
}

TEST_CASE("catalog listing") {
  auto r = call({"catalog", "--filter", "etale"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 13);
  r = call({"catalog", "--filter", "nonregular"});
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 6);
  CHECK(call({"catalog", "--filter", "sparkly"}).code == 2);
  CHECK(call({"catalog", "--show", "SK III-2"}).code == 0);
}
