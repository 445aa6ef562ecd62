#include <doctest.h>

#include <json.hpp>

#include "phv/catalog.hpp"
#include "phv/castling.hpp"
#include "phv/error.hpp"
#include "phv/expression.hpp"
#include "phv/verify.hpp"

using namespace phv;

namespace {

OrbitLimits limits(std::uint32_t steps, Natural max_dim) {
  OrbitLimits l;
  l.max_steps = steps;
  l.max_dim = max_dim;
  return l;
}

bool has_code(const Report& r, const std::string& code) {
  for (const auto& v : r.violations) {
    if (v.code == code) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("theorem A shape of SK I-8") {
  const auto m = catalog_instantiate("SK I-8");
  const auto shape = theorem_A_shape(m);
  REQUIRE(shape.has_value());
  CHECK_FALSE(shape->lemma_mode);
  CHECK(shape->n == 6);
  CHECK(shape->m == std::vector<Natural>{2});
  REQUIRE(shape->exceptional.has_value());
  CHECK(*shape->exceptional == 0);
  CHECK(shape->exceptional_gcd == 2);
  CHECK(theorem_A_check(m).passed());
}

TEST_CASE("theorem A on a castle of SK I-8") {
  // castling the SL2 factor: m = 6, n = 2 -> SL4 acting by w1*
  const auto m = parse_module("GL1 x SL3 x SL4 : (2w1* # w1)");
  const auto shape = theorem_A_shape(m);
  REQUIRE(shape.has_value());
  CHECK(shape->m == std::vector<Natural>{4});
  CHECK(shape->exceptional_gcd == 2);
  CHECK(theorem_A_check(m).passed());
}

TEST_CASE("theorem A violations") {
  const auto bad = parse_module("GL1 x SL3 x SL2 x SL4 : (2w1 # w1 # w1)");
  const auto r = theorem_A_check(bad);
  CHECK(r.verdict == Verdict::fail);
  CHECK(has_code(r, "GCD-PAIR"));
  CHECK(r.violations.front().location == "W(1,2)");
  CHECK(has_code(r, "GCD-N-EXTRA"));

  const auto shape = parse_module("GL1 x SL3 x Sp2 : (2w1 # w2)");
  CHECK(has_code(theorem_A_check(shape), "SHAPE"));
  CHECK_THROWS_AS(theorem_A_check(parse_module("GL1 x SL2 : w1 + w1")), Error);

  // lemma mode: one bad pair is allowed, two are not
  CHECK(theorem_A_check(parse_module("GL1 x SL3 x SL3 : (w1 # w1)")).passed());
  CHECK(theorem_A_check(parse_module("GL1 x SL2 x SL4 x SL5 : (w1 # w1 # w1)")).passed());
  CHECK_FALSE(theorem_A_check(parse_module("GL1 x SL2 x SL4 x SL6 : (w1 # w1 # w1)")).passed());
}

TEST_CASE("chain invariant along bounded orbits") {
  auto r = chain_invariant_check(catalog_instantiate("SK I-8"), limits(4, Natural(1000000000)));
  CHECK(r.passed());
  CHECK(r.violations.empty());
  CHECK(r.stats.members > 1);

  const auto l5 = limits(5, Natural(1000000000));
  const auto a = chain_invariant_check(catalog_instantiate("SK I-4"), l5);
  CHECK(a.passed());
  const auto up = castle(catalog_instantiate("SK I-4"), castling_moves(catalog_instantiate("SK I-4"))[0]);
  const auto b = chain_invariant_check(up, l5);
  CHECK(b.verdict == a.verdict);

  CHECK_THROWS_AS(chain_invariant_check(parse_module("GL1 x SL2 x SL3 x SL5 : (2w1 # w1 # w1)"), l5),
                  Error);
}

TEST_CASE("theorem B scan") {
  const auto r = theorem_B_scan(limits(4, Natural(1000000)));
  CHECK(r.passed());
  CHECK(r.violations.empty());

  std::vector<std::pair<std::string, Module>> fake{
      {"fake", parse_module("GL1^2 x SL2 x SL2 : (w1 # w1) + (w1 # 1)")}};
  const auto f = theorem_B_scan(fake, limits(1, Natural(1000)));
  CHECK(f.verdict == Verdict::fail);
  CHECK(has_code(f, "EQUAL-FACTORS"));
}

TEST_CASE("theorem B verdict is monotone in the limits") {
  const auto small = theorem_B_scan(limits(3, Natural(100000)));
  const auto large = theorem_B_scan(limits(4, Natural(10000000)));
  CHECK(small.passed());
  CHECK(large.passed());
  CHECK(large.stats.members >= small.stats.members);
}

TEST_CASE("catalog verification") {
  const auto r = verify_catalog();
  CHECK(r.passed());
  bool noted = false;
  for (const auto& n : r.notes) noted = noted || n.find("13 etale entries checked") != std::string::npos;
  CHECK(noted);

  Catalog mutated = catalog();
  for (auto& e : mutated.entries()) {
    if (e.id == "SK I-4") e.build = [](const Params&) { return parse_module("GL1 x SL2 : 2w1"); };
  }
  const auto bad = verify_catalog(mutated);
  CHECK(bad.verdict == Verdict::fail);
  REQUIRE(has_code(bad, "DIM-MISMATCH"));
  bool located = false;
  for (const auto& v : bad.violations) {
    located = located || (v.code == "DIM-MISMATCH" && v.location == "SK I-4" &&
                          v.detail.find("dim V = 3") != std::string::npos);
  }
  CHECK(located);
}

TEST_CASE("decomposition proxy") {
  const auto l = limits(3, Natural(1000000));
  for (std::uint64_t n = 2; n <= 6; ++n) {
    CAPTURE(n);
    const auto r = baues_decomposition_check(catalog_instantiate("Ks A-2", {n}), l);
    CHECK(r.passed());
  }
  CHECK_THROWS_AS(baues_decomposition_check(catalog_instantiate("KI I-2"), l), Error);
  CHECK_THROWS_AS(baues_decomposition_check(catalog_instantiate("Ks A-11", {2}), l), Error);
  CHECK_THROWS_AS(baues_decomposition_check(parse_module("GL1 x SL2 : w1"), l), Error);
}

TEST_CASE("reports") {
  Report r;
  r.subject = "x";
  r.finalize();
  CHECK(r.verdict == Verdict::pass);
  r.finalize(true);
  CHECK(r.verdict == Verdict::inconclusive);
  r.stats.truncated_nodes = true;
  r.finalize();
  CHECK(r.verdict == Verdict::inconclusive);
  r.add("SHAPE", "here", "detail");
  r.finalize();
  CHECK(r.verdict == Verdict::fail);

  const auto j = nlohmann::json::parse(to_json(r));
  CHECK(j["verdict"] == "fail");
  CHECK(j["violations"][0]["code"] == "SHAPE");
  CHECK(to_text(r).find("SHAPE") != std::string::npos);
  CHECK(verdict_name(Verdict::inconclusive) == "inconclusive");
}

TEST_CASE("a passing report never carries violations") {
  const auto l = limits(3, Natural(1000000));
  std::vector<Report> all{verify_catalog(), theorem_B_scan(l)};
  for (const char* id : {"SK I-4", "SK I-8", "SK I-11"}) {
    all.push_back(theorem_A_check(catalog_instantiate(id)));
    all.push_back(chain_invariant_check(catalog_instantiate(id), l));
  }
  for (const auto& r : all) {
    if (r.passed()) CHECK(r.violations.empty());
  }
}
