#include <doctest.h>

#include <algorithm>
#include <vector>

#include "../oracles/oracles.hpp"
#include "phv/error.hpp"
#include "phv/lie.hpp"

using namespace phv;

namespace {

Natural dim(Family f, std::uint32_t rank, std::vector<std::uint32_t> w) {
  return irrep_dim(make_factor(f, rank), HighestWeight::from_dense(w));
}

Natural fund(Family f, std::uint32_t rank, std::uint32_t k, std::uint32_t coeff = 1) {
  return irrep_dim(make_factor(f, rank), HighestWeight::fundamental(rank, k - 1, coeff));
}

// Every dense weight of the given rank with coefficient sum <= max_sum.
void weights_up_to(std::uint32_t rank, std::uint32_t max_sum,
                   std::vector<std::vector<std::uint32_t>>& out) {
  std::vector<std::uint32_t> w(rank, 0);
  auto rec = [&](auto&& self, std::uint32_t pos, std::uint32_t left) -> void {
    if (pos == rank) {
      out.push_back(w);
      return;
    }
    for (std::uint32_t c = 0; c <= left; ++c) {
      w[pos] = c;
      self(self, pos + 1, left - c);
    }
    w[pos] = 0;
  };
  rec(rec, 0, max_sum);
}

std::vector<SimpleFactor> all_factors(std::uint32_t max_rank) {
  std::vector<SimpleFactor> out;
  for (std::uint32_t r = 1; r <= max_rank; ++r) {
    out.push_back({Family::A, r});
    if (r >= 2) out.push_back({Family::B, r});
    out.push_back({Family::C, r});
    if (r >= 3) out.push_back({Family::D, r});
  }
  out.push_back({Family::G2, 2});
  if (max_rank >= 4) out.push_back({Family::F4, 4});
  if (max_rank >= 6) out.push_back({Family::E6, 6});
  if (max_rank >= 7) out.push_back({Family::E7, 7});
  if (max_rank >= 8) out.push_back({Family::E8, 8});
  return out;
}

}  // namespace

TEST_CASE("spot values from the tables") {
  CHECK(dim(Family::A, 1, {3}) == 4);
  CHECK(dim(Family::A, 2, {2, 0}) == 6);
  CHECK(dim(Family::A, 4, {0, 1, 0, 0}) == 10);
  CHECK(dim(Family::C, 2, {0, 1}) == 5);
  CHECK(dim(Family::D, 5, {0, 0, 0, 0, 1}) == 16);
  CHECK(dim(Family::D, 5, {0, 0, 0, 1, 0}) == 16);
  CHECK(dim(Family::G2, 2, {1, 0}) == 7);
  CHECK(dim(Family::B, 3, {0, 0, 1}) == 8);
  CHECK(dim(Family::E6, 6, {1, 0, 0, 0, 0, 0}) == 27);
  CHECK(dim(Family::E7, 7, {0, 0, 0, 0, 0, 0, 1}) == 56);
  CHECK(dim(Family::F4, 4, {0, 0, 0, 1}) == 26);
}

TEST_CASE("group dimensions match the adjoint representation") {
  for (const auto& f : all_factors(8)) {
    std::vector<std::uint32_t> w(f.rank, 0);
    switch (f.family) {
      case Family::A:
        w[0] += 1;
        w[f.rank - 1] += 1;
        break;
      case Family::B:
        if (f.rank == 2) w[1] = 2; else w[1] = 1;
        break;
      case Family::C: w[0] = 2; break;
      case Family::D:
        if (f.rank == 3) w = {0, 1, 1}; else w[1] = 1;
        break;
      case Family::G2: w[1] = 1; break;
      case Family::F4: w[0] = 1; break;
      case Family::E6: w[1] = 1; break;
      case Family::E7: w[0] = 1; break;
      case Family::E8: w[7] = 1; break;
    }
    CAPTURE(family_name(f.family));
    CAPTURE(f.rank);
    CHECK(irrep_dim(f, HighestWeight::from_dense(w)) == simple_dim(f));
  }
}

TEST_CASE("closed forms for classical families up to rank 8") {
  for (std::uint32_t n = 1; n <= 8; ++n) {
    CAPTURE(n);
    for (std::uint32_t k = 1; k <= n; ++k) {
      CHECK(fund(Family::A, n, k) == oracle::binomial(n + 1, k));
    }
    for (std::uint32_t s = 1; s <= 5; ++s) {
      CHECK(fund(Family::A, n, 1, s) == oracle::binomial(n + s, s));
    }
    for (std::uint32_t k = 1; k <= n; ++k) {
      CHECK(fund(Family::C, n, k) == oracle::binomial(2 * n, k) - (k >= 2 ? oracle::binomial(2 * n, k - 2) : 0));
    }
    CHECK(fund(Family::C, n, 1, 2) == oracle::binomial(2 * n + 1, 2));
    if (n >= 2) {
      for (std::uint32_t k = 1; k < n; ++k) CHECK(fund(Family::B, n, k) == oracle::binomial(2 * n + 1, k));
      CHECK(fund(Family::B, n, n) == Natural(1) << n);
      CHECK(fund(Family::B, n, n, 2) == oracle::binomial(2 * n + 1, n));
      CHECK(fund(Family::B, n, 1, 2) == oracle::binomial(2 * n + 2, 2) - 1);
    }
    if (n >= 3) {
      for (std::uint32_t k = 1; k + 2 <= n; ++k) CHECK(fund(Family::D, n, k) == oracle::binomial(2 * n, k));
      CHECK(fund(Family::D, n, n) == Natural(1) << (n - 1));
      CHECK(fund(Family::D, n, n - 1) == Natural(1) << (n - 1));
      CHECK(fund(Family::D, n, 1, 2) == oracle::binomial(2 * n + 1, 2) - 1);
    }
  }
}

TEST_CASE("large A ranks use the compressed product") {
  const std::uint32_t n = 30000;
  CHECK(fund(Family::A, n, 1) == n + 1);
  CHECK(fund(Family::A, n, n) == n + 1);
  CHECK(fund(Family::A, n, 2) == oracle::binomial(n + 1, 2));
  CHECK(fund(Family::A, n, 1, 3) == oracle::binomial(n + 3, 3));
  HighestWeight adj(n);
  adj.set(0, 1);
  adj.set(n - 1, 1);
  CHECK(irrep_dim(make_factor(Family::A, n), adj) == Natural(n) * (n + 2));
}

TEST_CASE("positive roots agree with an independent closure") {
  for (const auto& f : all_factors(8)) {
    CAPTURE(family_name(f.family));
    CAPTURE(f.rank);
    const auto& rs = root_system(f);
    auto expected = oracle::positive_roots(f.family, f.rank);
    auto got = rs.positive_roots;
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
    // |Phi+| = (dim G - rank) / 2
    CHECK(Natural(2 * got.size() + f.rank) == simple_dim(f));
  }
}

TEST_CASE("closed products agree with the root-table product") {
  for (const auto& f : all_factors(8)) {
    std::vector<std::vector<std::uint32_t>> ws;
    weights_up_to(f.rank, f.rank <= 4 ? 3 : 2, ws);
    for (const auto& w : ws) {
      const auto hw = HighestWeight::from_dense(w);
      CAPTURE(family_name(f.family));
      CAPTURE(f.rank);
      CHECK(irrep_dim(f, hw) == weyl_dim_from_roots(f, hw));
    }
  }
}

TEST_CASE("Freudenthal multiplicities sum to the Weyl dimension, rank <= 5") {
  for (const auto& f : all_factors(5)) {
    std::vector<std::vector<std::uint32_t>> ws;
    weights_up_to(f.rank, 3, ws);
    for (const auto& w : ws) {
      CAPTURE(family_name(f.family));
      CAPTURE(f.rank);
      CHECK(irrep_dim(f, HighestWeight::from_dense(w)) == oracle::freudenthal_dim(f.family, f.rank, w));
    }
  }
}

TEST_CASE("duals and diagram automorphisms") {
  const auto a4 = make_factor(Family::A, 4);
  CHECK(dual_weight(a4, HighestWeight{1, 0, 0, 0}) == HighestWeight{0, 0, 0, 1});
  CHECK(dual_weight(a4, HighestWeight{0, 2, 1, 0}) == HighestWeight{0, 1, 2, 0});
  const auto d4 = make_factor(Family::D, 4);
  CHECK(dual_weight(d4, HighestWeight{0, 0, 1, 0}) == HighestWeight{0, 0, 1, 0});
  CHECK(diagram_automorphism(d4, HighestWeight{0, 0, 1, 0}) == HighestWeight{0, 0, 0, 1});
  const auto d5 = make_factor(Family::D, 5);
  CHECK(dual_weight(d5, HighestWeight{0, 0, 0, 1, 0}) == HighestWeight{0, 0, 0, 0, 1});
  const auto e6 = make_factor(Family::E6, 6);
  CHECK(dual_weight(e6, HighestWeight{1, 0, 0, 0, 0, 0}) == HighestWeight{0, 0, 0, 0, 0, 1});
  CHECK(dual_weight(make_factor(Family::C, 3), HighestWeight{1, 0, 0}) == HighestWeight{1, 0, 0});
  CHECK_FALSE(has_diagram_automorphism(make_factor(Family::B, 3)));
  CHECK(has_diagram_automorphism(make_factor(Family::A, 2)));
  CHECK_FALSE(has_diagram_automorphism(make_factor(Family::A, 1)));

  // dual and automorphism preserve dimensions
  for (const auto& f : all_factors(6)) {
    std::vector<std::vector<std::uint32_t>> ws;
    weights_up_to(f.rank, 2, ws);
    for (const auto& w : ws) {
      const auto hw = HighestWeight::from_dense(w);
      CHECK(irrep_dim(f, dual_weight(f, hw)) == irrep_dim(f, hw));
      CHECK(dual_weight(f, dual_weight(f, hw)) == hw);
      CHECK(diagram_automorphism(f, diagram_automorphism(f, hw)) == hw);
    }
  }
}

TEST_CASE("rank validation") {
  CHECK_THROWS_AS(make_factor(Family::A, 0), Error);
  CHECK_THROWS_AS(make_factor(Family::B, 1), Error);
  CHECK_THROWS_AS(make_factor(Family::D, 2), Error);
  CHECK_THROWS_AS(make_factor(Family::E6, 7), Error);
  CHECK_THROWS_AS(irrep_dim(make_factor(Family::A, 2), HighestWeight{1, 0, 0}), Error);
  CHECK(make_factor(Family::C, 1).rank == 1);
}
