#pragma once

// Small random modules for property tests. Ranks and weights stay low so that
// every castling transform of the result is cheap to build.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "phv/lie.hpp"
#include "phv/module.hpp"

namespace testsupport {

inline phv::SimpleFactor random_factor(std::mt19937_64& rng) {
  using phv::Family;
  static const std::vector<phv::SimpleFactor> pool = {
      {Family::A, 1}, {Family::A, 1}, {Family::A, 2}, {Family::A, 2}, {Family::A, 3},
      {Family::A, 4}, {Family::B, 2}, {Family::C, 2}, {Family::C, 3}, {Family::D, 4},
      {Family::G2, 2},
  };
  return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
}

// Mostly zero, otherwise a single fundamental weight, occasionally 2*omega_1.
inline phv::HighestWeight random_weight(std::mt19937_64& rng, const phv::SimpleFactor& f) {
  std::uniform_int_distribution<int> pick(0, 9);
  const int r = pick(rng);
  if (r < 4) return phv::HighestWeight(f.rank);
  if (r == 9) return phv::HighestWeight::fundamental(f.rank, 0, 2);
  const std::uint32_t top = f.family == phv::Family::A ? f.rank - 1 : std::min<std::uint32_t>(f.rank - 1, 1);
  const auto index = std::uniform_int_distribution<std::uint32_t>(0, top)(rng);
  return phv::HighestWeight::fundamental(f.rank, index);
}

inline phv::Module random_module(std::mt19937_64& rng, std::uint32_t max_factors = 2,
                                 std::size_t max_summands = 3) {
  phv::Module m;
  m.group.torus_dim = std::uniform_int_distribution<std::uint32_t>(0, 3)(rng);
  const auto nf = std::uniform_int_distribution<std::uint32_t>(0, max_factors)(rng);
  for (std::uint32_t i = 0; i < nf; ++i) m.group.factors.push_back(random_factor(rng));
  const auto ns = std::uniform_int_distribution<std::size_t>(1, max_summands)(rng);
  for (std::size_t s = 0; s < ns; ++s) {
    phv::Summand summand;
    for (const auto& f : m.group.factors) summand.weights.push_back(random_weight(rng, f));
    for (std::uint32_t slot = 0; slot < m.group.torus_dim; ++slot) {
      if (rng() % 2 == 0) summand.scalar_slots.push_back(slot);
    }
    m.summands.push_back(std::move(summand));
  }
  return m;
}

}  // namespace testsupport
