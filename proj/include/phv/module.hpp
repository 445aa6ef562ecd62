#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "phv/lie.hpp"
#include "phv/natural.hpp"

namespace phv {

/// GL_1^k x S_1 x ... x S_r. GL_n is always written as one torus slot plus
/// A_{n-1}.
struct GroupShape {
  std::uint32_t torus_dim = 0;
  std::vector<SimpleFactor> factors;

  auto operator<=>(const GroupShape&) const = default;
};

/// One irreducible summand: a highest weight per simple factor and the torus
/// slots (0-based) acting on it by scalar multiplication.
struct Summand {
  std::vector<HighestWeight> weights;
  std::vector<std::uint32_t> scalar_slots;  // sorted, unique

  auto operator<=>(const Summand&) const = default;
};

/// A rational module (G, rho, V) of a reductive group, V = sum of summands.
struct Module {
  GroupShape group;
  std::vector<Summand> summands;

  auto operator<=>(const Module&) const = default;
};

/// Throws phv::Error unless every invariant of the value types holds.
void validate(const Module& module);

Natural summand_dim(const Module& module, std::size_t summand);
Natural module_dim(const Module& module);
Natural group_dim(const GroupShape& group);
inline Natural group_dim(const Module& module) { return group_dim(module.group); }

/// dim G == dim V with a nontrivial character group (at least one GL_1).
/// Prehomogeneity itself is not decided.
bool is_etale_candidate(const Module& module);

inline bool is_irreducible(const Module& module) { return module.summands.size() == 1; }

/// Applies the diagram automorphism of factor `factor` to its weight in every
/// summand. The result is equivalent to the input.
Module dualize_factor(const Module& module, std::size_t factor);

/// Largest number of simple factors canonical_form accepts.
inline constexpr std::size_t kMaxCanonicalFactors = 16;

/// Deterministic representative of the equivalence class generated by
/// permuting factors, permuting summands, dualizing single factors (globally)
/// and renumbering torus slots. Dualizing a single summand is not a generator.
///
/// The representative is the lexicographic minimum of an encoding in which
/// each summand records its weights, the number of torus slots private to it
/// and labels for the slots it shares with other summands; slots with the same
/// summand set are interchangeable and collapsed to one labelled class.
Module canonical_form(const Module& module);

bool equivalent(const Module& a, const Module& b);

/// Drops simple factors that act trivially on every summand.
Module drop_trivial_factors(const Module& module);

/// The module (G, rho_s, V_s) of one summand, keeping the whole group.
Module summand_module(const Module& module, std::size_t summand);

}  // namespace phv
