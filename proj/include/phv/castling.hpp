#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "phv/module.hpp"
#include "phv/natural.hpp"

namespace phv {

enum class MoveKind : std::uint8_t { castle, promote };

/// One applicable castling transform.
///
/// castle: factor `factor` is A_{n-1} acting by omega_1 (or uniformly by its
/// dual) on exactly `summands`; `m` is the dimension of those summands with
/// that factor stripped. promote: a new SL_{m-1} is attached to `summands`,
/// whose total dimension is `m`; n = 1. In both cases m > n >= 1.
struct CastlingMove {
  MoveKind kind = MoveKind::castle;
  std::size_t factor = 0;
  std::vector<std::size_t> summands;  // sorted, 0-based
  std::uint64_t n = 1;
  Natural m = 0;

  bool operator==(const CastlingMove&) const = default;
};

/// Which summand subsets are offered for promotion. Castle moves have a forced
/// summand set and are always offered.
enum class SubsetPolicy : std::uint8_t { singletons_and_full, all_subsets };

struct OrbitLimits {
  std::uint32_t max_steps = 5;
  Natural max_dim = 1000000000;
  std::size_t max_nodes = 200000;
  SubsetPolicy subset_policy = SubsetPolicy::singletons_and_full;
};

/// Largest summand count for which all-subsets promotion is enumerated.
inline constexpr std::size_t kMaxSubsetSummands = 20;

/// Castle moves ordered by factor index, then promotions ordered by subset
/// (singletons ascending, then larger subsets in lexicographic order).
std::vector<CastlingMove> castling_moves(const Module& module,
                                         SubsetPolicy policy = SubsetPolicy::singletons_and_full);

/// Raw result of a transform before canonicalization. `new_factor` is the
/// index of the created or resized A-factor, absent when the factor vanished
/// (m - n = 1).
struct CastleResult {
  Module module;
  std::optional<std::size_t> new_factor;
};

/// Applies the transform with the complement summands dualized, i.e.
/// (sigma + rho (x) omega_1) -> (sigma^* + rho (x) omega_1). Throws phv::Error if
/// the move is not applicable to `module`.
CastleResult apply_castling(const Module& module, const CastlingMove& move);

/// canonical_form(apply_castling(module, move).module).
Module castle(const Module& module, const CastlingMove& move);

/// module_dim after the move, without building the module.
Natural dim_after(const Module& module, const CastlingMove& move);

/// No castling transform strictly lowers module_dim.
bool is_reduced(const Module& module);

/// Greedy descent: applies the first dimension-lowering move until reduced.
/// Returns a canonical form.
Module reduce(const Module& module);

/// Human-readable move description with 1-based indices.
std::string describe(const CastlingMove& move);

}  // namespace phv
