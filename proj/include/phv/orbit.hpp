#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "phv/castling.hpp"
#include "phv/module.hpp"

namespace phv {

struct OrbitMember {
  Module module;  // canonical form
  Natural dim;
  /// One shortest witnessing path from the canonical seed. Each move applies
  /// to the canonical form reached by the moves before it.
  std::vector<CastlingMove> path;
  bool operator==(const OrbitMember&) const = default;
};

struct OrbitResult {
  std::vector<OrbitMember> members;  // sorted by (dim, module)
  std::size_t nodes_visited = 0;     // candidate children examined
  bool truncated_steps = false;      // unexplored modules beyond max_steps
  bool truncated_dim = false;        // some child exceeded max_dim
  bool truncated_nodes = false;      // max_nodes reached

  bool truncated() const { return truncated_steps || truncated_dim || truncated_nodes; }
  bool operator==(const OrbitResult&) const = default;
};

/// Breadth-first closure of `seed` under castling, keyed by canonical form.
/// Each BFS level is expanded in parallel (OpenMP); the merge is ordered, so
/// the result does not depend on the thread schedule. Throws phv::Error if the
/// seed itself exceeds max_dim.
OrbitResult enumerate_orbit(const Module& seed, const OrbitLimits& limits);

/// Single-threaded FIFO reference for enumerate_orbit; produces an identical
/// result.
OrbitResult enumerate_orbit_serial(const Module& seed, const OrbitLimits& limits);

struct EquivalenceResult {
  bool found = false;                // definitive when true
  std::vector<CastlingMove> path;    // canonical(a) -> canonical(b)
  bool truncated = false;
};

/// Bounded bidirectional search; a negative answer only means "not found
/// within limits". max_steps bounds the total path length.
EquivalenceResult castling_equivalent(const Module& a, const Module& b, const OrbitLimits& limits);

/// A move on canonical_form(castle(parent, move)) leading back to
/// canonical_form(parent).
std::optional<CastlingMove> inverse_move(const Module& parent, const CastlingMove& move);

}  // namespace phv
