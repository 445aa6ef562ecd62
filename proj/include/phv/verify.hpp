#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "phv/catalog.hpp"
#include "phv/castling.hpp"
#include "phv/module.hpp"

namespace phv {

enum class Verdict : std::uint8_t { pass, fail, inconclusive };
std::string verdict_name(Verdict verdict);

struct Violation {
  std::string code;  // SHAPE, GCD-PAIR, GCD-N-EXTRA, GCD-DRIFT, EQUAL-FACTORS,
                     // DIM-MISMATCH, NOT-REDUCED, UNMATCHED-COMPONENT
  std::string location;
  std::string detail;
  bool operator==(const Violation&) const = default;
};

struct ReportStats {
  std::size_t nodes_visited = 0;
  std::size_t members = 0;  // modules checked
  bool truncated_steps = false;
  bool truncated_dim = false;
  bool truncated_nodes = false;
  bool operator==(const ReportStats&) const = default;
};

struct Report {
  std::string subject;
  Verdict verdict = Verdict::pass;
  std::vector<Violation> violations;
  ReportStats stats;
  std::vector<std::string> notes;

  void add(std::string code, std::string location, std::string detail);
  /// pass iff no violations and nothing left undecided; a max_nodes cut or an
  /// unclassifiable component makes the verdict inconclusive.
  void finalize(bool undecided = false);
  bool passed() const { return verdict == Verdict::pass; }
};

std::string to_text(const Report& report);
std::string to_json(const Report& report, int indent = 2);

/// Shape data of an irreducible module in the form L x SL_{m_1} x ... x
/// SL_{m_k}: W are the A-factors acting by omega_1 or its dual, L the torus
/// plus the remaining factor, n = dim of L's representation.
struct TheoremAShape {
  bool lemma_mode = false;  // every simple factor lies in W
  Natural n = 1;
  std::vector<Natural> m;                 // sizes of the W factors
  std::optional<std::size_t> exceptional;  // i_0 (0-based within W)
  Natural exceptional_gcd = 1;             // gcd(n, m_{i_0}), 1 if none
};

/// gcd conditions on one irreducible module (trivially acting factors are
/// dropped first). Throws phv::Error for a reducible module.
Report theorem_A_check(const Module& module);
/// The shape analysis behind theorem_A_check; nullopt for a SHAPE violation.
std::optional<TheoremAShape> theorem_A_shape(const Module& module);

/// gcd invariants along a bounded orbit: every member passes theorem_A_check and
/// carries the seed's exceptional gcd, checked on every recorded path. For a
/// one-simple seed no exceptional index may appear. Throws phv::Error unless
/// the seed is irreducible of the form L x SL_m (at most one non-W factor and
/// at most one W factor).
Report chain_invariant_check(const Module& seed, const OrbitLimits& limits);

/// Seeds of the Theorem B scan: SK I-4, I-8, I-11 and the listed SK III
/// instances.
std::vector<std::pair<std::string, Module>> theorem_B_seeds();

/// EQUAL-FACTORS on any orbit member with two SL_m of the same m >= 2 or at
/// least two simple factors that are all identical; SHAPE if a seed with a
/// non-A factor reaches a group whose simple factors are all of type A.
Report theorem_B_scan(const OrbitLimits& limits);
Report theorem_B_scan(const std::vector<std::pair<std::string, Module>>& seeds,
                      const OrbitLimits& limits);

/// Étale identities (sampled parameters), torus, regular flag, summand
/// bookkeeping dim G - dim V_s = dim of the other summands, reducedness of
/// reduced-flagged entries, and A-type semisimple part for Ks entries.
Report verify_catalog(const Catalog& cat = catalog());

/// Proxy for the decomposition theorem: every irreducible component of every
/// proper submodule, reduced, should match a non-regular family. Throws
/// phv::Error unless the module is an étale candidate with one torus slot.
Report baues_decomposition_check(const Module& module, const OrbitLimits& limits,
                                 const Catalog& cat = catalog());

}  // namespace phv
