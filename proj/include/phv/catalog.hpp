#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "phv/module.hpp"

namespace phv {

enum Flag : std::uint8_t {
  kEtale = 1U << 0,
  kRegular = 1U << 1,
  kNonregular = 1U << 2,
  kReduced = 1U << 3,
  kIrreducible = 1U << 4,
};
using FlagSet = std::uint8_t;

/// "etale,regular,reduced" (fixed order); empty set gives "".
std::string format_flags(FlagSet flags);
/// Inverse of format_flags; throws phv::Error on an unknown name.
FlagSet parse_flags(std::string_view text);

using Params = std::vector<std::uint64_t>;

/// A table entry noted as equivalent to another entry. When `variant` is set
/// the alias denotes a different module (an orientation variant), otherwise
/// it resolves to the target entry at `params`.
struct CatalogAlias {
  std::string id;          // e.g. "Ks A-1(n=2)"
  std::string target;      // e.g. "Ks A-4"
  Params params;
  std::optional<Module> variant;
};

struct CatalogEntry {
  std::string id;                        // "SK I-4", "Ks A-2", ...
  std::vector<std::string> param_names;  // empty for fixed modules
  std::string range;                     // human-readable parameter range
  std::function<bool(const Params&)> in_range;
  std::function<Module(const Params&)> build;
  Params default_params;
  std::vector<Params> samples;  // parameters exercised by the verifiers
  FlagSet flags = 0;
  std::string source;
  std::vector<CatalogAlias> aliases;

  bool has(FlagSet f) const { return (flags & f) == f; }
  /// "Ks A-2(n=3)"; plain id for fixed entries.
  std::string label(const Params& params) const;
  /// Checks the range, then builds. Throws phv::Error when out of range.
  Module instantiate(const Params& params) const;
};

class Catalog {
 public:
  explicit Catalog(std::vector<CatalogEntry> entries) : entries_(std::move(entries)) {}

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  std::vector<CatalogEntry>& entries() { return entries_; }

  /// Entries whose flags contain every flag of `filter`, in table order.
  std::vector<const CatalogEntry*> list(FlagSet filter = 0) const;
  const CatalogEntry* find(std::string_view id) const;

  /// Resolves entry ids and alias ids ("Ks A-1(n=2)" or "Ks A-1"). A bare id
  /// of a parametrized entry gives its default instance. Throws phv::Error for
  /// unknown ids or out-of-range parameters.
  Module instantiate(std::string_view id, const Params& params = {}) const;

 private:
  std::vector<CatalogEntry> entries_;
};

/// The embedded tables: irreducible étale (SK I-4, I-8, I-11), one-simple
/// étale (Ks A-2, A-3, A-4, A-11), two-simple étale (KI I-1, I-2, I-6, I-16,
/// I-18, I-19) and the non-regular families SK III-1..6.
const Catalog& catalog();

/// Shorthand for catalog().list(filter) / catalog().instantiate(id, params).
std::vector<const CatalogEntry*> catalog_list(FlagSet filter = 0);
Module catalog_instantiate(std::string_view id, const Params& params = {});

/// One line per entry at its default parameters:
/// id <TAB> module expression <TAB> flags <TAB> source.
std::string export_line(const CatalogEntry& entry);

struct FamilyMatch {
  std::string id;
  Params params;
  std::string label;
  bool operator==(const FamilyMatch&) const = default;
};

/// The module reduced to its effective action: trivially acting simple
/// factors are dropped and, for an irreducible module, all acting torus slots
/// are merged into one (they have the same image).
Module effective_module(const Module& module);

/// The SK III family whose instance is equivalent to the effective form of an
/// irreducible `module`. SK III-1 only matches its stored instances. Throws
/// phv::Error for a reducible module.
std::optional<FamilyMatch> match_nonregular_family(const Module& module,
                                                   const Catalog& cat = catalog());

/// An irreducible regular entry (sampled parameters) equivalent to the
/// effective form of `module`.
std::optional<FamilyMatch> match_regular_entry(const Module& module,
                                               const Catalog& cat = catalog());

}  // namespace phv
