#include "phv/catalog.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "phv/error.hpp"
#include "phv/expression.hpp"

namespace phv {

namespace {

constexpr std::array<std::pair<Flag, std::string_view>, 5> kFlagNames{{
    {kEtale, "etale"},
    {kRegular, "regular"},
    {kNonregular, "nonregular"},
    {kReduced, "reduced"},
    {kIrreducible, "irreducible"},
}};

std::string repeat(const std::string& term, std::uint64_t count) {
  std::string out;
  for (std::uint64_t i = 0; i < count; ++i) out += (i ? " + " : "") + term;
  return out;
}

std::string sl(std::uint64_t n) { return "SL" + std::to_string(n); }

Module fixed(const std::string& text) { return parse_module(text); }

std::vector<Params> range_1d(std::uint64_t lo, std::uint64_t hi) {
  std::vector<Params> out;
  for (auto n = lo; n <= hi; ++n) out.push_back({n});
  return out;
}

struct NonregularInstance {
  std::string group;   // simple group L
  std::string weight;  // rho
  std::uint64_t n;     // dim rho
};

// Representative (L, rho) for SK III-1; L != SL_n and n >= 3.
const std::vector<NonregularInstance>& sk3_1_instances() {
  static const std::vector<NonregularInstance> v{
      {"Sp2", "w1", 4},
      {"SL3", "2w1", 6},
      {"G2", "w1", 7},
      {"Spin7", "w3", 8},
  };
  return v;
}

CatalogEntry fixed_entry(std::string id, const std::string& text, FlagSet flags,
                         std::string source) {
  CatalogEntry e;
  e.id = std::move(id);
  e.range = "";
  e.in_range = [](const Params& p) { return p.empty(); };
  const Module m = fixed(text);
  e.build = [m](const Params&) { return m; };
  e.samples = {{}};
  e.flags = flags;
  e.source = std::move(source);
  return e;
}

std::vector<CatalogEntry> build_entries() {
  std::vector<CatalogEntry> out;
  const FlagSet sk1 = kEtale | kRegular | kReduced | kIrreducible;
  const FlagSet etale = kEtale | kRegular;
  const FlagSet sk3 = kNonregular | kReduced | kIrreducible;

  out.push_back(fixed_entry("SK I-4", "GL1 x SL2 : 3w1", sk1,
                            "irreducible etale list: (GL_2, 3w_1, Sym^3 C^2)"));
  out.push_back(fixed_entry("SK I-8", "GL1 x SL3 x SL2 : (2w1 # w1)", sk1,
                            "irreducible etale list: (SL_3 x GL_2, 2w_1 (x) w_1, Sym^2 C^3 (x) C^2)"));
  out.push_back(fixed_entry("SK I-11", "GL1 x SL5 x SL4 : (w2 # w1)", sk1,
                            "irreducible etale list: (SL_5 x GL_4, w_2 (x) w_1, L^2 C^5 (x) C^4)"));

  {
    CatalogEntry e;
    e.id = "Ks A-2";
    e.param_names = {"n"};
    e.range = "n >= 2";
    e.in_range = [](const Params& p) { return p.size() == 1 && p[0] >= 2; };
    e.build = [](const Params& p) { return fixed("GL1 x " + sl(p[0]) + " : " + repeat("w1", p[0])); };
    e.default_params = {2};
    e.samples = range_1d(2, 12);
    e.flags = etale;
    e.source = "one-simple etale list: (GL_1 x SL_n, mu (x) w_1^{+n}, (C^n)^{+n})";
    e.aliases.push_back({"Ks A-20(n=1)", "Ks A-2", {2}, std::nullopt});
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "Ks A-3";
    e.param_names = {"n"};
    e.range = "n >= 2";
    e.in_range = [](const Params& p) { return p.size() == 1 && p[0] >= 2; };
    e.build = [](const Params& p) {
      return fixed("GL1^" + std::to_string(p[0] + 1) + " x " + sl(p[0]) + " : " +
                   repeat("w1", p[0] + 1));
    };
    e.default_params = {2};
    e.samples = range_1d(2, 12);
    e.flags = etale;
    e.source = "one-simple etale list: (GL_1^{n+1} x SL_n, w_1^{+n+1}, (C^n)^{+n+1})";
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "Ks A-4";
    e.param_names = {"n"};
    e.range = "n >= 2";
    e.in_range = [](const Params& p) { return p.size() == 1 && p[0] >= 2; };
    e.build = [](const Params& p) {
      return fixed("GL1^" + std::to_string(p[0] + 1) + " x " + sl(p[0]) + " : " +
                   repeat("w1", p[0]) + " + w1*");
    };
    e.default_params = {2};
    e.samples = range_1d(2, 12);
    e.flags = etale;
    e.source = "one-simple etale list: (GL_1^{n+1} x SL_n, w_1^{+n} + w_1^*, (C^n)^{+n} + C^{n*})";
    e.aliases.push_back({"Ks A-1(n=2)", "Ks A-4", {2}, std::nullopt});
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "Ks A-11";
    e.param_names = {"n"};
    e.range = "n = 2";
    e.in_range = [](const Params& p) { return p.size() == 1 && p[0] == 2; };
    e.build = [](const Params&) { return fixed("GL1^2 x SL2 : 2w1 + w1"); };
    e.default_params = {2};
    e.samples = {{2}};
    e.flags = etale;
    e.source = "one-simple etale list: (GL_1^2 x SL_2, 2w_1 + w_1, Sym^2 C^2 + C^2)";
    e.aliases.push_back({"Ks A-12(n=2)", "Ks A-11", {2}, std::nullopt});
    out.push_back(std::move(e));
  }

  out.push_back(fixed_entry("KI I-1", "GL1^2 x SL4 x SL2 : (w2 # w1) + (w1 # w1)", etale,
                            "two-simple etale list (type I): (GL_1^2 x SL_4 x SL_2, (w_2 (x) w_1) + (w_1 (x) w_1))"));
  out.push_back(fixed_entry("KI I-2", "GL1^2 x SL4 x SL2 : (w2 # w1) + (w1 # 1) + (w1 # 1)",
                            etale,
                            "two-simple etale list (type I): (GL_1^2 x SL_4 x SL_2, (w_2 (x) w_1) + (w_1 (x) 1) + "
                            "(w_1 (x) 1))"));
  {
    auto e = fixed_entry("KI I-6", "GL1^3 x SL5 x SL2 : (w2 # w1) + (w1* # 1) + (w1* # 1)", etale,
                         "two-simple etale list (type I): (GL_1^3 x SL_5 x SL_2, (w_2 (x) w_1) + (w_1^* (x) 1) + "
                         "(w_1^(*) (x) 1))");
    e.aliases.push_back({"KI I-6(w1)", "KI I-6", {},
                         fixed("GL1^3 x SL5 x SL2 : (w2 # w1) + (w1* # 1) + (w1 # 1)")});
    out.push_back(std::move(e));
  }
  out.push_back(fixed_entry("KI I-16", "GL1^2 x Sp2 x SL3 : (w1 # w1) + (w2 # 1) + (1 # w1*)",
                            etale,
                            "two-simple etale list (type I): (GL_1^2 x Sp_2 x SL_3, (w_1 (x) w_1) + (w_2 (x) 1) + "
                            "(1 (x) w_1^*))"));
  out.push_back(fixed_entry("KI I-18", "GL1^3 x Sp2 x SL2 : (w2 # w1) + (w1 # 1) + (1 # w1)",
                            etale,
                            "two-simple etale list (type I): (GL_1^3 x Sp_2 x SL_2, (w_2 (x) w_1) + (w_1 (x) 1) + "
                            "(1 (x) w_1))"));
  out.push_back(fixed_entry("KI I-19", "GL1^3 x Sp2 x SL4 : (w2 # w1) + (w1 # 1) + (1 # w1*)",
                            etale,
                            "two-simple etale list (type I): (GL_1^3 x Sp_2 x SL_4, (w_2 (x) w_1) + (w_1 (x) 1) + "
                            "(1 (x) w_1^*))"));

  {
    CatalogEntry e;
    e.id = "SK III-1";
    e.param_names = {"case", "m"};
    e.range = "case in 1..4 selects (L, rho) from {(Sp2, w1), (SL3, 2w1), (G2, w1), (Spin7, spin)}; "
              "m > dim rho";
    e.in_range = [](const Params& p) {
      return p.size() == 2 && p[0] >= 1 && p[0] <= sk3_1_instances().size() &&
             p[1] > sk3_1_instances()[p[0] - 1].n;
    };
    e.build = [](const Params& p) {
      const auto& inst = sk3_1_instances()[p[0] - 1];
      return fixed("GL1 x " + inst.group + " x " + sl(p[1]) + " : (" + inst.weight + " # w1)");
    };
    e.default_params = {1, 5};
    for (std::uint64_t c = 1; c <= sk3_1_instances().size(); ++c) {
      for (auto m = sk3_1_instances()[c - 1].n + 1; m <= 10; ++m) e.samples.push_back({c, m});
    }
    e.flags = sk3;
    e.source = "non-regular irreducible families: (L x GL_m, rho (x) w_1, V^n (x) C^m), m > n >= 3, (L, rho) != (SL_n, w_1)";
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "SK III-2";
    e.param_names = {"n", "m"};
    e.range = "m/2 >= n >= 1";
    e.in_range = [](const Params& p) { return p.size() == 2 && p[0] >= 1 && p[1] >= 2 * p[0]; };
    e.build = [](const Params& p) {
      if (p[0] == 1) return fixed("GL1 x " + sl(p[1]) + " : w1");
      return fixed("GL1 x " + sl(p[0]) + " x " + sl(p[1]) + " : (w1 # w1)");
    };
    e.default_params = {1, 2};
    for (std::uint64_t n = 1; 2 * n <= 10; ++n) {
      for (auto m = 2 * n; m <= 10; ++m) e.samples.push_back({n, m});
    }
    e.flags = sk3;
    e.source = "non-regular irreducible families: (SL_n x GL_m, w_1 (x) w_1, C^n (x) C^m), m/2 >= n >= 1";
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "SK III-3";
    e.param_names = {"n"};
    e.range = "n >= 2";
    e.in_range = [](const Params& p) { return p.size() == 1 && p[0] >= 2; };
    e.build = [](const Params& p) { return fixed("GL1 x " + sl(2 * p[0] + 1) + " : w2"); };
    e.default_params = {2};
    e.samples = range_1d(2, 10);
    e.flags = sk3;
    e.source = "non-regular irreducible families: (GL_{2n+1}, w_2, L^2 C^{2n+1}), n >= 2";
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "SK III-4";
    e.param_names = {"n"};
    e.range = "n >= 2";
    e.in_range = [](const Params& p) { return p.size() == 1 && p[0] >= 2; };
    e.build = [](const Params& p) {
      return fixed("GL1 x SL2 x " + sl(2 * p[0] + 1) + " : (w1 # w2)");
    };
    e.default_params = {2};
    e.samples = range_1d(2, 10);
    e.flags = sk3;
    e.source = "non-regular irreducible families: (GL_2 x SL_{2n+1}, w_1 (x) w_2, C^2 (x) L^2 C^{2n+1}), n >= 2";
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "SK III-5";
    e.param_names = {"n", "m"};
    e.range = "n >= 2m+1 >= 1, n >= 2";
    e.in_range = [](const Params& p) {
      return p.size() == 2 && p[0] >= 2 && p[0] >= 2 * p[1] + 1;
    };
    e.build = [](const Params& p) {
      const std::string sp = "Sp" + std::to_string(p[0]);
      if (p[1] == 0) return fixed("GL1 x " + sp + " : w1");
      return fixed("GL1 x " + sp + " x " + sl(2 * p[1] + 1) + " : (w1 # w1)");
    };
    e.default_params = {3, 1};
    for (std::uint64_t m = 0; 2 * m + 1 <= 10; ++m) {
      for (auto n = std::max<std::uint64_t>(2, 2 * m + 1); n <= 10; ++n) e.samples.push_back({n, m});
    }
    e.flags = sk3;
    e.source = "non-regular irreducible families: (Sp_n x GL_{2m+1}, w_1 (x) w_1, C^{2n} (x) C^{2m+1}), n > 2m+1 >= 1";
    out.push_back(std::move(e));
  }
  out.push_back(fixed_entry("SK III-6", "GL1 x Spin10 : w5", sk3,
                            "non-regular irreducible families: (GL_1 x Spin_10, mu (x) halfspin, C (x) V^16)"));
  return out;
}

// "Ks A-1(n=2)" -> ("Ks A-1", {2}); ids without parentheses give no params.
std::pair<std::string, std::optional<Params>> split_label(std::string_view label) {
  const auto open = label.find('(');
  if (open == std::string_view::npos || label.back() != ')') return {std::string(label), std::nullopt};
  Params params;
  std::string inner(label.substr(open + 1, label.size() - open - 2));
  std::stringstream ss(inner);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    const auto digits = eq == std::string::npos ? item : item.substr(eq + 1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit)) {
      return {std::string(label), std::nullopt};
    }
    params.push_back(std::stoull(digits));
  }
  return {std::string(label.substr(0, open)), params};
}

std::vector<Params> family_guesses(const CatalogEntry& e, const Module& m) {
  std::vector<std::uint64_t> sl_sizes;
  std::vector<std::uint64_t> sp_ranks;
  for (const auto& f : m.group.factors) {
    if (f.family == Family::A) sl_sizes.push_back(std::uint64_t{f.rank} + 1);
    if (f.family == Family::C) sp_ranks.push_back(f.rank);
  }
  std::vector<Params> out;
  if (e.param_names.empty()) return {{}};
  if (e.id == "SK III-1") {
    for (std::uint64_t c = 1; c <= sk3_1_instances().size(); ++c) {
      for (auto s : sl_sizes) out.push_back({c, s});
    }
  } else if (e.id == "SK III-2") {
    for (auto s : sl_sizes) {
      out.push_back({1, s});
      for (auto t : sl_sizes) out.push_back({s, t});
    }
  } else if (e.id == "SK III-5") {
    for (auto r : sp_ranks) {
      out.push_back({r, 0});
      for (auto s : sl_sizes) {
        if (s % 2 == 1) out.push_back({r, (s - 1) / 2});
      }
    }
  } else if (e.param_names.size() == 1) {
    for (auto s : sl_sizes) {
      if (s % 2 == 1) out.push_back({(s - 1) / 2});
    }
  }
  return out;
}

std::optional<FamilyMatch> match_in(const Module& module, const Catalog& cat, FlagSet flags,
                                    bool use_samples) {
  if (!is_irreducible(module)) throw Error("family matching needs an irreducible module");
  const Module target = canonical_form(effective_module(module));
  for (const auto* e : cat.list(flags)) {
    const auto candidates = use_samples ? e->samples : family_guesses(*e, target);
    for (const auto& p : candidates) {
      if (!e->in_range(p)) continue;
      const Module inst = e->build(p);
      if (!is_irreducible(inst)) continue;
      if (canonical_form(effective_module(inst)) == target) return FamilyMatch{e->id, p, e->label(p)};
    }
  }
  return std::nullopt;
}

}  // namespace

std::string format_flags(FlagSet flags) {
  std::string out;
  for (const auto& [flag, name] : kFlagNames) {
    if (flags & flag) {
      if (!out.empty()) out += ',';
      out += name;
    }
  }
  return out;
}

FlagSet parse_flags(std::string_view text) {
  FlagSet out = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const auto name = text.substr(start, end - start);
    if (!name.empty()) {
      auto it = std::find_if(kFlagNames.begin(), kFlagNames.end(),
                             [&](const auto& f) { return f.second == name; });
      if (it == kFlagNames.end()) throw Error("unknown catalog flag '" + std::string(name) + "'");
      out |= it->first;
    }
    start = end + 1;
  }
  return out;
}

std::string CatalogEntry::label(const Params& params) const {
  if (param_names.empty()) return id;
  std::string out = id + "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ',';
    out += (i < param_names.size() ? param_names[i] : "p") + "=" + std::to_string(params[i]);
  }
  return out + ")";
}

Module CatalogEntry::instantiate(const Params& params) const {
  if (!in_range(params)) {
    throw Error("parameters out of range for " + label(params) +
                (range.empty() ? std::string(" (no parameters)") : " (" + range + ")"));
  }
  return build(params);
}

std::vector<const CatalogEntry*> Catalog::list(FlagSet filter) const {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : entries_) {
    if (e.has(filter)) out.push_back(&e);
  }
  return out;
}

const CatalogEntry* Catalog::find(std::string_view id) const {
  for (const auto& e : entries_) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

Module Catalog::instantiate(std::string_view id, const Params& params) const {
  auto [base, embedded] = split_label(id);
  const Params& p = embedded ? *embedded : params;
  if (const auto* e = find(base)) {
    // a bare id stands for the default instance
    if (p.empty() && !e->param_names.empty()) return e->instantiate(e->default_params);
    return e->instantiate(p);
  }
  for (const auto& e : entries_) {
    for (const auto& a : e.aliases) {
      const auto alias_base = split_label(a.id).first;
      if (a.id != id && alias_base != base) continue;
      if (a.variant) return *a.variant;
      return find(a.target)->instantiate(a.params);
    }
  }
  throw Error("unknown catalog id '" + std::string(id) + "'");
}

const Catalog& catalog() {
  static const Catalog instance(build_entries());
  return instance;
}

std::vector<const CatalogEntry*> catalog_list(FlagSet filter) { return catalog().list(filter); }

Module catalog_instantiate(std::string_view id, const Params& params) {
  return catalog().instantiate(id, params);
}

std::string export_line(const CatalogEntry& entry) {
  return entry.label(entry.default_params) + "\t" +
         format_module(entry.instantiate(entry.default_params)) + "\t" + format_flags(entry.flags) +
         "\t" + entry.source;
}

Module effective_module(const Module& module) {
  Module out = drop_trivial_factors(module);
  if (!is_irreducible(out)) return out;
  auto& slots = out.summands.front().scalar_slots;
  out.group.torus_dim = slots.empty() ? 0 : 1;
  slots = slots.empty() ? std::vector<std::uint32_t>{} : std::vector<std::uint32_t>{0};
  return out;
}

std::optional<FamilyMatch> match_nonregular_family(const Module& module, const Catalog& cat) {
  return match_in(module, cat, kNonregular, false);
}

std::optional<FamilyMatch> match_regular_entry(const Module& module, const Catalog& cat) {
  return match_in(module, cat, kRegular, true);
}

}  // namespace phv
