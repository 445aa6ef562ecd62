#include "phv/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "phv/error.hpp"
#include "phv/expression.hpp"
#include "phv/orbit.hpp"

namespace phv {

namespace {

bool acts_by_omega1(const SimpleFactor& f, const HighestWeight& w) {
  if (f.family != Family::A || w.terms().size() != 1 || w.terms().front().coeff != 1) return false;
  const auto index = w.terms().front().index;
  return index == 0 || index == f.rank - 1;
}

std::string w_pair(std::size_t i, std::size_t j) {
  return "W(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

void merge_stats(ReportStats& into, const OrbitResult& orbit) {
  into.nodes_visited += orbit.nodes_visited;
  into.members += orbit.members.size();
  into.truncated_steps = into.truncated_steps || orbit.truncated_steps;
  into.truncated_dim = into.truncated_dim || orbit.truncated_dim;
  into.truncated_nodes = into.truncated_nodes || orbit.truncated_nodes;
}

// Theorem A conditions on an analysed shape; violations go to `report` with
// `where` as location prefix.
void check_gcds(const TheoremAShape& shape, Report& report, const std::string& where) {
  const auto k = shape.m.size();
  std::vector<std::pair<std::size_t, std::size_t>> bad;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (gcd(shape.m[i], shape.m[j]) != 1) bad.emplace_back(i, j);
    }
  }
  if (shape.lemma_mode) {
    if (bad.size() > 1) {
      for (auto [i, j] : bad) {
        report.add("GCD-PAIR", where + w_pair(i, j),
                   "gcd(" + to_string(shape.m[i]) + ", " + to_string(shape.m[j]) + ") = " +
                       to_string(gcd(shape.m[i], shape.m[j])) + "; more than one pair");
      }
    }
    return;
  }
  for (auto [i, j] : bad) {
    report.add("GCD-PAIR", where + w_pair(i, j),
               "gcd(" + to_string(shape.m[i]) + ", " + to_string(shape.m[j]) + ") = " +
                   to_string(gcd(shape.m[i], shape.m[j])));
  }
  bool seen = false;
  for (std::size_t i = 0; i < k; ++i) {
    const auto g = gcd(shape.n, shape.m[i]);
    if (g == 1) continue;
    if (seen) {
      report.add("GCD-N-EXTRA", where + "W(" + std::to_string(i + 1) + ")",
                 "gcd(n=" + to_string(shape.n) + ", " + to_string(shape.m[i]) + ") = " +
                     to_string(g) + " besides i0 = " + std::to_string(*shape.exceptional + 1));
    }
    seen = true;
  }
}

std::string subset_text(std::uint64_t mask, std::size_t ns) {
  std::string out = "{";
  bool first = true;
  for (std::size_t s = 0; s < ns; ++s) {
    if (!((mask >> s) & 1U)) continue;
    out += (first ? "" : ",") + std::to_string(s + 1);
    first = false;
  }
  return out + "}";
}

}  // namespace

std::string verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

void Report::add(std::string code, std::string location, std::string detail) {
  violations.push_back({std::move(code), std::move(location), std::move(detail)});
}

void Report::finalize(bool undecided) {
  if (!violations.empty()) {
    verdict = Verdict::fail;
  } else if (undecided || stats.truncated_nodes) {
    verdict = Verdict::inconclusive;
  } else {
    verdict = Verdict::pass;
  }
}

std::string to_text(const Report& report) {
  std::ostringstream os;
  os << report.subject << ": " << verdict_name(report.verdict) << " (" << report.violations.size()
     << " violations, " << report.stats.members << " modules, " << report.stats.nodes_visited
     << " nodes";
  if (report.stats.truncated_steps) os << ", truncated by steps";
  if (report.stats.truncated_dim) os << ", truncated by dim";
  if (report.stats.truncated_nodes) os << ", truncated by nodes";
  os << ")\n";
  for (const auto& v : report.violations) {
    os << "  " << v.code << " at " << v.location << ": " << v.detail << "\n";
  }
  for (const auto& n : report.notes) os << "  note: " << n << "\n";
  return os.str();
}

std::string to_json(const Report& report, int indent) {
  nlohmann::json j;
  j["subject"] = report.subject;
  j["verdict"] = verdict_name(report.verdict);
  j["violations"] = nlohmann::json::array();
  for (const auto& v : report.violations) {
    j["violations"].push_back({{"code", v.code}, {"location", v.location}, {"detail", v.detail}});
  }
  j["stats"] = {{"nodes_visited", report.stats.nodes_visited},
                {"members", report.stats.members},
                {"truncated_steps", report.stats.truncated_steps},
                {"truncated_dim", report.stats.truncated_dim},
                {"truncated_nodes", report.stats.truncated_nodes}};
  j["notes"] = report.notes;
  return j.dump(indent);
}

std::optional<TheoremAShape> theorem_A_shape(const Module& module) {
  if (!is_irreducible(module)) throw Error("theorem A check needs an irreducible module");
  const Module m = drop_trivial_factors(module);
  const auto& summand = m.summands.front();
  TheoremAShape shape;
  std::vector<std::size_t> rest;
  for (std::size_t j = 0; j < m.group.factors.size(); ++j) {
    const auto& f = m.group.factors[j];
    if (acts_by_omega1(f, summand.weights[j])) {
      shape.m.push_back(Natural(f.rank) + 1);
    } else {
      rest.push_back(j);
    }
  }
  if (rest.size() > 1) return std::nullopt;
  shape.lemma_mode = rest.empty();
  if (!rest.empty()) shape.n = irrep_dim(m.group.factors[rest[0]], summand.weights[rest[0]]);
  if (!shape.lemma_mode) {
    for (std::size_t i = 0; i < shape.m.size(); ++i) {
      const auto g = gcd(shape.n, shape.m[i]);
      if (g != 1) {
        shape.exceptional = i;
        shape.exceptional_gcd = g;
        break;
      }
    }
  }
  return shape;
}

Report theorem_A_check(const Module& module) {
  Report report;
  report.subject = format_module(module);
  report.stats.members = 1;
  const auto shape = theorem_A_shape(module);
  if (!shape) {
    report.add("SHAPE", "group", "at least two simple factors act by something other than w1");
  } else {
    check_gcds(*shape, report, "");
    std::ostringstream note;
    note << (shape->lemma_mode ? "lemma mode" : "theorem mode") << ", n = " << shape->n << ", m = (";
    for (std::size_t i = 0; i < shape->m.size(); ++i) note << (i ? ", " : "") << shape->m[i];
    note << ")";
    if (shape->exceptional) {
      note << ", i0 = " << *shape->exceptional + 1 << " with gcd " << shape->exceptional_gcd;
    }
    report.notes.push_back(note.str());
  }
  report.finalize();
  return report;
}

Report chain_invariant_check(const Module& seed, const OrbitLimits& limits) {
  const auto seed_shape = theorem_A_shape(seed);
  if (!seed_shape || seed_shape->m.size() > 1) {
    throw Error("chain check needs an irreducible seed of the form L x SL_m with sigma (x) w1");
  }
  const Natural seed_gcd = seed_shape->m.empty() ? Natural(1) : gcd(seed_shape->n, seed_shape->m[0]);
  const bool one_simple = drop_trivial_factors(seed).group.factors.size() == 1;

  Report report;
  report.subject = format_module(seed);
  const auto orbit = enumerate_orbit(seed, limits);
  merge_stats(report.stats, orbit);

  std::set<Module> flagged;
  auto check = [&](const Module& m, const std::string& where) {
    if (flagged.contains(m)) return;
    Report local;
    const auto shape = theorem_A_shape(m);
    if (!shape) {
      local.add("SHAPE", where, "at least two simple factors act by something other than w1");
    } else {
      check_gcds(*shape, local, where + " ");
      if (shape->lemma_mode != seed_shape->lemma_mode) {
        local.add("SHAPE", where, "shape mode differs from the seed");
      } else if (!shape->lemma_mode && shape->exceptional_gcd != seed_gcd) {
        local.add("GCD-DRIFT", where,
                  "exceptional gcd " + to_string(shape->exceptional_gcd) + " != seed gcd " +
                      to_string(seed_gcd));
      }
      if (one_simple) {
        for (std::size_t i = 0; i < shape->m.size(); ++i) {
          if (!shape->lemma_mode && gcd(shape->n, shape->m[i]) != 1) {
            local.add("GCD-N-EXTRA", where + " W(" + std::to_string(i + 1) + ")",
                      "one-simple seed admits no exceptional index");
          }
          for (std::size_t j = i + 1; shape->lemma_mode && j < shape->m.size(); ++j) {
            if (gcd(shape->m[i], shape->m[j]) != 1) {
              local.add("GCD-PAIR", where + " " + w_pair(i, j),
                        "one-simple seed admits no exceptional pair");
            }
          }
        }
      }
    }
    if (!local.violations.empty()) {
      flagged.insert(m);
      for (auto& v : local.violations) report.violations.push_back(std::move(v));
    }
  };

  for (const auto& member : orbit.members) check(member.module, format_module(member.module));
  // Every prefix of every witnessing path, in order.
  for (std::size_t idx = 0; idx < orbit.members.size(); ++idx) {
    const auto& member = orbit.members[idx];
    Module current = canonical_form(seed);
    for (std::size_t step = 0; step < member.path.size(); ++step) {
      current = castle(current, member.path[step]);
      check(current, "path " + std::to_string(idx + 1) + " step " + std::to_string(step + 1));
    }
    if (current != member.module) {
      report.add("SHAPE", "path " + std::to_string(idx + 1), "path does not reach its member");
    }
  }
  report.notes.push_back("seed gcd(n, m) = " + to_string(seed_gcd) +
                         (one_simple ? ", one-simple seed" : ""));
  report.finalize();
  return report;
}

std::vector<std::pair<std::string, Module>> theorem_B_seeds() {
  std::vector<std::pair<std::string, Module>> seeds;
  const auto& cat = catalog();
  for (const char* id : {"SK I-4", "SK I-8", "SK I-11"}) seeds.emplace_back(id, cat.instantiate(id));
  const auto add = [&](const char* id, const Params& p) {
    seeds.emplace_back(cat.find(id)->label(p), cat.instantiate(id, p));
  };
  for (const Params& p : {Params{1, 2}, Params{1, 3}, Params{2, 4}, Params{2, 5}, Params{3, 7}}) {
    add("SK III-2", p);
  }
  add("SK III-3", {2});
  add("SK III-4", {2});
  add("SK III-5", {3, 1});
  add("SK III-6", {});
  return seeds;
}

Report theorem_B_scan(const OrbitLimits& limits) { return theorem_B_scan(theorem_B_seeds(), limits); }

Report theorem_B_scan(const std::vector<std::pair<std::string, Module>>& seeds,
                      const OrbitLimits& limits) {
  Report report;
  report.subject = "theorem-b";
  for (const auto& [label, seed] : seeds) {
    const auto orbit = enumerate_orbit(seed, limits);
    merge_stats(report.stats, orbit);
    const auto& seed_factors = seed.group.factors;
    const bool seed_non_a = std::any_of(seed_factors.begin(), seed_factors.end(),
                                        [](const SimpleFactor& f) { return f.family != Family::A; });
    for (const auto& member : orbit.members) {
      const auto& factors = member.module.group.factors;
      const auto where = label + ": " + format_module(member.module);
      std::map<std::uint32_t, int> a_ranks;
      for (const auto& f : factors) {
        if (f.family == Family::A) ++a_ranks[f.rank];
      }
      for (const auto& [rank, count] : a_ranks) {
        if (count > 1) {
          report.add("EQUAL-FACTORS", where,
                     std::to_string(count) + " factors SL" + std::to_string(std::uint64_t{rank} + 1));
        }
      }
      if (factors.size() >= 2 &&
          std::all_of(factors.begin(), factors.end(),
                      [&](const SimpleFactor& f) { return f == factors.front(); }) &&
          factors.front().family != Family::A) {
        report.add("EQUAL-FACTORS", where, "all simple factors identical");
      }
      const bool all_a = std::all_of(factors.begin(), factors.end(),
                                     [](const SimpleFactor& f) { return f.family == Family::A; });
      if (seed_non_a && all_a) {
        report.add("SHAPE", where, "non-A seed reached a group with only SL factors");
      }
    }
    report.notes.push_back(label + ": " + std::to_string(orbit.members.size()) + " modules" +
                           (orbit.truncated() ? " (truncated)" : ""));
  }
  report.finalize();
  return report;
}

Report verify_catalog(const Catalog& cat) {
  Report report;
  report.subject = "catalog";
  std::size_t etale_entries = 0;

  auto check_etale = [&](const std::string& where, const Module& m) {
    ++report.stats.members;
    const auto g = group_dim(m);
    const auto v = module_dim(m);
    if (g != v) {
      report.add("DIM-MISMATCH", where, "dim G = " + to_string(g) + ", dim V = " + to_string(v));
      return;
    }
    if (m.group.torus_dim < 1) report.add("SHAPE", where, "etale entry without a GL1 factor");
    // dim H = dim G - dim V_s must equal the dimension of the remaining summands.
    for (std::size_t s = 0; s < m.summands.size(); ++s) {
      const auto vs = summand_dim(m, s);
      if (vs > g || g - vs != v - vs) {
        report.add("DIM-MISMATCH", where + " summand " + std::to_string(s + 1),
                   "isotropy bookkeeping dim G - dim V_s = " + to_string(g - vs));
      }
    }
  };

  for (const auto& e : cat.entries()) {
    if (e.has(kRegular) && e.has(kNonregular)) {
      report.add("SHAPE", e.id, "entry flagged both regular and nonregular");
    }
    if (e.has(kEtale)) {
      ++etale_entries;
      if (!e.has(kRegular)) report.add("SHAPE", e.id, "etale entry not flagged regular");
      for (const auto& p : e.samples) {
        if (!e.in_range(p)) continue;
        const auto m = e.build(p);
        check_etale(e.label(p), m);
        if (e.id.rfind("Ks ", 0) == 0) {
          const auto& fs = drop_trivial_factors(m).group.factors;
          if (fs.size() != 1 || fs.front().family != Family::A) {
            report.add("SHAPE", e.label(p), "one-simple etale entry with non-A semisimple part");
          }
        }
      }
      for (const auto& a : e.aliases) {
        check_etale(a.id, a.variant ? *a.variant : cat.instantiate(a.target, a.params));
      }
    }
    if (e.has(kReduced)) {
      for (const auto& p : e.samples) {
        if (!e.in_range(p)) continue;
        if (!is_reduced(e.build(p))) report.add("NOT-REDUCED", e.label(p), "a castling move lowers dim V");
      }
    }
  }
  report.notes.push_back(std::to_string(etale_entries) + " etale entries checked");
  report.finalize();
  return report;
}

Report baues_decomposition_check(const Module& module, const OrbitLimits& limits,
                                 const Catalog& cat) {
  if (module.group.torus_dim != 1) {
    throw Error("decomposition check needs a one-dimensional center (GL1^" +
                std::to_string(module.group.torus_dim) + " given)");
  }
  if (!is_etale_candidate(module)) throw Error("decomposition check needs an etale candidate");
  const std::size_t ns = module.summands.size();
  if (ns > kMaxSubsetSummands) throw Error("too many summands for the decomposition check");

  Report report;
  report.subject = format_module(module);
  bool undecided = false;
  std::map<Module, std::optional<FamilyMatch>> seen;
  const std::uint64_t full = (std::uint64_t{1} << ns) - 1;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    if (report.stats.nodes_visited >= limits.max_nodes) {
      report.stats.truncated_nodes = true;
      break;
    }
    ++report.stats.nodes_visited;
    Module sub;
    sub.group = module.group;
    for (std::size_t s = 0; s < ns; ++s) {
      if ((mask >> s) & 1U) sub.summands.push_back(module.summands[s]);
    }
    const Module reduced = reduce(sub);
    for (std::size_t c = 0; c < reduced.summands.size(); ++c) {
      const Module component = canonical_form(reduce(effective_module(summand_module(reduced, c))));
      auto it = seen.find(component);
      if (it != seen.end()) continue;
      ++report.stats.members;
      auto match = match_nonregular_family(component, cat);
      seen.emplace(component, match);
      const auto where = "submodule " + subset_text(mask, ns) + " component " + std::to_string(c + 1);
      if (match) {
        report.notes.push_back(format_module(component) + " matches " + match->label);
        continue;
      }
      if (auto regular = match_regular_entry(component, cat)) {
        report.add("UNMATCHED-COMPONENT", where,
                   format_module(component) + " is the regular module " + regular->label);
      } else {
        undecided = true;
        report.notes.push_back(format_module(component) + " is not classified by the catalog");
      }
    }
  }
  report.finalize(undecided);
  return report;
}

}  // namespace phv
