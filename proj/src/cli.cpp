#include "phv/cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "phv/castling.hpp"
#include "phv/catalog.hpp"
#include "phv/error.hpp"
#include "phv/expression.hpp"
#include "phv/orbit.hpp"
#include "phv/verify.hpp"

namespace phv::cli {

namespace {

using nlohmann::json;

// Large values go out as strings so no JSON reader loses digits.
json number(const Natural& value) {
  if (fits_u64(value)) return static_cast<std::uint64_t>(value);
  return value.str();
}

Module load_module(const std::string& text) {
  if (text.find(':') != std::string::npos) return parse_module(text);
  return catalog_instantiate(text);
}

Natural parse_natural(const std::string& text, const char* what) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), ::isdigit)) {
    throw Error(std::string(what) + " must be a natural number, got '" + text + "'");
  }
  return Natural(text);
}

std::vector<std::size_t> zero_based(const std::vector<std::size_t>& one_based, std::size_t count) {
  std::vector<std::size_t> out;
  for (auto s : one_based) {
    if (s < 1 || s > count) throw Error("summand index " + std::to_string(s) + " out of range");
    out.push_back(s - 1);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

json move_json(const CastlingMove& mv) {
  json summands = json::array();
  for (auto s : mv.summands) summands.push_back(s + 1);
  json j{{"kind", mv.kind == MoveKind::castle ? "castle" : "promote"},
         {"summands", summands},
         {"n", mv.n},
         {"m", number(mv.m)},
         {"description", describe(mv)}};
  if (mv.kind == MoveKind::castle) j["factor"] = mv.factor + 1;
  return j;
}

void print_module_dims(std::ostream& out, bool as_json, const Module& m) {
  const auto g = group_dim(m);
  const auto v = module_dim(m);
  const bool etale = is_etale_candidate(m);
  if (as_json) {
    out << json{{"module", format_module(m)},
                {"dim_G", number(g)},
                {"dim_V", number(v)},
                {"etale_candidate", etale}}
               .dump(2)
        << "\n";
  } else {
    out << "dim G = " << g << ", dim V = " << v << ", etale-candidate: " << (etale ? "yes" : "no")
        << "\n";
  }
}

void print_transform(std::ostream& out, bool as_json, const Module& from, const CastlingMove& mv) {
  const Module result = castle(from, mv);
  if (as_json) {
    out << json{{"move", move_json(mv)},
                {"module", format_module(result)},
                {"dim_G", number(group_dim(result))},
                {"dim_V", number(module_dim(result))}}
               .dump(2)
        << "\n";
  } else {
    out << describe(mv) << "\n" << format_module(result) << "\n";
    print_module_dims(out, false, result);
  }
}

int print_report(std::ostream& out, bool as_json, const Report& report) {
  out << (as_json ? to_json(report) + "\n" : to_text(report));
  return report.verdict == Verdict::fail ? kExitFail : kExitOk;
}

struct LimitOptions {
  std::uint32_t max_steps = 5;
  std::string max_dim = "1000000000";
  std::size_t max_nodes = 200000;
  bool all_subsets = false;

  void attach(CLI::App* app) {
    app->add_option("--max-steps", max_steps, "Castling steps from the seed")->capture_default_str();
    app->add_option("--max-dim", max_dim, "Bound on dim V")->capture_default_str();
    app->add_option("--max-nodes", max_nodes, "Bound on stored modules")->capture_default_str();
    app->add_flag("--all-subsets", all_subsets, "Promote every summand subset");
  }

  OrbitLimits limits() const {
    OrbitLimits lim;
    lim.max_steps = max_steps;
    lim.max_dim = parse_natural(max_dim, "--max-dim");
    lim.max_nodes = max_nodes;
    if (lim.max_steps < 1 || lim.max_dim < 1 || lim.max_nodes < 1) {
      throw Error("orbit limits must be at least 1");
    }
    lim.subset_policy = all_subsets ? SubsetPolicy::all_subsets : SubsetPolicy::singletons_and_full;
    return lim;
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Castling calculus for reductive prehomogeneous modules", "phv"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Structured output");

  std::string expr;
  std::string expr2;

  auto* dim = app.add_subcommand("dim", "Dimensions of G and V");
  dim->add_option("module", expr, "Module expression or catalog id")->required();

  std::size_t factor = 0;
  std::vector<std::size_t> summands;
  auto* castle_cmd = app.add_subcommand("castle", "Castling transform on an SL factor");
  castle_cmd->add_option("module", expr)->required();
  castle_cmd->add_option("--factor", factor, "1-based simple factor index")->required();
  castle_cmd->add_option("--summands", summands, "1-based summands, e.g. 1,3")->delimiter(',');

  auto* promote = app.add_subcommand("promote", "Promotion by a new SL_{m-1}");
  promote->add_option("module", expr)->required();
  promote->add_option("--summands", summands, "1-based summands (default: all)")->delimiter(',');

  LimitOptions limit_opts;
  bool serial = false;
  auto* orbit = app.add_subcommand("orbit", "Bounded castling orbit");
  orbit->add_option("module", expr)->required();
  limit_opts.attach(orbit);
  orbit->add_flag("--serial", serial, "Use the single-threaded traversal");

  auto* equiv = app.add_subcommand("equiv", "Bounded castling-equivalence search");
  equiv->add_option("a", expr)->required();
  equiv->add_option("b", expr2)->required();
  limit_opts.attach(equiv);

  auto* reduce_cmd = app.add_subcommand("reduce", "Greedy reduction to a reduced module");
  reduce_cmd->add_option("module", expr)->required();

  auto* check = app.add_subcommand("check", "Invariant checks");
  check->require_subcommand(1);
  auto* check_a = check->add_subcommand("theorem-a", "gcd conditions on an irreducible module");
  check_a->add_option("module", expr)->required();
  auto* check_chain = check->add_subcommand("chain", "gcd invariants along a bounded orbit");
  check_chain->add_option("module", expr)->required();
  limit_opts.attach(check_chain);
  auto* check_baues = check->add_subcommand("baues", "Decomposition proxy for one-dimensional center");
  check_baues->add_option("module", expr)->required();
  limit_opts.attach(check_baues);

  auto* scan = app.add_subcommand("scan", "Bounded scans");
  scan->require_subcommand(1);
  auto* scan_b = scan->add_subcommand("theorem-b", "Equal-factor scan over the seed orbits");
  limit_opts.attach(scan_b);

  std::string filter;
  std::string show;
  auto* cat_cmd = app.add_subcommand("catalog", "List catalog entries");
  cat_cmd->add_option("--filter", filter, "Comma-separated flags, e.g. etale,regular");
  cat_cmd->add_option("--show", show, "Instantiate one id, e.g. \"Ks A-2(n=3)\"");

  auto* verify = app.add_subcommand("verify", "Consistency checks");
  verify->require_subcommand(1);
  auto* verify_cat = verify->add_subcommand("catalog", "Check the embedded tables");

  std::vector<const char*> argv{"phv"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "phv: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (dim->parsed()) {
      print_module_dims(out, as_json, load_module(expr));
      return kExitOk;
    }
    if (castle_cmd->parsed()) {
      const Module m = load_module(expr);
      if (factor < 1 || factor > m.group.factors.size()) throw Error("--factor out of range");
      const auto moves = castling_moves(m);
      auto it = std::find_if(moves.begin(), moves.end(), [&](const CastlingMove& mv) {
        return mv.kind == MoveKind::castle && mv.factor == factor - 1;
      });
      if (it == moves.end()) {
        throw Error("no castling transform applies to factor " + std::to_string(factor));
      }
      if (!summands.empty() && zero_based(summands, m.summands.size()) != it->summands) {
        throw Error("factor " + std::to_string(factor) + " acts on summands other than those given: " +
                    describe(*it));
      }
      print_transform(out, as_json, m, *it);
      return kExitOk;
    }
    if (promote->parsed()) {
      const Module m = load_module(expr);
      std::vector<std::size_t> subset;
      if (summands.empty()) {
        for (std::size_t s = 0; s < m.summands.size(); ++s) subset.push_back(s);
      } else {
        subset = zero_based(summands, m.summands.size());
      }
      CastlingMove mv;
      mv.kind = MoveKind::promote;
      mv.summands = subset;
      for (auto s : subset) mv.m += summand_dim(m, s);
      if (mv.m < 3) throw Error("promotion needs summands of total dimension at least 3");
      print_transform(out, as_json, m, mv);
      return kExitOk;
    }
    if (orbit->parsed()) {
      const Module m = load_module(expr);
      const auto lim = limit_opts.limits();
      const auto result = serial ? enumerate_orbit_serial(m, lim) : enumerate_orbit(m, lim);
      if (as_json) {
        json members = json::array();
        for (const auto& member : result.members) {
          json path = json::array();
          for (const auto& mv : member.path) path.push_back(move_json(mv));
          members.push_back(
              {{"module", format_module(member.module)}, {"dim_V", number(member.dim)}, {"path", path}});
        }
        out << json{{"seed", format_module(canonical_form(m))},
                    {"members", members},
                    {"nodes_visited", result.nodes_visited},
                    {"truncated_steps", result.truncated_steps},
                    {"truncated_dim", result.truncated_dim},
                    {"truncated_nodes", result.truncated_nodes}}
                   .dump(2)
            << "\n";
      } else {
        for (const auto& member : result.members) {
          out << member.dim << "\t" << format_module(member.module) << "\t" << member.path.size()
              << " step(s)\n";
        }
        out << result.members.size() << " modules, " << result.nodes_visited << " nodes"
            << (result.truncated_steps ? ", truncated by steps" : "")
            << (result.truncated_dim ? ", truncated by dim" : "")
            << (result.truncated_nodes ? ", truncated by nodes" : "") << "\n";
      }
      return kExitOk;
    }
    if (equiv->parsed()) {
      const auto result = castling_equivalent(load_module(expr), load_module(expr2), limit_opts.limits());
      if (as_json) {
        json path = json::array();
        for (const auto& mv : result.path) path.push_back(move_json(mv));
        out << json{{"found", result.found}, {"path", path}, {"truncated", result.truncated}}.dump(2)
            << "\n";
      } else if (result.found) {
        out << "castling-equivalent, path length " << result.path.size() << "\n";
        for (const auto& mv : result.path) out << "  " << describe(mv) << "\n";
      } else {
        out << "not found within limits" << (result.truncated ? " (search truncated)" : "") << "\n";
      }
      return kExitOk;
    }
    if (reduce_cmd->parsed()) {
      const Module m = load_module(expr);
      const Module r = reduce(m);
      if (as_json) {
        out << json{{"module", format_module(r)}, {"dim_V", number(module_dim(r))}}.dump(2) << "\n";
      } else {
        out << format_module(r) << "\n";
        print_module_dims(out, false, r);
      }
      return kExitOk;
    }
    if (check_a->parsed()) return print_report(out, as_json, theorem_A_check(load_module(expr)));
    if (check_chain->parsed()) {
      return print_report(out, as_json, chain_invariant_check(load_module(expr), limit_opts.limits()));
    }
    if (check_baues->parsed()) {
      return print_report(out, as_json,
                          baues_decomposition_check(load_module(expr), limit_opts.limits()));
    }
    if (scan_b->parsed()) return print_report(out, as_json, theorem_B_scan(limit_opts.limits()));
    if (cat_cmd->parsed()) {
      if (!show.empty()) {
        out << format_module(catalog_instantiate(show)) << "\n";
        return kExitOk;
      }
      const auto entries = catalog_list(parse_flags(filter));
      if (as_json) {
        json list = json::array();
        for (const auto* e : entries) {
          list.push_back({{"id", e->label(e->default_params)},
                          {"module", format_module(e->instantiate(e->default_params))},
                          {"flags", format_flags(e->flags)},
                          {"range", e->range},
                          {"source", e->source}});
        }
        out << list.dump(2) << "\n";
      } else {
        for (const auto* e : entries) out << export_line(*e) << "\n";
      }
      return kExitOk;
    }
    if (verify_cat->parsed()) return print_report(out, as_json, verify_catalog());
  } catch (const ParseError& e) {
    err << "phv: parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "phv: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "phv: no command\n";
  return kExitUsage;
}

}  // namespace phv::cli
