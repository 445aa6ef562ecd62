#include "phv/castling.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "phv/error.hpp"

namespace phv {

namespace {

enum class Orientation { none, plain, dual, invalid };

// How an A-type factor acts on a single summand.
Orientation orientation(const SimpleFactor& f, const HighestWeight& w) {
  if (w.is_zero()) return Orientation::none;
  if (w.terms().size() != 1 || w.terms().front().coeff != 1) return Orientation::invalid;
  const auto index = w.terms().front().index;
  if (index == 0) return Orientation::plain;
  if (index == f.rank - 1) return Orientation::dual;
  return Orientation::invalid;
}

Natural stripped_dim(const Module& module, std::size_t s, std::size_t skip) {
  Natural d = 1;
  for (std::size_t j = 0; j < module.group.factors.size(); ++j) {
    if (j == skip) continue;
    d *= irrep_dim(module.group.factors[j], module.summands[s].weights[j]);
  }
  return d;
}

struct FactorAction {
  std::vector<std::size_t> summands;
  bool dual = false;
};

// Summands on which factor i acts by omega_1 (or uniformly by omega_1^*).
std::optional<FactorAction> castle_action(const Module& module, std::size_t i) {
  const auto& f = module.group.factors[i];
  if (f.family != Family::A) return std::nullopt;
  FactorAction action;
  bool plain = false;
  bool dual = false;
  for (std::size_t s = 0; s < module.summands.size(); ++s) {
    switch (orientation(f, module.summands[s].weights[i])) {
      case Orientation::none:
        break;
      case Orientation::plain:
        plain = true;
        action.summands.push_back(s);
        break;
      case Orientation::dual:
        dual = true;
        action.summands.push_back(s);
        break;
      case Orientation::invalid:
        return std::nullopt;
    }
  }
  if (action.summands.empty() || (plain && dual)) return std::nullopt;
  action.dual = dual;
  return action;
}

std::optional<CastlingMove> castle_move(const Module& module, std::size_t i) {
  auto action = castle_action(module, i);
  if (!action) return std::nullopt;
  CastlingMove mv;
  mv.kind = MoveKind::castle;
  mv.factor = i;
  mv.n = std::uint64_t{module.group.factors[i].rank} + 1;
  for (auto s : action->summands) mv.m += stripped_dim(module, s, i);
  if (mv.m <= mv.n) return std::nullopt;
  mv.summands = std::move(action->summands);
  return mv;
}

std::vector<CastlingMove> castle_moves_only(const Module& module) {
  std::vector<CastlingMove> out;
  for (std::size_t i = 0; i < module.group.factors.size(); ++i) {
    if (auto mv = castle_move(module, i)) out.push_back(std::move(*mv));
  }
  return out;
}

std::optional<CastlingMove> promote_move(const Module& module, std::vector<std::size_t> subset) {
  CastlingMove mv;
  mv.kind = MoveKind::promote;
  mv.n = 1;
  for (auto s : subset) mv.m += summand_dim(module, s);
  if (mv.m < 3) return std::nullopt;
  mv.summands = std::move(subset);
  return mv;
}

std::uint32_t checked_rank(const Natural& rank) {
  if (rank > Natural(std::numeric_limits<std::uint32_t>::max())) {
    throw Error("castling transform produces a factor of rank " + rank.str() +
                ", beyond the supported range");
  }
  return static_cast<std::uint32_t>(rank);
}

}  // namespace

std::vector<CastlingMove> castling_moves(const Module& module, SubsetPolicy policy) {
  validate(module);
  auto out = castle_moves_only(module);
  const std::size_t ns = module.summands.size();
  if (policy == SubsetPolicy::singletons_and_full) {
    for (std::size_t s = 0; s < ns; ++s) {
      if (auto mv = promote_move(module, {s})) out.push_back(std::move(*mv));
    }
    if (ns > 1) {
      std::vector<std::size_t> all(ns);
      for (std::size_t s = 0; s < ns; ++s) all[s] = s;
      if (auto mv = promote_move(module, std::move(all))) out.push_back(std::move(*mv));
    }
    return out;
  }
  if (ns > kMaxSubsetSummands) throw Error("too many summands for all-subsets promotion");
  std::vector<std::vector<std::size_t>> subsets;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << ns); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t s = 0; s < ns; ++s) {
      if ((mask >> s) & 1U) subset.push_back(s);
    }
    subsets.push_back(std::move(subset));
  }
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  for (auto& subset : subsets) {
    if (auto mv = promote_move(module, std::move(subset))) out.push_back(std::move(*mv));
  }
  return out;
}

CastleResult apply_castling(const Module& module, const CastlingMove& move) {
  validate(module);
  const std::size_t ns = module.summands.size();
  const std::size_t r = module.group.factors.size();
  Module out = module;
  std::vector<bool> in_set(ns, false);

  if (move.kind == MoveKind::castle) {
    if (move.factor >= r) throw Error("castling move: factor index out of range");
    auto expected = castle_move(module, move.factor);
    if (!expected || expected->summands != move.summands || expected->n != move.n ||
        expected->m != move.m) {
      throw Error("castling move not applicable: " + describe(move));
    }
    auto action = castle_action(module, move.factor);
    if (action->dual) out = dualize_factor(out, move.factor);
    for (auto s : move.summands) in_set[s] = true;
    // Direct-sum form: the complement is dualized, the castled part keeps rho.
    for (std::size_t s = 0; s < ns; ++s) {
      if (in_set[s]) continue;
      for (std::size_t j = 0; j < r; ++j) {
        if (j == move.factor) continue;
        out.summands[s].weights[j] = dual_weight(out.group.factors[j], out.summands[s].weights[j]);
      }
    }
    const Natural new_n = move.m - move.n;
    if (new_n == 1) {
      out.group.factors.erase(out.group.factors.begin() + static_cast<std::ptrdiff_t>(move.factor));
      for (auto& s : out.summands) {
        s.weights.erase(s.weights.begin() + static_cast<std::ptrdiff_t>(move.factor));
      }
      return {std::move(out), std::nullopt};
    }
    const auto rank = checked_rank(new_n - 1);
    out.group.factors[move.factor] = SimpleFactor{Family::A, rank};
    for (std::size_t s = 0; s < ns; ++s) {
      out.summands[s].weights[move.factor] =
          in_set[s] ? HighestWeight::fundamental(rank, 0) : HighestWeight(rank);
    }
    return {std::move(out), move.factor};
  }

  // Promotion: view the summands as tensored with SL_1 and castle that factor.
  if (move.summands.empty() || !std::is_sorted(move.summands.begin(), move.summands.end()) ||
      std::adjacent_find(move.summands.begin(), move.summands.end()) != move.summands.end() ||
      move.summands.back() >= ns) {
    throw Error("castling move not applicable: bad summand set");
  }
  auto expected = promote_move(module, move.summands);
  if (!expected || expected->m != move.m || move.n != 1) {
    throw Error("castling move not applicable: " + describe(move));
  }
  for (auto s : move.summands) in_set[s] = true;
  for (std::size_t s = 0; s < ns; ++s) {
    if (in_set[s]) continue;
    for (std::size_t j = 0; j < r; ++j) {
      out.summands[s].weights[j] = dual_weight(out.group.factors[j], out.summands[s].weights[j]);
    }
  }
  const auto rank = checked_rank(move.m - 2);
  out.group.factors.push_back(SimpleFactor{Family::A, rank});
  for (std::size_t s = 0; s < ns; ++s) {
    out.summands[s].weights.push_back(in_set[s] ? HighestWeight::fundamental(rank, 0)
                                                : HighestWeight(rank));
  }
  return {std::move(out), r};
}

Module castle(const Module& module, const CastlingMove& move) {
  return canonical_form(apply_castling(module, move).module);
}

Natural dim_after(const Module& module, const CastlingMove& move) {
  const Natural& m = move.m;
  if (move.kind == MoveKind::promote) return module_dim(module) + m * (m - 2);
  const Natural n = move.n;
  return module_dim(module) - n * m + (m - n) * m;
}

bool is_reduced(const Module& module) {
  validate(module);
  // Promotions multiply a part of dimension m >= 3 by m - 1, so only castle
  // moves with m < 2n can lower the dimension.
  for (const auto& mv : castle_moves_only(module)) {
    if (mv.m < 2 * Natural(mv.n)) return false;
  }
  return true;
}

Module reduce(const Module& module) {
  Module current = canonical_form(module);
  while (true) {
    const auto moves = castle_moves_only(current);
    auto it = std::find_if(moves.begin(), moves.end(),
                           [](const CastlingMove& mv) { return mv.m < 2 * Natural(mv.n); });
    if (it == moves.end()) return current;
    current = castle(current, *it);
  }
}

std::string describe(const CastlingMove& move) {
  std::ostringstream os;
  if (move.kind == MoveKind::castle) {
    os << "castle factor " << move.factor + 1;
  } else {
    os << "promote";
  }
  os << " on summands {";
  for (std::size_t i = 0; i < move.summands.size(); ++i) {
    os << (i ? "," : "") << move.summands[i] + 1;
  }
  os << "} (n=" << move.n << ", m=" << move.m << ")";
  return os.str();
}

}  // namespace phv
