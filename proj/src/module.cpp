#include "phv/module.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <string>

#include "phv/error.hpp"

namespace phv {

void validate(const Module& module) {
  for (const auto& f : module.group.factors) validate(f);
  if (module.summands.empty()) throw Error("module has no summands");
  const auto r = module.group.factors.size();
  for (std::size_t s = 0; s < module.summands.size(); ++s) {
    const auto& summand = module.summands[s];
    if (summand.weights.size() != r) {
      throw Error("summand " + std::to_string(s + 1) + " has " +
                  std::to_string(summand.weights.size()) + " weights for " +
                  std::to_string(r) + " simple factors");
    }
    for (std::size_t j = 0; j < r; ++j) {
      if (summand.weights[j].rank() != module.group.factors[j].rank) {
        throw Error("weight length does not match rank of factor " + std::to_string(j + 1));
      }
    }
    const auto& slots = summand.scalar_slots;
    if (!std::is_sorted(slots.begin(), slots.end()) ||
        std::adjacent_find(slots.begin(), slots.end()) != slots.end()) {
      throw Error("scalar slots must be sorted and distinct");
    }
    if (!slots.empty() && slots.back() >= module.group.torus_dim) {
      throw Error("scalar slot " + std::to_string(slots.back() + 1) + " exceeds torus dimension " +
                  std::to_string(module.group.torus_dim));
    }
  }
}

Natural summand_dim(const Module& module, std::size_t summand) {
  const auto& s = module.summands.at(summand);
  Natural d = 1;
  for (std::size_t j = 0; j < module.group.factors.size(); ++j) {
    d *= irrep_dim(module.group.factors[j], s.weights.at(j));
  }
  return d;
}

Natural module_dim(const Module& module) {
  Natural d = 0;
  for (std::size_t s = 0; s < module.summands.size(); ++s) d += summand_dim(module, s);
  return d;
}

Natural group_dim(const GroupShape& group) {
  Natural d = group.torus_dim;
  for (const auto& f : group.factors) d += simple_dim(f);
  return d;
}

bool is_etale_candidate(const Module& module) {
  return module.group.torus_dim >= 1 && group_dim(module) == module_dim(module);
}

Module dualize_factor(const Module& module, std::size_t factor) {
  if (factor >= module.group.factors.size()) {
    throw Error("factor index " + std::to_string(factor + 1) + " out of range");
  }
  Module out = module;
  const auto& f = module.group.factors[factor];
  for (auto& s : out.summands) s.weights[factor] = diagram_automorphism(f, s.weights[factor]);
  return out;
}

Module drop_trivial_factors(const Module& module) {
  Module out;
  out.group.torus_dim = module.group.torus_dim;
  out.summands.resize(module.summands.size());
  for (std::size_t s = 0; s < module.summands.size(); ++s) {
    out.summands[s].scalar_slots = module.summands[s].scalar_slots;
  }
  for (std::size_t j = 0; j < module.group.factors.size(); ++j) {
    const bool acts = std::any_of(module.summands.begin(), module.summands.end(),
                                  [j](const Summand& s) { return !s.weights[j].is_zero(); });
    if (!acts) continue;
    out.group.factors.push_back(module.group.factors[j]);
    for (std::size_t s = 0; s < module.summands.size(); ++s) {
      out.summands[s].weights.push_back(module.summands[s].weights[j]);
    }
  }
  return out;
}

Module summand_module(const Module& module, std::size_t summand) {
  Module out;
  out.group = module.group;
  out.summands.push_back(module.summands.at(summand));
  return out;
}

// ---------------------------------------------------------------------------
// Canonical form

namespace {

struct SummandCode {
  std::vector<HighestWeight> weights;
  std::uint32_t private_slots = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> shared;  // (class label, multiplicity)

  auto operator<=>(const SummandCode&) const = default;
};

struct SlotClass {
  std::vector<std::size_t> members;  // summand indices, sorted
  std::uint32_t multiplicity = 0;
};

constexpr double kMaxSymmetries = 2.0e6;

}  // namespace

Module canonical_form(const Module& module) {
  validate(module);
  const auto& factors = module.group.factors;
  const std::size_t r = factors.size();
  const std::size_t ns = module.summands.size();
  if (r > kMaxCanonicalFactors) {
    throw Error("canonical form supports at most " + std::to_string(kMaxCanonicalFactors) +
                " simple factors");
  }

  // Target factor order: sorted by (family, rank); permutations only move
  // factors inside blocks of equal type.
  std::vector<std::size_t> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t a, std::size_t b) { return factors[a] < factors[b]; });
  std::vector<std::pair<std::size_t, std::size_t>> blocks;  // [begin, end) in perm
  for (std::size_t i = 0; i < r;) {
    std::size_t j = i + 1;
    while (j < r && factors[perm[j]] == factors[perm[i]]) ++j;
    if (j - i > 1) blocks.emplace_back(i, j);
    i = j;
  }

  std::vector<std::size_t> dualizable;
  for (std::size_t j = 0; j < r; ++j) {
    if (!has_diagram_automorphism(factors[j])) continue;
    for (const auto& s : module.summands) {
      if (diagram_automorphism(factors[j], s.weights[j]) != s.weights[j]) {
        dualizable.push_back(j);
        break;
      }
    }
  }
  // Precomputed automorphism images: flipped[s][j].
  std::vector<std::vector<HighestWeight>> flipped(ns);
  for (std::size_t s = 0; s < ns; ++s) {
    for (std::size_t j = 0; j < r; ++j) {
      flipped[s].push_back(diagram_automorphism(factors[j], module.summands[s].weights[j]));
    }
  }

  // Torus slot structure.
  const std::uint32_t k = module.group.torus_dim;
  std::vector<std::vector<std::size_t>> membership(k);
  for (std::size_t s = 0; s < ns; ++s) {
    for (auto t : module.summands[s].scalar_slots) membership[t].push_back(s);
  }
  std::vector<std::uint32_t> private_count(ns, 0);
  std::map<std::vector<std::size_t>, std::uint32_t> shared_map;
  for (std::uint32_t t = 0; t < k; ++t) {
    if (membership[t].size() == 1) {
      ++private_count[membership[t].front()];
    } else if (membership[t].size() > 1) {
      ++shared_map[membership[t]];
    }
  }
  std::vector<SlotClass> classes;
  for (auto& [members, mult] : shared_map) classes.push_back({members, mult});
  std::vector<std::vector<std::size_t>> classes_of(ns);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (auto s : classes[c].members) classes_of[s].push_back(c);
  }

  double symmetries = std::ldexp(1.0, static_cast<int>(dualizable.size()));
  for (auto [b, e] : blocks) symmetries *= std::tgamma(static_cast<double>(e - b + 1));
  symmetries *= std::tgamma(static_cast<double>(classes.size() + 1));
  if (symmetries > kMaxSymmetries) {
    throw Error("symmetry group too large to canonicalize");
  }

  std::optional<std::vector<SummandCode>> best;
  std::vector<std::size_t> best_perm;
  std::uint64_t best_mask = 0;
  std::vector<std::uint32_t> best_labels;

  std::vector<std::uint32_t> labels(classes.size());
  std::vector<std::vector<HighestWeight>> weights(ns, std::vector<HighestWeight>(r));

  auto evaluate = [&](std::uint64_t mask) {
    for (std::size_t s = 0; s < ns; ++s) {
      for (std::size_t pos = 0; pos < r; ++pos) {
        const std::size_t j = perm[pos];
        bool flip = false;
        for (std::size_t d = 0; d < dualizable.size(); ++d) {
          if (dualizable[d] == j) flip = (mask >> d) & 1U;
        }
        weights[s][pos] = flip ? flipped[s][j] : module.summands[s].weights[j];
      }
    }
    std::iota(labels.begin(), labels.end(), 0U);
    do {
      std::vector<SummandCode> code(ns);
      for (std::size_t s = 0; s < ns; ++s) {
        code[s].weights = weights[s];
        code[s].private_slots = private_count[s];
        for (auto c : classes_of[s]) code[s].shared.emplace_back(labels[c], classes[c].multiplicity);
        std::sort(code[s].shared.begin(), code[s].shared.end());
      }
      std::sort(code.begin(), code.end());
      if (!best || code < *best) {
        best = std::move(code);
        best_perm = perm;
        best_mask = mask;
        best_labels = labels;
      }
    } while (std::next_permutation(labels.begin(), labels.end()));
  };

  auto over_masks = [&]() {
    const std::uint64_t limit = std::uint64_t{1} << dualizable.size();
    for (std::uint64_t mask = 0; mask < limit; ++mask) evaluate(mask);
  };

  // Cartesian product of the permutations of every block.
  auto over_blocks = [&](auto&& self, std::size_t b) -> void {
    if (b == blocks.size()) {
      over_masks();
      return;
    }
    auto first = perm.begin() + static_cast<std::ptrdiff_t>(blocks[b].first);
    auto last = perm.begin() + static_cast<std::ptrdiff_t>(blocks[b].second);
    std::sort(first, last);
    do {
      self(self, b + 1);
    } while (std::next_permutation(first, last));
  };
  over_blocks(over_blocks, 0);

  // Materialize the minimal encoding as a module.
  perm = best_perm;
  evaluate(best_mask);  // restores `weights` for the winning symmetry
  perm = best_perm;
  std::vector<std::pair<SummandCode, std::size_t>> order;
  for (std::size_t s = 0; s < ns; ++s) {
    SummandCode code;
    code.weights = weights[s];
    code.private_slots = private_count[s];
    for (auto c : classes_of[s]) code.shared.emplace_back(best_labels[c], classes[c].multiplicity);
    std::sort(code.shared.begin(), code.shared.end());
    order.emplace_back(std::move(code), s);
  }
  std::sort(order.begin(), order.end());

  std::vector<std::uint32_t> class_offset(classes.size());
  std::vector<std::size_t> by_label(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) by_label[best_labels[c]] = c;
  std::uint32_t next_slot = 0;
  for (auto c : by_label) {
    class_offset[c] = next_slot;
    next_slot += classes[c].multiplicity;
  }

  Module out;
  out.group.torus_dim = k;
  for (auto j : best_perm) out.group.factors.push_back(factors[j]);
  for (auto& [code, s] : order) {
    Summand summand;
    summand.weights = std::move(code.weights);
    for (auto c : classes_of[s]) {
      for (std::uint32_t i = 0; i < classes[c].multiplicity; ++i) {
        summand.scalar_slots.push_back(class_offset[c] + i);
      }
    }
    for (std::uint32_t i = 0; i < private_count[s]; ++i) summand.scalar_slots.push_back(next_slot++);
    std::sort(summand.scalar_slots.begin(), summand.scalar_slots.end());
    out.summands.push_back(std::move(summand));
  }
  return out;
}

bool equivalent(const Module& a, const Module& b) { return canonical_form(a) == canonical_form(b); }

}  // namespace phv
