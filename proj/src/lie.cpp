#include "phv/lie.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>

#include "phv/error.hpp"

namespace phv {

std::string family_name(Family family) {
  switch (family) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::G2: return "G2";
  }
  return "?";
}

std::uint32_t minimum_rank(Family family) {
  switch (family) {
    case Family::A: return 1;
    case Family::B: return 2;
    case Family::C: return 1;
    case Family::D: return 3;
    case Family::E6: return 6;
    case Family::E7: return 7;
    case Family::E8: return 8;
    case Family::F4: return 4;
    case Family::G2: return 2;
  }
  return 1;
}

namespace {

bool is_exceptional(Family family) {
  return family != Family::A && family != Family::B && family != Family::C &&
         family != Family::D;
}

}  // namespace

void validate(const SimpleFactor& factor) {
  const auto min = minimum_rank(factor.family);
  if (is_exceptional(factor.family) ? factor.rank != min : factor.rank < min) {
    throw Error("invalid rank " + std::to_string(factor.rank) + " for family " +
                family_name(factor.family));
  }
}

SimpleFactor make_factor(Family family, std::uint32_t rank) {
  SimpleFactor factor{family, rank};
  validate(factor);
  return factor;
}

// ---------------------------------------------------------------------------
// HighestWeight

HighestWeight::HighestWeight(std::initializer_list<std::uint32_t> dense)
    : HighestWeight(from_dense(std::span<const std::uint32_t>(dense.begin(), dense.size()))) {}

HighestWeight HighestWeight::from_dense(std::span<const std::uint32_t> dense) {
  HighestWeight w(static_cast<std::uint32_t>(dense.size()));
  for (std::uint32_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0) w.terms_.push_back({i, dense[i]});
  }
  return w;
}

HighestWeight HighestWeight::fundamental(std::uint32_t rank, std::uint32_t index,
                                         std::uint32_t coeff) {
  HighestWeight w(rank);
  w.set(index, coeff);
  return w;
}

std::uint32_t HighestWeight::operator[](std::uint32_t index) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                             [](const Term& t, std::uint32_t i) { return t.index < i; });
  return (it != terms_.end() && it->index == index) ? it->coeff : 0;
}

void HighestWeight::set(std::uint32_t index, std::uint32_t coeff) {
  if (index >= rank_) throw Error("weight index out of range");
  auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                             [](const Term& t, std::uint32_t i) { return t.index < i; });
  if (it != terms_.end() && it->index == index) {
    if (coeff == 0) {
      terms_.erase(it);
    } else {
      it->coeff = coeff;
    }
  } else if (coeff != 0) {
    terms_.insert(it, Term{index, coeff});
  }
}

std::uint64_t HighestWeight::coefficient_sum() const noexcept {
  std::uint64_t sum = 0;
  for (const auto& t : terms_) sum += t.coeff;
  return sum;
}

std::vector<std::uint32_t> HighestWeight::dense() const {
  std::vector<std::uint32_t> out(rank_, 0);
  for (const auto& t : terms_) out[t.index] = t.coeff;
  return out;
}

// ---------------------------------------------------------------------------
// Root systems

namespace {

// Symmetrized form in Bourbaki numbering. Off-diagonal entries for an edge
// are -max(d_i, d_j), which reproduces the Cartan integers of every bond.
RootSystem build_form(const SimpleFactor& f) {
  const std::uint32_t n = f.rank;
  RootSystem rs;
  rs.rank = n;
  rs.half_norm.assign(n, 1);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  auto chain = [&](std::uint32_t len) {
    for (std::uint32_t i = 0; i + 1 < len; ++i) edges.emplace_back(i, i + 1);
  };
  switch (f.family) {
    case Family::A:
      chain(n);
      break;
    case Family::B:
      chain(n);
      for (std::uint32_t i = 0; i + 1 < n; ++i) rs.half_norm[i] = 2;
      break;
    case Family::C:
      chain(n);
      rs.half_norm[n - 1] = 2;
      break;
    case Family::D:
      chain(n - 1);
      edges.emplace_back(n - 3, n - 1);
      break;
    case Family::E6:
    case Family::E7:
    case Family::E8:
      // 1-3-4-5-6(-7(-8)) with 2 attached to 4.
      edges.emplace_back(0, 2);
      edges.emplace_back(1, 3);
      for (std::uint32_t i = 2; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case Family::F4:
      chain(4);
      rs.half_norm = {2, 2, 1, 1};
      break;
    case Family::G2:
      chain(2);
      rs.half_norm = {1, 3};
      break;
  }
  rs.form.assign(n, std::vector<int>(n, 0));
  for (std::uint32_t i = 0; i < n; ++i) rs.form[i][i] = 2 * rs.half_norm[i];
  for (auto [i, j] : edges) {
    const int v = -std::max(rs.half_norm[i], rs.half_norm[j]);
    rs.form[i][j] = v;
    rs.form[j][i] = v;
  }
  return rs;
}

// Positive roots by root strings: for a root beta and simple alpha_i,
// q - p = -<beta, alpha_i^vee>, so beta + alpha_i is a root iff q > 0.
void generate_positive_roots(RootSystem& rs) {
  const std::uint32_t n = rs.rank;
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> level;
  for (std::uint32_t i = 0; i < n; ++i) {
    std::vector<int> r(n, 0);
    r[i] = 1;
    level.push_back(r);
    known.insert(r);
  }
  while (!level.empty()) {
    rs.positive_roots.insert(rs.positive_roots.end(), level.begin(), level.end());
    std::vector<std::vector<int>> next;
    for (const auto& beta : level) {
      for (std::uint32_t i = 0; i < n; ++i) {
        int pair = 0;  // (beta, alpha_i)
        for (std::uint32_t j = 0; j < n; ++j) pair += beta[j] * rs.form[j][i];
        const int cartan = pair / rs.half_norm[i];  // <beta, alpha_i^vee>
        int p = 0;
        auto down = beta;
        while (true) {
          down[i] -= 1;
          if (!known.contains(down)) break;
          ++p;
        }
        if (p - cartan > 0) {
          auto up = beta;
          up[i] += 1;
          if (known.insert(up).second) next.push_back(std::move(up));
        }
      }
    }
    level = std::move(next);
  }
}

}  // namespace

const RootSystem& root_system(const SimpleFactor& factor) {
  validate(factor);
  static std::mutex mutex;
  static std::map<SimpleFactor, std::unique_ptr<RootSystem>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[factor];
  if (!slot) {
    auto rs = std::make_unique<RootSystem>(build_form(factor));
    generate_positive_roots(*rs);
    slot = std::move(rs);
  }
  return *slot;
}

// ---------------------------------------------------------------------------
// Dimensions

Natural simple_dim(const SimpleFactor& f) {
  validate(f);
  const Natural n = f.rank;
  switch (f.family) {
    case Family::A: return n * (n + 2);
    case Family::B:
    case Family::C: return n * (2 * n + 1);
    case Family::D: return n * (2 * n - 1);
    case Family::E6: return 78;
    case Family::E7: return 133;
    case Family::E8: return 248;
    case Family::F4: return 52;
    case Family::G2: return 14;
  }
  return 0;
}

Natural weyl_dim_from_roots(const SimpleFactor& factor, const HighestWeight& weight) {
  const auto& rs = root_system(factor);
  if (weight.rank() != rs.rank) throw Error("weight length does not match rank");
  const auto m = weight.dense();
  Natural num = 1;
  Natural den = 1;
  for (const auto& root : rs.positive_roots) {
    std::int64_t top = 0;
    std::int64_t bottom = 0;
    for (std::uint32_t j = 0; j < rs.rank; ++j) {
      const std::int64_t cd = static_cast<std::int64_t>(root[j]) * rs.half_norm[j];
      top += cd * (static_cast<std::int64_t>(m[j]) + 1);
      bottom += cd;
    }
    num *= top;
    den *= bottom;
  }
  return num / den;
}

namespace {

// prod_{1 <= i < j <= N} (l_i - l_j + j - i) / (j - i) with l the partition of
// the weight. Runs of equal l contribute nothing among themselves; between
// two runs the product over one index telescopes to a ratio of rising
// factorials of length d = l_p - l_q.
Natural dim_type_a(std::uint32_t rank, const HighestWeight& w) {
  struct Block {
    std::uint64_t first, last, value;
  };
  const auto& terms = w.terms();
  std::vector<Block> blocks;
  std::uint64_t suffix = w.coefficient_sum();
  std::uint64_t start = 1;
  for (const auto& t : terms) {
    const std::uint64_t end = std::uint64_t{t.index} + 1;
    blocks.push_back({start, end, suffix});
    suffix -= t.coeff;
    start = end + 1;
  }
  blocks.push_back({start, std::uint64_t{rank} + 1, 0});

  Natural num = 1;
  Natural den = 1;
  auto rising = [](Natural& acc, std::uint64_t x, std::uint64_t d) {
    for (std::uint64_t t = 0; t < d; ++t) acc *= (x + t);
  };
  for (std::size_t p = 0; p < blocks.size(); ++p) {
    for (std::size_t q = p + 1; q < blocks.size(); ++q) {
      const auto& a = blocks[p];
      const auto& b = blocks[q];
      const std::uint64_t d = a.value - b.value;
      const std::uint64_t len_a = a.last - a.first + 1;
      const std::uint64_t len_b = b.last - b.first + 1;
      if (len_a <= len_b) {
        for (std::uint64_t i = a.first; i <= a.last; ++i) {
          const std::uint64_t x = b.first - i;
          rising(num, x + len_b, d);
          rising(den, x, d);
        }
      } else {
        for (std::uint64_t j = b.first; j <= b.last; ++j) {
          const std::uint64_t y = j - a.last;
          rising(num, y + len_a, d);
          rising(den, y, d);
        }
      }
    }
  }
  return num / den;
}

// Orthonormal-basis Weyl products for B, C, D. Coordinates are doubled where
// the half-spin weights would introduce halves; every factor is homogeneous so
// the scaling cancels.
Natural dim_type_bcd(const SimpleFactor& f, const HighestWeight& w) {
  const std::uint32_t n = f.rank;
  const auto m = w.dense();
  std::vector<Natural> l(n), r(n);
  switch (f.family) {
    case Family::B: {
      Natural tail = 0;
      for (std::uint32_t i = n; i-- > 0;) {
        if (i + 1 < n) tail += 2 * Natural(m[i]);
        l[i] = tail + m[n - 1] + 2 * (n - 1 - i) + 1;
        r[i] = 2 * (n - 1 - i) + 1;
      }
      break;
    }
    case Family::C: {
      Natural tail = 0;
      for (std::uint32_t i = n; i-- > 0;) {
        tail += m[i];
        l[i] = tail + (n - i);
        r[i] = n - i;
      }
      break;
    }
    case Family::D: {
      Natural tail = 0;
      for (std::uint32_t i = n - 1; i-- > 0;) {
        if (i + 2 < n) tail += 2 * Natural(m[i]);
        l[i] = tail + m[n - 2] + m[n - 1] + 2 * (n - 1 - i);
        r[i] = 2 * (n - 1 - i);
      }
      l[n - 1] = Natural(m[n - 1]) - Natural(m[n - 2]);
      r[n - 1] = 0;
      break;
    }
    default:
      throw Error("classical product formula requested for exceptional family");
  }
  Natural num = 1;
  Natural den = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      num *= (l[i] - l[j]) * (l[i] + l[j]);
      den *= (r[i] - r[j]) * (r[i] + r[j]);
    }
    if (f.family != Family::D) {
      num *= l[i];
      den *= r[i];
    }
  }
  return num / den;
}

}  // namespace

Natural irrep_dim(const SimpleFactor& factor, const HighestWeight& weight) {
  validate(factor);
  if (weight.rank() != factor.rank) {
    throw Error("weight has length " + std::to_string(weight.rank()) + " but factor " +
                family_name(factor.family) + std::to_string(factor.rank) + " has rank " +
                std::to_string(factor.rank));
  }
  if (weight.is_zero()) return 1;
  switch (factor.family) {
    case Family::A:
      return dim_type_a(factor.rank, weight);
    case Family::B:
    case Family::C:
    case Family::D:
      return dim_type_bcd(factor, weight);
    default:
      return weyl_dim_from_roots(factor, weight);
  }
}

// ---------------------------------------------------------------------------
// Outer automorphisms

bool has_diagram_automorphism(const SimpleFactor& f) {
  return (f.family == Family::A && f.rank >= 2) || f.family == Family::D ||
         f.family == Family::E6;
}

HighestWeight diagram_automorphism(const SimpleFactor& f, const HighestWeight& w) {
  if (w.rank() != f.rank) throw Error("weight length does not match rank");
  if (!has_diagram_automorphism(f) || w.is_zero()) return w;
  HighestWeight out(w.rank());
  const std::uint32_t n = f.rank;
  for (const auto& t : w.terms()) {
    std::uint32_t image = t.index;
    switch (f.family) {
      case Family::A:
        image = n - 1 - t.index;
        break;
      case Family::D:
        if (t.index == n - 2) image = n - 1;
        if (t.index == n - 1) image = n - 2;
        break;
      case Family::E6: {
        static constexpr std::uint32_t flip[6] = {5, 1, 4, 3, 2, 0};
        image = flip[t.index];
        break;
      }
      default:
        break;
    }
    out.set(image, t.coeff);
  }
  return out;
}

HighestWeight dual_weight(const SimpleFactor& f, const HighestWeight& w) {
  if (f.family == Family::D && f.rank % 2 == 0) {
    if (w.rank() != f.rank) throw Error("weight length does not match rank");
    return w;
  }
  return diagram_automorphism(f, w);
}

}  // namespace phv
