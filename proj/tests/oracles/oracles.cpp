#include "oracles.hpp"

#include <algorithm>
#include <unordered_map>
#include <set>
#include <stdexcept>

namespace oracle {

using phv::Family;
using phv::Natural;

namespace {

// Symmetric form (alpha_i, alpha_j), scaled so the shortest roots have norm 2.
std::vector<std::vector<int>> symmetric_form(Family family, std::uint32_t rank) {
  const auto n = static_cast<int>(rank);
  std::vector<std::vector<int>> b(rank, std::vector<int>(rank, 0));
  auto link = [&](int i, int j, int v) { b[i - 1][j - 1] = b[j - 1][i - 1] = v; };
  auto chain = [&](int from, int to, int norm, int off) {
    for (int i = from; i <= to; ++i) b[i - 1][i - 1] = norm;
    for (int i = from; i < to; ++i) link(i, i + 1, off);
  };
  switch (family) {
    case Family::A:
      chain(1, n, 2, -1);
      break;
    case Family::B:
      chain(1, n, 4, -2);
      b[n - 1][n - 1] = 2;
      break;
    case Family::C:
      chain(1, n, 2, -1);
      b[n - 1][n - 1] = 4;
      if (n >= 2) link(n - 1, n, -2);
      break;
    case Family::D:
      chain(1, n - 1, 2, -1);
      b[n - 1][n - 1] = 2;
      link(n - 2, n, -1);
      break;
    case Family::E6:
    case Family::E7:
    case Family::E8:
      for (int i = 1; i <= n; ++i) b[i - 1][i - 1] = 2;
      link(1, 3, -1);
      link(2, 4, -1);
      for (int i = 3; i < n; ++i) link(i, i + 1, -1);
      break;
    case Family::F4:
      b = {{4, -2, 0, 0}, {-2, 4, -2, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
      break;
    case Family::G2:
      b = {{2, -3}, {-3, 6}};
      break;
  }
  return b;
}

}  // namespace

std::vector<std::vector<int>> cartan(Family family, std::uint32_t rank) {
  const auto b = symmetric_form(family, rank);
  std::vector<std::vector<int>> c(rank, std::vector<int>(rank));
  for (std::uint32_t i = 0; i < rank; ++i) {
    for (std::uint32_t j = 0; j < rank; ++j) c[i][j] = 2 * b[i][j] / b[j][j];
  }
  return c;
}

std::vector<std::vector<int>> positive_roots(Family family, std::uint32_t rank) {
  const auto c = cartan(family, rank);
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> todo;
  for (std::uint32_t i = 0; i < rank; ++i) {
    std::vector<int> e(rank, 0);
    e[i] = 1;
    seen.insert(e);
    todo.push_back(e);
  }
  while (!todo.empty()) {
    auto beta = todo.back();
    todo.pop_back();
    for (std::uint32_t i = 0; i < rank; ++i) {
      int pairing = 0;
      for (std::uint32_t k = 0; k < rank; ++k) pairing += beta[k] * c[k][i];
      auto image = beta;
      image[i] -= pairing;
      bool positive = true;
      for (int v : image) positive = positive && v >= 0;
      if (positive && seen.insert(image).second) todo.push_back(image);
    }
  }
  return {seen.begin(), seen.end()};
}

Natural freudenthal_dim(Family family, std::uint32_t rank, const std::vector<std::uint32_t>& weight) {
  const auto b = symmetric_form(family, rank);
  const auto roots = positive_roots(family, rank);
  if (rank > 8) throw std::logic_error("Freudenthal oracle: rank > 8");

  // Root-coordinate vectors are packed 8 bits per coordinate.
  auto pack = [&](const std::vector<int>& x) {
    std::uint64_t key = 0;
    for (std::uint32_t i = 0; i < rank; ++i) {
      if (x[i] < 0 || x[i] > 255) throw std::logic_error("Freudenthal oracle: coordinate overflow");
      key |= static_cast<std::uint64_t>(x[i]) << (8 * i);
    }
    return key;
  };
  auto form = [&](const std::vector<int>& x, const std::vector<int>& y) {
    long long s = 0;
    for (std::uint32_t i = 0; i < rank; ++i) {
      for (std::uint32_t j = 0; j < rank; ++j) s += static_cast<long long>(x[i]) * b[i][j] * y[j];
    }
    return s;
  };
  // (lambda + shift * rho, x) for x in root coordinates.
  auto lambda_dot = [&](const std::vector<int>& x, int shift) {
    long long s = 0;
    for (std::uint32_t k = 0; k < rank; ++k) {
      s += static_cast<long long>(x[k]) * (static_cast<long long>(weight[k]) + shift) * (b[k][k] / 2);
    }
    return s;
  };

  auto coord = [](std::uint64_t key, std::uint32_t i) { return static_cast<int>((key >> (8 * i)) & 0xff); };
  auto unpack = [&](std::uint64_t key) {
    std::vector<int> x(rank);
    for (std::uint32_t i = 0; i < rank; ++i) x[i] = coord(key, i);
    return x;
  };

  struct RootData {
    std::vector<int> alpha;
    std::vector<long long> b_alpha;  // row i: (alpha_i, alpha)
    std::uint64_t key;
    long long norm;
    long long lambda_pair;
  };
  std::vector<RootData> rd;
  for (const auto& a : roots) {
    std::vector<long long> ba(rank, 0);
    for (std::uint32_t i = 0; i < rank; ++i) {
      for (std::uint32_t j = 0; j < rank; ++j) ba[i] += static_cast<long long>(b[i][j]) * a[j];
    }
    rd.push_back({a, ba, pack(a), form(a, a), lambda_dot(a, 0)});
  }

  std::unordered_map<std::uint64_t, long long> mult;
  mult[0] = 1;
  Natural total = 1;
  std::vector<std::uint64_t> level{0};
  while (!level.empty()) {
    std::vector<std::uint64_t> candidates;
    for (auto beta : level) {
      for (std::uint32_t i = 0; i < rank; ++i) {
        if (coord(beta, i) == 255) throw std::logic_error("Freudenthal oracle: coordinate overflow");
        candidates.push_back(beta + (std::uint64_t{1} << (8 * i)));
      }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<std::uint64_t> next_level;
    for (auto key : candidates) {
      const auto beta = unpack(key);
      const long long denom = 2 * lambda_dot(beta, 1) - form(beta, beta);
      long long numer = 0;
      for (const auto& r : rd) {
        int kmax = 1 << 20;
        for (std::uint32_t i = 0; i < rank; ++i) {
          if (r.alpha[i] > 0) kmax = std::min(kmax, beta[i] / r.alpha[i]);
        }
        if (kmax == 0) continue;
        long long beta_alpha = 0;
        for (std::uint32_t i = 0; i < rank; ++i) beta_alpha += beta[i] * r.b_alpha[i];
        for (int k = 1; k <= kmax; ++k) {
          auto it = mult.find(key - static_cast<std::uint64_t>(k) * r.key);
          if (it == mult.end()) continue;
          // (lambda - gamma, alpha) with gamma = beta - k alpha
          numer += 2 * it->second * (r.lambda_pair - beta_alpha + k * r.norm);
        }
      }
      if (denom == 0) {
        if (numer != 0) throw std::logic_error("Freudenthal: zero denominator");
        continue;
      }
      if (numer % denom != 0 || numer < 0) throw std::logic_error("Freudenthal: non-integral");
      const long long m = numer / denom;
      if (m == 0) continue;
      mult[key] = m;
      total += m;
      next_level.push_back(key);
    }
    level = std::move(next_level);
  }
  return total;
}

Natural binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  Natural r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
