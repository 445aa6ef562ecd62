#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "phv/natural.hpp"

namespace phv {

/// Cartan types. The declaration order is the canonical order used when
/// sorting factors.
enum class Family : std::uint8_t { A, B, C, D, E6, E7, E8, F4, G2 };

std::string family_name(Family family);

/// One simple factor given by its root datum.
///
/// A_n is SL_{n+1}, B_n is SO/Spin_{2n+1}, C_n is Sp_n (standard module of
/// dimension 2n) and D_n is SO/Spin_{2n}. Isogeny classes are not tracked.
struct SimpleFactor {
  Family family = Family::A;
  std::uint32_t rank = 1;

  auto operator<=>(const SimpleFactor&) const = default;
};

/// Checked constructor; throws phv::Error when the rank is below the family
/// minimum (A >= 1, B >= 2, C >= 1, D >= 3) or does not match the fixed rank of
/// an exceptional family.
SimpleFactor make_factor(Family family, std::uint32_t rank);
void validate(const SimpleFactor& factor);
std::uint32_t minimum_rank(Family family);

/// Highest weight in fundamental-weight coordinates m_1..m_rank.
///
/// Stored sparsely: castling produces SL_m factors with m in the tens of
/// thousands whose weights are always omega_1, omega_{m-1} or 0.
class HighestWeight {
 public:
  struct Term {
    std::uint32_t index;  // 0-based fundamental weight index
    std::uint32_t coeff;  // always nonzero
    auto operator<=>(const Term&) const = default;
  };

  HighestWeight() = default;
  explicit HighestWeight(std::uint32_t rank) : rank_(rank) {}
  HighestWeight(std::initializer_list<std::uint32_t> dense);

  static HighestWeight from_dense(std::span<const std::uint32_t> dense);
  /// coeff * omega_{index+1} in a rank-`rank` factor.
  static HighestWeight fundamental(std::uint32_t rank, std::uint32_t index,
                                   std::uint32_t coeff = 1);

  std::uint32_t rank() const noexcept { return rank_; }
  std::uint32_t operator[](std::uint32_t index) const;
  void set(std::uint32_t index, std::uint32_t coeff);
  bool is_zero() const noexcept { return terms_.empty(); }
  std::uint64_t coefficient_sum() const noexcept;
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::vector<std::uint32_t> dense() const;

  auto operator<=>(const HighestWeight&) const = default;

 private:
  std::uint32_t rank_ = 0;
  std::vector<Term> terms_;
};

/// Positive roots of a simple root system in simple-root coordinates together
/// with the symmetrized bilinear form (alpha_i, alpha_j).
struct RootSystem {
  std::uint32_t rank = 0;
  std::vector<int> half_norm;                  // d_i = (alpha_i, alpha_i) / 2
  std::vector<std::vector<int>> form;          // (alpha_i, alpha_j)
  std::vector<std::vector<int>> positive_roots;
};

/// Cached, thread-safe. Intended for small ranks (<= 64); the classical
/// families use closed product formulas in irrep_dim for large ranks.
const RootSystem& root_system(const SimpleFactor& factor);

/// Dimension of the group: A_n -> n(n+2), B_n, C_n -> n(2n+1),
/// D_n -> n(2n-1), G2 -> 14, F4 -> 52, E6 -> 78, E7 -> 133, E8 -> 248.
Natural simple_dim(const SimpleFactor& factor);

/// Weyl dimension formula. Exceptional families go through the tabulated
/// positive roots; A_n uses a block-compressed product whose cost depends on
/// the number of nonzero coefficients rather than the rank, B/C/D the
/// orthonormal-basis product. Throws phv::Error on a rank mismatch.
Natural irrep_dim(const SimpleFactor& factor, const HighestWeight& weight);

/// prod_{alpha > 0} <lambda + rho, alpha> / <rho, alpha> over root_system().
Natural weyl_dim_from_roots(const SimpleFactor& factor, const HighestWeight& weight);

/// Outer (Dynkin diagram) automorphism: A_n reverses, D_n swaps the last two
/// nodes, E6 flips; identity otherwise.
HighestWeight diagram_automorphism(const SimpleFactor& factor, const HighestWeight& weight);

/// Highest weight of the contragredient module, -w_0(lambda). Agrees with
/// diagram_automorphism except for D_n with n even, where it is the identity.
HighestWeight dual_weight(const SimpleFactor& factor, const HighestWeight& weight);

/// True when diagram_automorphism can act nontrivially on some weight.
bool has_diagram_automorphism(const SimpleFactor& factor);

}  // namespace phv
