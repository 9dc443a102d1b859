#pragma once

#include <array>
#include <cstdint>

namespace fj {

/// GF(q) for q in {2, 3, 4}. Elements are small codes 0..q-1. For GF(4) the
/// codes are {0, 1, w, w+1} with w^2 = w + 1, i.e. code 2 = w and code 3 = w^2.
class FiniteField {
 public:
  explicit FiniteField(int q);

  int order() const noexcept { return q_; }
  std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_[a][b]; }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[a][b]; }
  std::uint8_t neg(std::uint8_t a) const { return neg_[a]; }
  std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return add_[a][neg_[b]]; }
  std::uint8_t inv(std::uint8_t a) const { return inv_[a]; }
  /// x -> x^2 on GF(4) (the involutory automorphism); identity on prime fields.
  std::uint8_t conj(std::uint8_t a) const { return conj_[a]; }

 private:
  int q_;
  std::array<std::array<std::uint8_t, 4>, 4> add_{};
  std::array<std::array<std::uint8_t, 4>, 4> mul_{};
  std::array<std::uint8_t, 4> neg_{};
  std::array<std::uint8_t, 4> inv_{};
  std::array<std::uint8_t, 4> conj_{};
};

}  // namespace fj
