#include "fj/finite_field.hpp"

#include "fj/error.hpp"

namespace fj {

FiniteField::FiniteField(int q) : q_(q) {
  if (q == 2 || q == 3) {
    for (int a = 0; a < q; ++a) {
      for (int b = 0; b < q; ++b) {
        add_[a][b] = static_cast<std::uint8_t>((a + b) % q);
        mul_[a][b] = static_cast<std::uint8_t>((a * b) % q);
      }
      neg_[a] = static_cast<std::uint8_t>((q - a) % q);
      conj_[a] = static_cast<std::uint8_t>(a);
    }
  } else if (q == 4) {
    // bit 0 = coefficient of 1, bit 1 = coefficient of w.
    static constexpr std::uint8_t kMul[4][4] = {
        {0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        add_[a][b] = static_cast<std::uint8_t>(a ^ b);
        mul_[a][b] = kMul[a][b];
      }
      neg_[a] = static_cast<std::uint8_t>(a);
      conj_[a] = kMul[a][a];
    }
  } else {
    throw Error(ErrorKind::BadParams, "unsupported field order " + std::to_string(q));
  }
  for (int a = 1; a < q; ++a) {
    for (int b = 1; b < q; ++b) {
      if (mul_[a][b] == 1) inv_[a] = static_cast<std::uint8_t>(b);
    }
  }
}

}  // namespace fj
