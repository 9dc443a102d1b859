#pragma once

#include <array>
#include <string>
#include <string_view>

#include "fj/rational.hpp"

namespace fj {

/// Rational octonion over the basis (1, i0, ..., i6); coordinate k+1 holds i_k.
struct Octonion {
  std::array<Rational, 8> c{};

  static Octonion real(const Rational& r);
  static Octonion unit(int k);  // i_k, k in 0..6

  Octonion operator+(const Octonion& o) const;
  Octonion operator-(const Octonion& o) const;
  Octonion operator-() const;
  Octonion operator*(const Rational& s) const;
  bool operator==(const Octonion& o) const = default;
  bool is_zero() const;
  bool is_real() const;
};

struct UnitProduct {
  int sign = 1;
  int index = 0;  // 0 = real unit, k+1 = i_k
};

/// Product of basis units as transcribed from the multiplication table.
UnitProduct unit_product(int a, int b);
/// The same product derived from the rule that (i_t, i_t+1, i_t+3) multiply like (i, j, k).
UnitProduct triple_rule_product(int a, int b);
/// True when the stored table and the triple rule agree on all 64 unit pairs.
bool table_matches_triple_rule();

Octonion oct_mul(const Octonion& x, const Octonion& y);
Octonion oct_conj(const Octonion& x);
/// x * conj(x) as a rational. Throws Error(NonScalarNorm) if it is not real.
Rational oct_norm(const Octonion& x);

/// Parses expressions such as "0", "i3", "-2i1+4i4", "2+5i0-4i2".
Octonion parse_octonion(std::string_view text);
std::string to_string(const Octonion& x);

}  // namespace fj
