#include "fj/octonion.hpp"

#include <cctype>

#include "fj/error.hpp"

namespace fj {

namespace {

// Row i_a, column i_b gives i_a * i_b; entries are (sign, unit) with unit -1 meaning the real 1.
constexpr int kTable[7][7][2] = {
    {{-1, -1}, {1, 3}, {1, 6}, {-1, 1}, {1, 5}, {-1, 4}, {-1, 2}},
    {{-1, 3}, {-1, -1}, {1, 4}, {1, 0}, {-1, 2}, {1, 6}, {-1, 5}},
    {{-1, 6}, {-1, 4}, {-1, -1}, {1, 5}, {1, 1}, {-1, 3}, {1, 0}},
    {{1, 1}, {-1, 0}, {-1, 5}, {-1, -1}, {1, 6}, {1, 2}, {-1, 4}},
    {{-1, 5}, {1, 2}, {-1, 1}, {-1, 6}, {-1, -1}, {1, 0}, {1, 3}},
    {{1, 4}, {-1, 6}, {1, 3}, {-1, 2}, {-1, 0}, {-1, -1}, {1, 1}},
    {{1, 2}, {1, 5}, {-1, 0}, {1, 4}, {-1, 3}, {-1, 1}, {-1, -1}},
};

}  // namespace

Octonion Octonion::real(const Rational& r) {
  Octonion o;
  o.c[0] = r;
  return o;
}

Octonion Octonion::unit(int k) {
  Octonion o;
  o.c.at(k + 1) = 1;
  return o;
}

Octonion Octonion::operator+(const Octonion& o) const {
  Octonion r;
  for (int k = 0; k < 8; ++k) r.c[k] = c[k] + o.c[k];
  return r;
}

Octonion Octonion::operator-(const Octonion& o) const {
  Octonion r;
  for (int k = 0; k < 8; ++k) r.c[k] = c[k] - o.c[k];
  return r;
}

Octonion Octonion::operator-() const {
  Octonion r;
  for (int k = 0; k < 8; ++k) r.c[k] = -c[k];
  return r;
}

Octonion Octonion::operator*(const Rational& s) const {
  Octonion r;
  for (int k = 0; k < 8; ++k) r.c[k] = c[k] * s;
  return r;
}

bool Octonion::is_zero() const {
  for (const auto& x : c) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

bool Octonion::is_real() const {
  for (int k = 1; k < 8; ++k) {
    if (sgn(c[k]) != 0) return false;
  }
  return true;
}

UnitProduct unit_product(int a, int b) {
  if (a == 0) return {1, b};
  if (b == 0) return {1, a};
  const auto& e = kTable[a - 1][b - 1];
  return {e[0], e[1] + 1};
}

UnitProduct triple_rule_product(int a, int b) {
  if (a == 0) return {1, b};
  if (b == 0) return {1, a};
  if (a == b) return {-1, 0};
  const int x = a - 1, y = b - 1;
  for (int t = 0; t < 7; ++t) {
    const int tri[3] = {t, (t + 1) % 7, (t + 3) % 7};
    for (int r = 0; r < 3; ++r) {
      const int p = tri[r], q = tri[(r + 1) % 3], s = tri[(r + 2) % 3];
      if (x == p && y == q) return {1, s + 1};
      if (x == q && y == p) return {-1, s + 1};
    }
  }
  throw Error(ErrorKind::ReferenceMismatch, "unit pair outside every quaternion triple");
}

bool table_matches_triple_rule() {
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      const auto u = unit_product(a, b);
      const auto v = triple_rule_product(a, b);
      if (u.sign != v.sign || u.index != v.index) return false;
    }
  }
  return true;
}

Octonion oct_mul(const Octonion& x, const Octonion& y) {
  Octonion z;
  for (int a = 0; a < 8; ++a) {
    if (sgn(x.c[a]) == 0) continue;
    for (int b = 0; b < 8; ++b) {
      if (sgn(y.c[b]) == 0) continue;
      const auto u = unit_product(a, b);
      if (u.sign > 0) {
        z.c[u.index] += x.c[a] * y.c[b];
      } else {
        z.c[u.index] -= x.c[a] * y.c[b];
      }
    }
  }
  return z;
}

Octonion oct_conj(const Octonion& x) {
  Octonion r = -x;
  r.c[0] = x.c[0];
  return r;
}

Rational oct_norm(const Octonion& x) {
  const auto p = oct_mul(x, oct_conj(x));
  if (!p.is_real()) throw Error(ErrorKind::NonScalarNorm, "x * conj(x) has an imaginary part");
  return p.c[0];
}

Octonion parse_octonion(std::string_view text) {
  Octonion o;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (pos == text.size()) throw Error(ErrorKind::ParseError, "empty octonion");
  bool first = true;
  while (pos < text.size()) {
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      throw Error(ErrorKind::ParseError, "expected + or - in '" + std::string(text) + "'");
    }
    first = false;
    const std::size_t start = pos;
    while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
    Rational coeff = start == pos ? Rational(1) : parse_rational(text.substr(start, pos - start));
    int index = 0;
    if (pos < text.size() && text[pos] == 'i') {
      ++pos;
      if (pos < text.size() && text[pos] == '_') ++pos;
      if (pos >= text.size() || text[pos] < '0' || text[pos] > '6') {
        throw Error(ErrorKind::ParseError, "bad unit in '" + std::string(text) + "'");
      }
      index = text[pos] - '0' + 1;
      ++pos;
    } else if (start == pos) {
      throw Error(ErrorKind::ParseError, "empty term in '" + std::string(text) + "'");
    }
    o.c[index] += sign * coeff;
    skip();
  }
  return o;
}

std::string to_string(const Octonion& x) {
  std::string s;
  for (int k = 0; k < 8; ++k) {
    const auto& v = x.c[k];
    if (sgn(v) == 0) continue;
    const bool neg = sgn(v) < 0;
    const Rational mag = neg ? Rational(-v) : v;
    if (!s.empty() || neg) s += neg ? "-" : "+";
    if (k == 0 || mag != 1) s += fj::to_string(mag);
    if (k > 0) s += "i" + std::to_string(k - 1);
  }
  return s.empty() ? "0" : s;
}

}  // namespace fj
