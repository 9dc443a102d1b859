#include "fj/albert.hpp"

#include <chrono>
#include <map>
#include <random>

#include "fj/error.hpp"
#include "fj/linalg.hpp"

namespace fj {

namespace {

using Mat3 = std::array<std::array<Octonion, 3>, 3>;

Mat3 to_matrix(const AlbertElement& x) {
  Mat3 m;
  m[0][0] = Octonion::real(x.d);
  m[0][1] = x.F;
  m[0][2] = oct_conj(x.E);
  m[1][0] = oct_conj(x.F);
  m[1][1] = Octonion::real(x.e);
  m[1][2] = x.D;
  m[2][0] = x.E;
  m[2][1] = oct_conj(x.D);
  m[2][2] = Octonion::real(x.f);
  return m;
}

Mat3 mat_mul(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) r[i][j] = r[i][j] + oct_mul(a[i][k], b[k][j]);
    }
  }
  return r;
}

struct PrintedRow {
  const char* name;
  long num, den;
  long d, e, f;
  const char* D;
  const char* E;
  const char* F;
};

const PrintedRow kPrinted[] = {
    {"a", 1, 2, 1, 1, 0, "0", "0", "i0"},
    {"b", 1, 2, 1, 0, 1, "0", "i1", "0"},
    {"c", 1, 2, 0, 1, 1, "i2", "0", "0"},
    {"d", 1, 9, 1, 4, 4, "4i4", "2i3", "2i6"},
    {"ab", 1, 8, 2, 0, 0, "i3", "i1", "i0"},
    {"ac", 1, 8, 0, 2, 0, "i2", "-i6", "i0"},
    {"ad", 1, 36, 2, 8, 0, "-2i1+4i4", "2i3-4i5", "5i0+4i6"},
    {"bc", 1, 8, 0, 0, 2, "i2", "i1", "i4"},
    {"bd", 1, 36, 2, 0, 8, "4i4+2i5", "5i1+4i3", "2i6-4i2"},
    {"cd", 1, 18, 0, 4, 4, "4i2+4i4", "i0+i3", "i6-i5"},
    {"a(bc)", 1, 32, 0, 0, 0, "i2+i3", "i1-i6", "2i4"},
    {"b(ac)", 1, 32, 0, 0, 0, "i2+i3", "-2i6", "i0+i4"},
    {"c(ab)", 1, 32, 0, 0, 0, "2i3", "i1-i6", "i0+i4"},
    {"a(bd)", 1, 144, 4, 0, 0, "5i3-4i1+4i4+2i5", "5i1+4i3+2i4-4i5", "2i0-8i2+4i6"},
    {"a(cd)", 1, 72, 0, 8, 0, "-1-i1+4i2+4i4", "i0+i3-4i5-4i6", "4i0-2i5+2i6"},
    {"b(ad)", 1, 144, 4, 0, 0, "-2i1+5i3+4i4+4i5", "2i1+4i3-8i5", "2+5i0-4i2+4i6"},
    {"b(cd)", 1, 72, 0, 0, 8, "4i2+4i4+i5+i6", "2i0+4i1+2i3", "-4i2+4i4-i5+i6"},
    {"c(ad)", 1, 144, 0, 16, 0, "-4i1+8i2+8i4", "4i0+2i3-4i5-5i6", "5i0-4i3-2i5+4i6"},
    {"c(bd)", 1, 144, 0, 0, 16, "8i2+8i4+4i5", "4+2i0+5i1+4i3", "-4i2+5i4-4i5+2i6"},
    {"(ab)(cd)", 1, 288, 0, 0, 0, "-1-i1+8i3+i5+i6", "2i0+4i1-i2+2i3-i4-4i5-4i6",
     "-1+4i0-i1-4i2+4i4-2i5+2i6"},
    {"(ac)(bd)", 1, 576, 0, 0, 0, "2+4i0-4i1+8i2+5i3+8i4+4i5", "4+2i0+2i4-4i5-10i6",
     "2i0+2i1-8i2+4i3+5i4-4i5+4i6"},
    {"d(a(bc))", 1, 576, 0, 0, 0, "2+8i2+8i3+2i5-4i6", "-8+2i0+5i1-2i4-5i6", "-2-4i2+4i3+10i4-2i5"},
    {"d(b(ac))", 1, 576, 0, 0, 0, "4-2i1+8i2+8i3-2i6", "-4+2i0-2i4-4i5-10i6", "-2+5i0+8i3+5i4-2i5"},
    {"a(b(cd))", 1, 288, 0, 0, 0, "-2-2i1+4i2+4i3+4i4+i5+i6", "2i0+4i1+i2+2i3+i4-4i5-4i6",
     "-8i2+8i4-2i5+2i6"},
    {"(ab)(c(ad))", 1, 2304, 10, 10, 0, "-4+4i0-2i1+5i2+21i3+4i4+4i5+2i6",
     "4+8i0+5i1-2i2+8i3-4i4-16i5-18i6", "2+26i0-4i1-4i2-8i3+3i4-4i5+8i6"},
    {"(ab)(c(bd))", 1, 2304, 10, 0, 10, "-2-4i0-4i1+5i2+21i3+4i4+2i5+4i6",
     "8+4i0+26i1-4i2+8i3+2i4-4i5-3i6", "-4+5i0-2i1-16i2-4i3+18i4-8i5+8i6"},
    {"(ac)(b(cd))", 1, 1152, 0, 8, 8, "-1+4i0-i1+16i2+8i4+2i5+2i6", "4+i0+4i1+i2+i3+i4-4i5-12i6",
     "1+4i0+i1-8i2+4i3+12i4-4i5+4i6"},
};

Octonion random_octonion(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  Octonion o;
  for (auto& x : o.c) {
    x = Rational(num(rng), den(rng));
    x.canonicalize();
  }
  return o;
}

}  // namespace

AlbertElement AlbertElement::operator+(const AlbertElement& o) const {
  return {d + o.d, e + o.e, f + o.f, D + o.D, E + o.E, F + o.F};
}

AlbertElement AlbertElement::operator-(const AlbertElement& o) const {
  return {d - o.d, e - o.e, f - o.f, D - o.D, E - o.E, F - o.F};
}

AlbertElement AlbertElement::operator*(const Rational& s) const {
  return {d * s, e * s, f * s, D * s, E * s, F * s};
}

RatVector to_coordinates(const AlbertElement& x) {
  RatVector v;
  v.reserve(27);
  v.push_back(x.d);
  v.push_back(x.e);
  v.push_back(x.f);
  for (const auto* o : {&x.D, &x.E, &x.F}) v.insert(v.end(), o->c.begin(), o->c.end());
  return v;
}

AlbertElement from_coordinates(const RatVector& v) {
  if (v.size() != 27) throw Error(ErrorKind::BadParams, "Albert coordinates need 27 entries");
  AlbertElement x;
  x.d = v[0];
  x.e = v[1];
  x.f = v[2];
  for (int k = 0; k < 8; ++k) {
    x.D.c[k] = v[3 + k];
    x.E.c[k] = v[11 + k];
    x.F.c[k] = v[19 + k];
  }
  return x;
}

AlbertElement albert_jordan_mul(const AlbertElement& x, const AlbertElement& y) {
  const auto a = to_matrix(x), b = to_matrix(y);
  const auto p = mat_mul(a, b), q = mat_mul(b, a);
  Mat3 s;
  const Rational half(1, 2);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) s[i][j] = (p[i][j] + q[i][j]) * half;
  }
  for (int i = 0; i < 3; ++i) {
    if (!s[i][i].is_real()) throw Error(ErrorKind::NotHermitianResult, "diagonal entry is not real");
  }
  if (s[1][0] != oct_conj(s[0][1]) || s[0][2] != oct_conj(s[2][0]) || s[2][1] != oct_conj(s[1][2])) {
    throw Error(ErrorKind::NotHermitianResult, "off-diagonal entries are not conjugate");
  }
  return {s[0][0].c[0], s[1][1].c[0], s[2][2].c[0], s[1][2], s[2][0], s[0][1]};
}

Rational trace(const AlbertElement& x) { return x.d + x.e + x.f; }

AlbertElement make_albert(const Rational& scale, long d, long e, long f, const std::string& D,
                          const std::string& E, const std::string& F) {
  AlbertElement x{Rational(d), Rational(e), Rational(f), parse_octonion(D), parse_octonion(E),
                  parse_octonion(F)};
  return x * scale;
}

std::string to_string(const AlbertElement& x) {
  return "(" + fj::to_string(x.d) + "," + fj::to_string(x.e) + "," + fj::to_string(x.f) + " | " +
         to_string(x.D) + ", " + to_string(x.E) + ", " + to_string(x.F) + ")";
}

StandardAxes standard_axes() {
  const auto p = printed_basis_27();
  StandardAxes axes{p[0].value, p[1].value, p[2].value, p[3].value};
  for (const auto* x : {&axes.a, &axes.b, &axes.c, &axes.d}) {
    if (albert_jordan_mul(*x, *x) != *x || trace(*x) != 1) {
      throw Error(ErrorKind::ReferenceMismatch, "axis is not an idempotent of trace 1");
    }
  }
  return axes;
}

std::vector<NamedElement> printed_basis_27() {
  std::vector<NamedElement> out;
  for (const auto& r : kPrinted) {
    out.push_back({r.name, make_albert(Rational(r.num, r.den), r.d, r.e, r.f, r.D, r.E, r.F)});
  }
  return out;
}

std::vector<NamedElement> compute_basis_27(const StandardAxes& ax) {
  std::map<std::string, AlbertElement> v;
  v["a"] = ax.a;
  v["b"] = ax.b;
  v["c"] = ax.c;
  v["d"] = ax.d;
  auto J = [&](const std::string& name, const std::string& x, const std::string& y) {
    v[name] = albert_jordan_mul(v.at(x), v.at(y));
  };
  J("ab", "a", "b");
  J("ac", "a", "c");
  J("ad", "a", "d");
  J("bc", "b", "c");
  J("bd", "b", "d");
  J("cd", "c", "d");
  J("a(bc)", "a", "bc");
  J("b(ac)", "b", "ac");
  J("c(ab)", "c", "ab");
  J("a(bd)", "a", "bd");
  J("a(cd)", "a", "cd");
  J("b(ad)", "b", "ad");
  J("b(cd)", "b", "cd");
  J("c(ad)", "c", "ad");
  J("c(bd)", "c", "bd");
  J("(ab)(cd)", "ab", "cd");
  J("(ac)(bd)", "ac", "bd");
  J("d(a(bc))", "d", "a(bc)");
  J("d(b(ac))", "d", "b(ac)");
  J("a(b(cd))", "a", "b(cd)");
  J("(ab)(c(ad))", "ab", "c(ad)");
  J("(ab)(c(bd))", "ab", "c(bd)");
  J("(ac)(b(cd))", "ac", "b(cd)");
  std::vector<NamedElement> out;
  for (const auto& r : kPrinted) out.push_back({r.name, v.at(r.name)});
  return out;
}

std::vector<NamedElement> generated_basis_27() {
  const auto computed = compute_basis_27(standard_axes());
  const auto printed = printed_basis_27();
  for (std::size_t i = 0; i < computed.size(); ++i) {
    if (computed[i].value != printed[i].value) {
      throw Error(ErrorKind::ReferenceMismatch, "product " + computed[i].name + " recomputes to " +
                                                    to_string(computed[i].value) + ", listed as " +
                                                    to_string(printed[i].value));
    }
  }
  return computed;
}

Rational expected_albert_determinant() {
  Integer den;
  Integer three;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, 78);
  mpz_ui_pow_ui(three.get_mpz_t(), 3, 36);
  den *= three;
  return Rational(Integer(1), den);
}

BasisCertificate basis_certificate(const std::vector<NamedElement>& basis) {
  std::vector<RatVector> rows;
  for (const auto& b : basis) rows.push_back(to_coordinates(b.value));
  const auto m = RatMatrix::from_rows(rows, 27);
  BasisCertificate cert;
  cert.rank = rank(m);
  cert.determinant = m.is_square() ? det(m) : Rational(0);
  cert.determinant_matches = abs(cert.determinant) == expected_albert_determinant();
  return cert;
}

BasisCertificate basis_certificate() { return basis_certificate(generated_basis_27()); }

Algebra albert_algebra_standard() {
  std::vector<std::string> labels = {"d", "e", "f"};
  for (char o : {'D', 'E', 'F'}) {
    for (int k = 0; k < 8; ++k) labels.push_back(std::string(1, o) + std::to_string(k));
  }
  Algebra alg(27, labels);
  std::vector<AlbertElement> basis;
  for (std::size_t i = 0; i < 27; ++i) basis.push_back(from_coordinates(unit_vector(27, i)));
  for (std::size_t i = 0; i < 27; ++i) {
    for (std::size_t j = i; j < 27; ++j) {
      alg.set_symmetric(i, j, to_sparse(to_coordinates(albert_jordan_mul(basis[i], basis[j]))));
    }
  }
  return alg;
}

Algebra albert_algebra_generated(const std::vector<NamedElement>& basis) {
  const std::size_t n = basis.size();
  std::vector<RatVector> rows;
  std::vector<std::string> labels;
  for (const auto& b : basis) {
    rows.push_back(to_coordinates(b.value));
    labels.push_back(b.name);
  }
  const auto coeff = RatMatrix::from_rows(rows, 27);
  const auto inv = inverse(coeff);
  if (!inv) throw Error(ErrorKind::ReferenceMismatch, "the generated elements are not a basis");
  const auto inv_t = inv->transpose();
  Algebra alg(n, labels);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const auto p = to_coordinates(albert_jordan_mul(basis[i].value, basis[j].value));
      // p = x * coeff, so x = p * coeff^-1.
      alg.set_symmetric(i, j, to_sparse(inv_t * p));
    }
  }
  return alg;
}

CompositionReport check_composition(std::size_t random_pairs, unsigned seed) {
  CompositionReport r;
  r.table_matches_triples = table_matches_triple_rule();
  bool ok = true;
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      Octonion x, y;
      x.c[a] = 1;
      y.c[b] = 1;
      ok = ok && oct_norm(oct_mul(x, y)) == oct_norm(x) * oct_norm(y);
      ++r.basis_pairs_checked;
    }
  }
  std::mt19937 rng(seed);
  for (std::size_t i = 0; i < random_pairs; ++i) {
    const auto x = random_octonion(rng), y = random_octonion(rng);
    ok = ok && oct_norm(oct_mul(x, y)) == oct_norm(x) * oct_norm(y);
    ++r.random_pairs_checked;
  }
  r.holds = ok && r.table_matches_triples;
  return r;
}

bool AlbertReport::passed() const {
  if (products_matched != 27 || !first_mismatch.empty()) return false;
  if (certificate.rank != 27 || !certificate.determinant_matches) return false;
  if (axes.size() != 4) return false;
  for (const auto& a : axes) {
    if (!a.primitive || !a.idempotent || a.trace != 1) return false;
  }
  return jordan.is_jordan && composition.holds;
}

AlbertReport verify_albert_axial() {
  const auto start = std::chrono::steady_clock::now();
  AlbertReport report;
  const auto axes = standard_axes();
  const auto computed = compute_basis_27(axes);
  const auto printed = printed_basis_27();
  for (std::size_t i = 0; i < computed.size(); ++i) {
    if (computed[i].value == printed[i].value) {
      ++report.products_matched;
    } else if (report.first_mismatch.empty()) {
      report.first_mismatch = computed[i].name;
    }
  }
  report.certificate = basis_certificate(computed);

  const auto standard = albert_algebra_standard();
  const Rational half(1, 2);
  const std::pair<const char*, const AlbertElement*> named[] = {
      {"a", &axes.a}, {"b", &axes.b}, {"c", &axes.c}, {"d", &axes.d}};
  for (const auto& [name, x] : named) {
    AxisReport ar;
    ar.name = name;
    ar.trace = trace(*x);
    ar.idempotent = albert_jordan_mul(*x, *x) == *x;
    const auto v = to_coordinates(*x);
    ar.primitive = is_primitive_axis(standard, v, half);
    const auto p = peirce(standard, v, {Rational(1), Rational(0), half});
    ar.peirce_dims = {p.dim_of(1), p.dim_of(0), p.dim_of(half)};
    report.axes.push_back(ar);
  }

  if (report.certificate.rank == 27) {
    report.jordan = jordan_check(albert_algebra_generated(computed));
  } else {
    report.jordan.is_jordan = false;
  }
  report.composition = check_composition();
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace fj
