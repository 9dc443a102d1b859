#include "fj/matsuo.hpp"

#include <limits>
#include <map>
#include <tuple>

#include "fj/error.hpp"
#include "fj/linalg.hpp"

namespace fj {

namespace {

// Scales every entry of a sparse table to integers with one common factor.
// Returns false when some scaled entry leaves the int32 range.
bool scaled_table(const Algebra& a, std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>>& out) {
  Integer l = 1;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& t : a.product(i, j)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
    }
  }
  out.assign(n * n, {});
  Integer x;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& t : a.product(i, j)) {
        mpz_divexact(x.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
        x *= t.coeff.get_num();
        if (!x.fits_sint_p()) return false;
        out[i * n + j].emplace_back(t.index, x.get_si());
      }
    }
  }
  return true;
}

bool scaled_dense(const RatMatrix& m, std::vector<std::int64_t>& out) {
  Integer l = 1;
  for (const auto& x : m.entries()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  out.clear();
  out.reserve(m.entries().size());
  Integer y;
  for (const auto& x : m.entries()) {
    mpz_divexact(y.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    y *= x.get_num();
    if (!y.fits_sint_p()) return false;
    out.push_back(y.get_si());
  }
  return true;
}

SparseVector permute(const SparseVector& v, const std::vector<std::size_t>& perm) {
  SparseVector out;
  out.reserve(v.size());
  for (const auto& t : v) out.push_back({static_cast<std::uint32_t>(perm[t.index]), t.coeff});
  return canonical(std::move(out));
}

bool same(const SparseVector& a, const SparseVector& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].index != b[k].index || a[k].coeff != b[k].coeff) return false;
  }
  return true;
}

SparseVector times_basis(const Algebra& a, std::size_t d, const SparseVector& r) {
  SparseVector out;
  for (const auto& t : r) {
    for (const auto& p : a.product(d, t.index)) out.push_back({p.index, t.coeff * p.coeff});
  }
  return canonical(std::move(out));
}

}  // namespace

MatsuoAlgebra build_matsuo(std::shared_ptr<const TranspositionClass> cls, const Rational& eta) {
  if (sgn(eta) == 0 || eta == 1) throw Error(ErrorKind::BadEta, "eta must differ from 0 and 1");
  const std::size_t n = cls->size();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(cls->label(i));
  MatsuoAlgebra m{Algebra(n, std::move(labels)), cls, eta, RatMatrix::identity(n), std::nullopt, {}};
  const Rational half = eta / 2;
  for (std::size_t i = 0; i < n; ++i) {
    m.algebra.set_product(i, i, {{static_cast<std::uint32_t>(i), Rational(1)}});
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!cls->adjacent(i, j)) continue;
      const auto e = cls->third_point(i, j);
      m.algebra.set_symmetric(i, j,
                              {{static_cast<std::uint32_t>(i), half},
                               {static_cast<std::uint32_t>(j), half},
                               {static_cast<std::uint32_t>(e), -half}});
      m.gram(i, j) = half;
      m.gram(j, i) = half;
    }
  }
  return m;
}

bool check_gram_identity(const RatMatrix& gram, const Diagram& g, const Rational& eta) {
  const std::size_t n = g.size();
  if (gram.rows() != n || gram.cols() != n) return false;
  const Rational half = eta / 2;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational expected = i == j ? Rational(1) : (g.adjacent(i, j) ? half : Rational(0));
      if (gram(i, j) != expected) return false;
    }
  }
  return true;
}

bool check_gram_identity(const MatsuoAlgebra& m) { return check_gram_identity(m.gram, diagram(*m.cls), m.eta); }

bool check_frobenius(const Algebra& a, const RatMatrix& gram) {
  const std::size_t n = a.dim();
  if (gram.rows() != n || gram.cols() != n) return false;
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> s;
  std::vector<std::int64_t> g;
  if (scaled_table(a, s) && scaled_dense(gram, g)) {
    // entries below 2^31, so every sum stays far inside __int128
    std::vector<__int128> lhs(n), rhs(n);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        const auto& sij = s[i * n + j];
        for (std::size_t k = 0; k < n; ++k) {
          __int128 l = 0, r = 0;
          for (const auto& [t, c] : sij) l += static_cast<__int128>(c) * g[t * n + k];
          for (const auto& [t, c] : s[j * n + k]) r += static_cast<__int128>(c) * g[i * n + t];
          if (l != r) return false;
        }
      }
    }
    return true;
  }
  Rational l, r;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        l = 0;
        r = 0;
        for (const auto& t : a.product(i, j)) l += t.coeff * gram(t.index, k);
        for (const auto& t : a.product(j, k)) r += t.coeff * gram(i, t.index);
        if (l != r) return false;
      }
    }
  }
  return true;
}

const std::vector<RatVector>& radical(MatsuoAlgebra& m) {
  if (m.radical_basis) return *m.radical_basis;
  const std::size_t n = m.gram.cols();
  auto echelon = rref(m.gram);
  std::vector<bool> is_pivot(n, false);
  for (auto p : echelon.pivots) is_pivot[p] = true;
  std::vector<RatVector> kernel;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(n, Rational(0));
    v[f] = 1;
    for (std::size_t k = 0; k < echelon.pivots.size(); ++k) v[echelon.pivots[k]] = -echelon.reduced(k, f);
    kernel.push_back(std::move(v));
  }
  m.gram_pivots = echelon.pivots;
  m.radical_basis = row_reduce_basis(kernel, n);
  return *m.radical_basis;
}

SubspaceTest radical_test(MatsuoAlgebra& m) {
  radical(m);
  std::vector<RatVector> rows;
  rows.reserve(m.gram_pivots.size());
  for (auto p : m.gram_pivots) rows.push_back(m.gram.row_vector(p));
  return SubspaceTest(m.gram.cols(), rows);
}

std::size_t radical_dim_via_spectrum(const MatsuoAlgebra& m, const SpectrumReport& spec) {
  if (m.eta != Rational(1, 2)) throw Error(ErrorKind::WrongEta, "the -4 correspondence needs eta = 1/2");
  return spec.multiplicity(-4);
}

std::size_t radical_dim_via_spectrum(const MatsuoAlgebra& m) {
  if (m.eta != Rational(1, 2)) throw Error(ErrorKind::WrongEta, "the -4 correspondence needs eta = 1/2");
  return radical_dim_via_spectrum(m, spectrum(diagram(*m.cls)));
}

std::vector<RatVector> wr_radical_basis(const TranspositionClass& cls) {
  const auto* be = dynamic_cast<const WreathBackend*>(&cls.backend());
  if (!be) throw Error(ErrorKind::MissingLabels, "class carries no wreath point labels");
  const std::size_t p = be->base().size();
  if (p != 2 && p != 3) throw Error(ErrorKind::MissingLabels, "wreath labels need a cyclic base of order 2 or 3");
  const std::size_t n = be->n();
  if (n < 4) throw Error(ErrorKind::BadParams, "closed-form radical needs n >= 4");
  std::map<std::tuple<std::uint16_t, std::size_t, std::size_t>, std::size_t> where;
  for (std::size_t k = 0; k < cls.size(); ++k) {
    const auto s = be->symbol(cls.element(k));
    if (!s) throw Error(ErrorKind::MissingLabels, "class element without a t.(i,j) label");
    where[{s->t, s->i, s->j}] = k;
  }
  auto point = [&](std::uint16_t t, std::size_t x, std::size_t y) {
    const auto key = x < y ? std::make_tuple(t, x, y) : std::make_tuple(be->base().inverse(t), y, x);
    const auto it = where.find(key);
    if (it == where.end()) throw Error(ErrorKind::MissingLabels, "label missing from class");
    return it->second;
  };
  auto r = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    RatVector v(cls.size(), Rational(0));
    auto add = [&](std::uint16_t t, std::size_t x, std::size_t y, int sign) { v[point(t, x, y)] += sign; };
    add(0, i, j, 1), add(0, i, l, -1), add(0, j, k, -1), add(0, k, l, 1);
    add(1, i, j, 1), add(1, i, l, -1), add(1, j, k, -1), add(1, k, l, 1);
    if (p == 3) add(1, j, i, 1), add(1, l, i, -1), add(1, k, j, -1), add(1, l, k, 1);
    return v;
  };
  std::vector<RatVector> out;
  for (std::size_t i = 0; i + 3 < n; ++i) {
    for (std::size_t j = i + 1; j + 2 < n; ++j) out.push_back(r(i, j, n - 2, n - 1));
  }
  for (std::size_t i = 1; i + 2 < n; ++i) out.push_back(r(0, n - 2, i, n - 1));
  return out;
}

bool check_equivariance(const MatsuoAlgebra& m) {
  const std::size_t n = m.algebra.dim();
  for (const auto& g : m.cls->spec().generators) {
    const auto perm = m.cls->conjugation_action(g);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!same(permute(m.algebra.product(i, j), perm), m.algebra.product(perm[i], perm[j]))) return false;
      }
    }
  }
  return true;
}

bool radical_is_ideal(MatsuoAlgebra& m) {
  const auto test = radical_test(m);
  for (const auto& r : radical(m)) {
    const auto rs = to_sparse(r);
    for (std::size_t d = 0; d < m.algebra.dim(); ++d) {
      if (!test.contains(times_basis(m.algebra, d, rs))) return false;
    }
  }
  return true;
}

QuotientAlgebra quotient(const Algebra& a, const std::vector<RatVector>& ideal_basis) {
  const std::size_t n = a.dim();
  QuotientAlgebra out;
  std::vector<RatVector> rows;
  if (!ideal_basis.empty()) {
    auto echelon = rref(RatMatrix::from_rows(ideal_basis, n));
    out.pivots = echelon.pivots;
    for (std::size_t k = 0; k < echelon.pivots.size(); ++k) rows.push_back(echelon.reduced.row_vector(k));
  }
  std::vector<bool> is_pivot(n, false);
  for (auto p : out.pivots) is_pivot[p] = true;
  for (std::size_t j = 0; j < n; ++j) {
    if (!is_pivot[j]) out.section.push_back(j);
  }

  // Annihilator of the ideal: one functional per free column.
  std::vector<RatVector> annihilator;
  for (std::size_t a_idx = 0; a_idx < out.section.size(); ++a_idx) {
    const auto f = out.section[a_idx];
    RatVector v(n, Rational(0));
    v[f] = 1;
    for (std::size_t k = 0; k < rows.size(); ++k) v[out.pivots[k]] = -rows[k][f];
    annihilator.push_back(std::move(v));
  }
  const SubspaceTest test(n, annihilator);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto rs = to_sparse(rows[k]);
    for (std::size_t d = 0; d < n; ++d) {
      if (!test.contains(times_basis(a, d, rs))) {
        throw Error(ErrorKind::NotAnIdeal, "product of basis element " + a.labels()[d] + " with ideal vector " +
                                               std::to_string(k) + " leaves the span");
      }
    }
  }

  const std::size_t q = out.section.size();
  out.projection = RatMatrix(q, n);
  for (std::size_t a_idx = 0; a_idx < q; ++a_idx) {
    const auto f = out.section[a_idx];
    out.projection(a_idx, f) = 1;
    for (std::size_t k = 0; k < rows.size(); ++k) out.projection(a_idx, out.pivots[k]) = -rows[k][f];
  }
  std::vector<std::string> labels;
  for (auto s : out.section) labels.push_back(a.labels()[s]);
  out.algebra = Algebra(q, std::move(labels));
  for (std::size_t x = 0; x < q; ++x) {
    for (std::size_t y = 0; y < q; ++y) {
      SparseVector v;
      for (const auto& t : a.product(out.section[x], out.section[y])) {
        for (std::size_t c = 0; c < q; ++c) {
          const auto& pc = out.projection(c, t.index);
          if (sgn(pc) != 0) v.push_back({static_cast<std::uint32_t>(c), t.coeff * pc});
        }
      }
      out.algebra.set_product(x, y, std::move(v));
    }
  }
  return out;
}

}  // namespace fj
