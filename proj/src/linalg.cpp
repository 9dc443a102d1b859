#include "fj/linalg.hpp"

#include <utility>

#include "fj/error.hpp"

namespace fj {

namespace {

constexpr std::uint64_t kPrime = 2147483647ULL;  // 2^31 - 1

struct IntegerRows {
  std::vector<Integer> entries;
  Integer scale = 1;  // det(original) = det(entries) / scale
};

IntegerRows to_integer_rows(const RatMatrix& m) {
  IntegerRows out;
  out.entries.resize(m.rows() * m.cols());
  Integer l;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    l = 1;
    for (const auto& x : m.row(r)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& x = m(r, c);
      Integer& dst = out.entries[r * m.cols() + c];
      mpz_divexact(dst.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
      dst *= x.get_num();
    }
    out.scale *= l;
  }
  return out;
}

struct BareissOutcome {
  std::size_t rank = 0;
  int sign = 1;
};

// Fraction-free echelon form in place; every division is exact (Sylvester's identity).
BareissOutcome bareiss(std::vector<Integer>& a, std::size_t rows, std::size_t cols) {
  BareissOutcome out;
  Integer prev = 1;
  Integer tmp;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p * cols + c]) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[p * cols + j], a[r * cols + j]);
      out.sign = -out.sign;
    }
    const Integer& pivot = a[r * cols + c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Integer lead = a[i * cols + c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer& aij = a[i * cols + j];
        mpz_mul(tmp.get_mpz_t(), pivot.get_mpz_t(), aij.get_mpz_t());
        mpz_submul(tmp.get_mpz_t(), lead.get_mpz_t(), a[r * cols + j].get_mpz_t());
        mpz_divexact(aij.get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      a[i * cols + c] = 0;
    }
    prev = pivot;
    ++r;
  }
  out.rank = r;
  return out;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  base %= kPrime;
  while (exp) {
    if (exp & 1) result = result * base % kPrime;
    base = base * base % kPrime;
    exp >>= 1;
  }
  return result;
}

std::size_t modular_rank(std::vector<std::uint64_t> a, std::size_t rows, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p * cols + c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[p * cols + j], a[r * cols + j]);
    }
    const std::uint64_t inv = mod_pow(a[r * cols + c], kPrime - 2);
    for (std::size_t i = r + 1; i < rows; ++i) {
      std::uint64_t f = a[i * cols + c];
      if (f == 0) continue;
      f = f * inv % kPrime;
      for (std::size_t j = c; j < cols; ++j) {
        a[i * cols + j] = (a[i * cols + j] + (kPrime - f) * a[r * cols + j]) % kPrime;
      }
    }
    ++r;
  }
  return r;
}

std::uint64_t residue(const Integer& x) {
  return mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(kPrime));
}

}  // namespace

std::size_t rank(const RatMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  auto ints = to_integer_rows(m);
  return bareiss(ints.entries, m.rows(), m.cols()).rank;
}

Rational det(const RatMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::NonSquare, "det requires a square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  auto ints = to_integer_rows(m);
  const auto outcome = bareiss(ints.entries, n, n);
  if (outcome.rank < n) return Rational(0);
  Rational d(ints.entries[n * n - 1] * outcome.sign, ints.scale);
  d.canonicalize();
  return d;
}

RowEchelon rref(RatMatrix m) {
  RowEchelon out;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  Rational inv, f;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));
    }
    inv = 1 / m(r, c);
    for (std::size_t j = c; j < cols; ++j) {
      if (sgn(m(r, j)) != 0) m(r, j) *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      f = m(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::vector<RatVector> row_reduce_basis(const std::vector<RatVector>& vectors, std::size_t dim) {
  if (vectors.empty()) return {};
  auto echelon = rref(RatMatrix::from_rows(vectors, dim));
  std::vector<RatVector> basis;
  basis.reserve(echelon.pivots.size());
  for (std::size_t r = 0; r < echelon.pivots.size(); ++r) basis.push_back(echelon.reduced.row_vector(r));
  return basis;
}

std::vector<RatVector> nullspace_basis(const RatMatrix& m) {
  const std::size_t cols = m.cols();
  auto echelon = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : echelon.pivots) is_pivot[p] = true;

  std::vector<RatVector> kernel;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t k = 0; k < echelon.pivots.size(); ++k) {
      v[echelon.pivots[k]] = -echelon.reduced(k, f);
    }
    kernel.push_back(std::move(v));
  }
  return row_reduce_basis(kernel, cols);
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::NonSquare, "inverse requires a square matrix");
  const std::size_t n = m.rows();
  RatMatrix augmented(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) augmented(r, c) = m(r, c);
    augmented(r, n + r) = 1;
  }
  auto echelon = rref(std::move(augmented));
  if (echelon.pivots.size() < n || echelon.pivots[n - 1] != n - 1) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = echelon.reduced(r, n + c);
  }
  return inv;
}

IntegerEigenProbe::IntegerEigenProbe(const RatMatrix& m) : matrix_(m), n_(m.rows()) {
  if (!m.is_square()) throw Error(ErrorKind::NonSquare, "eigenvalue probe requires a square matrix");
  integral_ = true;
  for (const auto& x : m.entries()) {
    if (x.get_den() != 1) {
      integral_ = false;
      break;
    }
  }
  if (integral_) {
    residues_.reserve(m.entries().size());
    for (const auto& x : m.entries()) residues_.push_back(residue(x.get_num()));
  }
}

std::size_t IntegerEigenProbe::multiplicity(long t) const {
  if (n_ == 0) return 0;
  if (integral_) {
    auto shifted = residues_;
    const std::uint64_t tm = residue(Integer(t));
    for (std::size_t i = 0; i < n_; ++i) {
      auto& d = shifted[i * n_ + i];
      d = (d + kPrime - tm) % kPrime;
    }
    if (modular_rank(std::move(shifted), n_, n_) == n_) return 0;
  }
  RatMatrix shifted = matrix_;
  for (std::size_t i = 0; i < n_; ++i) shifted(i, i) -= t;
  return n_ - rank(shifted);
}

std::size_t integer_eigen_multiplicity(const RatMatrix& m, long t) {
  return IntegerEigenProbe(m).multiplicity(t);
}

}  // namespace fj
