#include "fj/subspace.hpp"

#include <cstdlib>
#include <limits>

#include "fj/linalg.hpp"

namespace fj {

std::vector<Integer> integer_multiple(const RatVector& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    mpz_divexact(out[i].get_mpz_t(), l.get_mpz_t(), v[i].get_den_mpz_t());
    out[i] *= v[i].get_num();
  }
  return out;
}

SubspaceTest::SubspaceTest(std::size_t dim, const std::vector<RatVector>& annihilator_rows)
    : dim_(dim), rows_(annihilator_rows.size()) {
  big_.reserve(rows_ * dim_);
  for (const auto& r : annihilator_rows) {
    auto ints = integer_multiple(r);
    for (auto& x : ints) big_.push_back(std::move(x));
  }
  small_ok_ = true;
  small_.reserve(big_.size());
  for (const auto& x : big_) {
    if (!x.fits_slong_p() || abs(x) > Integer(std::numeric_limits<std::int32_t>::max())) {
      small_ok_ = false;
      small_.clear();
      break;
    }
    const auto s = static_cast<std::int64_t>(x.get_si());
    small_.push_back(s);
    small_max_ = std::max(small_max_, std::abs(s));
  }
}

SubspaceTest SubspaceTest::of_span(std::size_t dim, const std::vector<RatVector>& spanning) {
  if (spanning.empty()) {
    std::vector<RatVector> rows;
    for (std::size_t i = 0; i < dim; ++i) rows.push_back(unit_vector(dim, i));
    return SubspaceTest(dim, rows);
  }
  return SubspaceTest(dim, nullspace_basis(RatMatrix::from_rows(spanning, dim)));
}

Integer SubspaceTest::max_abs() const {
  Integer m = 0;
  for (const auto& x : big_) {
    if (abs(x) > m) m = abs(x);
  }
  return m;
}

bool SubspaceTest::contains(const SparseVector& v) const {
  if (v.empty() || rows_ == 0) return true;
  Integer l = 1;
  for (const auto& t : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
  std::vector<Integer> coeffs(v.size());
  bool fits = small_ok_;
  Integer vmax = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    mpz_divexact(coeffs[k].get_mpz_t(), l.get_mpz_t(), v[k].coeff.get_den_mpz_t());
    coeffs[k] *= v[k].coeff.get_num();
    if (abs(coeffs[k]) > vmax) vmax = abs(coeffs[k]);
  }
  // |row . v| < dim * 2^31 * 2^62 stays inside __int128
  if (fits && !(vmax.fits_slong_p() && vmax < Integer(1) << 62)) fits = false;
  if (fits) {
    std::vector<std::int64_t> c(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) c[k] = coeffs[k].get_si();
    for (std::size_t r = 0; r < rows_; ++r) {
      const std::int64_t* row = small_.data() + r * dim_;
      __int128 s = 0;
      for (std::size_t k = 0; k < v.size(); ++k) s += static_cast<__int128>(row[v[k].index]) * c[k];
      if (s != 0) return false;
    }
    return true;
  }
  Integer s;
  for (std::size_t r = 0; r < rows_; ++r) {
    s = 0;
    for (std::size_t k = 0; k < v.size(); ++k) {
      mpz_addmul(s.get_mpz_t(), big_[r * dim_ + v[k].index].get_mpz_t(), coeffs[k].get_mpz_t());
    }
    if (sgn(s) != 0) return false;
  }
  return true;
}

}  // namespace fj
