#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fj/rational.hpp"

namespace fj {

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols);
  static RatMatrix diagonal(const RatVector& diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
  RatVector row_vector(std::size_t r) const;
  RatVector column_vector(std::size_t c) const;

  const std::vector<Rational>& entries() const noexcept { return entries_; }

  RatMatrix transpose() const;
  bool is_symmetric() const;

  bool operator==(const RatMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatVector operator*(const RatMatrix& a, const RatVector& v);
RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(const Rational& s, const RatMatrix& a);

}  // namespace fj
