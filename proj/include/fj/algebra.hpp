#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fj/matrix.hpp"
#include "fj/rational.hpp"

namespace fj {

struct Term {
  std::uint32_t index = 0;
  Rational coeff;

  friend bool operator==(const Term& a, const Term& b) { return a.index == b.index && a.coeff == b.coeff; }
};

/// Sorted by index, no zero coefficients.
using SparseVector = std::vector<Term>;

SparseVector to_sparse(const RatVector& v);
RatVector to_dense(const SparseVector& v, std::size_t dim);
/// Sorts, merges repeated indices, drops zeros.
SparseVector canonical(SparseVector v);

/// Finite-dimensional algebra given by structure constants on a basis.
class Algebra {
 public:
  Algebra() = default;
  Algebra(std::size_t dim, std::vector<std::string> labels);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  const SparseVector& product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  void set_product(std::size_t i, std::size_t j, SparseVector v);
  /// Sets both (i,j) and (j,i).
  void set_symmetric(std::size_t i, std::size_t j, SparseVector v);

  RatVector multiply(const RatVector& x, const RatVector& y) const;
  SparseVector multiply(const SparseVector& x, const SparseVector& y) const;
  RatVector multiply_basis(std::size_t i, const RatVector& y) const;

  bool is_commutative() const;

  nlohmann::json to_json(const std::optional<Rational>& eta = std::nullopt) const;
  static Algebra from_json(const nlohmann::json& j);

  friend bool operator==(const Algebra& a, const Algebra& b);

 private:
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<SparseVector> table_;
};

/// Associator (xy)z - x(yz).
RatVector associator(const Algebra& a, const RatVector& x, const RatVector& y, const RatVector& z);

}  // namespace fj
