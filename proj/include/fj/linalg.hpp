#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "fj/matrix.hpp"

namespace fj {

/// Row rank over Q, by fraction-free (Bareiss) elimination on row-scaled integers.
std::size_t rank(const RatMatrix& m);

/// Exact determinant. Throws Error(NonSquare) for rectangular input.
Rational det(const RatMatrix& m);

struct RowEchelon {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;  // ascending pivot columns, one per nonzero row
};

/// Gauss-Jordan reduced row-echelon form over Q.
RowEchelon rref(RatMatrix m);

/// Basis of the right kernel, itself in reduced row-echelon form.
/// Empty iff the matrix has full column rank.
std::vector<RatVector> nullspace_basis(const RatMatrix& m);

/// Reduced row-echelon basis of span(vectors); zero rows dropped.
std::vector<RatVector> row_reduce_basis(const std::vector<RatVector>& vectors, std::size_t dim);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

/// Nullity of (M - tI) over Q; equals the multiplicity of t as an eigenvalue
/// for the symmetric matrices this library builds.
std::size_t integer_eigen_multiplicity(const RatMatrix& m, long t);

/// Repeated eigenvalue probing against one matrix. Integer matrices are first
/// reduced modulo a 31-bit prime: a full modular rank proves full rank over Q,
/// so only genuine candidates pay for exact elimination.
class IntegerEigenProbe {
 public:
  explicit IntegerEigenProbe(const RatMatrix& m);

  std::size_t size() const noexcept { return n_; }
  std::size_t multiplicity(long t) const;

 private:
  RatMatrix matrix_;
  std::size_t n_ = 0;
  bool integral_ = false;
  std::vector<std::uint64_t> residues_;
};

}  // namespace fj
