#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "fj/algebra.hpp"
#include "fj/fischer.hpp"
#include "fj/subspace.hpp"
#include "fj/transposition_class.hpp"

namespace fj {

struct MatsuoAlgebra {
  Algebra algebra;
  std::shared_ptr<const TranspositionClass> cls;
  Rational eta;
  RatMatrix gram;
  /// Filled by radical().
  std::optional<std::vector<RatVector>> radical_basis;
  /// Columns of an independent set of Gram rows, filled by radical().
  std::vector<std::size_t> gram_pivots;
};

/// c.c = c, c.d = 0 for |cd| = 2, c.d = (eta/2)(c + d - c^d) for |cd| = 3.
/// Throws Error(BadEta) for eta in {0, 1}.
MatsuoAlgebra build_matsuo(std::shared_ptr<const TranspositionClass> cls, const Rational& eta);

/// gram == I + (eta/2) A entry by entry.
bool check_gram_identity(const MatsuoAlgebra& m);
bool check_gram_identity(const RatMatrix& gram, const Diagram& g, const Rational& eta);

/// (b_i b_j, b_k) == (b_i, b_j b_k) over all basis triples.
bool check_frobenius(const Algebra& a, const RatMatrix& gram);
inline bool check_frobenius(const MatsuoAlgebra& m) { return check_frobenius(m.algebra, m.gram); }

/// Gram nullspace in reduced echelon form; cached in m.
const std::vector<RatVector>& radical(MatsuoAlgebra& m);

/// Membership in the radical via the independent Gram rows.
SubspaceTest radical_test(MatsuoAlgebra& m);

/// Multiplicity of -4 in the diagram spectrum. Throws Error(WrongEta) unless eta = 1/2.
std::size_t radical_dim_via_spectrum(const MatsuoAlgebra& m);
std::size_t radical_dim_via_spectrum(const MatsuoAlgebra& m, const SpectrumReport& spec);

/// Closed-form radical basis for the wreath classes over cyclic 2 or 3
/// (first the r(i,j)(n-1,n), then the r(1,n-1)(i,n)). Throws Error(MissingLabels)
/// when the class does not carry wreath labels.
std::vector<RatVector> wr_radical_basis(const TranspositionClass& cls);

/// (c.d)^g == c^g . d^g for every generator g of the class spec.
bool check_equivariance(const MatsuoAlgebra& m);

/// d.r pairs to zero with everything, for every radical vector r and basis d.
bool radical_is_ideal(MatsuoAlgebra& m);

struct QuotientAlgebra {
  Algebra algebra;
  RatMatrix projection;              // quotient coordinates of each basis vector, dim x n
  std::vector<std::size_t> section;  // basis indices representing the quotient basis
  std::vector<std::size_t> pivots;   // pivot columns of the reduced ideal basis
};

/// Quotient by the span of ideal_basis. Throws Error(NotAnIdeal) naming a
/// basis element and ideal vector whose product leaves the span.
QuotientAlgebra quotient(const Algebra& a, const std::vector<RatVector>& ideal_basis);
inline QuotientAlgebra quotient(const MatsuoAlgebra& m, const std::vector<RatVector>& ideal_basis) {
  return quotient(m.algebra, ideal_basis);
}

}  // namespace fj
