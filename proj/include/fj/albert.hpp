#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "fj/algebra.hpp"
#include "fj/jordan.hpp"
#include "fj/octonion.hpp"

namespace fj {

/// The Hermitian matrix [[d, F, conj(E)], [conj(F), e, D], [E, conj(D), f]].
struct AlbertElement {
  Rational d, e, f;
  Octonion D, E, F;

  bool operator==(const AlbertElement& o) const = default;
  AlbertElement operator+(const AlbertElement& o) const;
  AlbertElement operator-(const AlbertElement& o) const;
  AlbertElement operator*(const Rational& s) const;
};

/// Coordinates ordered (d, e, f, D0..D7, E0..E7, F0..F7).
RatVector to_coordinates(const AlbertElement& x);
AlbertElement from_coordinates(const RatVector& v);

/// X o Y = (XY + YX) / 2. Throws Error(NotHermitianResult) if the symmetrized
/// matrix is not Hermitian.
AlbertElement albert_jordan_mul(const AlbertElement& x, const AlbertElement& y);
Rational trace(const AlbertElement& x);

/// scale * (d, e, f | D, E, F) with octonion entries given as text.
AlbertElement make_albert(const Rational& scale, long d, long e, long f, const std::string& D,
                          const std::string& E, const std::string& F);
std::string to_string(const AlbertElement& x);

struct StandardAxes {
  AlbertElement a, b, c, d;
};
StandardAxes standard_axes();

struct NamedElement {
  std::string name;
  AlbertElement value;
};

/// The published coordinates of the 27 spanning products, in listing order.
std::vector<NamedElement> printed_basis_27();
/// Products recomputed from the axes, without comparison.
std::vector<NamedElement> compute_basis_27(const StandardAxes& axes);
/// Recomputes the 27 products and compares them against the published list.
/// Throws Error(ReferenceMismatch) naming the first disagreeing product.
std::vector<NamedElement> generated_basis_27();

struct BasisCertificate {
  Rational determinant;
  std::size_t rank = 0;
  bool determinant_matches = false;  // |det| == 1 / (2^78 3^36)
};
Rational expected_albert_determinant();
BasisCertificate basis_certificate(const std::vector<NamedElement>& basis);
BasisCertificate basis_certificate();

/// Structure constants on the 27 coordinate vectors.
Algebra albert_algebra_standard();
/// Structure constants in the generated basis.
Algebra albert_algebra_generated(const std::vector<NamedElement>& basis);

struct CompositionReport {
  bool table_matches_triples = false;
  std::size_t basis_pairs_checked = 0;
  std::size_t random_pairs_checked = 0;
  bool holds = false;
};
CompositionReport check_composition(std::size_t random_pairs = 100, unsigned seed = 20240601u);

struct AxisReport {
  std::string name;
  Rational trace;
  bool idempotent = false;
  bool primitive = false;
  std::array<std::size_t, 3> peirce_dims{};  // A_1, A_0, A_1/2
};

struct AlbertReport {
  std::size_t products_matched = 0;
  std::string first_mismatch;
  BasisCertificate certificate;
  std::vector<AxisReport> axes;
  JordanVerdict jordan;
  CompositionReport composition;
  double seconds = 0;

  bool passed() const;
};

AlbertReport verify_albert_axial();

}  // namespace fj
