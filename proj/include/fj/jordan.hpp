#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fj/algebra.hpp"
#include "fj/matsuo.hpp"
#include "fj/subspace.hpp"

namespace fj {

/// Left multiplication by x; column j holds x * e_j.
RatMatrix adjoint_matrix(const Algebra& a, const RatVector& x);

struct FusionViolation {
  Rational lambda;
  Rational mu;
  std::string detail;
};

struct PeirceReport {
  std::vector<Rational> eigenvalues;
  std::vector<std::size_t> dims;
  std::vector<FusionViolation> fusion_violations;

  std::size_t dim_of(const Rational& lambda) const;
};

/// Eigenspaces of ad_e for the expected eigenvalues {1, 0, eta, ...} and the
/// Jordan-type fusion law (1 and 0 even, everything else odd, A_0 A_0 in A_0).
/// Throws Error(NotIdempotent) or Error(NotSemisimple).
PeirceReport peirce(const Algebra& a, const RatVector& e, const std::vector<Rational>& expected);

bool is_primitive_axis(const Algebra& a, const RatVector& x, const Rational& eta);

/// (xz, y, w) + (zw, y, x) + (wx, y, z).
RatVector w_element(const Algebra& a, const RatVector& x, const RatVector& y, const RatVector& z,
                    const RatVector& w);
RatVector w_element(const Algebra& a, std::size_t x, std::size_t y, std::size_t z, std::size_t w);

struct JordanVerdict {
  bool is_jordan = true;
  std::optional<std::array<std::size_t, 4>> counterexample;  // (x, y, z, w)
  std::uint64_t quadruples_checked = 0;
  bool symmetry_reduction_used = false;
};

/// Linearized Jordan identity over all y and all multisets {x, z, w} of basis elements.
JordanVerdict jordan_check(const Algebra& a);

/// Same sweep, but a defect only counts when it leaves the subspace tested by
/// `ideal`. `ys` lists the middle arguments to try, in order.
JordanVerdict jordan_sweep(const Algebra& a, const SubspaceTest* ideal, const std::vector<std::size_t>& ys);

/// Is M / M^perp Jordan? With use_symmetry the middle argument is fixed to the
/// seed, which is sound when the class is one orbit of the spec generators.
JordanVerdict jordan_modulo_radical(MatsuoAlgebra& m, bool use_symmetry);

/// Membership of one w-element in the radical.
bool w_in_radical(MatsuoAlgebra& m, std::size_t x, std::size_t y, std::size_t z, std::size_t w);

enum class EtaCase { SingleAxis, CompleteEtaTwo, NoJordanFactor };

std::string_view to_string(EtaCase c);

struct EtaAnalysis {
  EtaCase kind = EtaCase::NoJordanFactor;
  std::optional<std::size_t> quotient_dim;
  std::size_t radical_dim = 0;
  bool differences_in_radical = false;
  /// For small classes: M / M^perp checked directly and found not Jordan.
  std::optional<bool> quotient_not_jordan;
};

/// Throws Error(WrongEta) when eta = 1/2.
EtaAnalysis eta_not_half_analysis(MatsuoAlgebra& m, std::size_t confirm_limit = 64);

}  // namespace fj
