#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fj/algebra.hpp"

namespace fj {

/// Exact membership in a fixed subspace of Q^n, tested against integer rows
/// of its annihilator: v lies in the subspace iff every row pairs to zero with v.
class SubspaceTest {
 public:
  SubspaceTest() = default;
  /// Rows spanning the annihilator (need not be independent).
  SubspaceTest(std::size_t dim, const std::vector<RatVector>& annihilator_rows);

  /// Annihilator computed from a spanning set of the subspace itself.
  static SubspaceTest of_span(std::size_t dim, const std::vector<RatVector>& spanning);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rows() const noexcept { return rows_; }
  bool contains(const SparseVector& v) const;
  bool contains(const RatVector& v) const { return contains(to_sparse(v)); }

  /// Integer annihilator rows, row-major, rows() x dim().
  const std::vector<Integer>& integer_rows() const noexcept { return big_; }
  Integer max_abs() const;

 private:
  std::size_t dim_ = 0;
  std::size_t rows_ = 0;
  std::vector<Integer> big_;
  std::vector<std::int64_t> small_;
  bool small_ok_ = false;
  std::int64_t small_max_ = 0;
};

/// Scales v by the lcm of its denominators.
std::vector<Integer> integer_multiple(const RatVector& v);

}  // namespace fj
