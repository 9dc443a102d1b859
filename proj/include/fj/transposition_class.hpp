#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fj/element.hpp"

namespace fj {

/// Input data for a conjugacy-class closure.
struct GroupSpec {
  std::shared_ptr<const GroupBackend> backend;
  std::vector<GroupElement> generators;
  GroupElement seed;
  std::string label;
};

struct ClosureOptions {
  std::size_t cap = 5000;
  /// When false, pairs of order > 3 are recorded (as 4) instead of rejected.
  bool require_3transpositions = true;
};

/// An ordered conjugacy class D together with the pairwise product orders.
/// pair_order(i, j) is 1 on the diagonal, 2 or 3 off it, and 4 for any
/// product of order above 3.
class TranspositionClass {
 public:
  TranspositionClass(GroupSpec spec, std::vector<GroupElement> elements, bool require_3transpositions);

  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<GroupElement>& elements() const noexcept { return elements_; }
  const GroupElement& element(std::size_t i) const { return elements_.at(i); }
  const GroupSpec& spec() const noexcept { return spec_; }
  const GroupBackend& backend() const { return *spec_.backend; }

  std::uint8_t pair_order(std::size_t i, std::size_t j) const { return order_[i * size() + j]; }
  bool adjacent(std::size_t i, std::size_t j) const { return pair_order(i, j) == 3; }
  std::optional<std::size_t> index_of(const GroupElement& g) const;
  std::string label(std::size_t i) const { return backend().describe(elements_.at(i)); }

  /// Index of D[i]^D[j] for an adjacent pair. Throws Error(InconsistentLine)
  /// when the third point is missing from the class.
  std::size_t third_point(std::size_t i, std::size_t j) const;

  /// Permutation of indices induced by conjugation with g. Throws
  /// Error(InconsistentLine) if g does not normalize the class.
  std::vector<std::size_t> conjugation_action(const GroupElement& g) const;

 private:
  GroupSpec spec_;
  std::vector<GroupElement> elements_;
  std::unordered_map<GroupElement, std::size_t, GroupElementHash> index_;
  std::vector<std::uint8_t> order_;
};

/// |g|, capped: returns 1, 2, 3, or 4 meaning "more than 3". At most three products.
std::uint8_t small_order(const GroupBackend& backend, const GroupElement& g);

/// Orbit of the seed under conjugation by the generators, in breadth-first
/// generator order. Throws CapExceeded, NotInvolution, NotThreeTransposition.
TranspositionClass conjugacy_closure(const GroupSpec& spec, const ClosureOptions& options = {});

bool verify_3transpositions(const TranspositionClass& cls);

/// Elements commuting with D[d], other than D[d] itself, as a class of their own.
/// Throws Error(EmptyPerp) when there are none.
TranspositionClass perp_subclass(const TranspositionClass& cls, std::size_t d);

/// Greedy subset of `candidates` whose conjugation orbit of `seed` already
/// reaches every candidate. Returns an empty list if even all candidates fail.
std::vector<GroupElement> greedy_generators(const GroupBackend& backend, const GroupElement& seed,
                                            const std::vector<GroupElement>& candidates,
                                            std::size_t cap = 5000);

}  // namespace fj
