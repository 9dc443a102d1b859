#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fj/finite_field.hpp"

namespace fj {

/// A group element as a canonical word. Its meaning comes from the backend
/// that produced it, so equality and hashing are plain word comparisons.
struct GroupElement {
  std::vector<std::uint16_t> data;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const noexcept;
};

enum class BackendKind { Permutation, Matrix, Table, Wreath };

std::string_view to_string(BackendKind kind);

/// Group oracle: multiplication, inversion and identity for one family of words.
class GroupBackend {
 public:
  virtual ~GroupBackend() = default;

  virtual BackendKind kind() const = 0;
  virtual GroupElement identity() const = 0;
  virtual GroupElement multiply(const GroupElement& a, const GroupElement& b) const = 0;
  virtual GroupElement inverse(const GroupElement& g) const = 0;
  virtual bool is_valid(const GroupElement& g) const = 0;
  virtual std::string describe(const GroupElement& g) const = 0;

  /// c^g = g^-1 c g
  GroupElement conjugate(const GroupElement& c, const GroupElement& g) const;
  bool is_identity(const GroupElement& g) const { return g == identity(); }
};

/// Least k >= 1 with g^k = 1. Throws Error(OrderBound) past `bound` iterations.
std::size_t element_order(const GroupBackend& backend, const GroupElement& g,
                          std::size_t bound = 1'000'000);

/// Cayley table of a small group; element 0 is the identity.
class MultTable {
 public:
  /// Validates shape, identity at index 0, inverses and associativity.
  explicit MultTable(std::vector<std::vector<std::uint16_t>> rows);

  static MultTable trivial();
  static MultTable cyclic(std::size_t p);
  /// Alt(4) as even permutations of {1,2,3,4}, identity first, then lexicographic.
  static MultTable alternating4();

  std::size_t size() const noexcept { return k_; }
  std::uint16_t mul(std::uint16_t a, std::uint16_t b) const { return table_[a * k_ + b]; }
  std::uint16_t inverse(std::uint16_t a) const { return inverse_[a]; }
  std::size_t order(std::uint16_t a) const;

 private:
  std::size_t k_ = 0;
  std::vector<std::uint16_t> table_;
  std::vector<std::uint16_t> inverse_;
};

/// Permutations of {1..n} in one-line form (0-based images). Products compose
/// left to right: x^(ab) = (x^a)^b.
class PermutationBackend final : public GroupBackend {
 public:
  explicit PermutationBackend(std::size_t degree);

  std::size_t degree() const noexcept { return degree_; }
  BackendKind kind() const override { return BackendKind::Permutation; }
  GroupElement identity() const override;
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const override;
  GroupElement inverse(const GroupElement& g) const override;
  bool is_valid(const GroupElement& g) const override;
  std::string describe(const GroupElement& g) const override;

  /// Cycle notation with 1-based points, e.g. "(1,2)(3,4)" or "()".
  /// Throws Error(ParseError) on malformed text.
  GroupElement parse_cycles(std::string_view text) const;
  GroupElement from_images(const std::vector<std::size_t>& images) const;

 private:
  std::size_t degree_;
};

/// n x n matrices over GF(q), row-major field codes, ordinary matrix product.
class MatrixBackend final : public GroupBackend {
 public:
  MatrixBackend(int q, std::size_t dim);

  const FiniteField& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  BackendKind kind() const override { return BackendKind::Matrix; }
  GroupElement identity() const override;
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const override;
  GroupElement inverse(const GroupElement& g) const override;
  bool is_valid(const GroupElement& g) const override;
  std::string describe(const GroupElement& g) const override;

  GroupElement from_entries(const std::vector<std::uint8_t>& entries) const;

 private:
  FiniteField field_;
  std::size_t dim_;
};

/// Elements are indices into a Cayley table.
class TableBackend final : public GroupBackend {
 public:
  explicit TableBackend(std::shared_ptr<const MultTable> table);

  const MultTable& table() const noexcept { return *table_; }
  BackendKind kind() const override { return BackendKind::Table; }
  GroupElement identity() const override;
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const override;
  GroupElement inverse(const GroupElement& g) const override;
  bool is_valid(const GroupElement& g) const override;
  std::string describe(const GroupElement& g) const override;

  GroupElement element(std::uint16_t index) const;

 private:
  std::shared_ptr<const MultTable> table_;
};

/// The class symbol t.(i,j) = t_i t_j^-1 (i,j), normalized to i < j (0-based).
struct WreathSymbol {
  std::uint16_t t = 0;
  std::size_t i = 0;
  std::size_t j = 0;

  friend bool operator==(const WreathSymbol&, const WreathSymbol&) = default;
};

/// T wr Sym(n). A word stores the base coordinates f(0..n-1) followed by the
/// one-line image of the top permutation pi. With (f1,p1)(f2,p2) = (f, p1 p2)
/// and f(k) = f1(k) f2(p1^-1(k)), i.e. the action (t,i) -> (f(pi(i)) t, pi(i)).
class WreathBackend final : public GroupBackend {
 public:
  WreathBackend(std::shared_ptr<const MultTable> base, std::size_t n);

  const MultTable& base() const noexcept { return *base_; }
  std::size_t n() const noexcept { return n_; }
  BackendKind kind() const override { return BackendKind::Wreath; }
  GroupElement identity() const override;
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const override;
  GroupElement inverse(const GroupElement& g) const override;
  bool is_valid(const GroupElement& g) const override;
  std::string describe(const GroupElement& g) const override;

  /// t placed in coordinate i, identity top permutation.
  GroupElement base_element(std::uint16_t t, std::size_t i) const;
  /// Top transposition (i j), trivial base.
  GroupElement top_transposition(std::size_t i, std::size_t j) const;
  GroupElement symbol_element(const WreathSymbol& s) const;
  /// Recognizes t.(i,j) symbols; nullopt for other elements.
  std::optional<WreathSymbol> symbol(const GroupElement& g) const;
  /// Central element with every coordinate equal to t.
  GroupElement diagonal(std::uint16_t t) const;

 private:
  std::shared_ptr<const MultTable> base_;
  std::size_t n_;
};

}  // namespace fj
