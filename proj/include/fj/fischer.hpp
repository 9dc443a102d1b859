#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fj/matrix.hpp"
#include "fj/table1.hpp"
#include "fj/transposition_class.hpp"

namespace fj {

/// The commuting graph complement: i ~ j iff |D[i] D[j]| = 3.
class Diagram {
 public:
  Diagram() = default;
  Diagram(std::size_t n, std::vector<std::uint8_t> adjacency);

  std::size_t size() const noexcept { return n_; }
  bool adjacent(std::size_t i, std::size_t j) const { return adj_[i * n_ + j] != 0; }
  std::size_t degree(std::size_t i) const;
  std::size_t max_degree() const;
  std::size_t edge_count() const;
  const std::vector<std::size_t>& neighbors(std::size_t i) const { return nbrs_[i]; }
  RatMatrix adjacency_matrix() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<std::size_t>> nbrs_;
};

Diagram diagram(const TranspositionClass& cls);
bool is_connected(const Diagram& g);
bool is_regular(const Diagram& g);

/// Every line {c, d, c^d}, each sorted ascending, the list sorted.
std::vector<std::array<std::size_t, 3>> lines(const TranspositionClass& cls);

/// Integer eigenvalues with exact multiplicities. Candidates run over
/// [-maxdeg, maxdeg], largest degree first then by increasing absolute value,
/// stopping once all n eigenvalues are accounted for.
SpectrumReport spectrum(const Diagram& g);

/// (n, degree sequence, spectrum, triangle counts) in canonical text.
std::string diagram_fingerprint(const Diagram& g);
std::string diagram_fingerprint(const Diagram& g, const SpectrumReport& spec);

/// "n m" header followed by "i j" lines, 0-indexed with i < j.
std::string edge_list(const Diagram& g);
Diagram parse_edge_list(const std::string& text);

}  // namespace fj
