#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fj {

enum class Sign { Plus, Minus };

std::string_view to_string(Sign s);

struct SpectrumEntry {
  long eigenvalue = 0;
  std::size_t multiplicity = 0;

  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

/// Eigenvalues in descending order, equal values merged, zero multiplicities dropped.
struct SpectrumReport {
  std::vector<SpectrumEntry> pairs;
  std::size_t unaccounted_mass = 0;

  std::size_t multiplicity(long eigenvalue) const;
  std::size_t total() const;
  std::string to_string() const;

  friend bool operator==(const SpectrumReport&, const SpectrumReport&) = default;
};

/// Sorts descending, merges repeats, drops zero multiplicities.
SpectrumReport normalize_spectrum(std::vector<SpectrumEntry> pairs, std::size_t unaccounted = 0);

/// One row of the diagram-spectrum table for given parameters. Labels:
/// "trivial", "PR1", "PR2a".."PR2d", "PR3", "PR4", "PR5", "PR6", "PR7a".."PR7e", "PR8".."PR12".
struct Table1Row {
  std::string label;
  int h = 0;
  int m = 0;
  std::optional<Sign> eps;
  std::size_t size = 0;
  std::vector<SpectrumEntry> spectrum;  // as listed, the starred entry already resolved

  std::string describe() const;
};

/// Throws Error(BadParams) outside the declared parameter range.
Table1Row table1_row(std::string_view label, int h = 0, int m = 0, std::optional<Sign> eps = std::nullopt);

SpectrumReport expected_spectrum(const Table1Row& row);

}  // namespace fj
