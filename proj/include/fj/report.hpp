#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fj/table1.hpp"

namespace fj {

struct Counterexample {
  std::array<std::size_t, 4> indices{};  // (x, y, z, w)
  std::array<std::string, 4> labels;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

/// One CLI run. Optional fields are left out of every rendering when unset.
struct RunReport {
  std::string family;
  std::map<std::string, std::string> params;
  std::size_t class_size = 0;
  bool connected = false;
  std::optional<SpectrumReport> spectrum;
  std::optional<std::size_t> radical_dim;
  std::optional<std::size_t> radical_dim_spectrum;
  std::optional<std::size_t> quotient_dim;
  std::optional<bool> jordan;
  std::optional<Counterexample> counterexample;
  std::optional<std::string> eta_case;
  std::optional<std::uint64_t> quadruples_checked;
  std::optional<std::string> expected_row;
  std::optional<SpectrumReport> expected_spectrum;
  std::optional<bool> match;
  double seconds = 0;

  nlohmann::json to_json(bool with_timing = true) const;
  static RunReport from_json(const nlohmann::json& j);
  std::string to_text() const;

  friend bool operator==(const RunReport& a, const RunReport& b);
};

nlohmann::json spectrum_to_json(const SpectrumReport& s);
SpectrumReport spectrum_from_json(const nlohmann::json& j);

/// Fixed column set shared by every CSV row.
std::string csv_header();
std::string csv_row(const RunReport& r);

}  // namespace fj
