#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fj/constructions.hpp"
#include "fj/rational.hpp"
#include "fj/report.hpp"

namespace fj {

/// Keys and values describing the parameters that matter for the family.
std::map<std::string, std::string> describe_params(const FamilyParams& p);

/// Class size, connectivity and diagram spectrum.
RunReport run_build(const FamilyParams& p, bool with_spectrum = true);
/// run_build plus the table oracle; `match` is set when a row is known.
RunReport run_spectrum(const FamilyParams& p);
/// Matsuo algebra at eta, radical, quotient dimension and the Jordan verdict
/// (linearized identity modulo the radical for eta = 1/2, the eta analysis otherwise).
RunReport run_jordan(const FamilyParams& p, const Rational& eta, bool use_symmetry = true);

enum class Scope { Quick, Full };
Scope parse_scope(const std::string& s);

struct ClassificationCase {
  std::string name;
  FamilyParams params;
  std::size_t class_size = 0;
  std::size_t radical_dim = 0;
  std::size_t quotient_dim = 0;
  bool jordan = true;
};

struct ClassificationRow {
  ClassificationCase expected;
  RunReport computed;
  bool ok = false;
};

std::vector<ClassificationCase> classification_cases(Scope scope);
ClassificationRow run_classification_case(const ClassificationCase& c, bool use_symmetry = true);

}  // namespace fj
