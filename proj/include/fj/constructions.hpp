#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "fj/table1.hpp"
#include "fj/transposition_class.hpp"

namespace fj {

enum class Family {
  Sym,
  Wr2,
  Wr3,
  WrAlt4,
  Frob9,
  Sp,
  Oplus,
  Ominus,
  SU,
  OmegaPlus3,
  OmegaMinus3,
  PerpDerived,
  FromFile,
};

std::string_view to_string(Family f);
/// Accepts the CLI spellings (sym, wr2, wr3, wralt4, frob9, sp, oplus, ominus,
/// su, omega3plus, omega3minus, perp-su3, file). Throws Error(BadParams).
Family parse_family(std::string_view name);

struct FamilyParams {
  Family family = Family::Sym;
  int m = 0;
  int n = 0;
  std::string file;
  /// Optional table row for file input, e.g. "PR7d".
  std::string row_label;
  int h = 0;
  std::optional<Sign> eps;
};

/// A closed class with the table row it is expected to match (when known).
struct BuiltFamily {
  std::string label;
  std::shared_ptr<const TranspositionClass> cls;
  std::optional<Table1Row> row;
};

GroupSpec build_sym(int m);
GroupSpec build_wreath(std::shared_ptr<const MultTable> base, int n);
GroupSpec build_wr2(int n);
GroupSpec build_wr3(int n);
GroupSpec build_wralt4(int n);
GroupSpec build_frob9();
GroupSpec build_sp(int m);
GroupSpec build_orthogonal2(int m, Sign eps);
GroupSpec build_su(int m);
/// m = 6 only; the odd case is a perp class, see build_family.
GroupSpec build_omega3_even(int m, Sign eps);

/// Closed class for the family, checked against its table row size.
/// Throws Error(OracleMismatch) on a size disagreement.
BuiltFamily build_family(const FamilyParams& params, const ClosureOptions& options = {});

/// Row expected for the parameters, if any.
std::optional<Table1Row> family_row(const FamilyParams& params);

/// Group-file reader. Throws Error(ParseError) naming the line, or
/// Error(NotInvolution) for a seed that is not of order 2.
GroupSpec load_group_file(const std::string& path);
GroupSpec parse_group_text(std::string_view text, const std::string& label = "file");

}  // namespace fj
