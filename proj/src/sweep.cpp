#include "fj/sweep.hpp"

#include <chrono>

#include "fj/error.hpp"
#include "fj/fischer.hpp"
#include "fj/jordan.hpp"
#include "fj/matsuo.hpp"

namespace fj {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

RunReport base_report(const FamilyParams& p, const BuiltFamily& built, bool with_spectrum) {
  RunReport r;
  r.family = std::string(to_string(p.family));
  r.params = describe_params(p);
  r.params["label"] = built.label;
  r.class_size = built.cls->size();
  const auto g = diagram(*built.cls);
  r.connected = is_connected(g);
  if (with_spectrum) r.spectrum = spectrum(g);
  return r;
}

void attach_oracle(RunReport& r, const BuiltFamily& built) {
  if (!built.row) return;
  r.expected_row = built.row->describe();
  r.expected_spectrum = expected_spectrum(*built.row);
  r.match = *r.expected_spectrum == *r.spectrum && r.class_size == built.row->size;
}

}  // namespace

std::map<std::string, std::string> describe_params(const FamilyParams& p) {
  std::map<std::string, std::string> out;
  switch (p.family) {
    case Family::Sym:
    case Family::Sp:
    case Family::Oplus:
    case Family::Ominus:
    case Family::SU:
    case Family::OmegaPlus3:
    case Family::OmegaMinus3: out["m"] = std::to_string(p.m); break;
    case Family::Wr2:
    case Family::Wr3:
    case Family::WrAlt4: out["n"] = std::to_string(p.n); break;
    case Family::Frob9:
    case Family::PerpDerived: break;
    case Family::FromFile:
      out["file"] = p.file;
      if (!p.row_label.empty()) {
        out["row"] = p.row_label;
        out["h"] = std::to_string(p.h);
        out["m"] = std::to_string(p.m);
        if (p.eps) out["eps"] = std::string(to_string(*p.eps));
      }
      break;
  }
  return out;
}

RunReport run_build(const FamilyParams& p, bool with_spectrum) {
  const auto start = Clock::now();
  const auto built = build_family(p);
  auto r = base_report(p, built, with_spectrum);
  r.seconds = since(start);
  return r;
}

RunReport run_spectrum(const FamilyParams& p) {
  const auto start = Clock::now();
  const auto built = build_family(p);
  auto r = base_report(p, built, true);
  attach_oracle(r, built);
  r.seconds = since(start);
  return r;
}

RunReport run_jordan(const FamilyParams& p, const Rational& eta, bool use_symmetry) {
  const auto start = Clock::now();
  const auto built = build_family(p);
  auto r = base_report(p, built, true);
  attach_oracle(r, built);
  r.params["eta"] = to_string(eta);
  auto m = build_matsuo(built.cls, eta);
  if (eta == Rational(1, 2)) {
    r.radical_dim = radical(m).size();
    r.radical_dim_spectrum = radical_dim_via_spectrum(m, *r.spectrum);
    r.quotient_dim = r.class_size - *r.radical_dim;
    const auto v = jordan_modulo_radical(m, use_symmetry);
    r.jordan = v.is_jordan;
    r.quadruples_checked = v.quadruples_checked;
    if (v.counterexample) {
      Counterexample c;
      c.indices = *v.counterexample;
      for (int k = 0; k < 4; ++k) c.labels[k] = built.cls->label(c.indices[k]);
      r.counterexample = c;
    }
  } else {
    const auto a = eta_not_half_analysis(m);
    r.radical_dim = a.radical_dim;
    r.quotient_dim = a.quotient_dim;
    r.jordan = a.kind != EtaCase::NoJordanFactor;
    r.eta_case = std::string(to_string(a.kind));
  }
  r.seconds = since(start);
  return r;
}

Scope parse_scope(const std::string& s) {
  if (s == "quick") return Scope::Quick;
  if (s == "full") return Scope::Full;
  throw Error(ErrorKind::BadParams, "scope must be quick or full");
}

std::vector<ClassificationCase> classification_cases(Scope scope) {
  std::vector<ClassificationCase> out;
  auto fam = [](Family f, int m = 0, int n = 0) {
    FamilyParams p;
    p.family = f;
    p.m = m;
    p.n = n;
    return p;
  };
  const bool full = scope == Scope::Full;
  out.push_back({"Sp6(2)", fam(Family::Sp, 3), 63, 35, 28, true});
  if (full) out.push_back({"O8+(2)", fam(Family::Oplus, 4), 120, 84, 36, true});
  out.push_back({"O6-(2)", fam(Family::Ominus, 3), 36, 15, 21, true});
  out.push_back({"SU4(2)", fam(Family::SU, 4), 45, 20, 25, true});
  if (full) out.push_back({"SU5(2)", fam(Family::SU, 5), 165, 120, 45, true});
  out.push_back({"+Omega6-(3)", fam(Family::OmegaMinus3, 6), 126, 90, 36, true});
  out.push_back({"perp SU3-type", fam(Family::PerpDerived), 36, 8, 28, true});
  const int top = full ? 8 : 4;
  for (int n = 4; n <= top; ++n) {
    const std::size_t rad = static_cast<std::size_t>(n * (n - 3) / 2);
    out.push_back({"Wr(2," + std::to_string(n) + ")", fam(Family::Wr2, 0, n),
                   static_cast<std::size_t>(n * (n - 1)), rad, static_cast<std::size_t>(n * (n + 1) / 2), true});
    out.push_back({"Wr(3," + std::to_string(n) + ")", fam(Family::Wr3, 0, n),
                   static_cast<std::size_t>(3 * n * (n - 1) / 2), rad, static_cast<std::size_t>(n * n), true});
  }
  out.push_back({"Wr(Alt4,4)", fam(Family::WrAlt4, 0, 4), 0, 0, 0, false});
  const int sym_top = full ? 6 : 4;
  for (int m = 3; m <= sym_top; ++m) {
    const std::size_t size = static_cast<std::size_t>(m * (m - 1) / 2);
    out.push_back({"Sym(" + std::to_string(m) + ")", fam(Family::Sym, m), size, 0, size, true});
  }
  out.push_back({"3^2:2", fam(Family::Frob9), 9, 0, 9, true});
  return out;
}

ClassificationRow run_classification_case(const ClassificationCase& c, bool use_symmetry) {
  ClassificationRow row;
  row.expected = c;
  row.computed = run_jordan(c.params, Rational(1, 2), use_symmetry);
  const auto& r = row.computed;
  row.ok = r.jordan == c.jordan;
  if (c.class_size) {
    row.ok = row.ok && r.class_size == c.class_size && r.radical_dim == c.radical_dim &&
             r.radical_dim_spectrum == c.radical_dim && r.quotient_dim == c.quotient_dim;
  }
  return row;
}

}  // namespace fj
