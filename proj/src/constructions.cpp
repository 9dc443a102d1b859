#include "fj/constructions.hpp"

#include <algorithm>
#include <set>

#include "fj/error.hpp"

namespace fj {

namespace {

using Vec = std::vector<std::uint8_t>;

// Nonzero vectors of GF(q)^n in base-q counting order.
std::vector<Vec> nonzero_vectors(int q, std::size_t n) {
  std::vector<Vec> out;
  Vec v(n, 0);
  while (true) {
    std::size_t k = 0;
    while (k < n && v[k] == q - 1) v[k++] = 0;
    if (k == n) break;
    ++v[k];
    out.push_back(v);
  }
  return out;
}

GroupSpec matrix_class_spec(std::shared_ptr<const MatrixBackend> backend, std::vector<GroupElement> candidates,
                            GroupElement seed, std::string label) {
  GroupSpec spec;
  spec.generators = greedy_generators(*backend, seed, candidates, candidates.size());
  if (spec.generators.empty()) {
    throw Error(ErrorKind::OracleMismatch, label + ": candidate involutions do not form one class");
  }
  spec.backend = std::move(backend);
  spec.seed = std::move(seed);
  spec.label = std::move(label);
  return spec;
}

// x -> x + b(x,v) v for the symmetric form pairing coordinates 2i and 2i+1.
GroupElement pair_transvection(const MatrixBackend& be, const Vec& v) {
  const std::size_t n = v.size();
  std::vector<std::uint8_t> entries(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) entries[i * n + j] = static_cast<std::uint8_t>(((i == j) + v[i] * v[j ^ 1]) % 2);
  }
  return be.from_entries(entries);
}

std::size_t desk_cap(std::size_t size, std::size_t cap, const std::string& what) {
  if (size > cap) throw Error(ErrorKind::CapExceeded, what + " class of size " + std::to_string(size) + " exceeds cap");
  return size;
}

std::shared_ptr<const TranspositionClass> close(const GroupSpec& spec, const ClosureOptions& options) {
  return std::make_shared<const TranspositionClass>(conjugacy_closure(spec, options));
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Sym: return "sym";
    case Family::Wr2: return "wr2";
    case Family::Wr3: return "wr3";
    case Family::WrAlt4: return "wralt4";
    case Family::Frob9: return "frob9";
    case Family::Sp: return "sp";
    case Family::Oplus: return "oplus";
    case Family::Ominus: return "ominus";
    case Family::SU: return "su";
    case Family::OmegaPlus3: return "omega3plus";
    case Family::OmegaMinus3: return "omega3minus";
    case Family::PerpDerived: return "perp-su3";
    case Family::FromFile: return "file";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (int k = 0; k <= static_cast<int>(Family::FromFile); ++k) {
    const auto f = static_cast<Family>(k);
    if (to_string(f) == name) return f;
  }
  throw Error(ErrorKind::BadParams, "unknown family '" + std::string(name) + "'");
}

GroupSpec build_sym(int m) {
  if (m < 2) throw Error(ErrorKind::BadParams, "Sym(m) needs m >= 2");
  auto be = std::make_shared<PermutationBackend>(static_cast<std::size_t>(m));
  GroupSpec spec;
  for (int i = 1; i < m; ++i) {
    spec.generators.push_back(be->parse_cycles("(" + std::to_string(i) + "," + std::to_string(i + 1) + ")"));
  }
  spec.seed = be->parse_cycles("(1,2)");
  spec.backend = std::move(be);
  spec.label = "Sym(" + std::to_string(m) + ")";
  return spec;
}

GroupSpec build_wreath(std::shared_ptr<const MultTable> base, int n) {
  if (n < 3) throw Error(ErrorKind::BadParams, "wreath construction needs n >= 3");
  for (std::uint16_t t = 0; t < base->size(); ++t) {
    if (base->order(t) > 3) throw Error(ErrorKind::BadBaseGroup, "base group has an element of order " + std::to_string(base->order(t)));
  }
  auto be = std::make_shared<WreathBackend>(base, static_cast<std::size_t>(n));
  GroupSpec spec;
  for (int i = 0; i + 1 < n; ++i) spec.generators.push_back(be->top_transposition(i, i + 1));
  for (std::uint16_t t = 1; t < base->size(); ++t) spec.generators.push_back(be->base_element(t, 0));
  spec.seed = be->top_transposition(0, 1);
  spec.label = "Wr(" + std::to_string(base->size()) + "," + std::to_string(n) + ")";
  spec.backend = std::move(be);
  return spec;
}

GroupSpec build_wr2(int n) {
  if (n < 4) throw Error(ErrorKind::BadParams, "Wr(2,n) needs n >= 4");
  auto spec = build_wreath(std::make_shared<const MultTable>(MultTable::cyclic(2)), n);
  spec.label = "Wr(2," + std::to_string(n) + ")";
  return spec;
}

GroupSpec build_wr3(int n) {
  if (n < 4) throw Error(ErrorKind::BadParams, "Wr(3,n) needs n >= 4");
  auto spec = build_wreath(std::make_shared<const MultTable>(MultTable::cyclic(3)), n);
  spec.label = "Wr(3," + std::to_string(n) + ")";
  return spec;
}

GroupSpec build_wralt4(int n) {
  if (n < 4) throw Error(ErrorKind::BadParams, "Wr(Alt4,n) needs n >= 4");
  auto spec = build_wreath(std::make_shared<const MultTable>(MultTable::alternating4()), n);
  spec.label = "Wr(Alt4," + std::to_string(n) + ")";
  return spec;
}

GroupSpec build_frob9() {
  auto be = std::make_shared<PermutationBackend>(9);
  auto affine = [&](int sign, int da, int db) {
    std::vector<std::size_t> images(9);
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        const int na = ((sign * a + da) % 3 + 3) % 3;
        const int nb = ((sign * b + db) % 3 + 3) % 3;
        images[a + 3 * b] = static_cast<std::size_t>(na + 3 * nb);
      }
    }
    return be->from_images(images);
  };
  GroupSpec spec;
  spec.generators = {affine(1, 1, 0), affine(1, 0, 1), affine(-1, 0, 0)};
  spec.seed = affine(-1, 0, 0);
  spec.backend = std::move(be);
  spec.label = "3^2:2";
  return spec;
}

GroupSpec build_sp(int m) {
  if (m < 3) throw Error(ErrorKind::BadParams, "Sp(2m,2) needs m >= 3");
  if (m > 4) throw Error(ErrorKind::CapExceeded, "Sp(2m,2) is built for m <= 4 only");
  const std::size_t n = 2 * static_cast<std::size_t>(m);
  auto be = std::make_shared<const MatrixBackend>(2, n);
  std::vector<GroupElement> candidates;
  for (const auto& v : nonzero_vectors(2, n)) candidates.push_back(pair_transvection(*be, v));
  auto seed = candidates.front();  // v = e1
  return matrix_class_spec(be, std::move(candidates), std::move(seed), "Sp(" + std::to_string(n) + ",2)");
}

GroupSpec build_orthogonal2(int m, Sign eps) {
  if (m < 3 || (m == 3 && eps == Sign::Plus)) throw Error(ErrorKind::BadParams, "O(2m,2) needs m >= 3 and (m,eps) != (3,+)");
  const auto size = table1_row("PR3", 0, m, eps).size;
  desk_cap(size, 2100, "orthogonal");
  const std::size_t n = 2 * static_cast<std::size_t>(m);
  auto be = std::make_shared<const MatrixBackend>(2, n);
  auto q = [&](const Vec& v) {
    int s = 0;
    for (std::size_t i = 0; i + 2 < n; i += 2) s += v[i] * v[i + 1];
    const int x = v[n - 2], y = v[n - 1];
    s += x * y;
    if (eps == Sign::Minus) s += x + y;  // x^2 + y^2 = x + y over GF(2)
    return s % 2;
  };
  std::vector<GroupElement> candidates;
  for (const auto& v : nonzero_vectors(2, n)) {
    if (q(v) == 1) candidates.push_back(pair_transvection(*be, v));
  }
  if (candidates.size() != size) throw Error(ErrorKind::OracleMismatch, "orthogonal transvection count disagrees with the table");
  auto seed = candidates.front();
  return matrix_class_spec(be, std::move(candidates), std::move(seed),
                           std::string("O") + std::string(to_string(eps)) + "(" + std::to_string(n) + ",2)");
}

GroupSpec build_su(int m) {
  if (m < 3) throw Error(ErrorKind::BadParams, "SU(m,2) needs m >= 3");
  const auto size = table1_row("PR6", 0, m).size;
  desk_cap(size, 700, "unitary");
  const std::size_t n = static_cast<std::size_t>(m);
  auto be = std::make_shared<const MatrixBackend>(4, n);
  const auto& f = be->field();
  auto unitary = [&](const std::vector<std::uint8_t>& a) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        std::uint8_t s = 0;
        for (std::size_t k = 0; k < n; ++k) s = f.add(s, f.mul(a[k * n + i], f.conj(a[k * n + j])));
        if (s != (i == j ? 1 : 0)) return false;
      }
    }
    return true;
  };
  std::set<GroupElement> found;
  for (const auto& v : nonzero_vectors(4, n)) {
    std::uint8_t hv = 0;
    for (auto x : v) hv = f.add(hv, f.mul(x, f.conj(x)));
    if (hv != 0) continue;
    for (std::uint8_t lambda = 1; lambda < 4; ++lambda) {
      std::vector<std::uint8_t> a(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          a[i * n + j] = f.add(i == j ? 1 : 0, f.mul(lambda, f.mul(v[i], f.conj(v[j]))));
        }
      }
      if (!unitary(a)) continue;
      auto g = be->from_entries(a);
      if (small_order(*be, g) == 2) found.insert(std::move(g));
    }
  }
  if (found.size() != size) {
    throw Error(ErrorKind::OracleMismatch, "unitary transvections: " + std::to_string(found.size()) +
                                               " found, table expects " + std::to_string(size));
  }
  std::vector<GroupElement> candidates(found.begin(), found.end());
  auto seed = candidates.front();
  return matrix_class_spec(be, std::move(candidates), std::move(seed), "SU(" + std::to_string(m) + ",2)");
}

GroupSpec build_omega3_even(int m, Sign eps) {
  if (m != 6) throw Error(ErrorKind::BadParams, "the GF(3) reflection groups are built for m = 6 (and 5 via perp)");
  const auto size = table1_row("PR5", 0, m, eps).size;
  const std::size_t n = static_cast<std::size_t>(m);
  auto be = std::make_shared<const MatrixBackend>(3, n);
  for (const std::uint8_t first : {std::uint8_t{1}, std::uint8_t{2}}) {
    Vec gram(n, 1);
    gram[0] = first;
    std::vector<GroupElement> candidates;
    for (const auto& x : nonzero_vectors(3, n)) {
      const auto lead = *std::find_if(x.begin(), x.end(), [](auto c) { return c != 0; });
      if (lead != 1) continue;  // x and -x give the same reflection
      int bxx = 0;
      for (std::size_t i = 0; i < n; ++i) bxx += gram[i] * x[i] * x[i];
      if (bxx % 3 != 1) continue;
      std::vector<std::uint8_t> a(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = static_cast<std::uint8_t>(((i == j) + x[i] * gram[j] * x[j]) % 3);
      }
      candidates.push_back(be->from_entries(a));
    }
    if (candidates.size() != size) continue;
    auto seed = candidates.front();
    return matrix_class_spec(be, std::move(candidates), std::move(seed),
                             std::string("Omega") + std::string(to_string(eps)) + "(" + std::to_string(m) + ",3)");
  }
  throw Error(ErrorKind::OracleMismatch, "no diagonal form gives the expected reflection class size");
}

std::optional<Table1Row> family_row(const FamilyParams& p) {
  switch (p.family) {
    case Family::Sym:
      if (p.m == 2) return table1_row("trivial");
      if (p.m == 3) return table1_row("PR1", 1);
      return table1_row("PR2a", 0, p.m);
    case Family::Wr2: return table1_row("PR2a", 1, p.n);
    case Family::Wr3: return table1_row("PR2b", 1, p.n);
    case Family::WrAlt4: return table1_row("PR2d", 1, p.n);
    case Family::Frob9: return table1_row("PR1", 2);
    case Family::Sp: return table1_row("PR4", 0, p.m);
    case Family::Oplus: return table1_row("PR3", 0, p.m, Sign::Plus);
    case Family::Ominus: return table1_row("PR3", 0, p.m, Sign::Minus);
    case Family::SU: return table1_row("PR6", 0, p.m);
    case Family::OmegaPlus3: return table1_row("PR5", 0, p.m, Sign::Plus);
    case Family::OmegaMinus3: return table1_row("PR5", 0, p.m, Sign::Minus);
    case Family::PerpDerived: return table1_row("PR6", 1, 3);
    case Family::FromFile:
      if (p.row_label.empty()) return std::nullopt;
      return table1_row(p.row_label, p.h, p.m, p.eps);
  }
  return std::nullopt;
}

BuiltFamily build_family(const FamilyParams& p, const ClosureOptions& options) {
  BuiltFamily out;
  switch (p.family) {
    case Family::Sym: out.cls = close(build_sym(p.m), options); break;
    case Family::Wr2: out.cls = close(build_wr2(p.n), options); break;
    case Family::Wr3: out.cls = close(build_wr3(p.n), options); break;
    case Family::WrAlt4: out.cls = close(build_wralt4(p.n), options); break;
    case Family::Frob9: out.cls = close(build_frob9(), options); break;
    case Family::Sp: out.cls = close(build_sp(p.m), options); break;
    case Family::Oplus: out.cls = close(build_orthogonal2(p.m, Sign::Plus), options); break;
    case Family::Ominus: out.cls = close(build_orthogonal2(p.m, Sign::Minus), options); break;
    case Family::SU: out.cls = close(build_su(p.m), options); break;
    case Family::OmegaPlus3:
    case Family::OmegaMinus3: {
      const Sign eps = p.family == Family::OmegaPlus3 ? Sign::Plus : Sign::Minus;
      if (p.m == 6) {
        out.cls = close(build_omega3_even(6, eps), options);
      } else if (p.m == 5) {
        const auto big = conjugacy_closure(build_omega3_even(6, eps), options);
        out.cls = std::make_shared<const TranspositionClass>(perp_subclass(big, 0));
      } else {
        throw Error(ErrorKind::BadParams, "the GF(3) reflection groups are built for m in {5, 6}");
      }
      break;
    }
    case Family::PerpDerived: {
      const auto su5 = conjugacy_closure(build_su(5), options);
      out.cls = std::make_shared<const TranspositionClass>(perp_subclass(su5, 0));
      break;
    }
    case Family::FromFile: out.cls = close(load_group_file(p.file), options); break;
  }
  out.label = out.cls->spec().label;
  out.row = family_row(p);
  if (out.row && out.row->size != out.cls->size()) {
    throw Error(ErrorKind::OracleMismatch, out.label + ": class size " + std::to_string(out.cls->size()) +
                                               ", table row " + out.row->describe() + " expects " +
                                               std::to_string(out.row->size));
  }
  return out;
}

}  // namespace fj
