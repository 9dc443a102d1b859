#include "fj/jordan.hpp"

#include <algorithm>
#include <limits>

#include "fj/error.hpp"
#include "fj/fischer.hpp"
#include "fj/linalg.hpp"
#include "fj/parallel.hpp"

namespace fj {

namespace {

SparseVector apply_shift(const Algebra& a, const SparseVector& e, const SparseVector& v, const Rational& nu) {
  auto out = a.multiply(e, v);
  for (const auto& t : v) out.push_back({t.index, -nu * t.coeff});
  return canonical(std::move(out));
}

bool is_even(const Rational& x) { return x == 1 || sgn(x) == 0; }

// ---------------------------------------------------------------- kernel

template <class T>
using IntTerms = std::vector<std::pair<std::uint32_t, T>>;

inline void mul_add(std::int64_t& acc, std::int64_t a, std::int64_t b) { acc += a * b; }
inline void mul_add(Integer& acc, const Integer& a, const Integer& b) {
  mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}
inline bool nonzero(std::int64_t x) { return x != 0; }
inline bool nonzero(const Integer& x) { return sgn(x) != 0; }

template <class T>
struct Kernel {
  std::size_t n = 0;
  std::vector<IntTerms<T>> s;   // n*n, scaled structure constants
  std::vector<T> p;             // annihilator rows, dense
  std::size_t prow = 0;
  bool zero_test = true;

  std::vector<IntTerms<T>> associators(std::size_t y) const {
    std::vector<IntTerms<T>> asc(n * n);
    std::vector<T> acc(n, T(0));
    std::vector<std::uint32_t> touched;
    std::vector<char> mark(n, 0);
    auto add = [&](std::uint32_t idx, const T& a, const T& b, bool negate) {
      if (!mark[idx]) {
        mark[idx] = 1;
        touched.push_back(idx);
      }
      if (negate) {
        T neg = -a;
        mul_add(acc[idx], neg, b);
      } else {
        mul_add(acc[idx], a, b);
      }
    };
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t l = 0; l < n; ++l) {
        touched.clear();
        for (const auto& [m, c] : s[k * n + y]) {
          for (const auto& [t, d] : s[m * n + l]) add(t, c, d, false);
        }
        for (const auto& [m, c] : s[y * n + l]) {
          for (const auto& [t, d] : s[k * n + m]) add(t, c, d, true);
        }
        std::sort(touched.begin(), touched.end());
        auto& out = asc[k * n + l];
        for (auto t : touched) {
          if (nonzero(acc[t])) out.emplace_back(t, acc[t]);
          acc[t] = T(0);
          mark[t] = 0;
        }
      }
    }
    return asc;
  }

  struct Hit {
    std::size_t z = 0, w = 0;
    std::uint64_t position = 0;
  };

  // Sweeps z >= x, w >= z for one (x, y); returns the first failing (z, w).
  std::optional<Hit> sweep(const std::vector<IntTerms<T>>& asc, std::size_t x) const {
    std::vector<T> acc(n, T(0));
    std::vector<std::uint32_t> touched;
    std::vector<char> mark(n, 0);
    T dot(0);
    std::uint64_t position = 0;
    auto accumulate = [&](const IntTerms<T>& coeffs, std::size_t col) {
      for (const auto& [k, c] : coeffs) {
        for (const auto& [t, a] : asc[k * n + col]) {
          if (!mark[t]) {
            mark[t] = 1;
            touched.push_back(t);
          }
          mul_add(acc[t], c, a);
        }
      }
    };
    for (std::size_t z = x; z < n; ++z) {
      for (std::size_t w = z; w < n; ++w, ++position) {
        touched.clear();
        accumulate(s[x * n + z], w);
        accumulate(s[z * n + w], x);
        accumulate(s[w * n + x], z);
        bool bad = false;
        if (zero_test) {
          for (auto t : touched) {
            if (nonzero(acc[t])) {
              bad = true;
              break;
            }
          }
        } else {
          for (std::size_t r = 0; r < prow && !bad; ++r) {
            dot = T(0);
            const T* row = p.data() + r * n;
            for (auto t : touched) mul_add(dot, row[t], acc[t]);
            bad = nonzero(dot);
          }
        }
        for (auto t : touched) {
          acc[t] = T(0);
          mark[t] = 0;
        }
        if (bad) return Hit{z, w, position};
      }
    }
    return std::nullopt;
  }
};

std::uint64_t task_size(std::size_t n, std::size_t x) {
  const std::uint64_t r = n - x;
  return r * (r + 1) / 2;
}

template <class T>
JordanVerdict run_kernel(const Kernel<T>& k, const std::vector<std::size_t>& ys) {
  JordanVerdict verdict;
  const std::size_t n = k.n;
  std::uint64_t per_y = 0;
  for (std::size_t x = 0; x < n; ++x) per_y += task_size(n, x);
  for (auto y : ys) {
    const auto asc = k.associators(y);
    std::vector<std::optional<typename Kernel<T>::Hit>> hits(n);
    const auto first = parallel_find_first(n, [&](std::size_t x) {
      hits[x] = k.sweep(asc, x);
      return hits[x].has_value();
    });
    if (first) {
      const auto& h = *hits[*first];
      verdict.is_jordan = false;
      verdict.counterexample = std::array<std::size_t, 4>{*first, y, h.z, h.w};
      for (std::size_t x = 0; x < *first; ++x) verdict.quadruples_checked += task_size(n, x);
      verdict.quadruples_checked += h.position + 1;
      return verdict;
    }
    verdict.quadruples_checked += per_y;
  }
  return verdict;
}

template <class T>
T to_t(const Integer& x);
template <>
std::int64_t to_t<std::int64_t>(const Integer& x) { return x.get_si(); }
template <>
Integer to_t<Integer>(const Integer& x) { return x; }

template <class T>
Kernel<T> make_kernel(const Algebra& a, const std::vector<std::vector<std::pair<std::uint32_t, Integer>>>& s,
                      const SubspaceTest* ideal) {
  Kernel<T> k;
  k.n = a.dim();
  k.s.resize(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (const auto& [t, c] : s[i]) k.s[i].emplace_back(t, to_t<T>(c));
  }
  if (ideal) {
    k.zero_test = false;
    k.prow = ideal->rows();
    for (const auto& x : ideal->integer_rows()) k.p.push_back(to_t<T>(x));
  }
  return k;
}

}  // namespace

RatMatrix adjoint_matrix(const Algebra& a, const RatVector& x) {
  const std::size_t n = a.dim();
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& t : a.product(i, j)) m(t.index, j) += x[i] * t.coeff;
    }
  }
  return m;
}

std::size_t PeirceReport::dim_of(const Rational& lambda) const {
  for (std::size_t k = 0; k < eigenvalues.size(); ++k) {
    if (eigenvalues[k] == lambda) return dims[k];
  }
  return 0;
}

PeirceReport peirce(const Algebra& a, const RatVector& e, const std::vector<Rational>& expected) {
  const std::size_t n = a.dim();
  const auto es = to_sparse(e);
  auto square = a.multiply(e, e);
  for (std::size_t i = 0; i < n; ++i) square[i] -= e[i];
  if (!is_zero(square)) throw Error(ErrorKind::NotIdempotent, "element is not idempotent");
  const auto ad = adjoint_matrix(a, e);
  PeirceReport report;
  std::vector<std::vector<SparseVector>> spaces;
  std::size_t total = 0;
  for (const auto& lambda : expected) {
    auto shifted = ad;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= lambda;
    std::vector<SparseVector> basis;
    for (const auto& v : nullspace_basis(shifted)) basis.push_back(to_sparse(v));
    report.eigenvalues.push_back(lambda);
    report.dims.push_back(basis.size());
    total += basis.size();
    spaces.push_back(std::move(basis));
  }
  if (total != n) {
    throw Error(ErrorKind::NotSemisimple, "eigenspaces span " + std::to_string(total) + " of " + std::to_string(n) + " dimensions");
  }
  std::vector<Rational> even, odd;
  for (const auto& l : expected) (is_even(l) ? even : odd).push_back(l);
  for (std::size_t p = 0; p < expected.size(); ++p) {
    for (std::size_t q = p; q < expected.size(); ++q) {
      const auto& lp = expected[p];
      const auto& lq = expected[q];
      std::vector<Rational> allowed;
      if (sgn(lp) == 0 && sgn(lq) == 0) {
        allowed = {Rational(0)};
      } else if (is_even(lp) == is_even(lq)) {
        allowed = even;
      } else {
        allowed = odd;
      }
      for (std::size_t i = 0; i < spaces[p].size(); ++i) {
        for (std::size_t j = p == q ? i : 0; j < spaces[q].size(); ++j) {
          auto v = a.multiply(spaces[p][i], spaces[q][j]);
          for (const auto& nu : allowed) {
            if (v.empty()) break;
            v = apply_shift(a, es, v, nu);
          }
          if (!v.empty() && report.fusion_violations.size() < 16) {
            report.fusion_violations.push_back(
                {lp, lq, "eigenvectors " + std::to_string(i) + " and " + std::to_string(j)});
          }
        }
      }
    }
  }
  return report;
}

bool is_primitive_axis(const Algebra& a, const RatVector& x, const Rational& eta) {
  if (sgn(eta) == 0 || eta == 1) return false;
  try {
    const auto report = peirce(a, x, {Rational(1), Rational(0), eta});
    return report.dim_of(Rational(1)) == 1 && report.fusion_violations.empty();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotIdempotent || e.kind() == ErrorKind::NotSemisimple) return false;
    throw;
  }
}

RatVector w_element(const Algebra& a, const RatVector& x, const RatVector& y, const RatVector& z,
                    const RatVector& w) {
  auto out = associator(a, a.multiply(x, z), y, w);
  const auto b = associator(a, a.multiply(z, w), y, x);
  const auto c = associator(a, a.multiply(w, x), y, z);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i] + c[i];
  return out;
}

RatVector w_element(const Algebra& a, std::size_t x, std::size_t y, std::size_t z, std::size_t w) {
  const std::size_t n = a.dim();
  return w_element(a, unit_vector(n, x), unit_vector(n, y), unit_vector(n, z), unit_vector(n, w));
}

JordanVerdict jordan_sweep(const Algebra& a, const SubspaceTest* ideal, const std::vector<std::size_t>& ys) {
  const std::size_t n = a.dim();
  if (n == 0) return {};
  Integer l = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& t : a.product(i, j)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
    }
  }
  std::vector<std::vector<std::pair<std::uint32_t, Integer>>> s(n * n);
  Integer smax = 0, x;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& t : a.product(i, j)) {
        mpz_divexact(x.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
        x *= t.coeff.get_num();
        if (abs(x) > smax) smax = abs(x);
        s[i * n + j].emplace_back(t.index, x);
      }
    }
  }
  // a-priori bounds on every intermediate of the int64 kernel
  const Integer nn = static_cast<unsigned long>(n);
  const Integer b_asc = 2 * nn * smax * smax;
  const Integer b_w = 3 * nn * smax * b_asc;
  const Integer b_p = ideal ? nn * ideal->max_abs() * b_w : b_w;
  const Integer limit = Integer(1) << 62;
  if (b_asc < limit && b_w < limit && b_p < limit) return run_kernel(make_kernel<std::int64_t>(a, s, ideal), ys);
  return run_kernel(make_kernel<Integer>(a, s, ideal), ys);
}

JordanVerdict jordan_check(const Algebra& a) {
  std::vector<std::size_t> ys(a.dim());
  for (std::size_t i = 0; i < ys.size(); ++i) ys[i] = i;
  return jordan_sweep(a, nullptr, ys);
}

JordanVerdict jordan_modulo_radical(MatsuoAlgebra& m, bool use_symmetry) {
  const auto test = radical_test(m);
  const std::size_t n = m.algebra.dim();
  bool transitive = false;
  if (use_symmetry && n > 0) {
    std::vector<std::vector<std::size_t>> actions;
    for (const auto& g : m.cls->spec().generators) actions.push_back(m.cls->conjugation_action(g));
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> queue{0};
    seen[0] = true;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      for (const auto& act : actions) {
        const auto y = act[queue[h]];
        if (!seen[y]) {
          seen[y] = true;
          queue.push_back(y);
        }
      }
    }
    transitive = queue.size() == n;
  }
  std::vector<std::size_t> ys;
  if (transitive) {
    ys = {0};
  } else {
    for (std::size_t i = 0; i < n; ++i) ys.push_back(i);
  }
  auto verdict = jordan_sweep(m.algebra, &test, ys);
  verdict.symmetry_reduction_used = transitive;
  return verdict;
}

bool w_in_radical(MatsuoAlgebra& m, std::size_t x, std::size_t y, std::size_t z, std::size_t w) {
  return radical_test(m).contains(w_element(m.algebra, x, y, z, w));
}

std::string_view to_string(EtaCase c) {
  switch (c) {
    case EtaCase::SingleAxis: return "single-axis";
    case EtaCase::CompleteEtaTwo: return "complete-eta-2";
    case EtaCase::NoJordanFactor: return "no-jordan-factor";
  }
  return "unknown";
}

EtaAnalysis eta_not_half_analysis(MatsuoAlgebra& m, std::size_t confirm_limit) {
  if (m.eta == Rational(1, 2)) throw Error(ErrorKind::WrongEta, "analysis is for eta != 1/2");
  EtaAnalysis out;
  const std::size_t n = m.algebra.dim();
  out.radical_dim = radical(m).size();
  if (n == 1) {
    out.kind = EtaCase::SingleAxis;
    out.quotient_dim = 1;
    return out;
  }
  bool complete = true;
  for (std::size_t i = 0; i < n && complete; ++i) {
    for (std::size_t j = i + 1; j < n && complete; ++j) complete = m.cls->adjacent(i, j);
  }
  if (m.eta == 2 && complete) {
    std::vector<RatVector> diffs;
    for (std::size_t i = 1; i < n; ++i) {
      auto v = unit_vector(n, i);
      v[0] = -1;
      diffs.push_back(std::move(v));
    }
    const auto q = quotient(m.algebra, diffs);
    const auto test = radical_test(m);
    out.differences_in_radical = std::all_of(diffs.begin(), diffs.end(), [&](const auto& d) { return test.contains(d); });
    out.kind = EtaCase::CompleteEtaTwo;
    out.quotient_dim = q.algebra.dim();
    return out;
  }
  out.kind = EtaCase::NoJordanFactor;
  if (n <= confirm_limit) {
    const auto test = radical_test(m);
    std::vector<std::size_t> ys(n);
    for (std::size_t i = 0; i < n; ++i) ys[i] = i;
    out.quotient_not_jordan = !jordan_sweep(m.algebra, &test, ys).is_jordan;
  }
  return out;
}

}  // namespace fj
