#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "fj/constructions.hpp"
#include "fj/matsuo.hpp"

namespace fj::test {

inline FamilyParams params(Family f, int m = 0, int n = 0) {
  FamilyParams p;
  p.family = f;
  p.m = m;
  p.n = n;
  return p;
}

/// Built classes are cached per process; several suites reuse the large ones.
inline std::shared_ptr<const TranspositionClass> cls(Family f, int m = 0, int n = 0) {
  static std::map<std::tuple<int, int, int>, std::shared_ptr<const TranspositionClass>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  const auto key = std::make_tuple(static_cast<int>(f), m, n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto c = build_family(params(f, m, n)).cls;
  cache.emplace(key, c);
  return c;
}

inline MatsuoAlgebra matsuo(Family f, int m, int n, const Rational& eta) { return build_matsuo(cls(f, m, n), eta); }

inline RatMatrix mat(std::size_t r, std::size_t c, std::initializer_list<long> xs) {
  std::vector<Rational> e;
  for (long x : xs) e.emplace_back(x);
  return RatMatrix(r, c, e);
}

}  // namespace fj::test
