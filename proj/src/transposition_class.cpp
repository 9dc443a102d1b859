#include "fj/transposition_class.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "fj/error.hpp"
#include "fj/parallel.hpp"

namespace fj {

namespace {

using ElementSet = std::unordered_set<GroupElement, GroupElementHash>;

std::vector<GroupElement> orbit(const GroupBackend& backend, const std::vector<GroupElement>& seeds,
                                const std::vector<GroupElement>& generators, std::size_t cap) {
  std::vector<GroupElement> inverses;
  inverses.reserve(generators.size());
  for (const auto& g : generators) inverses.push_back(backend.inverse(g));
  std::vector<GroupElement> out;
  ElementSet seen;
  for (const auto& s : seeds) {
    if (!seen.insert(s).second) continue;
    out.push_back(s);
    for (std::size_t head = out.size() - 1; head < out.size(); ++head) {
      for (std::size_t k = 0; k < generators.size(); ++k) {
        auto y = backend.multiply(backend.multiply(inverses[k], out[head]), generators[k]);
        if (seen.insert(y).second) {
          out.push_back(std::move(y));
          if (out.size() > cap) {
            throw Error(ErrorKind::CapExceeded, "class grows past " + std::to_string(cap) + " elements");
          }
        }
      }
    }
  }
  return out;
}

void check_involution(const GroupBackend& backend, const GroupElement& seed) {
  if (!backend.is_valid(seed)) throw Error(ErrorKind::NotInvolution, "seed is not a valid element");
  if (small_order(backend, seed) != 2) throw Error(ErrorKind::NotInvolution, "seed does not have order 2");
}

}  // namespace

std::uint8_t small_order(const GroupBackend& backend, const GroupElement& g) {
  const auto id = backend.identity();
  if (g == id) return 1;
  const auto g2 = backend.multiply(g, g);
  if (g2 == id) return 2;
  if (backend.multiply(g2, g) == id) return 3;
  return 4;
}

TranspositionClass::TranspositionClass(GroupSpec spec, std::vector<GroupElement> elements,
                                       bool require_3transpositions)
    : spec_(std::move(spec)), elements_(std::move(elements)) {
  const std::size_t n = elements_.size();
  index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) index_.emplace(elements_[i], i);
  order_.assign(n * n, 1);
  const auto& be = backend();
  parallel_for(n, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto o = small_order(be, be.multiply(elements_[i], elements_[j]));
      order_[i * n + j] = o;
      order_[j * n + i] = o;
    }
  });
  if (require_3transpositions) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (order_[i * n + j] > 3 || order_[i * n + j] < 2) {
          throw Error(ErrorKind::NotThreeTransposition,
                      label(i) + " * " + label(j) + " has order other than 2 or 3");
        }
      }
    }
  }
}

std::optional<std::size_t> TranspositionClass::index_of(const GroupElement& g) const {
  const auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t TranspositionClass::third_point(std::size_t i, std::size_t j) const {
  const auto& be = backend();
  const auto& d = elements_.at(j);
  const auto e = be.multiply(be.multiply(d, elements_.at(i)), d);
  const auto k = index_of(e);
  if (!k) throw Error(ErrorKind::InconsistentLine, "third point of " + label(i) + ", " + label(j) + " is outside the class");
  return *k;
}

std::vector<std::size_t> TranspositionClass::conjugation_action(const GroupElement& g) const {
  const auto& be = backend();
  const auto gi = be.inverse(g);
  std::vector<std::size_t> out(size());
  for (std::size_t i = 0; i < size(); ++i) {
    const auto k = index_of(be.multiply(be.multiply(gi, elements_[i]), g));
    if (!k) throw Error(ErrorKind::InconsistentLine, "conjugation leaves the class");
    out[i] = *k;
  }
  return out;
}

TranspositionClass conjugacy_closure(const GroupSpec& spec, const ClosureOptions& options) {
  if (!spec.backend) throw Error(ErrorKind::BadParams, "group spec without backend");
  check_involution(*spec.backend, spec.seed);
  for (const auto& g : spec.generators) {
    if (!spec.backend->is_valid(g)) throw Error(ErrorKind::BadParams, "invalid generator in " + spec.label);
  }
  auto elements = orbit(*spec.backend, {spec.seed}, spec.generators, options.cap);
  return TranspositionClass(spec, std::move(elements), options.require_3transpositions);
}

bool verify_3transpositions(const TranspositionClass& cls) {
  for (std::size_t i = 0; i < cls.size(); ++i) {
    for (std::size_t j = 0; j < cls.size(); ++j) {
      const auto o = cls.pair_order(i, j);
      if (i == j ? o != 1 : (o != 2 && o != 3)) return false;
    }
  }
  return true;
}

TranspositionClass perp_subclass(const TranspositionClass& cls, std::size_t d) {
  if (d >= cls.size()) throw Error(ErrorKind::BadParams, "perp index out of range");
  std::vector<GroupElement> perp;
  for (std::size_t e = 0; e < cls.size(); ++e) {
    if (e != d && cls.pair_order(d, e) == 2) perp.push_back(cls.element(e));
  }
  if (perp.empty()) throw Error(ErrorKind::EmptyPerp, "no class element commutes with " + cls.label(d));
  const auto& be = cls.backend();
  GroupSpec spec;
  spec.backend = cls.spec().backend;
  spec.seed = perp.front();
  spec.label = cls.spec().label + " perp " + cls.label(d);
  spec.generators = greedy_generators(be, spec.seed, perp);
  std::vector<GroupElement> elements;
  if (!spec.generators.empty()) {
    elements = orbit(be, {spec.seed}, spec.generators, perp.size());
  } else {
    // disconnected perp: union of the orbits under all of D_d
    spec.generators = perp;
    elements = orbit(be, perp, perp, perp.size());
  }
  return TranspositionClass(std::move(spec), std::move(elements), true);
}

std::vector<GroupElement> greedy_generators(const GroupBackend& backend, const GroupElement& seed,
                                            const std::vector<GroupElement>& candidates, std::size_t cap) {
  ElementSet target(candidates.begin(), candidates.end());
  std::vector<GroupElement> gens;
  std::size_t reached = orbit(backend, {seed}, gens, cap).size();
  for (const auto& c : candidates) {
    if (reached == target.size()) break;
    gens.push_back(c);
    const auto grown = orbit(backend, {seed}, gens, cap);
    if (grown.size() > reached) {
      reached = grown.size();
    } else {
      gens.pop_back();
    }
  }
  if (reached != target.size()) return {};
  for (const auto& g : orbit(backend, {seed}, gens, cap)) {
    if (!target.count(g)) return {};
  }
  return gens;
}

}  // namespace fj
