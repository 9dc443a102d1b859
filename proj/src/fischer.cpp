#include "fj/fischer.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "fj/error.hpp"
#include "fj/linalg.hpp"

namespace fj {

Diagram::Diagram(std::size_t n, std::vector<std::uint8_t> adjacency)
    : n_(n), adj_(std::move(adjacency)), nbrs_(n) {
  if (adj_.size() != n * n) throw Error(ErrorKind::BadParams, "adjacency size mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (adj_[i * n + i]) throw Error(ErrorKind::BadParams, "diagram has a loop");
    for (std::size_t j = 0; j < n; ++j) {
      if (adj_[i * n + j] != adj_[j * n + i]) throw Error(ErrorKind::BadParams, "diagram is not symmetric");
      if (adj_[i * n + j]) nbrs_[i].push_back(j);
    }
  }
}

std::size_t Diagram::degree(std::size_t i) const { return nbrs_.at(i).size(); }

std::size_t Diagram::max_degree() const {
  std::size_t d = 0;
  for (const auto& nb : nbrs_) d = std::max(d, nb.size());
  return d;
}

std::size_t Diagram::edge_count() const {
  std::size_t e = 0;
  for (const auto& nb : nbrs_) e += nb.size();
  return e / 2;
}

RatMatrix Diagram::adjacency_matrix() const {
  RatMatrix a(n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (auto j : nbrs_[i]) a(i, j) = 1;
  }
  return a;
}

Diagram diagram(const TranspositionClass& cls) {
  const std::size_t n = cls.size();
  std::vector<std::uint8_t> adj(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) adj[i * n + j] = i != j && cls.adjacent(i, j);
  }
  return Diagram(n, std::move(adj));
}

bool is_connected(const Diagram& g) {
  if (g.size() == 0) return true;
  std::vector<bool> seen(g.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (auto w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == g.size();
}

bool is_regular(const Diagram& g) {
  for (std::size_t i = 1; i < g.size(); ++i) {
    if (g.degree(i) != g.degree(0)) return false;
  }
  return true;
}

std::vector<std::array<std::size_t, 3>> lines(const TranspositionClass& cls) {
  std::set<std::array<std::size_t, 3>> out;
  for (std::size_t i = 0; i < cls.size(); ++i) {
    for (std::size_t j = i + 1; j < cls.size(); ++j) {
      if (!cls.adjacent(i, j)) continue;
      std::array<std::size_t, 3> line{i, j, cls.third_point(i, j)};
      std::sort(line.begin(), line.end());
      out.insert(line);
    }
  }
  return {out.begin(), out.end()};
}

SpectrumReport spectrum(const Diagram& g) {
  const std::size_t n = g.size();
  if (n == 0) return {};
  const long maxdeg = static_cast<long>(g.max_degree());
  std::vector<long> candidates{maxdeg};
  for (long a = 0; a <= maxdeg; ++a) {
    if (a != maxdeg) candidates.push_back(a);
    if (a != 0 && -a != maxdeg) candidates.push_back(-a);
  }
  IntegerEigenProbe probe(g.adjacency_matrix());
  std::vector<SpectrumEntry> found;
  std::size_t mass = 0;
  for (auto t : candidates) {
    if (mass == n) break;
    const auto k = probe.multiplicity(t);
    if (k) {
      found.push_back({t, k});
      mass += k;
    }
  }
  return normalize_spectrum(std::move(found), n - mass);
}

std::string diagram_fingerprint(const Diagram& g) { return diagram_fingerprint(g, spectrum(g)); }

std::string diagram_fingerprint(const Diagram& g, const SpectrumReport& spec) {
  const std::size_t n = g.size();
  std::vector<std::size_t> degrees(n), triangles(n);
  for (std::size_t v = 0; v < n; ++v) {
    degrees[v] = g.degree(v);
    std::size_t t = 0;
    const auto& nb = g.neighbors(v);
    for (std::size_t a = 0; a < nb.size(); ++a) {
      for (std::size_t b = a + 1; b < nb.size(); ++b) t += g.adjacent(nb[a], nb[b]);
    }
    triangles[v] = t;
  }
  std::sort(degrees.begin(), degrees.end());
  std::sort(triangles.begin(), triangles.end());
  auto run_length = [](const std::vector<std::size_t>& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size();) {
      std::size_t j = i;
      while (j < v.size() && v[j] == v[i]) ++j;
      out << (i ? "," : "") << v[i] << "x" << (j - i);
      i = j;
    }
    return out.str();
  };
  std::ostringstream out;
  out << "n=" << n << ";deg=" << run_length(degrees) << ";spec=" << spec.to_string()
      << ";tri=" << run_length(triangles);
  return out.str();
}

std::string edge_list(const Diagram& g) {
  std::ostringstream out;
  out << g.size() << ' ' << g.edge_count() << '\n';
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (auto j : g.neighbors(i)) {
      if (i < j) out << i << ' ' << j << '\n';
    }
  }
  return out.str();
}

Diagram parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::size_t n = 0, m = 0;
  if (!(in >> n >> m)) throw Error(ErrorKind::ParseError, "edge list header 'n m' missing");
  std::vector<std::uint8_t> adj(n * n, 0);
  for (std::size_t e = 0; e < m; ++e) {
    std::size_t i = 0, j = 0;
    if (!(in >> i >> j) || i >= n || j >= n || i == j) {
      throw Error(ErrorKind::ParseError, "bad edge " + std::to_string(e + 1));
    }
    adj[i * n + j] = adj[j * n + i] = 1;
  }
  return Diagram(n, std::move(adj));
}

}  // namespace fj
