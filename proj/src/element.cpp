#include "fj/element.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "fj/error.hpp"

namespace fj {

std::size_t GroupElementHash::operator()(const GroupElement& g) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto x : g.data) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string_view to_string(BackendKind kind) {
  switch (kind) {
    case BackendKind::Permutation: return "permutation";
    case BackendKind::Matrix: return "matrix";
    case BackendKind::Table: return "table";
    case BackendKind::Wreath: return "wreath";
  }
  return "unknown";
}

GroupElement GroupBackend::conjugate(const GroupElement& c, const GroupElement& g) const {
  return multiply(multiply(inverse(g), c), g);
}

std::size_t element_order(const GroupBackend& backend, const GroupElement& g, std::size_t bound) {
  const auto id = backend.identity();
  GroupElement power = g;
  for (std::size_t k = 1; k <= bound; ++k) {
    if (power == id) return k;
    power = backend.multiply(power, g);
  }
  throw Error(ErrorKind::OrderBound, "element order exceeds " + std::to_string(bound));
}

// ---------------------------------------------------------------- MultTable

MultTable::MultTable(std::vector<std::vector<std::uint16_t>> rows) : k_(rows.size()) {
  if (k_ == 0) throw Error(ErrorKind::BadParams, "empty multiplication table");
  table_.reserve(k_ * k_);
  for (const auto& row : rows) {
    if (row.size() != k_) throw Error(ErrorKind::BadParams, "multiplication table is not square");
    for (auto x : row) {
      if (x >= k_) throw Error(ErrorKind::BadParams, "multiplication table entry out of range");
      table_.push_back(x);
    }
  }
  for (std::uint16_t a = 0; a < k_; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a) {
      throw Error(ErrorKind::BadParams, "element 0 is not the identity of the table");
    }
  }
  inverse_.assign(k_, 0);
  for (std::uint16_t a = 0; a < k_; ++a) {
    bool found = false;
    for (std::uint16_t b = 0; b < k_ && !found; ++b) {
      if (mul(a, b) == 0 && mul(b, a) == 0) {
        inverse_[a] = b;
        found = true;
      }
    }
    if (!found) throw Error(ErrorKind::BadParams, "table element without inverse");
  }
  for (std::uint16_t a = 0; a < k_; ++a) {
    for (std::uint16_t b = 0; b < k_; ++b) {
      for (std::uint16_t c = 0; c < k_; ++c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          throw Error(ErrorKind::BadParams, "multiplication table is not associative");
        }
      }
    }
  }
}

MultTable MultTable::trivial() { return MultTable(std::vector<std::vector<std::uint16_t>>{{0}}); }

MultTable MultTable::cyclic(std::size_t p) {
  std::vector<std::vector<std::uint16_t>> rows(p, std::vector<std::uint16_t>(p));
  for (std::size_t a = 0; a < p; ++a) {
    for (std::size_t b = 0; b < p; ++b) rows[a][b] = static_cast<std::uint16_t>((a + b) % p);
  }
  return MultTable(std::move(rows));
}

MultTable MultTable::alternating4() {
  std::vector<std::array<int, 4>> perms;
  std::array<int, 4> p = {0, 1, 2, 3};
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) inversions += p[i] > p[j];
    }
    if (inversions % 2 == 0) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  // next_permutation starts from the identity, so index 0 is the identity.
  auto index_of = [&](const std::array<int, 4>& q) {
    return static_cast<std::uint16_t>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<std::uint16_t>> rows(perms.size(), std::vector<std::uint16_t>(perms.size()));
  for (std::size_t a = 0; a < perms.size(); ++a) {
    for (std::size_t b = 0; b < perms.size(); ++b) {
      std::array<int, 4> c{};
      for (int x = 0; x < 4; ++x) c[x] = perms[b][perms[a][x]];
      rows[a][b] = index_of(c);
    }
  }
  return MultTable(std::move(rows));
}

std::size_t MultTable::order(std::uint16_t a) const {
  std::size_t k = 1;
  std::uint16_t x = a;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

// ------------------------------------------------------- PermutationBackend

PermutationBackend::PermutationBackend(std::size_t degree) : degree_(degree) {
  if (degree == 0 || degree > 65535) throw Error(ErrorKind::BadParams, "bad permutation degree");
}

GroupElement PermutationBackend::identity() const {
  GroupElement g;
  g.data.resize(degree_);
  std::iota(g.data.begin(), g.data.end(), std::uint16_t{0});
  return g;
}

GroupElement PermutationBackend::multiply(const GroupElement& a, const GroupElement& b) const {
  GroupElement out;
  out.data.resize(degree_);
  for (std::size_t x = 0; x < degree_; ++x) out.data[x] = b.data[a.data[x]];
  return out;
}

GroupElement PermutationBackend::inverse(const GroupElement& g) const {
  GroupElement out;
  out.data.resize(degree_);
  for (std::size_t x = 0; x < degree_; ++x) out.data[g.data[x]] = static_cast<std::uint16_t>(x);
  return out;
}

bool PermutationBackend::is_valid(const GroupElement& g) const {
  if (g.data.size() != degree_) return false;
  std::vector<bool> seen(degree_, false);
  for (auto x : g.data) {
    if (x >= degree_ || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

std::string PermutationBackend::describe(const GroupElement& g) const {
  std::ostringstream out;
  std::vector<bool> done(degree_, false);
  for (std::size_t start = 0; start < degree_; ++start) {
    if (done[start] || g.data[start] == start) continue;
    out << '(' << start + 1;
    done[start] = true;
    for (std::size_t x = g.data[start]; x != start; x = g.data[x]) {
      out << ',' << x + 1;
      done[x] = true;
    }
    out << ')';
  }
  const auto s = out.str();
  return s.empty() ? "()" : s;
}

GroupElement PermutationBackend::from_images(const std::vector<std::size_t>& images) const {
  GroupElement g;
  g.data.reserve(images.size());
  for (auto x : images) g.data.push_back(static_cast<std::uint16_t>(x));
  if (!is_valid(g)) throw Error(ErrorKind::BadParams, "image list is not a permutation");
  return g;
}

GroupElement PermutationBackend::parse_cycles(std::string_view text) const {
  auto fail = [&](const std::string& why) -> GroupElement {
    throw Error(ErrorKind::ParseError, why + " in '" + std::string(text) + "'");
  };
  GroupElement g = identity();
  std::vector<bool> used(degree_, false);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  if (pos == text.size()) return fail("empty permutation");
  while (pos < text.size()) {
    if (text[pos] != '(') return fail("expected '('");
    ++pos;
    std::vector<std::size_t> cycle;
    skip_space();
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
      skip_space();
      continue;
    }
    while (true) {
      skip_space();
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) return fail("expected a point");
      const std::size_t point = std::stoul(std::string(text.substr(start, pos - start)));
      if (point < 1 || point > degree_) return fail("point " + std::to_string(point) + " out of range");
      if (used[point - 1]) return fail("point " + std::to_string(point) + " repeated");
      used[point - 1] = true;
      cycle.push_back(point - 1);
      skip_space();
      if (pos >= text.size()) return fail("unterminated cycle");
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      return fail("unexpected character");
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      g.data[cycle[k]] = static_cast<std::uint16_t>(cycle[(k + 1) % cycle.size()]);
    }
    skip_space();
  }
  return g;
}

// ----------------------------------------------------------- MatrixBackend

MatrixBackend::MatrixBackend(int q, std::size_t dim) : field_(q), dim_(dim) {
  if (dim == 0 || dim > 64) throw Error(ErrorKind::BadParams, "bad matrix dimension");
}

GroupElement MatrixBackend::identity() const {
  GroupElement g;
  g.data.assign(dim_ * dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) g.data[i * dim_ + i] = 1;
  return g;
}

GroupElement MatrixBackend::multiply(const GroupElement& a, const GroupElement& b) const {
  GroupElement out;
  out.data.assign(dim_ * dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const auto aik = static_cast<std::uint8_t>(a.data[i * dim_ + k]);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        auto& c = out.data[i * dim_ + j];
        c = field_.add(static_cast<std::uint8_t>(c),
                       field_.mul(aik, static_cast<std::uint8_t>(b.data[k * dim_ + j])));
      }
    }
  }
  return out;
}

GroupElement MatrixBackend::inverse(const GroupElement& g) const {
  const std::size_t n = dim_;
  std::vector<std::uint8_t> a(n * 2 * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * 2 * n + j] = static_cast<std::uint8_t>(g.data[i * n + j]);
    a[i * 2 * n + n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p * 2 * n + c] == 0) ++p;
    if (p == n) throw Error(ErrorKind::BadParams, "singular matrix has no inverse");
    for (std::size_t j = 0; j < 2 * n; ++j) std::swap(a[p * 2 * n + j], a[c * 2 * n + j]);
    const auto inv = field_.inv(a[c * 2 * n + c]);
    for (std::size_t j = 0; j < 2 * n; ++j) a[c * 2 * n + j] = field_.mul(a[c * 2 * n + j], inv);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i * 2 * n + c] == 0) continue;
      const auto f = a[i * 2 * n + c];
      for (std::size_t j = 0; j < 2 * n; ++j) {
        a[i * 2 * n + j] = field_.sub(a[i * 2 * n + j], field_.mul(f, a[c * 2 * n + j]));
      }
    }
  }
  GroupElement out;
  out.data.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.data[i * n + j] = a[i * 2 * n + n + j];
  }
  return out;
}

bool MatrixBackend::is_valid(const GroupElement& g) const {
  if (g.data.size() != dim_ * dim_) return false;
  for (auto x : g.data) {
    if (x >= static_cast<unsigned>(field_.order())) return false;
  }
  try {
    (void)inverse(g);
  } catch (const Error&) {
    return false;
  }
  return true;
}

std::string MatrixBackend::describe(const GroupElement& g) const {
  std::string s = "[";
  for (std::size_t i = 0; i < dim_; ++i) {
    if (i) s += '|';
    for (std::size_t j = 0; j < dim_; ++j) s += static_cast<char>('0' + g.data[i * dim_ + j]);
  }
  return s + "]";
}

GroupElement MatrixBackend::from_entries(const std::vector<std::uint8_t>& entries) const {
  GroupElement g;
  g.data.assign(entries.begin(), entries.end());
  if (!is_valid(g)) throw Error(ErrorKind::BadParams, "matrix entries do not form an invertible matrix");
  return g;
}

// ------------------------------------------------------------ TableBackend

TableBackend::TableBackend(std::shared_ptr<const MultTable> table) : table_(std::move(table)) {}

GroupElement TableBackend::identity() const { return GroupElement{{0}}; }

GroupElement TableBackend::multiply(const GroupElement& a, const GroupElement& b) const {
  return GroupElement{{table_->mul(a.data[0], b.data[0])}};
}

GroupElement TableBackend::inverse(const GroupElement& g) const {
  return GroupElement{{table_->inverse(g.data[0])}};
}

bool TableBackend::is_valid(const GroupElement& g) const {
  return g.data.size() == 1 && g.data[0] < table_->size();
}

std::string TableBackend::describe(const GroupElement& g) const { return "g" + std::to_string(g.data[0]); }

GroupElement TableBackend::element(std::uint16_t index) const {
  GroupElement g{{index}};
  if (!is_valid(g)) throw Error(ErrorKind::BadParams, "table index out of range");
  return g;
}

// ----------------------------------------------------------- WreathBackend

WreathBackend::WreathBackend(std::shared_ptr<const MultTable> base, std::size_t n)
    : base_(std::move(base)), n_(n) {
  if (n < 2) throw Error(ErrorKind::BadParams, "wreath product needs n >= 2");
}

GroupElement WreathBackend::identity() const {
  GroupElement g;
  g.data.assign(2 * n_, 0);
  for (std::size_t i = 0; i < n_; ++i) g.data[n_ + i] = static_cast<std::uint16_t>(i);
  return g;
}

GroupElement WreathBackend::multiply(const GroupElement& a, const GroupElement& b) const {
  GroupElement out;
  out.data.resize(2 * n_);
  std::vector<std::uint16_t> inv_pa(n_);
  for (std::size_t i = 0; i < n_; ++i) inv_pa[a.data[n_ + i]] = static_cast<std::uint16_t>(i);
  for (std::size_t k = 0; k < n_; ++k) {
    out.data[k] = base_->mul(a.data[k], b.data[inv_pa[k]]);
    out.data[n_ + k] = a.data[n_ + b.data[n_ + k]];
  }
  return out;
}

GroupElement WreathBackend::inverse(const GroupElement& g) const {
  GroupElement out;
  out.data.resize(2 * n_);
  for (std::size_t j = 0; j < n_; ++j) {
    const std::size_t pj = g.data[n_ + j];
    out.data[j] = base_->inverse(g.data[pj]);
    out.data[n_ + pj] = static_cast<std::uint16_t>(j);
  }
  return out;
}

bool WreathBackend::is_valid(const GroupElement& g) const {
  if (g.data.size() != 2 * n_) return false;
  std::vector<bool> seen(n_, false);
  for (std::size_t i = 0; i < n_; ++i) {
    if (g.data[i] >= base_->size()) return false;
    const auto p = g.data[n_ + i];
    if (p >= n_ || seen[p]) return false;
    seen[p] = true;
  }
  return true;
}

std::string WreathBackend::describe(const GroupElement& g) const {
  const auto s = symbol(g);
  if (!s) {
    std::ostringstream out;
    out << "wr[";
    for (std::size_t i = 0; i < 2 * n_; ++i) out << (i ? "," : "") << g.data[i];
    out << "]";
    return out.str();
  }
  const auto i = std::to_string(s->i + 1), j = std::to_string(s->j + 1);
  const auto k = base_->size();
  if ((k == 2 || k == 3) && s->t == 0) return "b" + i + "," + j;
  if (k == 2 || (k == 3 && s->t == 1)) return "c" + i + "," + j;
  if (k == 3) return "c" + j + "," + i;
  return std::to_string(s->t) + ".(" + i + "," + j + ")";
}

GroupElement WreathBackend::base_element(std::uint16_t t, std::size_t i) const {
  GroupElement g = identity();
  g.data.at(i) = t;
  return g;
}

GroupElement WreathBackend::top_transposition(std::size_t i, std::size_t j) const {
  GroupElement g = identity();
  std::swap(g.data.at(n_ + i), g.data.at(n_ + j));
  return g;
}

GroupElement WreathBackend::symbol_element(const WreathSymbol& s) const {
  if (s.i == s.j || s.i >= n_ || s.j >= n_) throw Error(ErrorKind::BadParams, "bad wreath symbol");
  GroupElement g = top_transposition(s.i, s.j);
  g.data[s.i] = s.t;
  g.data[s.j] = base_->inverse(s.t);
  return g;
}

std::optional<WreathSymbol> WreathBackend::symbol(const GroupElement& g) const {
  std::size_t moved[2];
  std::size_t count = 0;
  for (std::size_t k = 0; k < n_; ++k) {
    if (g.data[n_ + k] != k) {
      if (count == 2) return std::nullopt;
      moved[count++] = k;
    }
  }
  if (count != 2 || g.data[n_ + moved[0]] != moved[1]) return std::nullopt;
  for (std::size_t k = 0; k < n_; ++k) {
    if (k != moved[0] && k != moved[1] && g.data[k] != 0) return std::nullopt;
  }
  const auto t = g.data[moved[0]];
  if (g.data[moved[1]] != base_->inverse(t)) return std::nullopt;
  return WreathSymbol{t, moved[0], moved[1]};
}

GroupElement WreathBackend::diagonal(std::uint16_t t) const {
  GroupElement g = identity();
  for (std::size_t i = 0; i < n_; ++i) g.data[i] = t;
  return g;
}

}  // namespace fj
