#include "fj/algebra.hpp"

#include <algorithm>
#include <map>

#include "fj/error.hpp"

namespace fj {

SparseVector to_sparse(const RatVector& v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) != 0) out.push_back({static_cast<std::uint32_t>(i), v[i]});
  }
  return out;
}

RatVector to_dense(const SparseVector& v, std::size_t dim) {
  RatVector out(dim, Rational(0));
  for (const auto& t : v) out.at(t.index) += t.coeff;
  return out;
}

SparseVector canonical(SparseVector v) {
  std::sort(v.begin(), v.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
  SparseVector out;
  for (auto& t : v) {
    if (!out.empty() && out.back().index == t.index) {
      out.back().coeff += t.coeff;
    } else {
      out.push_back(std::move(t));
    }
  }
  std::erase_if(out, [](const Term& t) { return sgn(t.coeff) == 0; });
  return out;
}

Algebra::Algebra(std::size_t dim, std::vector<std::string> labels)
    : dim_(dim), labels_(std::move(labels)), table_(dim * dim) {
  if (labels_.empty()) {
    for (std::size_t i = 0; i < dim; ++i) labels_.push_back("e" + std::to_string(i));
  }
  if (labels_.size() != dim) throw Error(ErrorKind::BadParams, "label count differs from dimension");
}

void Algebra::set_product(std::size_t i, std::size_t j, SparseVector v) {
  if (i >= dim_ || j >= dim_) throw Error(ErrorKind::BadParams, "basis index out of range");
  for (const auto& t : v) {
    if (t.index >= dim_) throw Error(ErrorKind::BadParams, "product term out of range");
  }
  table_[i * dim_ + j] = canonical(std::move(v));
}

void Algebra::set_symmetric(std::size_t i, std::size_t j, SparseVector v) {
  set_product(i, j, v);
  if (i != j) set_product(j, i, std::move(v));
}

RatVector Algebra::multiply(const RatVector& x, const RatVector& y) const {
  RatVector out(dim_, Rational(0));
  Rational c;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(y[j]) == 0) continue;
      c = x[i] * y[j];
      for (const auto& t : product(i, j)) out[t.index] += c * t.coeff;
    }
  }
  return out;
}

SparseVector Algebra::multiply(const SparseVector& x, const SparseVector& y) const {
  RatVector acc(dim_, Rational(0));
  std::vector<bool> touched(dim_, false);
  Rational c;
  for (const auto& a : x) {
    for (const auto& b : y) {
      c = a.coeff * b.coeff;
      for (const auto& t : product(a.index, b.index)) {
        acc[t.index] += c * t.coeff;
        touched[t.index] = true;
      }
    }
  }
  SparseVector out;
  for (std::size_t k = 0; k < dim_; ++k) {
    if (touched[k] && sgn(acc[k]) != 0) out.push_back({static_cast<std::uint32_t>(k), acc[k]});
  }
  return out;
}

RatVector Algebra::multiply_basis(std::size_t i, const RatVector& y) const {
  RatVector out(dim_, Rational(0));
  for (std::size_t j = 0; j < dim_; ++j) {
    if (sgn(y[j]) == 0) continue;
    for (const auto& t : product(i, j)) out[t.index] += y[j] * t.coeff;
  }
  return out;
}

bool Algebra::is_commutative() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      const auto& a = product(i, j);
      const auto& b = product(j, i);
      if (a.size() != b.size()) return false;
      for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k].index != b[k].index || a[k].coeff != b[k].coeff) return false;
      }
    }
  }
  return true;
}

nlohmann::json Algebra::to_json(const std::optional<Rational>& eta) const {
  nlohmann::json j;
  j["dim"] = dim_;
  if (eta) j["eta"] = to_string(*eta);
  j["labels"] = labels_;
  auto& products = j["products"] = nlohmann::json::object();
  for (std::size_t a = 0; a < dim_; ++a) {
    for (std::size_t b = 0; b < dim_; ++b) {
      const auto& p = product(a, b);
      if (p.empty()) continue;
      auto arr = nlohmann::json::array();
      for (const auto& t : p) arr.push_back({t.index, to_string(t.coeff)});
      products[std::to_string(a) + "," + std::to_string(b)] = std::move(arr);
    }
  }
  return j;
}

Algebra Algebra::from_json(const nlohmann::json& j) {
  try {
    Algebra a(j.at("dim").get<std::size_t>(), j.at("labels").get<std::vector<std::string>>());
    for (const auto& [key, arr] : j.at("products").items()) {
      const auto comma = key.find(',');
      if (comma == std::string::npos) throw Error(ErrorKind::ParseError, "bad product key '" + key + "'");
      const auto i = std::stoul(key.substr(0, comma));
      const auto k = std::stoul(key.substr(comma + 1));
      SparseVector v;
      for (const auto& term : arr) {
        v.push_back({term.at(0).get<std::uint32_t>(), parse_rational(term.at(1).get<std::string>())});
      }
      a.set_product(i, k, std::move(v));
    }
    return a;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("algebra json: ") + e.what());
  }
}

bool operator==(const Algebra& a, const Algebra& b) {
  if (a.dim_ != b.dim_ || a.labels_ != b.labels_) return false;
  for (std::size_t k = 0; k < a.table_.size(); ++k) {
    const auto& x = a.table_[k];
    const auto& y = b.table_[k];
    if (x.size() != y.size()) return false;
    for (std::size_t t = 0; t < x.size(); ++t) {
      if (x[t].index != y[t].index || x[t].coeff != y[t].coeff) return false;
    }
  }
  return true;
}

RatVector associator(const Algebra& a, const RatVector& x, const RatVector& y, const RatVector& z) {
  auto left = a.multiply(a.multiply(x, y), z);
  const auto right = a.multiply(x, a.multiply(y, z));
  for (std::size_t i = 0; i < left.size(); ++i) left[i] -= right[i];
  return left;
}

}  // namespace fj
