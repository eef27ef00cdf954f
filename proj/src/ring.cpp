#include "fmcalc/ring.hpp"

#include <array>
#include <map>

namespace fmcalc {

namespace {

SparseTerms canonical(const SparseTerms& terms) {
  std::map<std::size_t, Rational> acc;
  for (const auto& [k, c] : terms) acc[k] += c;
  SparseTerms out;
  for (auto& [k, c] : acc) {
    if (c != 0) out.emplace_back(k, c);
  }
  return out;
}

SparseTerms multiply_terms(const RingPresentation& ring, const SparseTerms& lhs, std::size_t rhs) {
  SparseTerms out;
  for (const auto& [k, c] : lhs) {
    for (const auto& [m, d] : ring.product(k, rhs)) out.emplace_back(m, c * d);
  }
  return canonical(out);
}

SparseTerms multiply_terms(const RingPresentation& ring, std::size_t lhs, const SparseTerms& rhs) {
  SparseTerms out;
  for (const auto& [k, c] : rhs) {
    for (const auto& [m, d] : ring.product(lhs, k)) out.emplace_back(m, c * d);
  }
  return canonical(out);
}

}  // namespace

RingPresentation::RingPresentation(int top_degree, std::vector<BasisElement> basis,
                                   std::vector<SparseTerms> products)
    : top_degree_(top_degree), basis_(std::move(basis)) {
  const std::size_t n = basis_.size();
  if (products.size() != n * n) {
    throw Error(ErrorKind::InvalidPresentation, "multiplication table must have size n*n");
  }
  std::size_t units = 0;
  std::size_t points = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const int d = basis_[i].degree;
    if (d < 0 || d > top_degree_) {
      throw Error(ErrorKind::InvalidPresentation, "basis element '" + basis_[i].name + "' has degree out of range");
    }
    if (d == 0) {
      unit_ = i;
      ++units;
    }
    if (d == top_degree_) {
      point_ = i;
      ++points;
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (basis_[j].name == basis_[i].name) {
        throw Error(ErrorKind::InvalidPresentation, "duplicate basis name '" + basis_[i].name + "'");
      }
    }
  }
  if (units != 1) throw Error(ErrorKind::InvalidPresentation, "need exactly one degree-0 basis element");
  if (points != 1) throw Error(ErrorKind::InvalidPresentation, "need exactly one top-degree basis element");

  table_.assign(n * n, {});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      SparseTerms terms = canonical(products[i * n + j]);
      const int d = basis_[i].degree + basis_[j].degree;
      for (const auto& [k, c] : terms) {
        if (k >= n || basis_[k].degree != d) {
          throw Error(ErrorKind::InvalidPresentation,
                      "product " + basis_[i].name + "*" + basis_[j].name + " is not homogeneous of degree " +
                          std::to_string(d));
        }
      }
      table_[i * n + j] = terms;
      table_[j * n + i] = std::move(terms);
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    const SparseTerms expected{{j, Rational(1)}};
    if (table_[unit_ * n + j] != expected) {
      throw Error(ErrorKind::InvalidPresentation, "degree-0 element does not act as the identity");
    }
  }
}

std::optional<std::size_t> RingPresentation::find(const std::string& name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t RingPresentation::index_of(const std::string& name) const {
  if (auto i = find(name)) return *i;
  throw Error(ErrorKind::InvalidArgument, "no basis element named '" + name + "'");
}

std::optional<std::array<std::size_t, 3>> RingPresentation::associativity_violation() const {
  const std::size_t n = basis_.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (basis_[a].degree + basis_[b].degree + basis_[c].degree > top_degree_) continue;
        if (multiply_terms(*this, product(a, b), c) != multiply_terms(*this, a, product(b, c))) {
          return std::array<std::size_t, 3>{a, b, c};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::array<std::size_t, 2>> RingPresentation::commutativity_violation() const {
  const std::size_t n = basis_.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (product(a, b) != product(b, a)) return std::array<std::size_t, 2>{a, b};
    }
  }
  return std::nullopt;
}

}  // namespace fmcalc
