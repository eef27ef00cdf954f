#pragma once

// Truncated graded-commutative rings over exact scalars.
//
// A RingPresentation fixes a finite graded basis together with its
// multiplication table (structure constants). GradedClass<Scalar> is a dense
// coefficient vector over that basis; Scalar is Rational for cohomology and
// ComplexRational for central-charge work. Degrees are complex codimensions:
// on a threefold the basis lives in degrees 0..3.

#include "fmcalc/errors.hpp"
#include "fmcalc/rational.hpp"

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fmcalc {

struct BasisElement {
  std::string name;
  int degree = 0;
};

/// Sparse list of (basis index, coefficient) pairs.
using SparseTerms = std::vector<std::pair<std::size_t, Rational>>;

class RingPresentation {
 public:
  /// products[i * n + j] holds basis_i * basis_j. Only the entries with
  /// i <= j are read; the table is symmetrised on construction. Throws
  /// InvalidPresentation when the grading is violated, when there is not
  /// exactly one degree-0 element (the unit, which must multiply as the
  /// identity) or not exactly one top-degree element (the point class).
  RingPresentation(int top_degree, std::vector<BasisElement> basis, std::vector<SparseTerms> products);

  int top_degree() const { return top_degree_; }
  std::size_t size() const { return basis_.size(); }
  const BasisElement& element(std::size_t i) const { return basis_.at(i); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  std::size_t unit_index() const { return unit_; }
  std::size_t point_index() const { return point_; }

  /// Throws InvalidArgument for unknown names.
  std::size_t index_of(const std::string& name) const;
  std::optional<std::size_t> find(const std::string& name) const;

  const SparseTerms& product(std::size_t i, std::size_t j) const { return table_[i * basis_.size() + j]; }

  /// First basis triple (a, b, c) with (ab)c != a(bc), if any.
  std::optional<std::array<std::size_t, 3>> associativity_violation() const;
  /// First pair with ab != ba. Always empty after construction (the table is
  /// symmetrised), kept so the invariant is testable.
  std::optional<std::array<std::size_t, 2>> commutativity_violation() const;

 private:
  int top_degree_;
  std::vector<BasisElement> basis_;
  std::vector<SparseTerms> table_;
  std::size_t unit_ = 0;
  std::size_t point_ = 0;
};

using RingPtr = std::shared_ptr<const RingPresentation>;

template <typename Scalar>
class GradedClass {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  GradedClass() = default;
  explicit GradedClass(RingPtr ring) : ring_(std::move(ring)), coeffs_(Vector::Zero(ring_->size())) {}
  GradedClass(RingPtr ring, Vector coeffs) : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != static_cast<Eigen::Index>(ring_->size())) {
      throw Error(ErrorKind::DimensionMismatch, "coefficient vector does not match ring size");
    }
  }

  static GradedClass zero(RingPtr ring) { return GradedClass(std::move(ring)); }
  static GradedClass one(RingPtr ring) {
    GradedClass c(std::move(ring));
    c.coeffs_[c.ring_->unit_index()] = Scalar(1);
    return c;
  }
  static GradedClass point(RingPtr ring) {
    GradedClass c(std::move(ring));
    c.coeffs_[c.ring_->point_index()] = Scalar(1);
    return c;
  }
  static GradedClass basis(RingPtr ring, std::size_t i, Scalar coefficient = Scalar(1)) {
    GradedClass c(std::move(ring));
    c.coeffs_[static_cast<Eigen::Index>(i)] = std::move(coefficient);
    return c;
  }
  static GradedClass basis(RingPtr ring, const std::string& name, Scalar coefficient = Scalar(1)) {
    const std::size_t i = ring->index_of(name);
    return basis(std::move(ring), i, std::move(coefficient));
  }

  const RingPtr& ring() const { return ring_; }
  const Vector& coeffs() const { return coeffs_; }
  Vector& coeffs() { return coeffs_; }
  const Scalar& operator[](std::size_t i) const { return coeffs_[static_cast<Eigen::Index>(i)]; }
  Scalar& operator[](std::size_t i) { return coeffs_[static_cast<Eigen::Index>(i)]; }
  const Scalar& coeff(const std::string& name) const { return (*this)[ring_->index_of(name)]; }

  bool is_zero() const {
    for (Eigen::Index i = 0; i < coeffs_.size(); ++i) {
      if (!fmcalc::is_zero(coeffs_[i])) return false;
    }
    return true;
  }

  /// Component of exactly the given degree.
  GradedClass degree_part(int degree) const {
    GradedClass out(ring_);
    for (std::size_t i = 0; i < ring_->size(); ++i) {
      if (ring_->element(i).degree == degree) out[i] = (*this)[i];
    }
    return out;
  }

  /// Lowest degree carrying a nonzero coefficient; nullopt for the zero class.
  std::optional<int> lowest_degree() const {
    std::optional<int> best;
    for (std::size_t i = 0; i < ring_->size(); ++i) {
      if (fmcalc::is_zero((*this)[i])) continue;
      const int d = ring_->element(i).degree;
      if (!best || d < *best) best = d;
    }
    return best;
  }

  const Scalar& unit_coefficient() const { return (*this)[ring_->unit_index()]; }

  template <typename Other>
  GradedClass<Other> cast() const {
    typename GradedClass<Other>::Vector v(coeffs_.size());
    for (Eigen::Index i = 0; i < coeffs_.size(); ++i) v[i] = Other(coeffs_[i]);
    return GradedClass<Other>(ring_, std::move(v));
  }

  GradedClass& operator+=(const GradedClass& o) {
    require_same_ring(o);
    coeffs_ += o.coeffs_;
    return *this;
  }
  GradedClass& operator-=(const GradedClass& o) {
    require_same_ring(o);
    coeffs_ -= o.coeffs_;
    return *this;
  }
  GradedClass& operator*=(const Scalar& s) {
    for (Eigen::Index i = 0; i < coeffs_.size(); ++i) coeffs_[i] *= s;
    return *this;
  }

  void require_same_ring(const GradedClass& o) const {
    if (ring_ != o.ring_) throw Error(ErrorKind::PresentationMismatch, "classes live in different rings");
  }

 private:
  RingPtr ring_;
  Vector coeffs_;
};

using Class = GradedClass<Rational>;
using ComplexClass = GradedClass<ComplexRational>;

template <typename S>
GradedClass<S> operator+(GradedClass<S> a, const GradedClass<S>& b) {
  return a += b;
}
template <typename S>
GradedClass<S> operator-(GradedClass<S> a, const GradedClass<S>& b) {
  return a -= b;
}
template <typename S>
GradedClass<S> operator-(GradedClass<S> a) {
  return a *= S(-1);
}
template <typename S>
GradedClass<S> operator*(const S& s, GradedClass<S> a) {
  return a *= s;
}
template <typename S>
GradedClass<S> operator*(GradedClass<S> a, const S& s) {
  return a *= s;
}
template <typename S>
bool operator==(const GradedClass<S>& a, const GradedClass<S>& b) {
  return a.ring() == b.ring() && a.coeffs() == b.coeffs();
}
template <typename S>
bool operator!=(const GradedClass<S>& a, const GradedClass<S>& b) {
  return !(a == b);
}

/// Coefficient-wise sum. Throws PresentationMismatch for different rings.
template <typename S>
GradedClass<S> add(const GradedClass<S>& a, const GradedClass<S>& b) {
  return a + b;
}

/// Bilinear extension of the multiplication table; anything above the top
/// degree is absent from the table and therefore dropped.
template <typename S>
GradedClass<S> mul(const GradedClass<S>& a, const GradedClass<S>& b) {
  a.require_same_ring(b);
  const RingPresentation& ring = *a.ring();
  GradedClass<S> out(a.ring());
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < ring.size(); ++j) {
      if (is_zero(b[j])) continue;
      const S ab = a[i] * b[j];
      for (const auto& [k, c] : ring.product(i, j)) out[k] += ab * S(c);
    }
  }
  return out;
}

template <typename S>
GradedClass<S> operator*(const GradedClass<S>& a, const GradedClass<S>& b) {
  return mul(a, b);
}

/// Coefficient of the point class.
template <typename S>
S integrate(const GradedClass<S>& a) {
  return a[a.ring()->point_index()];
}

/// Power series sum_k coefficients[k] * a^k, truncated at the top degree.
/// Requires a nilpotent (no degree-0 part).
template <typename S>
GradedClass<S> nilpotent_series(const GradedClass<S>& a, const std::vector<Rational>& coefficients) {
  GradedClass<S> out(a.ring());
  GradedClass<S> power = GradedClass<S>::one(a.ring());
  const int top = a.ring()->top_degree();
  for (int k = 0; k <= top && k < static_cast<int>(coefficients.size()); ++k) {
    if (k > 0) power = mul(power, a);
    if (coefficients[k] != 0) out += power * S(coefficients[k]);
  }
  return out;
}

/// exp(a) = sum a^k / k!. Throws NotNilpotent when a has a degree-0 part.
template <typename S>
GradedClass<S> exp_nilpotent(const GradedClass<S>& a) {
  if (!is_zero(a.unit_coefficient())) throw Error(ErrorKind::NotNilpotent, "exp needs a class without degree-0 part");
  std::vector<Rational> c;
  Rational fact = 1;
  for (int k = 0; k <= a.ring()->top_degree(); ++k) {
    if (k > 0) fact *= k;
    c.push_back(Rational(1) / fact);
  }
  return nilpotent_series(a, c);
}

namespace detail {
template <typename S>
void require_unit_one(const GradedClass<S>& u) {
  if (u.unit_coefficient() != S(1)) throw Error(ErrorKind::NotUnitOne, "expected a class with degree-0 coefficient 1");
}
}  // namespace detail

/// (1 + x)^{1/2} by the binomial series. Throws NotUnitOne unless the
/// degree-0 coefficient is exactly 1.
template <typename S>
GradedClass<S> sqrt_unit(const GradedClass<S>& u) {
  detail::require_unit_one(u);
  const GradedClass<S> x = u - GradedClass<S>::one(u.ring());
  std::vector<Rational> c;
  Rational binom = 1;  // binom(1/2, k)
  for (int k = 0; k <= u.ring()->top_degree(); ++k) {
    if (k > 0) binom = binom * (Rational(1, 2) - (k - 1)) / k;
    c.push_back(binom);
  }
  return nilpotent_series(x, c);
}

/// Multiplicative inverse of a class whose degree-0 coefficient is 1.
template <typename S>
GradedClass<S> inverse_unit(const GradedClass<S>& u) {
  detail::require_unit_one(u);
  const GradedClass<S> x = u - GradedClass<S>::one(u.ring());
  std::vector<Rational> c;
  for (int k = 0; k <= u.ring()->top_degree(); ++k) c.push_back(k % 2 == 0 ? 1 : -1);
  return nilpotent_series(x, c);
}

/// Degree-k component multiplied by (-1)^k: the Chern character of the dual.
template <typename S>
GradedClass<S> dual(const GradedClass<S>& a) {
  GradedClass<S> out = a;
  for (std::size_t i = 0; i < a.ring()->size(); ++i) {
    if (a.ring()->element(i).degree % 2 != 0) out[i] = -out[i];
  }
  return out;
}

/// "3*T + 1/2*f" style rendering in the presentation's basis names.
template <typename S>
std::string to_string(const GradedClass<S>& a) {
  std::string out;
  for (std::size_t i = 0; i < a.ring()->size(); ++i) {
    if (is_zero(a[i])) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(a[i]) + ")*" + a.ring()->element(i).name;
  }
  return out.empty() ? "0" : out;
}

}  // namespace fmcalc
