#pragma once

// Exact scalar types used throughout fmcalc: arbitrary-precision rationals
// and complex numbers with rational parts, plus the Eigen glue that lets
// them sit in dense Eigen vectors and matrices.

#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace fmcalc {

/// Exact rational. GMP keeps every value in lowest terms with a positive
/// denominator; expression templates are off so values behave like plain
/// arithmetic types inside Eigen.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integral(const Rational& q) { return denominator_of(q) == 1; }

/// True when gcd(num, den) == 1 and den > 0. GMP guarantees this; the check
/// exists so tests can assert it on every produced value.
bool is_canonical(const Rational& q);

/// Parses "p", "-p", "p/q" (surrounding blanks allowed). Throws
/// fmcalc::Error(ErrorKind::BadFraction) on anything else, including q == 0.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

Rational abs(const Rational& q);

/// Complex number with exact rational real and imaginary parts.
struct ComplexRational {
  Rational re;
  Rational im;

  ComplexRational() = default;
  ComplexRational(Rational r) : re(std::move(r)) {}  // NOLINT: implicit on purpose
  ComplexRational(int r) : re(r) {}                  // NOLINT
  ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  ComplexRational& operator+=(const ComplexRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ComplexRational& operator-=(const ComplexRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  ComplexRational& operator*=(const ComplexRational& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  ComplexRational& operator/=(const ComplexRational& o);

  friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
  friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
  friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
  friend ComplexRational operator/(ComplexRational a, const ComplexRational& b) { return a /= b; }
  friend ComplexRational operator-(const ComplexRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const ComplexRational& a, const ComplexRational& b) { return !(a == b); }

  bool is_zero() const { return re == 0 && im == 0; }
};

std::string to_string(const ComplexRational& z);
std::ostream& operator<<(std::ostream& os, const ComplexRational& z);

template <typename Scalar>
inline bool is_zero(const Scalar& s) {
  if constexpr (std::is_same_v<Scalar, ComplexRational>) {
    return s.is_zero();
  } else {
    return s == 0;
  }
}

}  // namespace fmcalc

namespace Eigen {

template <>
struct NumTraits<fmcalc::Rational> : GenericNumTraits<fmcalc::Rational> {
  using Real = fmcalc::Rational;
  using NonInteger = fmcalc::Rational;
  using Nested = fmcalc::Rational;
  using Literal = fmcalc::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 40,
    MulCost = 80
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<fmcalc::ComplexRational> : GenericNumTraits<fmcalc::ComplexRational> {
  using Real = fmcalc::Rational;
  using NonInteger = fmcalc::ComplexRational;
  using Nested = fmcalc::ComplexRational;
  using Literal = fmcalc::ComplexRational;
  enum {
    IsComplex = 1,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 80,
    MulCost = 320
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace fmcalc {

using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using ComplexVector = Eigen::Matrix<ComplexRational, Eigen::Dynamic, 1>;

/// Zero-initialised vector; Eigen leaves non-POD scalars default-constructed
/// which for GMP is already zero, but this spells the intent.
inline RationalVector zero_vector(Eigen::Index n) { return RationalVector::Zero(n); }

}  // namespace fmcalc
