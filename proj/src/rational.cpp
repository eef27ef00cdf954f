#include "fmcalc/rational.hpp"

#include "fmcalc/errors.hpp"

#include <cctype>

namespace fmcalc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::PresentationMismatch: return "PresentationMismatch";
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::NotUnitOne: return "NotUnitOne";
    case ErrorKind::InvalidPresentation: return "InvalidPresentation";
    case ErrorKind::UnknownCatalogEntry: return "UnknownCatalogEntry";
    case ErrorKind::InconsistentCustomLattice: return "InconsistentCustomLattice";
    case ErrorKind::WrongKind: return "WrongKind";
    case ErrorKind::NonPositiveRank: return "NonPositiveRank";
    case ErrorKind::NegativeRank: return "NegativeRank";
    case ErrorKind::NotSUn: return "NotSUn";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ZeroRank: return "ZeroRank";
    case ErrorKind::ZeroSupportDegree: return "ZeroSupportDegree";
    case ErrorKind::EmptyRange: return "EmptyRange";
    case ErrorKind::BadFraction: return "BadFraction";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownKey: return "UnknownKey";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_canonical(const Rational& q) {
  const Integer num = numerator_of(q);
  const Integer den = denominator_of(q);
  if (den <= 0) return false;
  return boost::multiprecision::gcd(num, den) == 1 || (num == 0 && den == 1);
}

namespace {

bool parse_integer(std::string_view s, Integer& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') i = 1;
  if (i == s.size()) return false;
  for (std::size_t k = i; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  }
  out = Integer(std::string(s[0] == '+' ? s.substr(1) : s));
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  Integer num;
  Integer den = 1;
  bool ok = false;
  if (slash == std::string_view::npos) {
    ok = parse_integer(s, num);
  } else {
    const auto d = trim(s.substr(slash + 1));
    ok = parse_integer(trim(s.substr(0, slash)), num) && !d.empty() && d[0] != '-' && d[0] != '+' &&
         parse_integer(d, den) && den != 0;
  }
  if (!ok) throw Error(ErrorKind::BadFraction, "not an exact fraction: '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& q) {
  if (is_integral(q)) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

ComplexRational& ComplexRational::operator/=(const ComplexRational& o) {
  const Rational norm = o.re * o.re + o.im * o.im;
  if (norm == 0) throw Error(ErrorKind::InvalidArgument, "complex division by zero");
  Rational r = (re * o.re + im * o.im) / norm;
  im = (im * o.re - re * o.im) / norm;
  re = std::move(r);
  return *this;
}

std::string to_string(const ComplexRational& z) {
  if (z.im == 0) return to_string(z.re);
  std::string out = z.re == 0 ? std::string() : to_string(z.re) + (z.im < 0 ? "-" : "+");
  if (z.re == 0 && z.im < 0) out = "-";
  const Rational mag = abs(z.im);
  out += (mag == 1 ? std::string() : to_string(mag) + "*") + "i";
  return out;
}

std::ostream& operator<<(std::ostream& os, const ComplexRational& z) { return os << to_string(z); }

}  // namespace fmcalc
