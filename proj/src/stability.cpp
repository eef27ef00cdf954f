#include "fmcalc/stability.hpp"

#include "fmcalc/errors.hpp"

#include <algorithm>

namespace fmcalc {

Polynomial::Polynomial(std::vector<Rational> c) : coeffs(std::move(c)) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

Rational Polynomial::coeff(int k) const {
  return k >= 0 && k < static_cast<int>(coeffs.size()) ? coeffs[static_cast<std::size_t>(k)] : Rational(0);
}

Rational Polynomial::operator()(const Rational& m) const {
  Rational v = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * m + *it;
  return v;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  std::vector<Rational> c(std::max(p.coeffs.size(), q.coeffs.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = p.coeff(static_cast<int>(k)) + q.coeff(static_cast<int>(k));
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + Rational(-1) * q; }

Polynomial operator*(const Rational& k, const Polynomial& p) {
  std::vector<Rational> c = p.coeffs;
  for (auto& x : c) x *= k;
  return Polynomial(std::move(c));
}

std::string to_string(const Polynomial& p) {
  if (p.coeffs.empty()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational& c = p.coeffs[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const Rational a = abs(c);
    const bool unit = a == 1 && k > 0;
    if (!unit) out += to_string(a);
    if (k > 0) out += (unit ? "" : "*") + std::string("m") + (k > 1 ? "^" + std::to_string(k) : "");
  }
  return out;
}

HilbertData hilbert_data(Polynomial P) {
  HilbertData h;
  h.s = P.degree();
  Rational fact = 1;
  for (int k = 2; k < h.s; ++k) fact *= k;  // (s-1)!
  if (h.s >= 0) {
    h.r = P.coeff(h.s) * fact * (h.s > 0 ? h.s : 1);
    h.d = h.s > 0 ? P.coeff(h.s - 1) * fact : Rational(0);
  }
  h.P = std::move(P);
  return h;
}

HilbertData hilbert_polynomial(const Class& ch, const Class& td, const Class& H) {
  const int top = ch.ring()->top_degree();
  std::vector<Rational> c;
  Class power = Class::one(ch.ring());
  Rational fact = 1;
  const Class base = ch * td;
  for (int k = 0; k <= top; ++k) {
    if (k > 0) {
      power = power * H;
      fact *= k;
    }
    c.push_back(integrate(base * power) / fact);
  }
  return hilbert_data(Polynomial(std::move(c)));
}

HilbertData hilbert_polynomial(const ChernData3& E, const FibrationModel& X, const Class& H) {
  return hilbert_polynomial(to_class(X, E), todd_total(X), H);
}

HilbertData hilbert_polynomial(const ChernData2& E, const FibrationModel& X, const Class& H) {
  return hilbert_polynomial(to_class(X, E), todd_total(X), H);
}

ReducedSlope reduced_and_slope(const HilbertData& h) {
  if (h.r == 0) throw Error(ErrorKind::ZeroRank, "r(E) vanishes");
  return {(Rational(1) / h.r) * h.P, h.d / h.r};
}

Class support_class(const Class& ch) {
  const auto low = ch.lowest_degree();
  if (!low) throw Error(ErrorKind::ZeroSupportDegree, "the zero class has empty support");
  if (*low == 0) return Class::one(ch.ring());
  Class part = ch.degree_part(*low);
  Integer g = 0, l = 1;
  for (std::size_t i = 0; i < ch.ring()->size(); ++i) {
    if (part[i] == 0) continue;
    g = boost::multiprecision::gcd(g, numerator_of(abs(part[i])));
    l = boost::multiprecision::lcm(l, denominator_of(part[i]));
  }
  const Rational content(g, l);
  return (Rational(1) / content) * part;
}

Rational polarized_rank(const Class& ch, const Class& td, const Class& H, const std::optional<Class>& support) {
  const HilbertData h = hilbert_polynomial(ch, td, H);
  const Class supp = support ? *support : support_class(ch);
  const int dim = ch.ring()->top_degree() - supp.lowest_degree().value_or(0);
  Class power = supp;
  for (int k = 0; k < dim; ++k) power = power * H;
  const Rational deg = integrate(power);
  if (deg == 0) throw Error(ErrorKind::ZeroSupportDegree, "support has H-degree 0");
  return h.r / deg;
}

std::strong_ordering poly_compare(const Polynomial& p, const Polynomial& q) {
  const Polynomial diff = p - q;
  if (diff.coeffs.empty()) return std::strong_ordering::equal;
  return diff.coeffs.back() > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
}

TransformedLine transformed_hilbert_line(const Rational& n, const Rational& c, const Rational& s, const SurfaceParams& p,
                                         const Rational& a, const Rational& b) {
  if (a <= 0) throw Error(ErrorKind::InvalidArgument, "polarization needs a > 0");
  const Rational lin = n * b - n * a * p.e - a * s;
  const Rational cst = c - n * p.e + n * p.c1_base / 2;
  TransformedLine t{Polynomial({cst, lin}), std::nullopt};
  if (lin != 0) t.slope = cst / lin;
  return t;
}

SpectralSurfaceInvariants spectral_surface_invariants(const Rational& n, const Rational& ell, const Rational& r,
                                                      const SurfaceParams& p) {
  if (n < 1) throw Error(ErrorKind::NonPositiveRank, "spectral degree n must be at least 1");
  return {n, 0, n * p.e + r - n * p.c1_base / 2, -(ell + n * p.e)};
}

Rational slope_difference_experimental(const Rational& n, const Rational& c, const Rational& s, const Rational& nbar,
                                       const Rational& cbar, const Rational& sbar, const SurfaceParams& p, const Rational& a,
                                       const Rational& b) {
  const TransformedLine whole = transformed_hilbert_line(n, c, s, p, a, b);
  const TransformedLine sub = transformed_hilbert_line(nbar, cbar, sbar, p, a, b);
  return sub.line.coeff(0) * whole.line.coeff(1) - whole.line.coeff(0) * sub.line.coeff(1);
}

int empirical_b0(const Rational& n, const Rational& c, const Rational& s,
                 const std::vector<SubobjectInvariants>& subs, const SurfaceParams& p, const Rational& a,
                 int b_max) {
  if (b_max < 1) throw Error(ErrorKind::EmptyRange, "b_max must be at least 1");
  const auto sign = [&](const SubobjectInvariants& sub, int b) {
    const Rational x = slope_difference_experimental(n, c, s, sub.n, sub.c, sub.s, p, a, b);
    return x > 0 ? 1 : (x < 0 ? -1 : 0);
  };
  int b0 = 1;
  for (const auto& sub : subs) {
    const int tail = sign(sub, b_max);
    int b = b_max;
    while (b > 1 && sign(sub, b - 1) == tail) --b;
    b0 = std::max(b0, b);
  }
  return b0;
}

}  // namespace fmcalc
