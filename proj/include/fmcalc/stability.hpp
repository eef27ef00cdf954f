#pragma once

// Simpson stability arithmetic: Hilbert polynomials by Hirzebruch-Riemann-
// Roch, reduced polynomials and slopes, polarized rank, the polynomial
// order, and the numeric invariants of transformed sheaves on elliptic
// surfaces.

#include "fmcalc/fm.hpp"

#include <compare>
#include <optional>
#include <vector>

namespace fmcalc {

/// coeffs[k] multiplies m^k; trailing zeros are trimmed.
struct Polynomial {
  std::vector<Rational> coeffs;

  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> c);
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Rational coeff(int k) const;
  Rational operator()(const Rational& m) const;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

Polynomial operator+(const Polynomial& p, const Polynomial& q);
Polynomial operator-(const Polynomial& p, const Polynomial& q);
Polynomial operator*(const Rational& k, const Polynomial& p);
std::string to_string(const Polynomial& p);

struct HilbertData {
  Polynomial P;
  /// Degree of P (dimension of the support); -1 for zero.
  int s = -1;
  /// s!·(leading coefficient)
  Rational r;
  /// (s-1)!·(coefficient of m^{s-1}); 0 when s <= 0.
  Rational d;
};

HilbertData hilbert_data(Polynomial P);

/// P(m) = ∫ ch · e^{mH} · td.
HilbertData hilbert_polynomial(const Class& ch, const Class& td, const Class& H);
HilbertData hilbert_polynomial(const ChernData3& E, const FibrationModel& X, const Class& H);
HilbertData hilbert_polynomial(const ChernData2& E, const FibrationModel& X, const Class& H);

struct ReducedSlope {
  Polynomial reduced;
  Rational slope;
};

/// p_S = P / r, μ_S = d / r. Throws ZeroRank.
ReducedSlope reduced_and_slope(const HilbertData& h);

/// r(E) / deg_H(Supp E). The support is the whole space when ch0 != 0 and
/// otherwise the primitive part of the lowest nonzero Chern component;
/// `support` overrides it. Throws ZeroSupportDegree.
Rational polarized_rank(const Class& ch, const Class& td, const Class& H, const std::optional<Class>& support = std::nullopt);

/// Primitive integral part (positive content removed) of the lowest nonzero
/// component, or 1 when ch0 != 0.
Class support_class(const Class& ch);

/// Order on polynomials by their values for m ≫ 0.
std::strong_ordering poly_compare(const Polynomial& p, const Polynomial& q);

struct SurfaceParams {
  Rational e;
  /// deg c1(B) = 2 - 2g for a base curve of genus g.
  Rational c1_base;
};

struct TransformedLine {
  /// (nb - nae - as) m + c - ne + n c1/2
  Polynomial line;
  /// Simpson slope, when the linear coefficient is nonzero.
  std::optional<Rational> slope;
};

/// χ(X, F̂(mH)) for H = aΘ + bf and F of rank n, fibre degree 0, c1·Θ = c, ch2 = s w.
TransformedLine transformed_hilbert_line(const Rational& n, const Rational& c, const Rational& s, const SurfaceParams& p,
                                         const Rational& a, const Rational& b);

struct SpectralSurfaceInvariants {
  Rational rank;
  Rational d;
  Rational c;
  Rational s;
};

/// Invariants of the transform of a polarized-rank-1 sheaf L on a spectral
/// curve C of degree n over the base, with ℓ = C·Θ and r = χ(C, L):
/// rank n, d = 0, c = ne + r - n c1/2, s = -(ℓ + ne). Throws NonPositiveRank.
SpectralSurfaceInvariants spectral_surface_invariants(const Rational& n, const Rational& ell, const Rational& r,
                                                      const SurfaceParams& p);

/// Experimental: for subobject invariants (n̄, c̄, s̄) of F, the sign of
/// μ(Ĝ) - μ(F̂) cross-multiplied by both (positive) linear coefficients.
Rational slope_difference_experimental(const Rational& n, const Rational& c, const Rational& s, const Rational& nbar,
                                       const Rational& cbar, const Rational& sbar, const SurfaceParams& p, const Rational& a,
                                       const Rational& b);

struct SubobjectInvariants {
  Rational n;
  Rational c;
  Rational s;
};

/// Experimental scan: smallest integer b0 in [1, b_max] such that the sign of
/// slope_difference_experimental is constant on [b0, b_max] for every listed
/// subobject. Empirical only, never a proven bound.
int empirical_b0(const Rational& n, const Rational& c, const Rational& s,
                 const std::vector<SubobjectInvariants>& subs, const SurfaceParams& p, const Rational& a,
                 int b_max);

}  // namespace fmcalc
