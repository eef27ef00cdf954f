#include "fmcalc/fm.hpp"

#include "fmcalc/errors.hpp"

namespace fmcalc {

const char* const kFactorizationConvention = "composition = twist(p*c1) ∘ fm_cy3(forward)";

ChernData3 ChernData3::zero(Eigen::Index base_rank) {
  return {0, 0, RationalVector::Zero(base_rank), RationalVector::Zero(base_rank), 0, 0};
}

ChernData3 ChernData3::section(const FibrationModel& X) {
  X.require(FibrationKind::CY3);
  ChernData3 e = zero(X.base_rank());
  e.x = 1;
  e.eta = X.surface->c1 / Rational(2);
  e.s = X.surface->c1_squared() / 6;
  return e;
}

ChernData3 ChernData3::point(Eigen::Index base_rank) {
  ChernData3 e = zero(base_rank);
  e.s = 1;
  return e;
}

ChernData3 operator+(const ChernData3& a, const ChernData3& b) {
  return {a.n + b.n, a.x + b.x, a.S + b.S, a.eta + b.eta, a.a + b.a, a.s + b.s};
}
ChernData3 operator-(const ChernData3& a) { return {-a.n, -a.x, -a.S, -a.eta, -a.a, -a.s}; }
ChernData3 operator*(const Rational& k, const ChernData3& a) {
  return {k * a.n, k * a.x, k * a.S, k * a.eta, k * a.a, k * a.s};
}

Class to_class(const FibrationModel& X, const ChernData3& E) {
  X.require(FibrationKind::CY3);
  if (E.S.size() != X.base_rank() || E.eta.size() != X.base_rank()) {
    throw Error(ErrorKind::DimensionMismatch, "ChernData3 divisor vectors do not match the base");
  }
  Class c(X.ring);
  c[X.ring->unit_index()] = E.n;
  c[X.theta] = E.x;
  c += X.pull_divisor(E.S) + X.theta_divisor(E.eta);
  c[X.fiber] = E.a;
  c[X.ring->point_index()] = E.s;
  return c;
}

ChernData3 to_chern3(const FibrationModel& X, const Class& ch) {
  X.require(FibrationKind::CY3);
  if (ch.ring() != X.ring) throw Error(ErrorKind::PresentationMismatch, "class does not live on the fibration");
  ChernData3 e = ChernData3::zero(X.base_rank());
  e.n = ch[X.ring->unit_index()];
  e.x = ch[X.theta];
  for (std::size_t i = 0; i < X.pullback.size(); ++i) {
    e.S[static_cast<Eigen::Index>(i)] = ch[X.pullback[i]];
    e.eta[static_cast<Eigen::Index>(i)] = ch[X.theta_pullback[i]];
  }
  e.a = ch[X.fiber];
  e.s = ch[X.ring->point_index()];
  return e;
}

Rational ChernData2::d() const { return integrate(c1 * Class::basis(c1.ring(), "f")); }
Rational ChernData2::c() const { return integrate(c1 * Class::basis(c1.ring(), "Θ")); }

ChernData2 operator+(const ChernData2& a, const ChernData2& b) { return {a.n + b.n, a.c1 + b.c1, a.s + b.s}; }
ChernData2 operator-(const ChernData2& a) { return {-a.n, -a.c1, -a.s}; }
ChernData2 operator*(const Rational& k, const ChernData2& a) { return {k * a.n, k * a.c1, k * a.s}; }

Class to_class(const FibrationModel& X, const ChernData2& E) {
  X.require(FibrationKind::EllipticSurface);
  if (E.c1.ring() != X.ring) throw Error(ErrorKind::PresentationMismatch, "c1 does not live on the surface");
  if (E.c1 != E.c1.degree_part(1)) {
    throw Error(ErrorKind::InvalidArgument, "c1 must be a pure degree-1 class");
  }
  return Rational(E.n) * X.one() + E.c1 + Rational(E.s) * X.point();
}

ChernData2 to_chern2(const FibrationModel& X, const Class& ch) {
  X.require(FibrationKind::EllipticSurface);
  if (ch.ring() != X.ring) throw Error(ErrorKind::PresentationMismatch, "class does not live on the surface");
  return {ch.unit_coefficient(), ch.degree_part(1), integrate(ch)};
}

ChernData3 fm_cy3(const ChernData3& E, const FibrationModel& X, Direction dir) {
  X.require(FibrationKind::CY3);
  const BaseSurface& B = *X.surface;
  const RationalVector& c1 = B.c1;
  const Rational c1sq = B.c1_squared();
  const Rational half(1, 2);
  const Rational sign = dir == Direction::Forward ? 1 : -1;
  ChernData3 out = ChernData3::zero(X.base_rank());
  out.n = E.x;
  out.x = -E.n;
  out.S = E.eta - sign * half * E.x * c1;
  out.eta = sign * half * E.n * c1 - E.S;
  out.a = E.s - sign * half * B.dot(E.eta, c1) + E.x * c1sq / 12;
  out.s = -E.n * c1sq / 6 - E.a + sign * half * B.dot(c1, E.S);
  return out;
}

ChernData3 fm_cy3_inverse_extra_term(const ChernData3& E, const FibrationModel& X) {
  ChernData3 out = fm_cy3(E, X, Direction::Inverse);
  out.s += E.x * X.surface->c1_squared();
  return out;
}

ChernData2 fm_surface(const ChernData2& E, const FibrationModel& X, Direction dir) {
  X.require(FibrationKind::EllipticSurface);
  const Rational e = X.curve->e;
  const Rational n = E.n, d = E.d(), c = E.c(), s = E.s;
  const Class T = X.theta_class(), f = X.fiber_class();
  const Rational half(1, 2);
  if (dir == Direction::Forward) {
    return {d, -E.c1 + (d * e) * f + (d - n) * T + (c - half * e * d + s) * f, -c - d * e + half * n * e};
  }
  return {d, E.c1 - (n * e) * f - (d + n) * T + (s + n * e - c - half * e * d) * f, -(c + d * e + half * n * e)};
}

bool fm_roundtrip_check(const ChernData3& E, const FibrationModel& X) {
  return fm_cy3(fm_cy3(E, X, Direction::Forward), X, Direction::Inverse) == -E;
}

bool fm_roundtrip_check(const ChernData2& E, const FibrationModel& X) {
  return fm_surface(fm_surface(E, X, Direction::Forward), X, Direction::Inverse) == -E;
}

RelativeInvariants relative_invariants(const ChernData3& E, const FibrationModel& X) {
  X.require(FibrationKind::CY3);
  // ch1·f = x (Θ·f = pt, p*S·f = 0).
  return {E.n, E.x};
}

RelativeInvariants relative_invariants(const ChernData2& E, const FibrationModel& X) {
  X.require(FibrationKind::EllipticSurface);
  return {E.n, E.d()};
}

WitAdvice wit_sign_check(const Rational& rank, const Rational& degree) {
  if (rank < 0) throw Error(ErrorKind::NegativeRank, "rank must be nonnegative");
  if (degree > 0) return WitAdvice::Wit0Compatible;
  if (degree < 0) return WitAdvice::Wit1Compatible;
  if (rank > 0) return WitAdvice::ConditionalWit1;
  return WitAdvice::Undetermined;
}

std::string to_string(WitAdvice w) {
  switch (w) {
    case WitAdvice::Wit0Compatible: return "WIT0-compatible";
    case WitAdvice::Wit1Compatible: return "WIT1-compatible";
    case WitAdvice::ConditionalWit1: return "conditional-WIT1 (WIT0 excluded unless zero; WIT1 iff fiberwise semistable)";
    case WitAdvice::Undetermined: return "undetermined";
  }
  return "undetermined";
}

KernelCharacter KernelCharacter::poincare(const FibrationModel& X) {
  const Class T = X.theta_class(), k = X.kbar();
  const Class td_inv = inverse_unit(todd_relative(X));
  return {"poincare", {{exp_nilpotent(T), exp_nilpotent(T + k)}}, -(td_inv * exp_nilpotent(Rational(2) * T + k))};
}

KernelCharacter KernelCharacter::poincare_dual(const FibrationModel& X) {
  const Class T = X.theta_class(), k = X.kbar();
  const Class td_inv_dual = dual(inverse_unit(todd_relative(X)));
  return {"poincare-dual", {{exp_nilpotent(k - T), exp_nilpotent(-T - k)}}, td_inv_dual * exp_nilpotent(Rational(-2) * T)};
}

KernelCharacter KernelCharacter::relative_structure(const FibrationModel& X) {
  return {"relative-structure", {{X.one(), X.one()}}, Class::zero(X.ring)};
}

KernelCharacter KernelCharacter::relative_ideal(const FibrationModel& X) {
  return {"relative-ideal", {{X.one(), X.one()}}, -inverse_unit(todd_relative(X))};
}

KernelCharacter KernelCharacter::diagonal_twist(const FibrationModel& X, const Class& D) {
  return {"diagonal-twist", {}, inverse_unit(todd_relative(X)) * exp_nilpotent(D)};
}

Class KernelCharacter::apply(const FibrationModel& X, const Class& ch) const {
  const Class td = todd_relative(X);
  Class out = ch * td * diagonal;
  for (const auto& [u, v] : product_terms) out += v * pull_from_base(X, push_to_base(X, ch * u * td));
  return out;
}

ChernData3 grr_transform(const ChernData3& E, const FibrationModel& X) {
  X.require(FibrationKind::CY3);
  return to_chern3(X, KernelCharacter::poincare(X).apply(X, to_class(X, E)));
}

ChernData3 grr_inverse(const ChernData3& E, const FibrationModel& X) {
  X.require(FibrationKind::CY3);
  return to_chern3(X, KernelCharacter::poincare_dual(X).apply(X, to_class(X, E)));
}

ChernData2 grr_transform(const ChernData2& E, const FibrationModel& X) {
  return to_chern2(X, KernelCharacter::poincare(X).apply(X, to_class(X, E)));
}

ChernData2 grr_inverse(const ChernData2& E, const FibrationModel& X) {
  return to_chern2(X, KernelCharacter::poincare_dual(X).apply(X, to_class(X, E)));
}

ChernData3 line_twist(const ChernData3& E, const FibrationModel& X, const Class& D) {
  return to_chern3(X, to_class(X, E) * exp_nilpotent(D));
}

ChernData2 line_twist(const ChernData2& E, const FibrationModel& X, const Class& D) {
  return to_chern2(X, to_class(X, E) * exp_nilpotent(D));
}

ChernData3 relative_pushpull(const ChernData3& E, const FibrationModel& X) {
  X.require(FibrationKind::CY3);
  return to_chern3(X, KernelCharacter::relative_structure(X).apply(X, to_class(X, E)));
}

std::string to_string(FactorizationStatus s) {
  switch (s) {
    case FactorizationStatus::ExactEqual: return "exact-equal";
    case FactorizationStatus::EqualUpToConvention: return "equal-up-to-convention";
    case FactorizationStatus::Mismatch: return "mismatch";
  }
  return "mismatch";
}

FactorizationReport factorization_check(const ChernData3& E, const FibrationModel& X) {
  X.require(FibrationKind::CY3);
  const Class T = X.theta_class(), c1 = X.kbar();
  ChernData3 step = line_twist(E, X, T);
  step = relative_pushpull(step, X) + (-step);
  step = line_twist(step, X, T);
  step = line_twist(step, X, Rational(2) * c1);

  FactorizationReport r;
  r.composed = step;
  r.transformed = fm_cy3(E, X, Direction::Forward);
  r.transformed_with_convention = line_twist(r.transformed, X, c1);
  r.convention = kFactorizationConvention;
  if (r.composed == r.transformed) {
    r.status = FactorizationStatus::ExactEqual;
  } else if (r.composed == r.transformed_with_convention) {
    r.status = FactorizationStatus::EqualUpToConvention;
  } else {
    r.status = FactorizationStatus::Mismatch;
  }
  return r;
}

}  // namespace fmcalc
