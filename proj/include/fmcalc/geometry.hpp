#pragma once

// Base varieties and the presented even-cohomology rings of their elliptic
// fibrations with section.
//
// CY3 over a surface B, with c1 = p*c1(B):
//   basis  1 | Θ, p*D_i | Θ·p*D_i, f | pt
//   Θ² = -Θ·c1,  p*D_i·p*D_j = (D_i·D_j)_B f,  Θ·f = pt,  f·p*D = 0.
// Elliptic surface over a curve of genus g, with p*K̄ = e f:
//   basis  1 | Θ, f, extra classes | w
//   Θ² = -e w,  Θ·f = w,  f² = 0.

#include "fmcalc/linalg.hpp"
#include "fmcalc/ring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fmcalc {

struct BaseSurface {
  std::string name;
  std::vector<std::string> divisor_names;
  RationalMatrix pairing;
  RationalVector c1;
  Rational c2;
  /// Generators of the effective cone; empty when positive_cone_model is set.
  std::vector<RationalVector> effective_generators;
  /// Effectivity is decided by D² >= 0 and D·h >= 0 with h = positive_cone_reference.
  bool positive_cone_model = false;
  RationalVector positive_cone_reference;

  Eigen::Index h11() const { return pairing.rows(); }
  Rational dot(const RationalVector& a, const RationalVector& b) const { return a.dot(pairing * b); }
  Rational c1_squared() const { return dot(c1, c1); }
  RationalVector unit(Eigen::Index i) const;
};

/// Catalog names: P2, F<m> or F_<m> (m >= 0), dP<k> or dP_<k> (0 <= k <= 8),
/// Enriques. Throws UnknownCatalogEntry.
BaseSurface build_base(const std::string& catalog_name);

/// Full lattice input. Throws InconsistentCustomLattice when the pairing is
/// not square and symmetric or the vectors have the wrong length.
BaseSurface custom_base(std::string name, std::vector<std::string> divisor_names, RationalMatrix pairing,
                        RationalVector c1, Rational c2, std::vector<RationalVector> effective_generators);

/// (-1)-curves dH - sum m_i E_i on the blow-up of P² in k points, by
/// enumeration over the box d <= 7, 0 <= m_i <= d (Cauchy-Schwarz bound).
std::vector<RationalVector> minus_one_curves(int k);

struct Effectivity {
  bool effective = false;
  /// Nonnegative weights on effective_generators (cone model only).
  RationalVector weights;
  /// Functional nonnegative on the cone and negative on D (cone model only).
  RationalVector separator;
};

Effectivity effective_check(const BaseSurface& base, const RationalVector& divisor);

struct BaseCurve {
  int genus = 0;
  int e = 0;
};

/// Extra H² class on an elliptic surface, given by its pairings.
struct ExtraDivisor {
  std::string name;
  Rational with_theta;
  Rational with_fiber;
  /// Pairings with the extra classes declared before it, then itself.
  std::vector<Rational> with_extras;
};

enum class FibrationKind { CY3, EllipticSurface };

struct FibrationModel {
  FibrationKind kind = FibrationKind::CY3;
  std::optional<BaseSurface> surface;
  std::optional<BaseCurve> curve;
  std::vector<ExtraDivisor> extras;
  RingPtr ring;
  RingPtr base_ring;

  std::size_t theta = 0;
  std::size_t fiber = 0;
  /// CY3: indices of p*D_i and Θ·p*D_i. Surface: indices of the extra classes in pullback.
  std::vector<std::size_t> pullback;
  std::vector<std::size_t> theta_pullback;

  Eigen::Index base_rank() const { return surface ? surface->h11() : 0; }
  bool is_cy3() const { return kind == FibrationKind::CY3; }
  void require(FibrationKind k) const;

  Class one() const { return Class::one(ring); }
  Class point() const { return Class::point(ring); }
  Class theta_class() const { return Class::basis(ring, theta); }
  Class fiber_class() const { return Class::basis(ring, fiber); }
  /// p*D for a base divisor coefficient vector (CY3).
  Class pull_divisor(const RationalVector& d) const;
  /// Θ·p*D (CY3).
  Class theta_divisor(const RationalVector& d) const;
  /// K̄ = p*c1(B) for CY3, e f for elliptic surfaces.
  Class kbar() const;
  /// (K̄²)_B as a number: c1(B)² for CY3, 0 for surfaces.
  Rational base_c1_squared() const;
};

FibrationModel build_fibration(const BaseSurface& base);
FibrationModel build_fibration(const BaseCurve& base, std::vector<ExtraDivisor> extras = {});

/// Ring of a base surface on its own: 1 | D_i | pt.
RingPtr surface_ring(const BaseSurface& base);
/// td(B) in surface_ring(base).
Class surface_todd(const BaseSurface& base, const RingPtr& ring);

Class todd_relative(const FibrationModel& X);
/// td_relative · p*td(B).
Class todd_total(const FibrationModel& X);
/// 12Θ·c1 + (11c1² + c2)_B f. Throws WrongKind for surfaces.
Class c2_tangent(const FibrationModel& X);

/// p_*: total-space class to base class (degree drops by one).
Class push_to_base(const FibrationModel& X, const Class& a);
/// p^*: base class to total-space class.
Class pull_from_base(const FibrationModel& X, const Class& b);
/// td(B) in X.base_ring.
Class base_todd(const FibrationModel& X);

}  // namespace fmcalc
