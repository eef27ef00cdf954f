#pragma once

// Cohomological Fourier-Mukai transforms on elliptic fibrations: closed
// formulas, a kernel-based Grothendieck-Riemann-Roch evaluator used as an
// oracle, relative invariants, line twists and the four-factor
// factorisation of the relative transform.

#include "fmcalc/geometry.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fmcalc {

/// ch = n + xΘ + p*S + Θ·p*η + a f + s pt on a CY3 fibration.
struct ChernData3 {
  Rational n;
  Rational x;
  RationalVector S;
  RationalVector eta;
  Rational a;
  Rational s;

  static ChernData3 zero(Eigen::Index base_rank);
  /// Structure sheaf of the section: n=0, x=1, S=0, η=c1/2, a=0, s=c1²/6.
  static ChernData3 section(const FibrationModel& X);
  static ChernData3 point(Eigen::Index base_rank);
  friend bool operator==(const ChernData3&, const ChernData3&) = default;
};

ChernData3 operator+(const ChernData3& a, const ChernData3& b);
ChernData3 operator-(const ChernData3& a);
ChernData3 operator*(const Rational& k, const ChernData3& a);

Class to_class(const FibrationModel& X, const ChernData3& E);
ChernData3 to_chern3(const FibrationModel& X, const Class& ch);

/// ch = n + c1 + s w on an elliptic surface; c1 is a degree-1 class.
struct ChernData2 {
  Rational n;
  Class c1;
  Rational s;

  /// c1·f
  Rational d() const;
  /// c1·Θ
  Rational c() const;
  friend bool operator==(const ChernData2&, const ChernData2&) = default;
};

ChernData2 operator+(const ChernData2& a, const ChernData2& b);
ChernData2 operator-(const ChernData2& a);
ChernData2 operator*(const Rational& k, const ChernData2& a);

Class to_class(const FibrationModel& X, const ChernData2& E);
ChernData2 to_chern2(const FibrationModel& X, const Class& ch);

enum class Direction { Forward, Inverse };

ChernData3 fm_cy3(const ChernData3& E, const FibrationModel& X, Direction dir);
/// Inverse variant carrying an extra x·Θc1² term in ch3. Not an inverse:
/// the round trip leaves the residue -n·c1² in s.
ChernData3 fm_cy3_inverse_extra_term(const ChernData3& E, const FibrationModel& X);
ChernData2 fm_surface(const ChernData2& E, const FibrationModel& X, Direction dir);

bool fm_roundtrip_check(const ChernData3& E, const FibrationModel& X);
bool fm_roundtrip_check(const ChernData2& E, const FibrationModel& X);

struct RelativeInvariants {
  Rational rank;
  Rational degree;
  friend bool operator==(const RelativeInvariants&, const RelativeInvariants&) = default;
};

RelativeInvariants relative_invariants(const ChernData3& E, const FibrationModel& X);
RelativeInvariants relative_invariants(const ChernData2& E, const FibrationModel& X);

enum class WitAdvice { Wit0Compatible, Wit1Compatible, ConditionalWit1, Undetermined };

/// Sign advisory from the fibre degree. Throws NegativeRank.
WitAdvice wit_sign_check(const Rational& rank, const Rational& degree);
std::string to_string(WitAdvice w);

/// Kernel on X ×_B X by its Chern character,
///   ch(K) = sum_k π*u_k · π̂*v_k + Δ·π̂*w,
/// evaluated as ch ↦ sum_k v_k · p*p_*(ch·u_k·td_rel) + ch·td_rel·w,
/// using base change for the first sum and π̂_*(π*x·Δ·π̂*y) = x·y for the
/// diagonal term.
struct KernelCharacter {
  std::string tag;
  std::vector<std::pair<Class, Class>> product_terms;
  Class diagonal;

  /// ch(I_Δ)·exp(π*Θ + π̂*Θ + q*K̄).
  static KernelCharacter poincare(const FibrationModel& X);
  /// Kernel of the inverse transform: the dual of the Poincaré sheaf
  /// twisted by π*p*ω_B^{-1}.
  static KernelCharacter poincare_dual(const FibrationModel& X);
  /// O_{X ×_B X}.
  static KernelCharacter relative_structure(const FibrationModel& X);
  /// I_Δ, ch = 1 - Δ·π̂*td_rel^{-1}.
  static KernelCharacter relative_ideal(const FibrationModel& X);
  /// O_Δ ⊗ π̂*O(D).
  static KernelCharacter diagonal_twist(const FibrationModel& X, const Class& D);

  Class apply(const FibrationModel& X, const Class& ch) const;
};

ChernData3 grr_transform(const ChernData3& E, const FibrationModel& X);
ChernData3 grr_inverse(const ChernData3& E, const FibrationModel& X);
ChernData2 grr_transform(const ChernData2& E, const FibrationModel& X);
ChernData2 grr_inverse(const ChernData2& E, const FibrationModel& X);

ChernData3 line_twist(const ChernData3& E, const FibrationModel& X, const Class& D);
ChernData2 line_twist(const ChernData2& E, const FibrationModel& X, const Class& D);

/// p*(p_*(ch·td_rel)).
ChernData3 relative_pushpull(const ChernData3& E, const FibrationModel& X);

enum class FactorizationStatus { ExactEqual, EqualUpToConvention, Mismatch };
std::string to_string(FactorizationStatus s);

struct FactorizationReport {
  FactorizationStatus status = FactorizationStatus::Mismatch;
  /// twist(2c1) ∘ twist(Θ) ∘ (relative_pushpull - id) ∘ twist(Θ) applied to E.
  ChernData3 composed;
  ChernData3 transformed;
  /// Stored convention applied to `transformed`.
  ChernData3 transformed_with_convention;
  std::string convention;
};

/// The one convention map relating the two sides:
///   composition = twist(p*c1) ∘ fm_cy3(forward).
extern const char* const kFactorizationConvention;

FactorizationReport factorization_check(const ChernData3& E, const FibrationModel& X);

}  // namespace fmcalc
