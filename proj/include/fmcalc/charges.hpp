#pragma once

// D-brane charge calculus on a CY3 with Kähler basis J_a: the charge map
// between Chern characters and (n6, n4, n2, n0), periods and central
// charges, conifold and large-volume monodromies, the effective charge
// ch·sqrt(td) and the fiberwise T-duality matrix.

#include "fmcalc/fm.hpp"

#include <string>
#include <vector>

namespace fmcalc {

struct PrepotentialData {
  std::vector<std::string> names;
  /// k[(a * h + b) * h + c]; fully symmetric.
  std::vector<Rational> k;
  RationalVector c2J;
  Rational chi;
  RationalMatrix c_ab;
  /// Coefficient of the formal constant ζ(3)/(2(2πi)³) in F; usually χ.
  Rational kappa;

  Eigen::Index h11() const { return c2J.size(); }
  const Rational& k_abc(Eigen::Index a, Eigen::Index b, Eigen::Index c) const;
  /// Throws DimensionMismatch or InvalidArgument (asymmetric k or c_ab).
  void validate() const;
};

/// Triple intersections, c2·J and χ = -60 c1(B)² for the basis J = (Θ, p*D_i);
/// c_ab = 0, kappa = χ.
PrepotentialData prepotential_from_fibration(const FibrationModel& X);

/// Ring 1 | J_a | J^a | pt with J_a J_b = k_abc J^c and J_a J^b = δ_ab pt.
struct KahlerModel {
  PrepotentialData data;
  RingPtr ring;

  std::size_t J(Eigen::Index a) const { return 1 + static_cast<std::size_t>(a); }
  std::size_t Jdual(Eigen::Index a) const { return 1 + static_cast<std::size_t>(data.h11() + a); }
  /// c2(X) = c2J_b J^b.
  Class c2() const;
  /// 1 + c2/12.
  Class todd() const;
};

KahlerModel kahler_model(const PrepotentialData& data);

/// Moves a class between the fibration ring and the Kähler ring built by
/// prepotential_from_fibration (J_a ↔ Θ, p*D_i).
Class fibration_to_kahler(const FibrationModel& X, const KahlerModel& K, const Class& ch);
Class kahler_to_fibration(const FibrationModel& X, const KahlerModel& K, const Class& ch);

struct ChargeVector {
  Rational n6;
  RationalVector n4;
  RationalVector n2;
  Rational n0;

  static ChargeVector zero(Eigen::Index h11);
  friend bool operator==(const ChargeVector&, const ChargeVector&) = default;
};

ChargeVector operator+(const ChargeVector& a, const ChargeVector& b);
ChargeVector operator*(const Rational& k, const ChargeVector& a);
/// (n6, n4..., n2..., n0)
RationalVector flatten(const ChargeVector& n);
ChargeVector unflatten(const RationalVector& v, Eigen::Index h11);
bool operator<(const ChargeVector& a, const ChargeVector& b);
std::string to_string(const ChargeVector& n);

ChargeVector chern_to_charge(const Class& ch, const KahlerModel& K);
Class charge_to_chern(const ChargeVector& n, const KahlerModel& K);

using KahlerPoint = ComplexVector;

/// Z(E) = -∫ e^{-t·J} ch(E) (1 + c2/24).
ComplexRational central_charge_B(const Class& ch, const KahlerPoint& t, const KahlerModel& K);
ComplexRational central_charge_B(const ChernData3& E, const FibrationModel& X, const KahlerPoint& t, const KahlerModel& K);

struct PeriodData {
  ComplexRational pi6;
  ComplexVector pi4;
  ComplexVector pi2;
  ComplexRational pi0;
};

/// Periods fixed by Z_A(n) = Z_B(charge_to_chern(n)):
///   Π6 = k ttt/6 + c2J·t/24,  Π4_a = -k_abc t_b t_c/2 + c_ab t_b + c2J_a/24,
///   Π2_b = t_b,  Π0 = 1.
PeriodData period_vector(const KahlerPoint& t, const KahlerModel& K);
ComplexRational central_charge_A(const ChargeVector& n, const KahlerPoint& t, const KahlerModel& K);

struct PrepotentialValue {
  /// k ttt/6 + c_ab t t/2 - c2J·t/24
  ComplexRational polynomial;
  /// Coefficient of ζ(3)/(2(2πi)³).
  Rational kappa;
};

PrepotentialValue prepotential(const KahlerPoint& t, const KahlerModel& K);

/// ch ↦ (∫ ch·td)·1 - ch for the given Todd class.
Class conifold_raw(const Class& ch, const Class& td);
ChernData3 conifold_monodromy(const ChernData3& E, const FibrationModel& X);
/// Charge action of the raw transform, and the sign-normalised one (n6 ↦ n6 + n0).
ChargeVector conifold_charge_raw(const ChargeVector& n, const KahlerModel& K);
ChargeVector conifold_charge(const ChargeVector& n, const KahlerModel& K);

ChernData3 lcsl_monodromy(const ChernData3& E, const FibrationModel& X, const Class& D);
/// Twist by power·J_a.
ChargeVector lcsl_charge(const ChargeVector& n, const KahlerModel& K, Eigen::Index a, int power = 1);

struct TwistedCharge {
  Class Q;
  /// (n, x, S_1..S_r, η_1..η_r, a, s)
  RationalVector coords;
};

TwistedCharge effective_charge(const ChernData3& E, const FibrationModel& X);
/// Inverse of effective_charge on coordinates.
ChernData3 from_effective_coords(const RationalVector& q, const FibrationModel& X);

struct TDualityReport {
  /// Effective-charge conjugate of the forward transform, columns = images of basis charges.
  RationalMatrix matrix;
  /// Degree-preserving part: the pairs (n,x), (S_i,η_i), (a,s) blocks.
  RationalMatrix graded;
  /// blockdiag([[0,1],[-1,0]]) in the same coordinates.
  RationalMatrix M;
  bool graded_equals_M = false;
  bool M_squared_minus_identity = false;
  /// matrix·e_j == M·e_j for every basis charge with x = 0.
  bool restricted_equals_M = false;
  /// Coordinates (by name) of x = 0 basis charges whose columns differ from M.
  std::vector<std::string> mismatched_columns;
  bool matrix_squared_minus_identity = false;
  std::vector<std::string> coordinate_names;
};

TDualityReport tduality_matrix(const FibrationModel& X);

struct MonodromyGenerator {
  enum class Kind { Conifold, ConifoldRaw, Lcsl };
  Kind kind = Kind::Conifold;
  Eigen::Index divisor = 0;
  int power = 1;
  std::string name() const;
};

struct OrbitStep {
  std::size_t from;
  std::size_t generator;
  std::size_t to;
  bool is_new;
};

struct Orbit {
  /// Breadth-first discovery order; elements[0] is the seed.
  std::vector<ChargeVector> elements;
  std::vector<OrbitStep> log;
};

Orbit monodromy_orbit(const ChargeVector& seed, const std::vector<MonodromyGenerator>& generators, int max_steps,
                      const KahlerModel& K);

}  // namespace fmcalc
