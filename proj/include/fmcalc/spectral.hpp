#pragma once

// Spectral-cover bundles on elliptic CY3 fibrations: Chern classes of the
// bundle V built from (n, η, λ), the five-brane class needed for anomaly
// cancellation, the generation number, and a grid scanner.

#include "fmcalc/fm.hpp"

#include <optional>
#include <vector>

namespace fmcalc {

struct SpectralInput {
  int n = 1;
  RationalVector eta;
  Rational lambda;
  /// U(n) datum; defaults to n·c1/2 (the SU(n) case).
  std::optional<RationalVector> eta_E;
};

struct SpectralBundle {
  SpectralInput input;
  RationalVector eta_E;
  /// ch(V), the transform of the spectral data (0, n, η, η_E, a_E, s_E).
  ChernData3 ch;
  Rational gamma_S;
  Rational varpi;
  Rational a_E;
  Rational s_E;
  bool su_n = false;
  /// c2(V) and c3(V): closed SU(n) formulas when su_n, otherwise read off ch.
  Class c2_V;
  Rational c3_V;
};

/// (η·(η - n c1))_B
Rational spectral_pairing(const FibrationModel& X, int n, const RationalVector& eta);
Rational gamma_restricted(const FibrationModel& X, int n, const RationalVector& eta, const Rational& lambda);
Rational varpi(const FibrationModel& X, int n, const RationalVector& eta, const Rational& lambda);

/// Throws WrongKind, NonPositiveRank, DimensionMismatch.
SpectralBundle build_bundle(const SpectralInput& in, const FibrationModel& X);

struct ChernClasses {
  Class c1;
  Class c2;
  Rational c3;
};

/// c1 = ch1, c2 = c1²/2 - ch2, c3 = 2ch3 - c1³/3 + c1·c2.
ChernClasses chern_classes(const FibrationModel& X, const ChernData3& ch);

struct FiveBraneClass {
  RationalVector W_B;
  Rational a_f;
  /// Θ·p*W_B + a_f f
  Class W;
  /// c2(TX) - c2(V) == W
  bool identity_holds = false;
};

/// Throws NotSUn when c1(V) != 0.
FiveBraneClass five_brane_class(const SpectralBundle& V, const FibrationModel& X);

struct AnomalyReport {
  bool c1_even = false;
  bool W_B_effective = false;
  bool a_f_nonneg = false;
  bool anomaly_identity = false;
  bool pass = false;
  FiveBraneClass five_brane;
};

AnomalyReport anomaly_check(const SpectralBundle& V, const FibrationModel& X);

struct Generations {
  Rational signed_value;
  Rational magnitude;
  bool integral = false;
};

/// c3(V)/2 and its absolute value.
Generations n_generations(const SpectralBundle& V);
/// ∫ ch(V)·td(X), evaluated in the ring.
Rational index_by_hrr(const SpectralBundle& V, const FibrationModel& X);

struct ScanRanges {
  int n_min = 1;
  int n_max = 1;
  /// Inclusive integer range per base divisor coefficient of η.
  std::vector<std::pair<int, int>> eta;
  std::vector<Rational> lambdas;
};

struct ScanTargets {
  std::optional<Rational> n_gen;
  bool require_anomaly_pass = true;
};

struct ScanRow {
  SpectralBundle bundle;
  AnomalyReport anomaly;
  Generations generations;
  /// Non-integral c2/c3 coefficients or generation number.
  std::vector<std::string> flags;
};

/// Rows sorted by (n, η lexicographic, λ). Throws EmptyRange. With
/// parallel, the grid is split across hardware threads; output is identical.
std::vector<ScanRow> scan_models(const FibrationModel& X, const ScanRanges& ranges, const ScanTargets& targets,
                                 bool parallel = false);

/// Evaluates one grid cell without filtering.
ScanRow evaluate_model(const FibrationModel& X, const SpectralInput& in);

}  // namespace fmcalc
