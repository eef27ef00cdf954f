#pragma once

// Exact dense linear algebra over Rational: elimination-based solve and
// inverse, plus cone membership via an exact simplex with Bland's rule.

#include "fmcalc/rational.hpp"

#include <optional>

namespace fmcalc {

/// Inverse of a square matrix; nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& a);

/// Some solution of a x = b (free variables set to zero); nullopt when the
/// system is inconsistent.
std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b);

Eigen::Index rank(const RationalMatrix& a);

/// Result of testing whether a target lies in the cone spanned by the
/// columns of a generator matrix.
struct ConeMembership {
  bool member = false;
  /// member: nonnegative weights w with generators * w == target.
  RationalVector weights;
  /// !member: functional y with y . g >= 0 for every generator g and
  /// y . target < 0 (Farkas certificate).
  RationalVector separator;
};

/// generators is r x m (one generator per column), target has length r.
ConeMembership cone_membership(const RationalMatrix& generators, const RationalVector& target);

}  // namespace fmcalc
