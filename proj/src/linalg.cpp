#include "fmcalc/linalg.hpp"

#include "fmcalc/errors.hpp"

#include <vector>

namespace fmcalc {

namespace {

/// Row-reduces m in place to reduced echelon form over the first `cols`
/// columns; returns pivot column per pivot row.
std::vector<Eigen::Index> row_reduce(RationalMatrix& m, Eigen::Index cols) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < m.rows(); ++col) {
    Eigen::Index sel = -1;
    for (Eigen::Index r = row; r < m.rows(); ++r) {
      if (m(r, col) != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    m.row(row).swap(m.row(sel));
    const Rational p = m(row, col);
    for (Eigen::Index c = 0; c < m.cols(); ++c) m(row, c) /= p;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational f = m(r, col);
      for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::optional<RationalMatrix> inverse(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
  const Eigen::Index n = a.rows();
  RationalMatrix aug(n, 2 * n);
  aug.leftCols(n) = a;
  aug.rightCols(n) = RationalMatrix::Identity(n, n);
  if (static_cast<Eigen::Index>(row_reduce(aug, n).size()) != n) return std::nullopt;
  return RationalMatrix(aug.rightCols(n));
}

std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b) {
  if (a.rows() != b.size()) throw Error(ErrorKind::DimensionMismatch, "solve: row count mismatch");
  RationalMatrix aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  const auto pivots = row_reduce(aug, a.cols());
  for (Eigen::Index r = static_cast<Eigen::Index>(pivots.size()); r < aug.rows(); ++r) {
    if (aug(r, a.cols()) != 0) return std::nullopt;
  }
  RationalVector x = RationalVector::Zero(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(static_cast<Eigen::Index>(r), a.cols());
  return x;
}

Eigen::Index rank(const RationalMatrix& a) {
  RationalMatrix m = a;
  return static_cast<Eigen::Index>(row_reduce(m, m.cols()).size());
}

ConeMembership cone_membership(const RationalMatrix& generators, const RationalVector& target) {
  if (generators.rows() != target.size()) {
    throw Error(ErrorKind::DimensionMismatch, "cone_membership: generator dimension differs from target");
  }
  const Eigen::Index r = generators.rows();
  const Eigen::Index m = generators.cols();

  // Phase-one tableau: G' w + a = b' with b' >= 0 (rows sign-flipped where
  // needed), minimise sum(a). Columns: w (m), a (r), rhs.
  std::vector<Rational> flip(static_cast<std::size_t>(r), Rational(1));
  RationalMatrix tab = RationalMatrix::Zero(r, m + r + 1);
  for (Eigen::Index i = 0; i < r; ++i) {
    if (target[i] < 0) flip[static_cast<std::size_t>(i)] = -1;
    const Rational s = flip[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < m; ++j) tab(i, j) = s * generators(i, j);
    tab(i, m + i) = 1;
    tab(i, m + r) = s * target[i];
  }
  std::vector<Eigen::Index> basis(static_cast<std::size_t>(r));
  for (Eigen::Index i = 0; i < r; ++i) basis[static_cast<std::size_t>(i)] = m + i;

  const auto cost = [&](Eigen::Index col) { return col >= m ? Rational(1) : Rational(0); };
  const auto reduced_cost = [&](Eigen::Index col) {
    Rational z = cost(col);
    for (Eigen::Index i = 0; i < r; ++i) z -= cost(basis[static_cast<std::size_t>(i)]) * tab(i, col);
    return z;
  };

  // Bland's rule: smallest entering index with negative reduced cost,
  // smallest basis index among tied ratio rows. Terminates without cycling.
  for (;;) {
    Eigen::Index entering = -1;
    for (Eigen::Index j = 0; j < m + r; ++j) {
      if (reduced_cost(j) < 0) {
        entering = j;
        break;
      }
    }
    if (entering < 0) break;
    Eigen::Index leave = -1;
    Rational best_ratio;
    for (Eigen::Index i = 0; i < r; ++i) {
      if (tab(i, entering) <= 0) continue;
      const Rational ratio = tab(i, m + r) / tab(i, entering);
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0) break;  // unbounded direction; cannot happen for phase one (objective >= 0)
    const Rational p = tab(leave, entering);
    for (Eigen::Index c = 0; c < tab.cols(); ++c) tab(leave, c) /= p;
    for (Eigen::Index i = 0; i < r; ++i) {
      if (i == leave || tab(i, entering) == 0) continue;
      const Rational f = tab(i, entering);
      for (Eigen::Index c = 0; c < tab.cols(); ++c) tab(i, c) -= f * tab(leave, c);
    }
    basis[static_cast<std::size_t>(leave)] = entering;
  }

  Rational objective = 0;
  for (Eigen::Index i = 0; i < r; ++i) {
    if (basis[static_cast<std::size_t>(i)] >= m) objective += tab(i, m + r);
  }

  ConeMembership out;
  if (objective == 0) {
    out.member = true;
    out.weights = RationalVector::Zero(m);
    for (Eigen::Index i = 0; i < r; ++i) {
      const Eigen::Index b = basis[static_cast<std::size_t>(i)];
      if (b < m) out.weights[b] = tab(i, m + r);
    }
    return out;
  }
  // Dual of phase one: y_i = 1 - reduced_cost(artificial i) in flipped
  // coordinates satisfies y.G'_j <= 0 and y.b' > 0. Negate and undo flips.
  out.separator = RationalVector::Zero(r);
  for (Eigen::Index i = 0; i < r; ++i) {
    const Rational y = Rational(1) - reduced_cost(m + i);
    out.separator[i] = -y * flip[static_cast<std::size_t>(i)];
  }
  return out;
}

}  // namespace fmcalc
