#include "fmcalc/spectral.hpp"

#include "fmcalc/errors.hpp"

#include <algorithm>
#include <thread>

namespace fmcalc {

Rational spectral_pairing(const FibrationModel& X, int n, const RationalVector& eta) {
  const BaseSurface& B = *X.surface;
  return B.dot(eta, eta - Rational(n) * B.c1);
}

Rational gamma_restricted(const FibrationModel& X, int n, const RationalVector& eta, const Rational& lambda) {
  return -lambda * spectral_pairing(X, n, eta);
}

Rational varpi(const FibrationModel& X, int n, const RationalVector& eta, const Rational& lambda) {
  const Rational nn = n;
  return -X.surface->c1_squared() * (nn * nn * nn - nn) / 24 +
         Rational(1, 2) * (lambda * lambda - Rational(1, 4)) * nn * spectral_pairing(X, n, eta);
}

ChernClasses chern_classes(const FibrationModel& X, const ChernData3& ch) {
  const Class full = to_class(X, ch);
  ChernClasses c;
  c.c1 = full.degree_part(1);
  c.c2 = Rational(1, 2) * (c.c1 * c.c1) - full.degree_part(2);
  c.c3 = 2 * ch.s - integrate(c.c1 * c.c1 * c.c1) / 3 + integrate(c.c1 * c.c2);
  return c;
}

SpectralBundle build_bundle(const SpectralInput& in, const FibrationModel& X) {
  X.require(FibrationKind::CY3);
  if (in.n < 1) throw Error(ErrorKind::NonPositiveRank, "spectral rank n must be at least 1");
  if (in.eta.size() != X.base_rank()) throw Error(ErrorKind::DimensionMismatch, "eta has the wrong length");
  const BaseSurface& B = *X.surface;
  const Rational n = in.n;
  const RationalVector su_eta_E = n * B.c1 / Rational(2);
  if (in.eta_E && in.eta_E->size() != X.base_rank()) throw Error(ErrorKind::DimensionMismatch, "eta_E has the wrong length");

  SpectralBundle V;
  V.input = in;
  V.eta_E = in.eta_E.value_or(su_eta_E);
  V.su_n = V.eta_E == su_eta_E;
  V.gamma_S = gamma_restricted(X, in.n, in.eta, in.lambda);
  V.varpi = varpi(X, in.n, in.eta, in.lambda);
  V.a_E = V.gamma_S + B.dot(V.eta_E, in.eta) / n;
  V.s_E = n * B.c1_squared() / 24 + B.dot(V.eta_E, V.eta_E) / (2 * n) - V.varpi;

  const ChernData3 spectral_data{0, n, in.eta, V.eta_E, V.a_E, V.s_E};
  V.ch = fm_cy3(spectral_data, X, Direction::Forward);
  if (V.su_n) {
    V.c2_V = X.theta_divisor(in.eta) + Class::basis(X.ring, X.fiber, V.varpi);
    V.c3_V = -2 * V.gamma_S;
  } else {
    const ChernClasses c = chern_classes(X, V.ch);
    V.c2_V = c.c2;
    V.c3_V = c.c3;
  }
  return V;
}

FiveBraneClass five_brane_class(const SpectralBundle& V, const FibrationModel& X) {
  X.require(FibrationKind::CY3);
  if (V.ch.x != 0 || V.ch.S != RationalVector::Zero(X.base_rank())) {
    throw Error(ErrorKind::NotSUn, "five-brane class needs c1(V) = 0");
  }
  const BaseSurface& B = *X.surface;
  FiveBraneClass w;
  w.W_B = Rational(12) * B.c1 - V.input.eta;
  w.a_f = B.c2 + 11 * B.c1_squared() - V.varpi;
  w.W = X.theta_divisor(w.W_B) + Class::basis(X.ring, X.fiber, w.a_f);
  w.identity_holds = c2_tangent(X) - V.c2_V == w.W;
  return w;
}

AnomalyReport anomaly_check(const SpectralBundle& V, const FibrationModel& X) {
  AnomalyReport r;
  const Class c1 = to_class(X, V.ch).degree_part(1);
  r.c1_even = true;
  for (std::size_t i = 0; i < X.ring->size(); ++i) {
    const Rational half = c1[i] / 2;
    if (!is_integral(half)) r.c1_even = false;
  }
  if (!c1.is_zero()) return r;
  r.five_brane = five_brane_class(V, X);
  r.W_B_effective = effective_check(*X.surface, r.five_brane.W_B).effective;
  r.a_f_nonneg = r.five_brane.a_f >= 0;
  r.anomaly_identity = r.five_brane.identity_holds;
  r.pass = r.c1_even && r.W_B_effective && r.a_f_nonneg && r.anomaly_identity;
  return r;
}

Generations n_generations(const SpectralBundle& V) {
  Generations g;
  g.signed_value = V.c3_V / 2;
  g.magnitude = abs(g.signed_value);
  g.integral = is_integral(g.signed_value);
  return g;
}

Rational index_by_hrr(const SpectralBundle& V, const FibrationModel& X) {
  return integrate(to_class(X, V.ch) * todd_total(X));
}

ScanRow evaluate_model(const FibrationModel& X, const SpectralInput& in) {
  ScanRow row;
  row.bundle = build_bundle(in, X);
  row.anomaly = anomaly_check(row.bundle, X);
  row.generations = n_generations(row.bundle);
  for (std::size_t i = 0; i < X.ring->size(); ++i) {
    if (!is_integral(row.bundle.c2_V[i])) {
      row.flags.push_back("non-integral-c2");
      break;
    }
  }
  if (!is_integral(row.bundle.c3_V)) row.flags.push_back("non-integral-c3");
  if (!row.generations.integral) row.flags.push_back("non-integral-ngen");
  return row;
}

std::vector<ScanRow> scan_models(const FibrationModel& X, const ScanRanges& ranges, const ScanTargets& targets,
                                 bool parallel) {
  X.require(FibrationKind::CY3);
  if (static_cast<Eigen::Index>(ranges.eta.size()) != X.base_rank()) {
    throw Error(ErrorKind::DimensionMismatch, "eta range count differs from the base rank");
  }
  if (ranges.n_min > ranges.n_max || ranges.lambdas.empty()) throw Error(ErrorKind::EmptyRange, "empty n or lambda range");
  for (const auto& [lo, hi] : ranges.eta) {
    if (lo > hi) throw Error(ErrorKind::EmptyRange, "empty eta coefficient range");
  }
  if (ranges.n_min < 1) throw Error(ErrorKind::NonPositiveRank, "scan ranks must be at least 1");

  // Grid in (n, η lexicographic, λ) order; λ sorted so that the grid order
  // is already the documented output order.
  std::vector<Rational> lambdas = ranges.lambdas;
  std::sort(lambdas.begin(), lambdas.end());
  lambdas.erase(std::unique(lambdas.begin(), lambdas.end()), lambdas.end());
  std::vector<RationalVector> etas;
  RationalVector cur(X.base_rank());
  std::vector<int> idx(ranges.eta.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = ranges.eta[i].first;
  for (;;) {
    for (std::size_t i = 0; i < idx.size(); ++i) cur[static_cast<Eigen::Index>(i)] = idx[i];
    etas.push_back(cur);
    std::size_t k = idx.size();
    while (k > 0 && idx[k - 1] == ranges.eta[k - 1].second) {
      idx[k - 1] = ranges.eta[k - 1].first;
      --k;
    }
    if (k == 0) break;
    ++idx[k - 1];
  }
  std::vector<SpectralInput> grid;
  for (int n = ranges.n_min; n <= ranges.n_max; ++n) {
    for (const auto& eta : etas) {
      for (const auto& l : lambdas) grid.push_back({n, eta, l, std::nullopt});
    }
  }

  std::vector<std::optional<ScanRow>> cells(grid.size());
  const auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < grid.size(); i += step) {
      ScanRow row = evaluate_model(X, grid[i]);
      if (targets.require_anomaly_pass && !row.anomaly.pass) continue;
      if (targets.n_gen && row.generations.magnitude != *targets.n_gen) continue;
      cells[i] = std::move(row);
    }
  };
  if (parallel) {
    const std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
  } else {
    work(0, 1);
  }
  std::vector<ScanRow> out;
  for (auto& c : cells) {
    if (c) out.push_back(std::move(*c));
  }
  return out;
}

}  // namespace fmcalc
