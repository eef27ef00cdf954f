#include "fmcalc/geometry.hpp"

#include "fmcalc/errors.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

namespace fmcalc {

RationalVector BaseSurface::unit(Eigen::Index i) const {
  RationalVector v = RationalVector::Zero(h11());
  v[i] = 1;
  return v;
}

namespace {

std::optional<int> parse_suffix(const std::string& name, const std::string& prefix) {
  if (name.rfind(prefix, 0) != 0) return std::nullopt;
  std::string rest = name.substr(prefix.size());
  if (!rest.empty() && rest.front() == '_') rest.erase(0, 1);
  if (rest.empty()) return std::nullopt;
  int value = 0;
  const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
  if (ec != std::errc() || ptr != rest.data() + rest.size()) return std::nullopt;
  return value;
}

BaseSurface projective_plane() {
  BaseSurface b;
  b.name = "P2";
  b.divisor_names = {"H"};
  b.pairing = RationalMatrix::Ones(1, 1);
  b.c1 = RationalVector::Constant(1, Rational(3));
  b.c2 = 3;
  b.effective_generators = {b.unit(0)};
  return b;
}

BaseSurface hirzebruch(int m) {
  BaseSurface b;
  b.name = "F" + std::to_string(m);
  b.divisor_names = {"b", "f_B"};
  b.pairing.resize(2, 2);
  b.pairing << Rational(-m), Rational(1), Rational(1), Rational(0);
  b.c1.resize(2);
  b.c1 << Rational(2), Rational(m + 2);
  b.c2 = 4;
  b.effective_generators = {b.unit(0), b.unit(1)};
  return b;
}

BaseSurface del_pezzo(int k) {
  BaseSurface b;
  b.name = "dP" + std::to_string(k);
  b.divisor_names = {"H"};
  for (int i = 1; i <= k; ++i) b.divisor_names.push_back("E" + std::to_string(i));
  b.pairing = RationalMatrix::Zero(k + 1, k + 1);
  b.pairing(0, 0) = 1;
  for (int i = 1; i <= k; ++i) b.pairing(i, i) = -1;
  b.c1 = RationalVector::Constant(k + 1, Rational(-1));
  b.c1[0] = 3;
  b.c2 = 3 + k;
  if (k == 0) {
    b.effective_generators = {b.unit(0)};
  } else {
    b.effective_generators = minus_one_curves(k);
    if (k == 1) {
      RationalVector ruling = b.unit(0) - b.unit(1);  // H - E, the ruling of F1
      b.effective_generators.push_back(ruling);
    }
  }
  return b;
}

BaseSurface enriques() {
  // Numerical lattice U ⊕ E8(-1); unnodal surface, so the effective cone
  // closure is the closure of the positive cone.
  BaseSurface b;
  b.name = "Enriques";
  b.divisor_names = {"u1", "u2"};
  for (int i = 1; i <= 8; ++i) b.divisor_names.push_back("e" + std::to_string(i));
  b.pairing = RationalMatrix::Zero(10, 10);
  b.pairing(0, 1) = b.pairing(1, 0) = 1;
  // E8 Dynkin diagram: chain 1-2-3-4-5-6-7 with node 8 attached to node 5.
  const int edges[][2] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 7}};
  for (int i = 0; i < 8; ++i) b.pairing(2 + i, 2 + i) = 2;
  for (const auto& e : edges) b.pairing(2 + e[0], 2 + e[1]) = b.pairing(2 + e[1], 2 + e[0]) = -1;
  b.pairing.bottomRightCorner(8, 8) *= Rational(-1);
  b.c1 = RationalVector::Zero(10);
  b.c2 = 12;
  b.positive_cone_model = true;
  b.positive_cone_reference = b.unit(0) + b.unit(1);
  return b;
}

void validate_lattice(const BaseSurface& b) {
  const Eigen::Index r = b.pairing.rows();
  if (b.pairing.cols() != r) throw Error(ErrorKind::InconsistentCustomLattice, "pairing matrix is not square");
  if (b.pairing != b.pairing.transpose()) throw Error(ErrorKind::InconsistentCustomLattice, "pairing matrix is not symmetric");
  if (static_cast<Eigen::Index>(b.divisor_names.size()) != r) {
    throw Error(ErrorKind::InconsistentCustomLattice, "divisor name count differs from pairing size");
  }
  if (b.c1.size() != r) throw Error(ErrorKind::InconsistentCustomLattice, "c1 vector has the wrong length");
  for (const auto& g : b.effective_generators) {
    if (g.size() != r) throw Error(ErrorKind::InconsistentCustomLattice, "effective generator has the wrong length");
  }
}

SparseTerms term(std::size_t i, Rational c) {
  if (c == 0) return {};
  return {{i, std::move(c)}};
}

}  // namespace

BaseSurface build_base(const std::string& catalog_name) {
  if (catalog_name == "P2") return projective_plane();
  if (catalog_name == "Enriques") return enriques();
  if (auto k = parse_suffix(catalog_name, "dP")) {
    if (*k >= 0 && *k <= 8) return del_pezzo(*k);
  } else if (auto m = parse_suffix(catalog_name, "F")) {
    if (*m >= 0) return hirzebruch(*m);
  }
  throw Error(ErrorKind::UnknownCatalogEntry, "unknown base '" + catalog_name + "'");
}

BaseSurface custom_base(std::string name, std::vector<std::string> divisor_names, RationalMatrix pairing,
                        RationalVector c1, Rational c2, std::vector<RationalVector> effective_generators) {
  BaseSurface b;
  b.name = std::move(name);
  b.divisor_names = std::move(divisor_names);
  b.pairing = std::move(pairing);
  b.c1 = std::move(c1);
  b.c2 = std::move(c2);
  b.effective_generators = std::move(effective_generators);
  validate_lattice(b);
  return b;
}

std::vector<RationalVector> minus_one_curves(int k) {
  std::vector<RationalVector> out;
  for (int i = 1; i <= k; ++i) {
    RationalVector v = RationalVector::Zero(k + 1);
    v[i] = 1;
    out.push_back(v);
  }
  // d > 0: sum m_i = 3d - 1 and sum m_i² = d² + 1. Enumerate nonincreasing
  // multiplicity tuples, then all their distinct orderings.
  for (int d = 1; d <= 7; ++d) {
    std::vector<int> m(static_cast<std::size_t>(k));
    std::function<void(int, int, int, int)> rec = [&](int pos, int cap, int sum_left, int sq_left) {
      if (pos == k) {
        if (sum_left != 0 || sq_left != 0) return;
        std::vector<int> perm(m.rbegin(), m.rend());
        do {
          RationalVector v(k + 1);
          v[0] = d;
          for (int i = 0; i < k; ++i) v[i + 1] = -perm[static_cast<std::size_t>(i)];
          out.push_back(v);
        } while (std::next_permutation(perm.begin(), perm.end()));
        return;
      }
      for (int mi = std::min(cap, sum_left); mi >= 0; --mi) {
        if (mi * mi > sq_left) continue;
        if (mi * (k - pos) < sum_left) break;
        m[static_cast<std::size_t>(pos)] = mi;
        rec(pos + 1, mi, sum_left - mi, sq_left - mi * mi);
      }
    };
    if (3 * d - 1 <= k * d) rec(0, d, 3 * d - 1, d * d + 1);
  }
  return out;
}

Effectivity effective_check(const BaseSurface& base, const RationalVector& divisor) {
  if (divisor.size() != base.h11()) throw Error(ErrorKind::DimensionMismatch, "divisor has the wrong length");
  Effectivity out;
  if (base.positive_cone_model) {
    out.effective = base.dot(divisor, divisor) >= 0 && base.dot(divisor, base.positive_cone_reference) >= 0;
    return out;
  }
  RationalMatrix gens(base.h11(), static_cast<Eigen::Index>(base.effective_generators.size()));
  for (std::size_t j = 0; j < base.effective_generators.size(); ++j) {
    gens.col(static_cast<Eigen::Index>(j)) = base.effective_generators[j];
  }
  ConeMembership cm = cone_membership(gens, divisor);
  out.effective = cm.member;
  out.weights = std::move(cm.weights);
  out.separator = std::move(cm.separator);
  return out;
}

void FibrationModel::require(FibrationKind k) const {
  if (kind != k) {
    throw Error(ErrorKind::WrongKind, k == FibrationKind::CY3 ? "operation needs a CY3 fibration"
                                                             : "operation needs an elliptic surface");
  }
}

Class FibrationModel::pull_divisor(const RationalVector& d) const {
  require(FibrationKind::CY3);
  if (d.size() != base_rank()) throw Error(ErrorKind::DimensionMismatch, "base divisor has the wrong length");
  Class out(ring);
  for (Eigen::Index i = 0; i < d.size(); ++i) out[pullback[static_cast<std::size_t>(i)]] = d[i];
  return out;
}

Class FibrationModel::theta_divisor(const RationalVector& d) const {
  require(FibrationKind::CY3);
  if (d.size() != base_rank()) throw Error(ErrorKind::DimensionMismatch, "base divisor has the wrong length");
  Class out(ring);
  for (Eigen::Index i = 0; i < d.size(); ++i) out[theta_pullback[static_cast<std::size_t>(i)]] = d[i];
  return out;
}

Class FibrationModel::kbar() const {
  if (is_cy3()) return pull_divisor(surface->c1);
  return Class::basis(ring, fiber, Rational(curve->e));
}

Rational FibrationModel::base_c1_squared() const { return is_cy3() ? surface->c1_squared() : Rational(0); }

FibrationModel build_fibration(const BaseSurface& base) {
  validate_lattice(base);
  const std::size_t r = static_cast<std::size_t>(base.h11());
  std::vector<BasisElement> basis;
  basis.push_back({"1", 0});
  basis.push_back({"Θ", 1});
  for (const auto& n : base.divisor_names) basis.push_back({"p*" + n, 1});
  for (const auto& n : base.divisor_names) basis.push_back({"Θ·p*" + n, 2});
  basis.push_back({"f", 2});
  basis.push_back({"pt", 3});

  const std::size_t N = basis.size();
  const std::size_t T = 1, F = 2 + 2 * r, P = 3 + 2 * r;
  const auto D = [](std::size_t i) { return 2 + i; };
  const auto TD = [r](std::size_t i) { return 2 + r + i; };
  std::vector<SparseTerms> table(N * N);
  const auto set = [&](std::size_t i, std::size_t j, SparseTerms t) { table[std::min(i, j) * N + std::max(i, j)] = std::move(t); };

  for (std::size_t i = 0; i < N; ++i) set(0, i, {{i, Rational(1)}});
  SparseTerms theta_sq;
  for (std::size_t i = 0; i < r; ++i) {
    if (base.c1[static_cast<Eigen::Index>(i)] != 0) theta_sq.push_back({TD(i), -base.c1[static_cast<Eigen::Index>(i)]});
  }
  set(T, T, theta_sq);
  set(T, F, {{P, Rational(1)}});
  const RationalVector c1_dot = base.pairing * base.c1;
  for (std::size_t i = 0; i < r; ++i) {
    const auto ii = static_cast<Eigen::Index>(i);
    set(T, D(i), {{TD(i), Rational(1)}});
    set(T, TD(i), term(P, -c1_dot[ii]));
    for (std::size_t j = 0; j < r; ++j) {
      const Rational& g = base.pairing(ii, static_cast<Eigen::Index>(j));
      set(D(i), D(j), term(F, g));
      set(D(i), TD(j), term(P, g));
    }
  }

  FibrationModel X;
  X.kind = FibrationKind::CY3;
  X.surface = base;
  X.ring = std::make_shared<RingPresentation>(3, std::move(basis), std::move(table));
  X.base_ring = surface_ring(base);
  X.theta = T;
  X.fiber = F;
  for (std::size_t i = 0; i < r; ++i) {
    X.pullback.push_back(D(i));
    X.theta_pullback.push_back(TD(i));
  }
  return X;
}

FibrationModel build_fibration(const BaseCurve& base, std::vector<ExtraDivisor> extras) {
  if (base.genus < 0 || base.e < 0) throw Error(ErrorKind::InvalidArgument, "curve genus and e must be nonnegative");
  const std::size_t x = extras.size();
  for (std::size_t k = 0; k < x; ++k) {
    if (extras[k].with_extras.size() != k + 1) {
      throw Error(ErrorKind::DimensionMismatch, "extra class '" + extras[k].name + "' needs " + std::to_string(k + 1) +
                                                    " pairings with the extra classes");
    }
  }
  std::vector<BasisElement> basis{{"1", 0}, {"Θ", 1}, {"f", 1}};
  for (const auto& e : extras) basis.push_back({e.name, 1});
  basis.push_back({"w", 2});
  const std::size_t N = basis.size();
  const std::size_t T = 1, F = 2, W = 3 + x;
  std::vector<SparseTerms> table(N * N);
  const auto set = [&](std::size_t i, std::size_t j, SparseTerms t) { table[std::min(i, j) * N + std::max(i, j)] = std::move(t); };
  for (std::size_t i = 0; i < N; ++i) set(0, i, {{i, Rational(1)}});
  set(T, T, term(W, Rational(-base.e)));
  set(T, F, {{W, Rational(1)}});
  for (std::size_t k = 0; k < x; ++k) {
    set(T, 3 + k, term(W, extras[k].with_theta));
    set(F, 3 + k, term(W, extras[k].with_fiber));
    for (std::size_t l = 0; l <= k; ++l) set(3 + l, 3 + k, term(W, extras[k].with_extras[l]));
  }

  FibrationModel X;
  X.kind = FibrationKind::EllipticSurface;
  X.curve = base;
  X.ring = std::make_shared<RingPresentation>(2, std::move(basis), std::move(table));
  X.base_ring = std::make_shared<RingPresentation>(
      1, std::vector<BasisElement>{{"1", 0}, {"pt_B", 1}},
      std::vector<SparseTerms>{{{0, Rational(1)}}, {{1, Rational(1)}}, {}, {}});
  X.theta = T;
  X.fiber = F;
  for (std::size_t k = 0; k < x; ++k) X.pullback.push_back(3 + k);
  X.extras = std::move(extras);
  return X;
}

RingPtr surface_ring(const BaseSurface& base) {
  validate_lattice(base);
  const std::size_t r = static_cast<std::size_t>(base.h11());
  std::vector<BasisElement> basis{{"1", 0}};
  for (const auto& n : base.divisor_names) basis.push_back({n, 1});
  basis.push_back({"pt_B", 2});
  const std::size_t N = basis.size();
  std::vector<SparseTerms> table(N * N);
  for (std::size_t i = 0; i < N; ++i) table[i] = {{i, Rational(1)}};
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < r; ++j) {
      table[(1 + i) * N + 1 + j] = term(N - 1, base.pairing(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
    }
  }
  return std::make_shared<RingPresentation>(2, std::move(basis), std::move(table));
}

Class surface_todd(const BaseSurface& base, const RingPtr& ring) {
  Class td = Class::one(ring);
  for (Eigen::Index i = 0; i < base.h11(); ++i) td[static_cast<std::size_t>(1 + i)] = base.c1[i] / 2;
  td[ring->point_index()] = (base.c1_squared() + base.c2) / 12;
  return td;
}

Class base_todd(const FibrationModel& X) {
  if (X.is_cy3()) return surface_todd(*X.surface, X.base_ring);
  Class td = Class::one(X.base_ring);
  td[1] = Rational(1 - X.curve->genus);
  return td;
}

Class todd_relative(const FibrationModel& X) {
  const Class k = X.kbar();
  const Class t = X.theta_class();
  const Class k2 = k * k;
  const Class tk = t * k;
  return X.one() - Rational(1, 2) * k + Rational(1, 12) * (Rational(12) * tk + Rational(13) * k2) -
         Rational(1, 2) * (tk * k);
}

Class todd_total(const FibrationModel& X) { return todd_relative(X) * pull_from_base(X, base_todd(X)); }

Class c2_tangent(const FibrationModel& X) {
  X.require(FibrationKind::CY3);
  const BaseSurface& b = *X.surface;
  return Rational(12) * X.theta_divisor(b.c1) + Class::basis(X.ring, X.fiber, Rational(11) * b.c1_squared() + b.c2);
}

Class push_to_base(const FibrationModel& X, const Class& a) {
  if (a.ring() != X.ring) throw Error(ErrorKind::PresentationMismatch, "class does not live on the fibration");
  Class out(X.base_ring);
  out[X.base_ring->unit_index()] = a[X.theta];
  out[X.base_ring->point_index()] = a[X.ring->point_index()];
  if (X.is_cy3()) {
    for (std::size_t i = 0; i < X.theta_pullback.size(); ++i) out[1 + i] = a[X.theta_pullback[i]];
  } else {
    for (std::size_t k = 0; k < X.extras.size(); ++k) out[0] += a[X.pullback[k]] * X.extras[k].with_fiber;
  }
  return out;
}

Class pull_from_base(const FibrationModel& X, const Class& b) {
  if (b.ring() != X.base_ring) throw Error(ErrorKind::PresentationMismatch, "class does not live on the base");
  Class out(X.ring);
  out[X.ring->unit_index()] = b[X.base_ring->unit_index()];
  out[X.fiber] += b[X.base_ring->point_index()];
  if (X.is_cy3()) {
    for (std::size_t i = 0; i < X.pullback.size(); ++i) out[X.pullback[i]] = b[1 + i];
  }
  return out;
}

}  // namespace fmcalc
