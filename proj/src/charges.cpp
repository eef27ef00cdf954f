#include "fmcalc/charges.hpp"

#include "fmcalc/errors.hpp"

#include <deque>
#include <map>

namespace fmcalc {

const Rational& PrepotentialData::k_abc(Eigen::Index a, Eigen::Index b, Eigen::Index c) const {
  const auto h = h11();
  return k[static_cast<std::size_t>((a * h + b) * h + c)];
}

void PrepotentialData::validate() const {
  const auto h = h11();
  if (static_cast<Eigen::Index>(k.size()) != h * h * h) throw Error(ErrorKind::DimensionMismatch, "k_abc needs h11³ entries");
  if (static_cast<Eigen::Index>(names.size()) != h) throw Error(ErrorKind::DimensionMismatch, "divisor name count differs from h11");
  if (c_ab.rows() != h || c_ab.cols() != h) throw Error(ErrorKind::DimensionMismatch, "c_ab must be h11 x h11");
  if (c_ab != c_ab.transpose()) throw Error(ErrorKind::InvalidArgument, "c_ab must be symmetric");
  for (Eigen::Index a = 0; a < h; ++a) {
    for (Eigen::Index b = 0; b < h; ++b) {
      for (Eigen::Index c = 0; c < h; ++c) {
        const Rational& v = k_abc(a, b, c);
        if (v != k_abc(b, a, c) || v != k_abc(a, c, b)) throw Error(ErrorKind::InvalidArgument, "k_abc must be fully symmetric");
      }
    }
  }
}

namespace {

std::vector<Class> kahler_basis(const FibrationModel& X) {
  std::vector<Class> J{X.theta_class()};
  for (std::size_t i = 0; i < X.pullback.size(); ++i) J.push_back(Class::basis(X.ring, X.pullback[i]));
  return J;
}

}  // namespace

PrepotentialData prepotential_from_fibration(const FibrationModel& X) {
  X.require(FibrationKind::CY3);
  const std::vector<Class> J = kahler_basis(X);
  const auto h = static_cast<Eigen::Index>(J.size());
  PrepotentialData p;
  p.names.push_back("Θ");
  for (const auto& n : X.surface->divisor_names) p.names.push_back("p*" + n);
  p.k.resize(static_cast<std::size_t>(h * h * h));
  for (Eigen::Index a = 0; a < h; ++a) {
    for (Eigen::Index b = 0; b < h; ++b) {
      for (Eigen::Index c = 0; c < h; ++c) {
        p.k[static_cast<std::size_t>((a * h + b) * h + c)] = integrate(J[a] * J[b] * J[c]);
      }
    }
  }
  const Class c2 = c2_tangent(X);
  p.c2J.resize(h);
  for (Eigen::Index a = 0; a < h; ++a) p.c2J[a] = integrate(c2 * J[a]);
  p.chi = -60 * X.surface->c1_squared();
  p.c_ab = RationalMatrix::Zero(h, h);
  p.kappa = p.chi;
  return p;
}

KahlerModel kahler_model(const PrepotentialData& data) {
  data.validate();
  const auto h = data.h11();
  std::vector<BasisElement> basis{{"1", 0}};
  for (const auto& n : data.names) basis.push_back({n, 1});
  for (const auto& n : data.names) basis.push_back({n + "^", 2});
  basis.push_back({"pt", 3});
  const std::size_t N = basis.size();
  std::vector<SparseTerms> table(N * N);
  for (std::size_t i = 0; i < N; ++i) table[i] = {{i, Rational(1)}};
  for (Eigen::Index a = 0; a < h; ++a) {
    for (Eigen::Index b = a; b < h; ++b) {
      SparseTerms t;
      for (Eigen::Index c = 0; c < h; ++c) {
        if (data.k_abc(a, b, c) != 0) t.push_back({static_cast<std::size_t>(1 + h + c), data.k_abc(a, b, c)});
      }
      table[static_cast<std::size_t>(1 + a) * N + static_cast<std::size_t>(1 + b)] = t;
    }
    for (Eigen::Index b = 0; b < h; ++b) {
      table[static_cast<std::size_t>(1 + a) * N + static_cast<std::size_t>(1 + h + b)] =
          a == b ? SparseTerms{{N - 1, Rational(1)}} : SparseTerms{};
    }
  }
  KahlerModel K;
  K.data = data;
  K.ring = std::make_shared<RingPresentation>(3, std::move(basis), std::move(table));
  return K;
}

Class KahlerModel::c2() const {
  Class c(ring);
  for (Eigen::Index a = 0; a < data.h11(); ++a) c[Jdual(a)] = data.c2J[a];
  return c;
}

Class KahlerModel::todd() const { return Class::one(ring) + Rational(1, 12) * c2(); }

Class fibration_to_kahler(const FibrationModel& X, const KahlerModel& K, const Class& ch) {
  const std::vector<Class> J = kahler_basis(X);
  if (static_cast<Eigen::Index>(J.size()) != K.data.h11()) throw Error(ErrorKind::DimensionMismatch, "Kähler model does not match the fibration");
  Class out(K.ring);
  out[0] = ch.unit_coefficient();
  out[K.J(0)] = ch[X.theta];
  for (std::size_t i = 0; i < X.pullback.size(); ++i) out[K.J(static_cast<Eigen::Index>(1 + i))] = ch[X.pullback[i]];
  const Class ch2 = ch.degree_part(2);
  for (Eigen::Index b = 0; b < K.data.h11(); ++b) out[K.Jdual(b)] = integrate(ch2 * J[static_cast<std::size_t>(b)]);
  out[K.ring->point_index()] = integrate(ch);
  return out;
}

Class kahler_to_fibration(const FibrationModel& X, const KahlerModel& K, const Class& ch) {
  const std::vector<Class> J = kahler_basis(X);
  const auto h = K.data.h11();
  if (static_cast<Eigen::Index>(J.size()) != h) throw Error(ErrorKind::DimensionMismatch, "Kähler model does not match the fibration");
  Class out(X.ring);
  out[X.ring->unit_index()] = ch[0];
  out[X.theta] = ch[K.J(0)];
  for (std::size_t i = 0; i < X.pullback.size(); ++i) out[X.pullback[i]] = ch[K.J(static_cast<Eigen::Index>(1 + i))];
  // Degree-2 part: solve integrate(y · J_b) = ch[J^b] over the basis Θ·p*D_i, f.
  std::vector<std::size_t> h4 = X.theta_pullback;
  h4.push_back(X.fiber);
  RationalMatrix pairing(h, static_cast<Eigen::Index>(h4.size()));
  RationalVector rhs(h);
  for (Eigen::Index b = 0; b < h; ++b) {
    rhs[b] = ch[K.Jdual(b)];
    for (std::size_t k = 0; k < h4.size(); ++k) {
      pairing(b, static_cast<Eigen::Index>(k)) = integrate(Class::basis(X.ring, h4[k]) * J[static_cast<std::size_t>(b)]);
    }
  }
  const auto y = solve(pairing, rhs);
  if (!y) throw Error(ErrorKind::InvalidArgument, "degree-4 pairing is degenerate");
  for (std::size_t k = 0; k < h4.size(); ++k) out[h4[k]] = (*y)[static_cast<Eigen::Index>(k)];
  out[X.ring->point_index()] = ch[K.ring->point_index()];
  return out;
}

ChargeVector ChargeVector::zero(Eigen::Index h11) { return {0, RationalVector::Zero(h11), RationalVector::Zero(h11), 0}; }

ChargeVector operator+(const ChargeVector& a, const ChargeVector& b) { return {a.n6 + b.n6, a.n4 + b.n4, a.n2 + b.n2, a.n0 + b.n0}; }
ChargeVector operator*(const Rational& k, const ChargeVector& a) { return {k * a.n6, k * a.n4, k * a.n2, k * a.n0}; }

RationalVector flatten(const ChargeVector& n) {
  const auto h = n.n4.size();
  RationalVector v(2 * h + 2);
  v[0] = n.n6;
  v.segment(1, h) = n.n4;
  v.segment(1 + h, h) = n.n2;
  v[2 * h + 1] = n.n0;
  return v;
}

ChargeVector unflatten(const RationalVector& v, Eigen::Index h11) {
  if (v.size() != 2 * h11 + 2) throw Error(ErrorKind::DimensionMismatch, "charge vector has the wrong length");
  return {v[0], v.segment(1, h11), v.segment(1 + h11, h11), v[2 * h11 + 1]};
}

bool operator<(const ChargeVector& a, const ChargeVector& b) {
  const RationalVector x = flatten(a), y = flatten(b);
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

std::string to_string(const ChargeVector& n) {
  const RationalVector v = flatten(n);
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

ChargeVector chern_to_charge(const Class& ch, const KahlerModel& K) {
  if (ch.ring() != K.ring) throw Error(ErrorKind::PresentationMismatch, "class is not on the Kähler ring");
  const auto h = K.data.h11();
  ChargeVector n = ChargeVector::zero(h);
  n.n6 = ch[0];
  for (Eigen::Index a = 0; a < h; ++a) n.n4[a] = ch[K.J(a)];
  for (Eigen::Index b = 0; b < h; ++b) n.n2[b] = ch[K.Jdual(b)] - K.data.c_ab.row(b).dot(n.n4);
  n.n0 = -ch[K.ring->point_index()] - K.data.c2J.dot(n.n4) / 12;
  return n;
}

Class charge_to_chern(const ChargeVector& n, const KahlerModel& K) {
  const auto h = K.data.h11();
  if (n.n4.size() != h || n.n2.size() != h) throw Error(ErrorKind::DimensionMismatch, "charge vector does not match h11");
  Class ch(K.ring);
  ch[0] = n.n6;
  for (Eigen::Index a = 0; a < h; ++a) ch[K.J(a)] = n.n4[a];
  for (Eigen::Index b = 0; b < h; ++b) ch[K.Jdual(b)] = n.n2[b] + K.data.c_ab.row(b).dot(n.n4);
  ch[K.ring->point_index()] = -n.n0 - K.data.c2J.dot(n.n4) / 12;
  return ch;
}

ComplexRational central_charge_B(const Class& ch, const KahlerPoint& t, const KahlerModel& K) {
  if (t.size() != K.data.h11()) throw Error(ErrorKind::DimensionMismatch, "Kähler point does not match h11");
  if (ch.ring() != K.ring) throw Error(ErrorKind::PresentationMismatch, "class is not on the Kähler ring");
  ComplexClass tJ(K.ring);
  for (Eigen::Index a = 0; a < t.size(); ++a) tJ[K.J(a)] = t[a];
  const ComplexClass td = (Class::one(K.ring) + Rational(1, 24) * K.c2()).cast<ComplexRational>();
  return -integrate(exp_nilpotent(-tJ) * ch.cast<ComplexRational>() * td);
}

ComplexRational central_charge_B(const ChernData3& E, const FibrationModel& X, const KahlerPoint& t, const KahlerModel& K) {
  return central_charge_B(fibration_to_kahler(X, K, to_class(X, E)), t, K);
}

PeriodData period_vector(const KahlerPoint& t, const KahlerModel& K) {
  const auto h = K.data.h11();
  if (t.size() != h) throw Error(ErrorKind::DimensionMismatch, "Kähler point does not match h11");
  const PrepotentialData& d = K.data;
  PeriodData p;
  p.pi6 = ComplexRational(0);
  p.pi4 = ComplexVector::Constant(h, ComplexRational(0));
  p.pi2 = t;
  p.pi0 = ComplexRational(1);
  for (Eigen::Index a = 0; a < h; ++a) {
    p.pi6 += ComplexRational(d.c2J[a] / 24) * t[a];
    p.pi4[a] = ComplexRational(d.c2J[a] / 24);
    for (Eigen::Index b = 0; b < h; ++b) {
      p.pi4[a] += ComplexRational(d.c_ab(a, b)) * t[b];
      for (Eigen::Index c = 0; c < h; ++c) {
        const ComplexRational ttk = ComplexRational(d.k_abc(a, b, c)) * t[b] * t[c];
        p.pi6 += ComplexRational(Rational(1, 6)) * ttk * t[a];
        p.pi4[a] -= ComplexRational(Rational(1, 2)) * ttk;
      }
    }
  }
  return p;
}

ComplexRational central_charge_A(const ChargeVector& n, const KahlerPoint& t, const KahlerModel& K) {
  const PeriodData p = period_vector(t, K);
  ComplexRational z = ComplexRational(n.n6) * p.pi6 + ComplexRational(n.n0) * p.pi0;
  for (Eigen::Index a = 0; a < K.data.h11(); ++a) {
    z += ComplexRational(n.n4[a]) * p.pi4[a] + ComplexRational(n.n2[a]) * p.pi2[a];
  }
  return z;
}

PrepotentialValue prepotential(const KahlerPoint& t, const KahlerModel& K) {
  const auto h = K.data.h11();
  if (t.size() != h) throw Error(ErrorKind::DimensionMismatch, "Kähler point does not match h11");
  ComplexRational f(0);
  for (Eigen::Index a = 0; a < h; ++a) {
    f -= ComplexRational(K.data.c2J[a] / 24) * t[a];
    for (Eigen::Index b = 0; b < h; ++b) {
      f += ComplexRational(K.data.c_ab(a, b) / 2) * t[a] * t[b];
      for (Eigen::Index c = 0; c < h; ++c) f += ComplexRational(K.data.k_abc(a, b, c) / 6) * t[a] * t[b] * t[c];
    }
  }
  return {f, K.data.kappa};
}

Class conifold_raw(const Class& ch, const Class& td) {
  return integrate(ch * td) * Class::one(ch.ring()) - ch;
}

ChernData3 conifold_monodromy(const ChernData3& E, const FibrationModel& X) {
  X.require(FibrationKind::CY3);
  return to_chern3(X, conifold_raw(to_class(X, E), todd_total(X)));
}

ChargeVector conifold_charge_raw(const ChargeVector& n, const KahlerModel& K) {
  return chern_to_charge(conifold_raw(charge_to_chern(n, K), K.todd()), K);
}

ChargeVector conifold_charge(const ChargeVector& n, const KahlerModel& K) {
  return Rational(-1) * conifold_charge_raw(n, K);
}

ChernData3 lcsl_monodromy(const ChernData3& E, const FibrationModel& X, const Class& D) { return line_twist(E, X, D); }

ChargeVector lcsl_charge(const ChargeVector& n, const KahlerModel& K, Eigen::Index a, int power) {
  const Class D = Class::basis(K.ring, K.J(a), Rational(power));
  return chern_to_charge(charge_to_chern(n, K) * exp_nilpotent(D), K);
}

TwistedCharge effective_charge(const ChernData3& E, const FibrationModel& X) {
  X.require(FibrationKind::CY3);
  TwistedCharge q;
  q.Q = to_class(X, E) * sqrt_unit(todd_total(X));
  q.coords = q.Q.coeffs();
  return q;
}

ChernData3 from_effective_coords(const RationalVector& q, const FibrationModel& X) {
  X.require(FibrationKind::CY3);
  const Class Q(X.ring, q);
  return to_chern3(X, Q * inverse_unit(sqrt_unit(todd_total(X))));
}

TDualityReport tduality_matrix(const FibrationModel& X) {
  X.require(FibrationKind::CY3);
  const auto r = X.base_rank();
  const auto N = static_cast<Eigen::Index>(X.ring->size());
  TDualityReport rep;
  rep.coordinate_names = {"n", "x"};
  for (const auto& d : X.surface->divisor_names) rep.coordinate_names.push_back("S_" + d);
  for (const auto& d : X.surface->divisor_names) rep.coordinate_names.push_back("eta_" + d);
  rep.coordinate_names.push_back("a");
  rep.coordinate_names.push_back("s");

  rep.matrix.resize(N, N);
  for (Eigen::Index j = 0; j < N; ++j) {
    RationalVector e = RationalVector::Zero(N);
    e[j] = 1;
    const ChernData3 G = from_effective_coords(e, X);
    rep.matrix.col(j) = effective_charge(fm_cy3(G, X, Direction::Forward), X).coords;
  }

  std::vector<std::pair<Eigen::Index, Eigen::Index>> blocks{{0, 1}};
  for (Eigen::Index i = 0; i < r; ++i) blocks.push_back({2 + i, 2 + r + i});
  blocks.push_back({2 + 2 * r, 3 + 2 * r});
  rep.M = RationalMatrix::Zero(N, N);
  rep.graded = RationalMatrix::Zero(N, N);
  for (const auto& [p, q] : blocks) {
    rep.M(p, q) = 1;
    rep.M(q, p) = -1;
    for (Eigen::Index i : {p, q}) {
      for (Eigen::Index j : {p, q}) rep.graded(i, j) = rep.matrix(i, j);
    }
  }
  const RationalMatrix minus_id = -RationalMatrix::Identity(N, N);
  rep.graded_equals_M = rep.graded == rep.M;
  rep.M_squared_minus_identity = RationalMatrix(rep.M * rep.M) == minus_id;
  rep.matrix_squared_minus_identity = RationalMatrix(rep.matrix * rep.matrix) == minus_id;
  rep.restricted_equals_M = true;
  for (Eigen::Index j = 0; j < N; ++j) {
    if (j == 1) continue;  // the x direction lies outside the x = 0 subspace
    if (rep.matrix.col(j) != rep.M.col(j)) {
      rep.restricted_equals_M = false;
      rep.mismatched_columns.push_back(rep.coordinate_names[static_cast<std::size_t>(j)]);
    }
  }
  return rep;
}

std::string MonodromyGenerator::name() const {
  switch (kind) {
    case Kind::Conifold: return "conifold";
    case Kind::ConifoldRaw: return "conifold-raw";
    case Kind::Lcsl: return "lcsl(" + std::to_string(divisor) + (power == 1 ? "" : "," + std::to_string(power)) + ")";
  }
  return "";
}

Orbit monodromy_orbit(const ChargeVector& seed, const std::vector<MonodromyGenerator>& generators, int max_steps,
                      const KahlerModel& K) {
  const auto h = K.data.h11();
  // Each generator is linear; precompute its matrix on flattened charges.
  std::vector<RationalMatrix> mats;
  for (const auto& g : generators) {
    RationalMatrix m(2 * h + 2, 2 * h + 2);
    for (Eigen::Index j = 0; j < 2 * h + 2; ++j) {
      RationalVector e = RationalVector::Zero(2 * h + 2);
      e[j] = 1;
      const ChargeVector c = unflatten(e, h);
      ChargeVector img;
      switch (g.kind) {
        case MonodromyGenerator::Kind::Conifold: img = conifold_charge(c, K); break;
        case MonodromyGenerator::Kind::ConifoldRaw: img = conifold_charge_raw(c, K); break;
        case MonodromyGenerator::Kind::Lcsl:
          if (g.divisor < 0 || g.divisor >= h) throw Error(ErrorKind::DimensionMismatch, "lcsl divisor index out of range");
          img = lcsl_charge(c, K, g.divisor, g.power);
          break;
      }
      m.col(j) = flatten(img);
    }
    mats.push_back(std::move(m));
  }

  Orbit orbit;
  std::map<ChargeVector, std::size_t> seen;
  orbit.elements.push_back(seed);
  seen.emplace(seed, 0);
  std::vector<std::size_t> frontier{0};
  for (int step = 0; step < max_steps && !frontier.empty(); ++step) {
    std::vector<std::size_t> next;
    for (std::size_t from : frontier) {
      const RationalVector v = flatten(orbit.elements[from]);
      for (std::size_t g = 0; g < mats.size(); ++g) {
        const ChargeVector img = unflatten(mats[g] * v, h);
        const auto [it, inserted] = seen.emplace(img, orbit.elements.size());
        if (inserted) {
          orbit.elements.push_back(img);
          next.push_back(it->second);
        }
        orbit.log.push_back({from, g, it->second, inserted});
      }
    }
    frontier = std::move(next);
  }
  return orbit;
}

}  // namespace fmcalc
