#include "fmcalc/charges.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace fmcalc;

namespace doctest {
template <>
struct StringMaker<ComplexRational> {
  static String convert(const ComplexRational& z) { return to_string(z).c_str(); }
};
}  // namespace doctest

namespace {

ChargeVector random_charge(testing::Rng& rng, Eigen::Index h) { return {rng.rational(), rng.vector(h), rng.vector(h), rng.rational()}; }

KahlerPoint random_point(testing::Rng& rng, Eigen::Index h) {
  KahlerPoint t(h);
  for (Eigen::Index a = 0; a < h; ++a) t[a] = ComplexRational(rng.rational(), rng.rational());
  return t;
}

PrepotentialData random_prepotential(testing::Rng& rng, Eigen::Index h) {
  PrepotentialData p;
  for (Eigen::Index a = 0; a < h; ++a) p.names.push_back("J" + std::to_string(a + 1));
  p.k.resize(static_cast<std::size_t>(h * h * h));
  for (Eigen::Index a = 0; a < h; ++a)
    for (Eigen::Index b = a; b < h; ++b)
      for (Eigen::Index c = b; c < h; ++c) {
        const Rational v = rng.integer(-5, 9);
        const Eigen::Index idx[3] = {a, b, c};
        int perm[3] = {0, 1, 2};
        do {
          p.k[static_cast<std::size_t>((idx[perm[0]] * h + idx[perm[1]]) * h + idx[perm[2]])] = v;
        } while (std::next_permutation(perm, perm + 3));
      }
  p.c2J = rng.vector(h);
  p.c_ab = RationalMatrix::Zero(h, h);
  for (Eigen::Index a = 0; a < h; ++a)
    for (Eigen::Index b = a; b < h; ++b) p.c_ab(a, b) = p.c_ab(b, a) = rng.rational();
  p.chi = -200;
  p.kappa = p.chi;
  return p;
}

}  // namespace

TEST_CASE("charge map") {
  const FibrationModel X = build_fibration(build_base("P2"));
  const KahlerModel K = kahler_model(prepotential_from_fibration(X));
  CHECK(K.data.chi == -540);
  CHECK(K.data.c2J[0] == -6);
  CHECK(K.data.c2J[1] == 36);
  CHECK(K.data.k_abc(0, 0, 0) == 9);
  CHECK(!K.ring->associativity_violation());

  ChargeVector n = ChargeVector::zero(2);
  n.n6 = 1;
  CHECK(charge_to_chern(n, K) == Class::one(K.ring));

  testing::Rng rng(43);
  PrepotentialData pd = random_prepotential(rng, 3);
  const KahlerModel R = kahler_model(pd);
  ChargeVector u = ChargeVector::zero(3);
  u.n4[1] = 1;
  const Class ch = charge_to_chern(u, R);
  CHECK(ch[R.J(1)] == 1);
  for (Eigen::Index b = 0; b < 3; ++b) CHECK(ch[R.Jdual(b)] == pd.c_ab(1, b));
  CHECK(integrate(ch) == -pd.c2J[1] / 12);
  for (int t = 0; t < 100; ++t) {
    const ChargeVector c = random_charge(rng, 3);
    CHECK(chern_to_charge(charge_to_chern(c, R), R) == c);
  }
  pd.c_ab(0, 1) += 1;
  CHECK_THROWS_AS(kahler_model(pd), Error);
}

TEST_CASE("fibration and Kähler rings agree") {
  testing::Rng rng(47);
  for (const char* name : {"P2", "F1", "dP2"}) {
    const FibrationModel X = build_fibration(build_base(name));
    const KahlerModel K = kahler_model(prepotential_from_fibration(X));
    CHECK(fibration_to_kahler(X, K, todd_total(X)) == K.todd());
    for (int t = 0; t < 20; ++t) {
      Class a(X.ring), b(X.ring);
      for (std::size_t i = 0; i < X.ring->size(); ++i) {
        a[i] = rng.rational();
        b[i] = rng.rational();
      }
      CHECK(kahler_to_fibration(X, K, fibration_to_kahler(X, K, a)) == a);
      const Class a1 = a.degree_part(1), b1 = b.degree_part(1), b2 = b.degree_part(2);
      CHECK(fibration_to_kahler(X, K, a1 * b1) == fibration_to_kahler(X, K, a1) * fibration_to_kahler(X, K, b1));
      CHECK(integrate(a1 * b2) == integrate(fibration_to_kahler(X, K, a1) * fibration_to_kahler(X, K, b2)));
    }
  }
}

TEST_CASE("central charges") {
  const FibrationModel X = build_fibration(build_base("P2"));
  const KahlerModel K = kahler_model(prepotential_from_fibration(X));
  testing::Rng rng(53);
  const KahlerPoint t = random_point(rng, 2);
  ComplexRational expected(0);
  for (Eigen::Index a = 0; a < 2; ++a) {
    expected += ComplexRational(K.data.c2J[a] / 24) * t[a];
    for (Eigen::Index b = 0; b < 2; ++b)
      for (Eigen::Index c = 0; c < 2; ++c) expected += ComplexRational(K.data.k_abc(a, b, c) / 6) * t[a] * t[b] * t[c];
  }
  CHECK(central_charge_B(Class::one(K.ring), t, K) == expected);
  CHECK(central_charge_B(Class::point(K.ring), t, K) == ComplexRational(-1));
  ChargeVector n0 = ChargeVector::zero(2);
  n0.n0 = 1;
  CHECK(central_charge_A(n0, t, K) == ComplexRational(1));
  CHECK(central_charge_A(ChargeVector::zero(2), t, K) == ComplexRational(0));
  CHECK(central_charge_B(ChernData3::point(1), X, t, K) == ComplexRational(-1));

  for (int h = 1; h <= 3; ++h) {
    const KahlerModel R = kahler_model(random_prepotential(rng, h));
    for (int trial = 0; trial < 30; ++trial) {
      const ChargeVector n = random_charge(rng, h);
      const KahlerPoint p = random_point(rng, h);
      CHECK(central_charge_A(n, p, R) == central_charge_B(charge_to_chern(n, R), p, R));
      for (Eigen::Index a = 0; a < h; ++a) {
        KahlerPoint shifted = p;
        shifted[a] -= ComplexRational(1);
        const Class twisted = charge_to_chern(lcsl_charge(n, R, a), R);
        CHECK(central_charge_B(twisted, p, R) == central_charge_B(charge_to_chern(n, R), shifted, R));
      }
    }
  }
  const PrepotentialValue F = prepotential(t, K);
  CHECK(F.kappa == K.data.chi);
}

TEST_CASE("conifold and large-volume monodromy") {
  testing::Rng rng(59);
  const FibrationModel X = build_fibration(build_base("P2"));
  const KahlerModel K = kahler_model(prepotential_from_fibration(X));
  ChargeVector n = ChargeVector::zero(2);
  n.n6 = 1;
  n.n0 = 1;
  ChargeVector expected = n;
  expected.n6 = 2;
  CHECK(conifold_charge(n, K) == expected);
  for (int h = 1; h <= 3; ++h) {
    const KahlerModel R = kahler_model(random_prepotential(rng, h));
    for (int t = 0; t < 30; ++t) {
      const ChargeVector c = random_charge(rng, h);
      ChargeVector shifted = c;
      shifted.n6 += c.n0;
      CHECK(conifold_charge(c, R) == shifted);
      // Applied twice the sign drops out: n6 ↦ n6 + 2 n0 with (n4, n2, n0) fixed.
      ChargeVector twice = c;
      twice.n6 += 2 * c.n0;
      CHECK(conifold_charge_raw(conifold_charge_raw(c, R), R) == twice);
    }
  }
  for (int t = 0; t < 20; ++t) {
    ChernData3 E{rng.rational(), rng.rational(), rng.vector(1), rng.vector(1), rng.rational(), rng.rational()};
    const Rational chi = integrate(to_class(X, E) * todd_total(X));
    if (chi == 0) CHECK(conifold_monodromy(E, X) == -E);
    const Class D1 = Class::basis(X.ring, X.theta, rng.rational()), D2 = Class::basis(X.ring, X.pullback[0], rng.rational());
    CHECK(lcsl_monodromy(lcsl_monodromy(E, X, D1), X, D2) == lcsl_monodromy(E, X, D1 + D2));
    CHECK(lcsl_monodromy(E, X, Class::zero(X.ring)) == E);
  }
}

TEST_CASE("effective charge and T-duality matrix") {
  const FibrationModel X = build_fibration(build_base("P2"));
  ChernData3 unit = ChernData3::zero(1);
  unit.n = 1;
  const TwistedCharge q = effective_charge(unit, X);
  RationalVector expected(6);
  expected << 1, 0, 0, Rational(3, 2), Rational(17, 4), 0;
  CHECK(q.coords == expected);
  CHECK(effective_charge(ChernData3::point(1), X).coords == RationalVector::Unit(6, 5));
  testing::Rng rng(61);
  for (int t = 0; t < 10; ++t) {
    ChernData3 E{rng.rational(), rng.rational(), rng.vector(1), rng.vector(1), rng.rational(), rng.rational()};
    CHECK(from_effective_coords(effective_charge(E, X).coords, X) == E);
  }

  const TDualityReport r = tduality_matrix(X);
  CHECK(r.graded_equals_M);
  CHECK(r.M_squared_minus_identity);
  CHECK(r.matrix.col(5) == r.M.col(5));
  // Off-block corrections proportional to c1 survive on the x = 0 columns.
  CHECK_FALSE(r.restricted_equals_M);
  CHECK(r.mismatched_columns == std::vector<std::string>{"n", "S_H", "eta_H"});
}

TEST_CASE("monodromy orbit") {
  const FibrationModel X = build_fibration(build_base("P2"));
  const KahlerModel K = kahler_model(prepotential_from_fibration(X));
  ChargeVector seed = ChargeVector::zero(2);
  seed.n6 = 1;
  CHECK(monodromy_orbit(seed, {}, 5, K).elements.size() == 1);
  ChargeVector torsion = ChargeVector::zero(2);
  torsion.n2[0] = 1;
  MonodromyGenerator l{MonodromyGenerator::Kind::Lcsl, 0, 1};
  const Orbit o = monodromy_orbit(seed, {l}, 6, K);
  CHECK(o.elements.size() == 7);
  const Orbit a = monodromy_orbit(seed, {{MonodromyGenerator::Kind::Conifold, 0, 1}, l}, 3, K);
  const Orbit b = monodromy_orbit(seed, {{MonodromyGenerator::Kind::Conifold, 0, 1}, l}, 3, K);
  CHECK(a.elements == b.elements);
  CHECK(a.elements.size() > 3);
}
