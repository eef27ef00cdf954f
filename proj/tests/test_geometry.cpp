#include "fmcalc/geometry.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace fmcalc;

namespace {

RationalVector vec(std::initializer_list<int> xs) {
  RationalVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (int x : xs) v[i++] = x;
  return v;
}

const char* const kCatalog[] = {"P2", "F0", "F1", "F2", "F3", "dP1", "dP2", "dP3", "dP4",
                                "dP5", "dP6", "dP7", "dP8", "Enriques"};

}  // namespace

TEST_CASE("catalog bases") {
  const BaseSurface p2 = build_base("P2");
  CHECK(p2.c1_squared() == 9);
  CHECK(p2.c2 == 3);
  const BaseSurface f0 = build_base("F_0");
  CHECK(f0.c1_squared() == 8);
  CHECK(f0.c2 == 4);
  const BaseSurface dp1 = build_base("dP_1");
  CHECK(dp1.c1_squared() == 8);
  CHECK(dp1.c2 == 4);
  const BaseSurface enr = build_base("Enriques");
  CHECK(enr.c1_squared() == 0);
  CHECK(enr.c2 == 12);
  CHECK(rank(enr.pairing) == 10);
  for (const char* name : kCatalog) {
    const BaseSurface b = build_base(name);
    CHECK(b.pairing == b.pairing.transpose());
    // Noether: chi(O_B) = (c1² + c2) / 12 = 1 for these rational/Enriques surfaces.
    CHECK((b.c1_squared() + b.c2) / 12 == 1);
  }
  CHECK_THROWS_AS(build_base("P5"), Error);
  CHECK_THROWS_AS(build_base("dP9"), Error);
  RationalMatrix skew = RationalMatrix::Identity(2, 2);
  skew(0, 1) = 1;
  CHECK_THROWS_AS(custom_base("bad", {"a", "b"}, skew, vec({0, 0}), 0, {}), Error);
  const BaseSurface ok = custom_base("ok", {"a", "b"}, RationalMatrix::Identity(2, 2), vec({1, 1}), 10, {vec({1, 0}), vec({0, 1})});
  CHECK(ok.c1_squared() == 2);
}

TEST_CASE("dP_k minus-one curves match an independent box enumeration") {
  const int expected[] = {0, 1, 3, 6, 10, 16, 27, 56, 240};
  for (int k = 1; k <= 8; ++k) {
    CHECK(static_cast<int>(minus_one_curves(k).size()) == expected[k]);
  }
  // Brute force for k <= 4 over a generous box with signed multiplicities.
  for (int k = 1; k <= 4; ++k) {
    int count = 0;
    std::vector<int> m(static_cast<std::size_t>(k), -4);
    for (int d = 0; d <= 4; ++d) {
      std::fill(m.begin(), m.end(), -4);
      for (;;) {
        int sum = 0, sq = 0;
        for (int x : m) {
          sum += x;
          sq += x * x;
        }
        // C = dH - sum m_i E_i with C² = -1 and -K·C = 1; irreducible: d>0 and m_i>=0, or C = E_i.
        if (d * d - sq == -1 && 3 * d - sum == 1) {
          bool ok = d > 0 ? std::all_of(m.begin(), m.end(), [](int x) { return x >= 0; }) : true;
          if (d == 0) ok = std::count(m.begin(), m.end(), -1) == 1 && std::count(m.begin(), m.end(), 0) == k - 1;
          if (ok) ++count;
        }
        std::size_t i = 0;
        while (i < m.size() && m[i] == 4) m[i++] = -4;
        if (i == m.size()) break;
        ++m[i];
      }
    }
    CHECK(count == expected[k]);
  }
}

TEST_CASE("effective_check") {
  const BaseSurface p2 = build_base("P2");
  CHECK(effective_check(p2, vec({5})).effective);
  CHECK_FALSE(effective_check(p2, vec({-1})).effective);

  const BaseSurface f2 = build_base("F2");
  const Effectivity e = effective_check(f2, vec({1, 1}));
  CHECK(e.effective);
  CHECK(e.weights == vec({1, 1}));
  const Effectivity n = effective_check(f2, vec({0, -1}));
  CHECK_FALSE(n.effective);
  for (const auto& g : f2.effective_generators) CHECK(n.separator.dot(g) >= 0);
  CHECK(n.separator.dot(vec({0, -1})) < 0);

  // F2 oracle: integral classes C = x b + y f_B with C² in {-2, 0} and C·c1 in {0, 2}
  // in a box; all of them with x, y >= 0 are spanned by {b, f_B}.
  for (int x = -3; x <= 3; ++x) {
    for (int y = -3; y <= 3; ++y) {
      const RationalVector c = vec({x, y});
      const Rational sq = f2.dot(c, c), deg = f2.dot(c, f2.c1);
      if ((sq == -2 || sq == 0) && (deg == 0 || deg == 2) && x >= 0 && y >= 0) {
        CHECK(effective_check(f2, c).effective);
      }
    }
  }

  const BaseSurface dp1 = build_base("dP1");
  CHECK_FALSE(effective_check(dp1, vec({1, -2})).effective);
  CHECK(effective_check(dp1, vec({1, -1})).effective);
  CHECK(effective_check(dp1, vec({1, 0})).effective);

  const BaseSurface enr = build_base("Enriques");
  CHECK(effective_check(enr, enr.positive_cone_reference).effective);
  CHECK_FALSE(effective_check(enr, -enr.positive_cone_reference).effective);

  testing::Rng rng(5);
  for (const char* name : {"P2", "F1", "dP3", "dP6"}) {
    const BaseSurface b = build_base(name);
    for (int t = 0; t < 40; ++t) {
      const RationalVector d1 = rng.vector(b.h11()), d2 = rng.vector(b.h11());
      if (effective_check(b, d1).effective && effective_check(b, d2).effective) {
        CHECK(effective_check(b, d1 + d2).effective);
      }
      const Effectivity r = effective_check(b, d1);
      if (!r.effective) {
        for (const auto& g : b.effective_generators) CHECK(r.separator.dot(g) >= 0);
        CHECK(r.separator.dot(d1) < 0);
      }
    }
  }
}

TEST_CASE("CY3 fibration rings") {
  const FibrationModel x = build_fibration(build_base("P2"));
  const Class t = x.theta_class();
  const Class h = x.pull_divisor(vec({1}));
  CHECK(t * t == Rational(-3) * (t * h));
  CHECK(t * x.fiber_class() == x.point());
  CHECK(integrate(t * t * t) == 9);
  CHECK(h * h == x.fiber_class());
  CHECK(exp_nilpotent(h) == x.one() + h + Rational(1, 2) * x.fiber_class());
  CHECK(x.ring->element(x.theta_pullback[0]).name == "Θ·p*H");

  const FibrationModel f0 = build_fibration(build_base("F0"));
  CHECK(integrate(f0.theta_class() * f0.theta_class() * f0.pull_divisor(vec({1, 0}))) == -2);

  for (const char* name : kCatalog) {
    const FibrationModel m = build_fibration(build_base(name));
    CHECK(!m.ring->associativity_violation());
    CHECK(!m.ring->commutativity_violation());
    CHECK(m.theta_class() * m.theta_class() == -(m.theta_class() * m.kbar()));
  }
}

TEST_CASE("surface fibration rings") {
  const FibrationModel s = build_fibration(BaseCurve{0, 1});
  CHECK(s.theta_class() * s.theta_class() == -s.point());
  const FibrationModel flat = build_fibration(BaseCurve{2, 0});
  CHECK(todd_relative(flat) == flat.one());
  const Class tr = todd_relative(s);
  CHECK(tr == s.one() - Rational(1, 2) * s.fiber_class() + s.point());
  const FibrationModel ex = build_fibration(BaseCurve{1, 2}, {{"X", 1, 0, {Rational(-2)}}, {"Y", 0, 0, {Rational(1), Rational(-2)}}});
  CHECK(!ex.ring->associativity_violation());
  CHECK(integrate(Class::basis(ex.ring, "X") * Class::basis(ex.ring, "Y")) == 1);
  CHECK(integrate(Class::basis(ex.ring, "X") * ex.theta_class()) == 1);
}

TEST_CASE("todd classes and c2") {
  const FibrationModel x = build_fibration(build_base("P2"));
  const Class td = todd_total(x);
  const Class h = x.pull_divisor(vec({1}));
  CHECK(td == x.one() + Rational(3) * (x.theta_class() * h) + Rational(17, 2) * x.fiber_class());
  CHECK(integrate(td) == 0);
  CHECK(todd_relative(x).degree_part(2) == Rational(39, 4) * x.fiber_class() + Rational(3) * (x.theta_class() * h));
  CHECK(c2_tangent(x) == Rational(36) * (x.theta_class() * h) + Rational(102) * x.fiber_class());
  CHECK(sqrt_unit(td) == x.one() + Rational(3, 2) * (x.theta_class() * h) + Rational(17, 4) * x.fiber_class());
  const FibrationModel f0 = build_fibration(build_base("F0"));
  CHECK(c2_tangent(f0)[f0.fiber] == 92);
  CHECK_THROWS_AS(c2_tangent(build_fibration(BaseCurve{0, 1})), Error);

  testing::Rng rng(17);
  for (const char* name : kCatalog) {
    const FibrationModel m = build_fibration(build_base(name));
    const Class t = todd_total(m);
    CHECK(t.degree_part(1).is_zero());
    CHECK(Rational(12) * t.degree_part(2) == c2_tangent(m));
    CHECK(integrate(t) == 0);
    const RationalVector d = rng.vector(m.base_rank());
    CHECK(integrate(c2_tangent(m) * m.pull_divisor(d)) == 12 * m.surface->dot(m.surface->c1, d));
  }
}

TEST_CASE("push and pull") {
  const FibrationModel x = build_fibration(build_base("dP2"));
  const Class t = x.theta_class();
  CHECK(push_to_base(x, t) == Class::one(x.base_ring));
  CHECK(push_to_base(x, x.fiber_class()).is_zero());
  CHECK(push_to_base(x, t * x.pull_divisor(x.surface->unit(0))) == Class::basis(x.base_ring, "H"));
  testing::Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    Class a(x.ring), b(x.base_ring);
    for (std::size_t i = 0; i < x.ring->size(); ++i) a[i] = rng.rational();
    for (std::size_t i = 0; i < x.base_ring->size(); ++i) b[i] = rng.rational();
    CHECK(push_to_base(x, pull_from_base(x, b) * a) == b * push_to_base(x, a));
  }
  const FibrationModel s = build_fibration(BaseCurve{3, 2}, {{"X", 1, 2, {Rational(0)}}});
  for (int trial = 0; trial < 50; ++trial) {
    Class a(s.ring), b(s.base_ring);
    for (std::size_t i = 0; i < s.ring->size(); ++i) a[i] = rng.rational();
    for (std::size_t i = 0; i < s.base_ring->size(); ++i) b[i] = rng.rational();
    CHECK(push_to_base(s, pull_from_base(s, b) * a) == b * push_to_base(s, a));
  }
}
