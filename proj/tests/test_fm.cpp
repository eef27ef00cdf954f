#include "fmcalc/fm.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace fmcalc;

namespace {

ChernData3 random_chern3(testing::Rng& rng, Eigen::Index r) {
  return {rng.rational(), rng.rational(), rng.vector(r), rng.vector(r), rng.rational(), rng.rational()};
}

ChernData2 random_chern2(testing::Rng& rng, const FibrationModel& X) {
  Class c1(X.ring);
  for (std::size_t i = 0; i < X.ring->size(); ++i) {
    if (X.ring->element(i).degree == 1) c1[i] = rng.rational();
  }
  return {rng.rational(), c1, rng.rational()};
}

const char* const kBases[] = {"P2", "F0", "F1", "F2", "F3", "dP1", "dP2", "dP3", "dP4", "dP5", "dP6", "dP7", "dP8"};

}  // namespace

TEST_CASE("point and section values") {
  const FibrationModel X = build_fibration(build_base("P2"));
  const ChernData3 pt_image = fm_cy3(ChernData3::point(1), X, Direction::Forward);
  ChernData3 fiber = ChernData3::zero(1);
  fiber.a = 1;
  CHECK(pt_image == fiber);
  ChernData3 unit = ChernData3::zero(1);
  unit.n = 1;
  CHECK(fm_cy3(ChernData3::section(X), X, Direction::Forward) == unit);
  CHECK(fm_cy3(ChernData3::zero(1), X, Direction::Forward) == ChernData3::zero(1));
  CHECK(grr_transform(ChernData3::point(1), X) == fiber);
  CHECK(grr_transform(ChernData3::section(X), X) == unit);
  CHECK(fm_roundtrip_check(unit, X));
  CHECK(fm_roundtrip_check(ChernData3::point(1), X));
}

TEST_CASE("CY3 closed formulas against the GRR evaluator") {
  testing::Rng rng(101);
  for (const char* name : kBases) {
    const FibrationModel X = build_fibration(build_base(name));
    for (int t = 0; t < 30; ++t) {
      const ChernData3 E = random_chern3(rng, X.base_rank());
      CHECK(grr_transform(E, X) == fm_cy3(E, X, Direction::Forward));
      CHECK(grr_inverse(E, X) == fm_cy3(E, X, Direction::Inverse));
      CHECK(fm_roundtrip_check(E, X));
      CHECK(fm_cy3(fm_cy3(E, X, Direction::Inverse), X, Direction::Forward) == -E);
      const RelativeInvariants ri = relative_invariants(E, X);
      const RelativeInvariants ro = relative_invariants(fm_cy3(E, X, Direction::Forward), X);
      CHECK(ro == RelativeInvariants{ri.degree, -ri.rank});
    }
  }
}

TEST_CASE("extra ch3 term in the inverse leaves a residue") {
  const FibrationModel X = build_fibration(build_base("P2"));
  testing::Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    const ChernData3 E = random_chern3(rng, 1);
    const ChernData3 back = fm_cy3_inverse_extra_term(fm_cy3(E, X, Direction::Forward), X);
    ChernData3 expected = -E;
    expected.s -= E.n * 9;
    CHECK(back == expected);
  }
}

TEST_CASE("linearity") {
  testing::Rng rng(19);
  const FibrationModel X = build_fibration(build_base("dP3"));
  for (int t = 0; t < 30; ++t) {
    const ChernData3 A = random_chern3(rng, 4), B = random_chern3(rng, 4);
    const Rational al = rng.rational(), be = rng.rational();
    for (Direction d : {Direction::Forward, Direction::Inverse}) {
      CHECK(fm_cy3(al * A + be * B, X, d) == al * fm_cy3(A, X, d) + be * fm_cy3(B, X, d));
    }
  }
}

TEST_CASE("surface transforms") {
  testing::Rng rng(23);
  for (int g = 0; g <= 2; ++g) {
    for (int e = 0; e <= 3; ++e) {
      const FibrationModel S = build_fibration(BaseCurve{g, e}, {{"X", 0, 0, {Rational(-2)}}, {"Y", 1, 1, {Rational(1), Rational(-1)}}});
      for (int t = 0; t < 40; ++t) {
        const ChernData2 E = random_chern2(rng, S);
        const ChernData2 F = fm_surface(E, S, Direction::Forward);
        CHECK(F == grr_transform(E, S));
        CHECK(fm_surface(E, S, Direction::Inverse) == grr_inverse(E, S));
        CHECK(fm_roundtrip_check(E, S));
        CHECK(relative_invariants(F, S) == RelativeInvariants{E.d(), -E.n});
        if (E.d() != 0 && F.d() != 0) CHECK(F.d() / F.n == -E.n / E.d());
      }
    }
  }
  const FibrationModel S = build_fibration(BaseCurve{0, 1});
  const ChernData2 E{2, Rational(3) * S.fiber_class() + Rational(1) * S.theta_class() + Rational(-1) * S.theta_class(), 0};
  CHECK(relative_invariants(E, S) == RelativeInvariants{2, 0});
  const ChernData2 E2{2, Rational(3) * S.theta_class(), 0};
  CHECK(relative_invariants(fm_surface(E2, S, Direction::Forward), S) == RelativeInvariants{3, -2});
  const ChernData2 zero{0, Class::zero(S.ring), 0};
  CHECK(fm_surface(zero, S, Direction::Forward) == zero);
  CHECK_THROWS_AS(fm_surface(zero, build_fibration(build_base("P2")), Direction::Forward), Error);
}

TEST_CASE("WIT advisory") {
  CHECK(wit_sign_check(1, 1) == WitAdvice::Wit0Compatible);
  CHECK(wit_sign_check(1, -1) == WitAdvice::Wit1Compatible);
  CHECK(wit_sign_check(1, 0) == WitAdvice::ConditionalWit1);
  CHECK_THROWS_AS(wit_sign_check(-1, 0), Error);
}

TEST_CASE("line twists and relative push-pull") {
  const FibrationModel X = build_fibration(build_base("P2"));
  const Class H = X.pull_divisor(X.surface->unit(0));
  ChernData3 unit = ChernData3::zero(1);
  unit.n = 1;
  const ChernData3 tw = line_twist(unit, X, H);
  CHECK(tw.a == Rational(1, 2));
  CHECK(line_twist(unit, X, Class::zero(X.ring)) == unit);
  testing::Rng rng(31);
  for (int t = 0; t < 20; ++t) {
    const ChernData3 E = random_chern3(rng, 1);
    Class D(X.ring);
    D[X.theta] = rng.rational();
    D[X.pullback[0]] = rng.rational();
    CHECK(line_twist(line_twist(E, X, D), X, -D) == E);
    CHECK(relative_pushpull(E, X).x == 0);
  }
  // p_*(td_rel) = c1 - (c1²/2) pt_B: only the Θ-carrying terms survive.
  const ChernData3 pp = relative_pushpull(unit, X);
  const Class direct = pull_from_base(X, push_to_base(X, todd_relative(X)));
  CHECK(to_class(X, pp) == direct);
  CHECK(pp.n == 0);
  CHECK(pp.S == X.surface->c1);
  CHECK(pp.a == Rational(-9, 2));
  ChernData3 fiber = ChernData3::zero(1);
  fiber.a = 1;
  CHECK(relative_pushpull(ChernData3::point(1), X) == fiber);
}

TEST_CASE("four-factor factorisation") {
  testing::Rng rng(37);
  for (const char* name : kBases) {
    const FibrationModel X = build_fibration(build_base(name));
    for (int t = 0; t < 10; ++t) {
      const FactorizationReport r = factorization_check(random_chern3(rng, X.base_rank()), X);
      CHECK(r.status == FactorizationStatus::EqualUpToConvention);
    }
  }
}
