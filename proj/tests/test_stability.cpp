#include "fmcalc/stability.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace fmcalc;

namespace {

Polynomial poly(std::initializer_list<Rational> c) { return Polynomial(std::vector<Rational>(c)); }

// Ample class on a catalog base surface.
RationalVector ample(const BaseSurface& b) {
  if (b.positive_cone_model) return b.positive_cone_reference;
  if (b.name.rfind("dP", 0) == 0 && b.h11() > 1) return b.c1;
  if (b.name.rfind("F", 0) == 0) {
    RationalVector h(2);
    h << 1, b.pairing(0, 0) * -1 + 1;
    return h;
  }
  return b.unit(0);
}

}  // namespace

TEST_CASE("Hilbert polynomial on an elliptic surface") {
  const FibrationModel X = build_fibration(BaseCurve{0, 1});
  const Class H = X.theta_class() + X.fiber_class();
  const HilbertData h = hilbert_polynomial(X.one(), todd_total(X), H);
  CHECK(h.P == poly({1, Rational(1, 2), Rational(1, 2)}));
  CHECK(h.s == 2);
  CHECK(h.r == 1);
  const ReducedSlope rs = reduced_and_slope(h);
  CHECK(rs.reduced == h.P);
  CHECK(hilbert_polynomial(Class::zero(X.ring), todd_total(X), H).P == Polynomial());
  CHECK(hilbert_polynomial(Rational(2) * X.one(), todd_total(X), H).P == Rational(2) * h.P);
  CHECK_THROWS_AS(reduced_and_slope(hilbert_data(Polynomial())), Error);

  const HilbertData q = hilbert_data(poly({0, 1, Rational(1, 2)}));
  CHECK(q.r == 1);
  CHECK(reduced_and_slope(q).slope == 1);
  const HilbertData two = hilbert_data(Rational(2) * h.P);
  CHECK(reduced_and_slope(two).reduced == h.P);
}

TEST_CASE("polarized rank") {
  const FibrationModel X = build_fibration(BaseCurve{0, 1});
  const Class H = X.theta_class() + X.fiber_class();
  const Class td = todd_total(X);
  CHECK(polarized_rank(X.one(), td, H) == 1);
  CHECK(polarized_rank(X.fiber_class(), td, H) == 1);
  CHECK(polarized_rank(Rational(2) * X.fiber_class() + Rational(5) * X.point(), td, H) == 2);
  CHECK_THROWS_AS(polarized_rank(X.fiber_class(), td, X.fiber_class()), Error);

  testing::Rng rng(67);
  for (const char* name : {"P2", "F0", "F1", "F2", "F3", "dP1", "dP2", "dP3", "dP4", "dP5", "dP6", "dP7", "dP8", "Enriques"}) {
    const BaseSurface b = build_base(name);
    const RingPtr ring = surface_ring(b);
    const Class td = surface_todd(b, ring);
    Class Hs(ring);
    const RationalVector h = ample(b);
    for (Eigen::Index i = 0; i < b.h11(); ++i) Hs[static_cast<std::size_t>(1 + i)] = h[i];
    REQUIRE(integrate(Hs * Hs) > 0);
    CHECK(integrate(td) == 1);
    for (int t = 0; t < 10; ++t) {
      Class ch(ring);
      for (std::size_t i = 0; i < ring->size(); ++i) ch[i] = rng.rational();
      if (ch[0] == 0) ch[0] = 1;
      CHECK(polarized_rank(ch, td, Hs) == ch[0]);
      CHECK(hilbert_polynomial(ch, td, Hs).r == ch[0] * integrate(Hs * Hs));
    }
  }
  for (int e = 0; e <= 3; ++e) {
    const FibrationModel S = build_fibration(BaseCurve{1, e});
    const Class Hs = S.theta_class() + Rational(e + 1) * S.fiber_class();
    for (int t = 0; t < 10; ++t) {
      const Rational n = rng.integer(1, 5);
      const Class ch = n * S.one() + rng.rational() * S.theta_class() + rng.rational() * S.point();
      CHECK(polarized_rank(ch, todd_total(S), Hs) == n);
    }
  }
}

TEST_CASE("poly_compare") {
  CHECK(poly_compare(poly({1, 0, Rational(1, 2)}), poly({0, 1, Rational(1, 2)})) == std::strong_ordering::less);
  CHECK(poly_compare(poly({1, 2}), poly({1, 2})) == std::strong_ordering::equal);
  CHECK(poly_compare(poly({0, 0, 1}), poly({0, 1000000, Rational(1, 2)})) == std::strong_ordering::greater);
  testing::Rng rng(71);
  for (int t = 0; t < 300; ++t) {
    std::vector<Rational> a(static_cast<std::size_t>(rng.integer(0, 4))), b(static_cast<std::size_t>(rng.integer(0, 4)));
    for (auto& x : a) x = rng.rational();
    for (auto& x : b) x = rng.rational();
    const Polynomial p(a), q(b);
    const Polynomial d = p - q;
    Rational bound = 1;
    for (const auto& c : d.coeffs) bound += abs(c);
    if (!d.coeffs.empty()) bound /= abs(d.coeffs.back());
    const Rational m = bound + 1;
    const auto order = poly_compare(p, q);
    if (order == std::strong_ordering::equal) CHECK(p(m) == q(m));
    if (order == std::strong_ordering::less) CHECK(p(m) < q(m));
    if (order == std::strong_ordering::greater) CHECK(p(m) > q(m));
  }
}

TEST_CASE("transformed Hilbert line equals the HRR pipeline") {
  const TransformedLine ex = transformed_hilbert_line(2, 0, 0, {1, 2}, 1, 5);
  CHECK(ex.line == poly({0, 8}));
  CHECK(ex.slope == Rational(0));
  const TransformedLine b1 = transformed_hilbert_line(2, 3, 1, {1, 2}, 1, 6);
  CHECK(b1.line.coeff(1) - transformed_hilbert_line(2, 3, 1, {1, 2}, 1, 5).line.coeff(1) == 2);

  testing::Rng rng(73);
  for (int t = 0; t < 200; ++t) {
    const int g = rng.integer(0, 3), e = rng.integer(0, 4);
    const FibrationModel X = build_fibration(BaseCurve{g, e});
    const Rational n = rng.integer(1, 5), c = rng.rational(), s = rng.rational();
    const Rational a = rng.integer(1, 4), b = rng.integer(1, 12);
    const ChernData2 F{n, c * X.fiber_class(), s};
    // F̂ is the degree-1 transform: ch(F̂) = -ch(S(F)).
    const ChernData2 Fhat = -fm_surface(F, X, Direction::Forward);
    const Class H = a * X.theta_class() + b * X.fiber_class();
    const HilbertData h = hilbert_polynomial(Fhat, X, H);
    const TransformedLine line = transformed_hilbert_line(n, c, s, {e, 2 - 2 * g}, a, b);
    CHECK(h.P == line.line);
    if (line.slope && h.r != 0) CHECK(reduced_and_slope(h).slope == *line.slope);
  }
}

TEST_CASE("spectral surface invariants") {
  const SpectralSurfaceInvariants v = spectral_surface_invariants(2, 2, 1, {1, 2});
  CHECK(v.rank == 2);
  CHECK(v.d == 0);
  CHECK(v.c == 1);
  CHECK(v.s == -4);
  CHECK(spectral_surface_invariants(3, -3, 0, {1, 2}).s == 0);
  CHECK_THROWS_AS(spectral_surface_invariants(0, 1, 1, {1, 2}), Error);

  // Transforming back must reproduce a sheaf on a spectral curve: ch0 = 0,
  // C·f = n, C·Θ = ℓ, χ = r.
  testing::Rng rng(79);
  for (int t = 0; t < 100; ++t) {
    const int g = rng.integer(0, 3), e = rng.integer(0, 4);
    const FibrationModel X = build_fibration(BaseCurve{g, e});
    const Rational n = rng.integer(1, 5), ell = rng.integer(-6, 6), r = rng.integer(-6, 6);
    const SpectralSurfaceInvariants inv = spectral_surface_invariants(n, ell, r, {e, 2 - 2 * g});
    const ChernData2 F{inv.rank, inv.c * X.fiber_class(), inv.s};
    const ChernData2 L = -fm_surface(F, X, Direction::Forward);
    CHECK(L.n == 0);
    CHECK(L.d() == n);
    CHECK(L.c() == ell);
    CHECK(integrate(to_class(X, L) * todd_total(X)) == r);
  }
}

TEST_CASE("empirical b0 helper") {
  const std::vector<SubobjectInvariants> subs{{1, 0, 0}, {1, 1, -1}};
  const int b0 = empirical_b0(2, 1, 0, subs, {1, 2}, 1, 60);
  CHECK(b0 >= 1);
  CHECK(b0 <= 60);
  CHECK(empirical_b0(2, 1, 0, {}, {1, 2}, 1, 10) == 1);
}
