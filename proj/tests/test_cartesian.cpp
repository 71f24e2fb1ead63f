#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace tarski;
using testutil::P;
using testutil::q;

TEST_CASE("congruence compares squared norms exactly") {
  REQUIRE(cong(P("0,0"), P("3,4"), P("0,0"), P("5,0")));
  REQUIRE(cong(P("0,0"), P("1,0"), P("0,0"), P("0,1")));
  REQUIRE(norm2(P("1,1") - P("0,0")) == Scalar(2));
  REQUIRE(norm2(P("2,0") - P("0,0")) == Scalar(4));
  REQUIRE_FALSE(cong(P("0,0"), P("1,1"), P("0,0"), P("2,0")));
  REQUIRE_THROWS_AS(cong(P("0,0"), P("1,0"), P("0,0,0"), P("1,0,0")), std::invalid_argument);
}

TEST_CASE("ratio picks the first nonzero denominator index") {
  REQUIRE(ratio(P("1,2"), P("2,4")) == q(1, 2));
  REQUIRE(ratio(P("5,5"), P("0,0")) == Scalar(0));
  REQUIRE(ratio(P("1,7"), P("0,2")) == q(7, 2));
}

TEST_CASE("betweenness") {
  REQUIRE(bet(P("0,0"), P("1,1"), P("2,2")));
  REQUIRE(betR(P("0,0"), P("1,1"), P("2,2")) == q(1, 2));
  REQUIRE(bet(P("0,0"), P("0,0"), P("9,3")));  // a = b
  REQUIRE(betE(P("0,0"), P("0,0"), P("9,3")));
  REQUIRE_FALSE(betS(P("0,0"), P("2,2"), P("1,1")));  // ratio 2 exceeds 1
  REQUIRE(betR(P("0,0"), P("2,2"), P("1,1")) == Scalar(2));

  // betS means the ratio equation holds in every coordinate
  REQUIRE_FALSE(betS(P("0,0"), P("1,2"), P("2,2")));
}

TEST_CASE("segment construction witness") {
  Vec e = seg_construct_witness(P("0,0"), P("1,0"), P("0,0"), P("3,4"));
  REQUIRE(e == P("6,0"));
  REQUIRE(betR(P("0,0"), P("1,0"), e) == q(1, 6));
  REQUIRE(norm2(e - P("1,0")) == Scalar(25));

  REQUIRE(seg_construct_witness(P("0,0"), P("1,0"), P("2,3"), P("2,3")) == P("1,0"));

  Vec degenerate = seg_construct_witness(P("0,0"), P("0,0"), P("0,0"), P("0,2"));
  REQUIRE(degenerate == P("2,0"));
  REQUIRE(bet(P("0,0"), P("0,0"), degenerate));
  REQUIRE(cong(P("0,0"), degenerate, P("0,0"), P("0,2")));
}

TEST_CASE("segment construction satisfies both postconditions on random input") {
  CartesianModel cart(2, 50);
  for (long t = 0; t < 200; ++t) {
    SplitMix64 g(derive_stream(201, static_cast<std::uint64_t>(t)));
    Vec a = cart.random_point(g);
    Vec b = g.chance(1, 10) ? a : cart.random_point(g);
    Vec c = cart.random_point(g);
    Vec d = cart.random_point(g);
    Vec e = seg_construct_witness(a, b, c, d);
    CAPTURE(a.str(), b.str(), c.str(), d.str(), e.str());
    REQUIRE(bet(a, b, e));
    REQUIRE(cong(b, e, c, d));
  }
}

TEST_CASE("inner-Pasch witness") {
  PaschWitness w = pasch_witness(P("0,0"), P("0,2"), P("2,0"), P("1,0"), P("1,1"));
  REQUIRE(w.x == P("2/3,2/3"));
  REQUIRE(w.k3 == q(1, 3));
  REQUIRE(w.k4 == q(1, 3));
  REQUIRE(bet(P("1,0"), w.x, P("0,2")));
  REQUIRE(bet(P("1,1"), w.x, P("0,0")));

  // second worked configuration: k1 = 1/3, k2 = 2/3
  PaschWitness w2 = pasch_witness(P("0,0"), P("0,3"), P("3,0"), P("1,0"), P("2,1"));
  REQUIRE(w2.k3 == q(1, 7));
  REQUIRE(w2.k4 == q(4, 7));
  // both parametric expressions locate the same point
  REQUIRE(w2.x == P("1,0") + w2.k3 * (P("0,3") - P("1,0")));
  REQUIRE(w2.x == P("2,1") + w2.k4 * (P("0,0") - P("2,1")));

  REQUIRE_THROWS_AS(pasch_witness(P("0,0"), P("0,2"), P("2,0"), P("2,0"), P("1,1")),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(pasch_witness(P("0,0"), P("1,1"), P("2,2"), P("1,1"), P("3,3")),
                    std::invalid_argument);
}

TEST_CASE("pasch witness symmetry and agreement of both parametrizations") {
  CartesianModel cart(2, 40);
  for (long t = 0; t < 200; ++t) {
    SplitMix64 g(derive_stream(202, static_cast<std::uint64_t>(t)));
    auto pts = cart.generate(AxiomId::A7p, g);
    REQUIRE(pts);
    const Vec &a = (*pts)[0], &b = (*pts)[1], &c = (*pts)[2], &p = (*pts)[3], &x = (*pts)[4];
    PaschWitness w = pasch_witness(a, b, c, p, x);
    REQUIRE(w.x == p + w.k3 * (b - p));
    REQUIRE(w.x == x + w.k4 * (a - x));
    REQUIRE(bet(p, w.x, b));
    REQUIRE(bet(x, w.x, a));
  }
  // swapping k1 and k2 swaps k3 and k4: (k1,k2) = (1/4,3/4) against (3/4,1/4)
  PaschWitness s1 = pasch_witness(P("0,0"), P("0,4"), P("4,0"), P("1,0"), P("3,1"));
  PaschWitness s2 = pasch_witness(P("0,0"), P("0,4"), P("4,0"), P("3,0"), P("1,3"));
  REQUIRE(s1.k3 == s2.k4);
  REQUIRE(s1.k4 == s2.k3);
  // equal ratios give equal interior coefficients
  PaschWitness sym = pasch_witness(P("0,0"), P("0,4"), P("4,0"), P("1,0"), P("1,3"));
  REQUIRE(sym.k3 == sym.k4);
}

TEST_CASE("betweenness transitivity ratio") {
  REQUIRE(transitivity_ratio(q(1, 2), q(1, 2)) == q(2, 3));
  REQUIRE(transitivity_ratio(q(1, 4), q(1, 2)) == q(2, 5));
  // coordinate check: a = (0,0), d = (4,0), b = a + 1/2 (d-a), c = b + 1/2 (d-b)
  Vec a = P("0,0"), d = P("4,0");
  Vec b = a + q(1, 2) * (d - a);
  Vec c = b + q(1, 2) * (d - b);
  REQUIRE(b == P("2,0"));
  REQUIRE(c == P("3,0"));
  REQUIRE(betR(a, b, c) == q(2, 3));

  for (long t = 0; t < 100; ++t) {
    SplitMix64 g(derive_stream(203, static_cast<std::uint64_t>(t)));
    Scalar k1(random_ratio_open(g, 50));
    Scalar k2(random_ratio_open(g, 50));
    Scalar k = transitivity_ratio(k1, k2);
    REQUIRE(Scalar(0) < k);
    REQUIRE(k < Scalar(1));
  }
  REQUIRE_THROWS_AS(transitivity_ratio(Scalar(0), q(1, 2)), std::invalid_argument);
  REQUIRE_THROWS_AS(transitivity_ratio(q(1, 2), Scalar(1)), std::invalid_argument);
}

TEST_CASE("Euclid witness pair") {
  EuclidWitness w = euclid_witnesses(P("0,0"), P("0,1"), P("1,0"), P("1/2,1/2"), P("1,1"));
  REQUIRE(w.x == P("0,2"));
  REQUIRE(w.y == P("2,0"));
  // t - x = k2 (y - x) with k2 = 1/2
  REQUIRE(P("1,1") - w.x == q(1, 2) * (w.y - w.x));
  REQUIRE(bet(P("0,0"), P("0,1"), w.x));
  REQUIRE(bet(P("0,0"), P("1,0"), w.y));
  REQUIRE(bet(w.x, P("1,1"), w.y));

  EuclidWitness w2 = euclid_witnesses(P("0,0"), P("1,0"), P("0,2"), P("2/3,2/3"), P("2,2"));
  REQUIRE(w2.x == P("3,0"));
  REQUIRE(w2.y == P("0,6"));
  REQUIRE(P("2,2") - w2.x == q(1, 3) * (w2.y - w2.x));

  // d = t is non-strict and rejected
  REQUIRE_THROWS_AS(euclid_witnesses(P("0,0"), P("0,1"), P("1,0"), P("1,1"), P("1,1")),
                    std::invalid_argument);
}

TEST_CASE("midpoint, perpendicularity at the midpoint, 2d collinearity") {
  REQUIRE(midpoint(P("0,0"), P("2,0")) == P("1,0"));
  REQUIRE(cong_perp_check(P("1,1"), P("0,0"), P("2,0")));
  REQUIRE(cong(P("1,1"), P("0,0"), P("1,1"), P("2,0")));
  REQUIRE_FALSE(cong_perp_check(P("2,1"), P("0,0"), P("2,0")));
  REQUIRE(col_2d(P("0,0"), P("1,1"), P("2,2")));
  REQUIRE_FALSE(col_2d(P("0,0"), P("0,1"), P("1,0")));
}

TEST_CASE("lower-dimension witness triple") {
  LowerDimWitness w = lower_dim_witness();
  REQUIRE(w.a == P("0,0"));
  REQUIRE(w.b == P("0,1"));
  REQUIRE(w.c == P("1,0"));
  REQUIRE_FALSE(bet(w.a, w.b, w.c));
  REQUIRE_FALSE(bet(w.b, w.c, w.a));
  REQUIRE_FALSE(bet(w.c, w.a, w.b));
  REQUIRE_FALSE(col_2d(w.a, w.b, w.c));
}

TEST_CASE("parallelism and line intersection") {
  REQUIRE(par_2d(P("0,0"), P("1,0"), P("0,1"), P("1,1")));
  REQUIRE_FALSE(par_2d(P("0,0"), P("1,0"), P("0,0"), P("1,1")));
  REQUIRE(par_2d(P("0,0"), P("1,0"), P("2,0"), P("3,0")));  // coincident
  REQUIRE_THROWS_AS(par_2d(P("0,0"), P("0,0"), P("0,1"), P("1,1")), std::invalid_argument);

  REQUIRE_FALSE(line_intersection_2d(P("0,0"), P("1,0"), P("0,1"), P("1,1")).has_value());
  auto y = line_intersection_2d(P("0,0"), P("1,1"), P("0,2"), P("2,0"));
  REQUIRE(y.has_value());
  REQUIRE(*y == P("1,1"));
  REQUIRE(col(P("0,0"), P("1,1"), *y));
  REQUIRE(col(P("0,2"), P("2,0"), *y));
  // coincident lines share every point; the representative is on both
  auto shared = line_intersection_2d(P("0,0"), P("2,0"), P("1,0"), P("3,0"));
  REQUIRE(shared.has_value());
  REQUIRE(col(P("1,0"), P("3,0"), *shared));
}

TEST_CASE("four-point ring configuration in dimension 4") {
  A9nCounterexample w = a9n_counterexample(4);
  REQUIRE(w.ring.size() == 4);
  REQUIRE(w.ring[0] == P("0,1,0,0"));
  REQUIRE(w.ring[1] == P("-1,0,0,0"));
  REQUIRE(w.ring[2] == P("0,-1,0,0"));
  REQUIRE(w.ring[3] == P("1,0,0,0"));
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = i + 1; j < 4; ++j) REQUIRE_FALSE(w.ring[i] == w.ring[j]);
  for (size_t i = 1; i < 4; ++i) {
    REQUIRE(cong(w.a, w.ring[0], w.a, w.ring[i]));
    REQUIRE(cong(w.b, w.ring[0], w.b, w.ring[i]));
    REQUIRE(cong(w.c, w.ring[0], w.c, w.ring[i]));
  }
  for (size_t i = 0; i < 4; ++i) REQUIRE(norm2(w.ring[i] - w.b) == Scalar(2));
  REQUIRE_FALSE(bet(w.a, w.b, w.c));
  REQUIRE_FALSE(bet(w.b, w.c, w.a));
  REQUIRE_FALSE(bet(w.c, w.a, w.b));
  REQUIRE_FALSE(col(w.a, w.b, w.c));
  REQUIRE_THROWS_AS(a9n_counterexample(5), std::invalid_argument);
}

TEST_CASE("rational rotations preserve congruence") {
  Rotation2 id = rational_rotation(Scalar(0));
  REQUIRE(id.c == Scalar(1));
  REQUIRE(id.s == Scalar(0));
  Rotation2 quarter = rational_rotation(Scalar(1));
  REQUIRE(quarter.m00() == Scalar(0));
  REQUIRE(quarter.m01() == Scalar(-1));
  REQUIRE(quarter.m10() == Scalar(1));
  REQUIRE(quarter.m11() == Scalar(0));

  CartesianModel cart(2, 50);
  for (long t = 0; t < 200; ++t) {
    SplitMix64 g(derive_stream(204, static_cast<std::uint64_t>(t)));
    Rotation2 rot = rational_rotation(Scalar(random_rational(g, 50)));
    REQUIRE(rot.c * rot.c + rot.s * rot.s == Scalar(1));
    Vec p = cart.random_point(g);
    Vec x = cart.random_point(g);
    Vec shift = cart.random_point(g);
    REQUIRE(cong(p, x, apply_isometry(rot, shift, p), apply_isometry(rot, shift, x)));
  }
}

TEST_CASE("cosine rule holds exactly") {
  CartesianModel cart(2, 100);
  for (long t = 0; t < 500; ++t) {
    SplitMix64 g(derive_stream(205, static_cast<std::uint64_t>(t)));
    Vec a = cart.random_point(g);
    Vec b = cart.random_point(g);
    Vec c = cart.random_point(g);
    REQUIRE(norm2(c - b) == norm2(c - a) + norm2(b - a) - Scalar(2) * dot(b - a, c - a));
  }
}

TEST_CASE("betweenness properties") {
  CartesianModel cart(2, 60);
  for (long t = 0; t < 200; ++t) {
    SplitMix64 g(derive_stream(206, static_cast<std::uint64_t>(t)));
    Vec a = cart.random_point(g);
    Vec c = cart.random_point(g);
    REQUIRE(bet(a, a, c));
    REQUIRE(bet(a, c, c));
    Vec b = a + Scalar(random_ratio_closed(g, 60)) * (c - a);
    REQUIRE(bet(a, b, c));
    REQUIRE(bet(c, b, a));  // symmetry
    if (betS(a, b, c)) {
      Ratio r = betR(a, b, c);
      REQUIRE(b - a == r * (c - a));
    }
  }
}

TEST_CASE("algebraic and betweenness collinearity agree in dimension 2") {
  CartesianModel cart(2, 40);
  for (long t = 0; t < 200; ++t) {
    SplitMix64 g(derive_stream(207, static_cast<std::uint64_t>(t)));
    Vec a = cart.random_point(g);
    Vec b = cart.random_point(g);
    Vec c = g.chance(1, 2) ? a + Scalar(random_rational(g, 40)) * (b - a)
                           : cart.random_point(g);
    CAPTURE(a.str(), b.str(), c.str());
    REQUIRE(col(a, b, c) == col_2d(a, b, c));
  }
}

TEST_CASE("perpendicular bisector chain behind the upper-dimension axiom") {
  // each sampled equidistant point forms a right angle at the midpoint of
  // p-q, and the three of them land on one line
  CartesianModel cart(2, 50);
  for (long t = 0; t < 100; ++t) {
    SplitMix64 g(derive_stream(209, static_cast<std::uint64_t>(t)));
    auto pts = cart.generate(AxiomId::A9p, g);
    REQUIRE(pts);
    const Vec &a = (*pts)[0], &b = (*pts)[1], &c = (*pts)[2], &p = (*pts)[3], &q = (*pts)[4];
    REQUIRE(cong(a, p, a, q));
    REQUIRE(cong_perp_check(a, p, q));
    REQUIRE(cong_perp_check(b, p, q));
    REQUIRE(cong_perp_check(c, p, q));
    REQUIRE(col_2d(a, b, c));
    REQUIRE(evaluate_instance(AxiomId::A9p, cart, *pts).outcome == Outcome::conclusion_true);
  }
}

TEST_CASE("interior-point lemma for combined ratios") {
  // for 0 < k1 < 1, 0 < k2, 0 < k3 < k1+k2-k1*k2 and
  // b-a = (k3/(k1+k2-k1*k2))(c-a), the point b lies between a and c
  CartesianModel cart(2, 30);
  for (long t = 0; t < 200; ++t) {
    SplitMix64 g(derive_stream(208, static_cast<std::uint64_t>(t)));
    Scalar k1(random_ratio_open(g, 30));
    Scalar k2 = Scalar(random_rational(g, 30)).abs() + Scalar(random_ratio_open(g, 30));
    Scalar denom = k1 + k2 - k1 * k2;
    Scalar k3 = Scalar(random_ratio_open(g, 30)) * denom;
    Vec a = cart.random_point(g);
    Vec c = cart.random_point(g);
    Vec b = a + (k3 / denom) * (c - a);
    CAPTURE(to_string(k1), to_string(k2), to_string(k3));
    REQUIRE(bet(a, b, c));
  }
}
