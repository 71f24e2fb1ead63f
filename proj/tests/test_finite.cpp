#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace tarski;

namespace {

FiniteModel one_point() {
  return parse_model("points 1\nbet 0 0 0\ncong 0 0 0 0\n");
}

// two-element universe with every degenerate triple between and congruence
// by equality of the two possible distances
FiniteModel two_point() {
  FiniteModel m;
  m.size = 2;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int l = 0; l < 2; ++l)
        if (i == j || j == l) m.bet_triples.insert({i, j, l});
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int l = 0; l < 2; ++l)
        for (int n = 0; n < 2; ++n)
          if ((i == j) == (l == n)) m.cong_quads.insert({i, j, l, n});
  return m;
}

FiniteModel random_model(SplitMix64& g) {
  FiniteModel m;
  m.size = static_cast<int>(g.range(1, 5));
  long triples = g.range(0, 10);
  for (long i = 0; i < triples; ++i)
    m.bet_triples.insert({static_cast<int>(g.below(m.size)), static_cast<int>(g.below(m.size)),
                          static_cast<int>(g.below(m.size))});
  long quads = g.range(0, 10);
  for (long i = 0; i < quads; ++i)
    m.cong_quads.insert({static_cast<int>(g.below(m.size)), static_cast<int>(g.below(m.size)),
                         static_cast<int>(g.below(m.size)), static_cast<int>(g.below(m.size))});
  return m;
}

}  // namespace

TEST_CASE("parsing the line format") {
  FiniteModel m = one_point();
  REQUIRE(m.size == 1);
  REQUIRE(m.bet(0, 0, 0));
  REQUIRE(m.cong(0, 0, 0, 0));

  FiniteModel with_comments = parse_model(
      "# demo\npoints 2  # universe size\n\nbet 0 0 1\ncong 0 1 1 0  # trailing\n");
  REQUIRE(with_comments.size == 2);
  REQUIRE(with_comments.bet(0, 0, 1));
  REQUIRE(with_comments.cong(0, 1, 1, 0));
}

TEST_CASE("parse errors carry line numbers") {
  try {
    parse_model("points 2\nbet 0 5 0\n");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    REQUIRE(e.line == 2);
  }
  REQUIRE_THROWS_AS(parse_model("points 2\npoints 3\n"), parse_error);
  REQUIRE_THROWS_AS(parse_model("bet 0 0 0\n"), parse_error);
  REQUIRE_THROWS_AS(parse_model("points 0\n"), parse_error);
  REQUIRE_THROWS_AS(parse_model("points 2\nfoo 1\n"), parse_error);
  REQUIRE_THROWS_AS(parse_model("points 2\nbet 0 0 0 0\n"), parse_error);
  REQUIRE_THROWS_AS(parse_model("points 2\nbet 0 0\n"), parse_error);
  REQUIRE_THROWS_AS(parse_model(""), parse_error);
}

TEST_CASE("serialization round trip") {
  for (long t = 0; t < 60; ++t) {
    SplitMix64 g(derive_stream(401, static_cast<std::uint64_t>(t)));
    FiniteModel m = random_model(g);
    std::string text = serialize_model(m);
    REQUIRE(parse_model(text) == m);
    REQUIRE(serialize_model(parse_model(text)) == text);  // byte-identical
  }
}

TEST_CASE("one-point model axiom profile") {
  FiniteBinding b(one_point(), "finite:one_point");
  for (AxiomId ax : {AxiomId::A0, AxiomId::A1, AxiomId::A2p, AxiomId::A3, AxiomId::A4,
                     AxiomId::A7, AxiomId::A14, AxiomId::A15}) {
    CheckReport r = exhaustive_check(ax, b);
    CAPTURE(axiom_name(ax));
    REQUIRE(r.status == CheckStatus::pass);
    REQUIRE(r.mode == CheckMode::exhaustive);
  }
  CheckReport a8 = exhaustive_check(AxiomId::A8, b);
  REQUIRE(a8.status == CheckStatus::fail);
  REQUIRE(a8.certificate.has_value());
  REQUIRE(a8.certificate->points.empty());  // no universal prefix
  REQUIRE(a8.certificate->evidence ==
          std::vector<std::string>{"witness_search=exhausted", "universe_size=1"});
}

TEST_CASE("two-point model fails the lower-dimension axiom") {
  FiniteBinding b(two_point(), "finite:two_point");
  for (AxiomId ax : {AxiomId::A1, AxiomId::A2p, AxiomId::A3, AxiomId::A14})
    REQUIRE(exhaustive_check(ax, b).status == CheckStatus::pass);
  REQUIRE(exhaustive_check(AxiomId::A8, b).status == CheckStatus::fail);
}

TEST_CASE("exhaustive checking is deterministic") {
  FiniteModel m = two_point();
  CheckReport r1 = check_exhaustive(m, AxiomId::A8);
  CheckReport r2 = check_exhaustive(m, AxiomId::A8);
  REQUIRE(report_structured(r1) == report_structured(r2));
  REQUIRE(r1.certificate == r2.certificate);
}

TEST_CASE("certificates replay through the evaluator") {
  FiniteModel broken;  // betweenness that is not symmetric
  broken.size = 2;
  broken.bet_triples.insert({0, 1, 1});
  FiniteBinding b(broken, "finite:asym");
  CheckReport r = exhaustive_check(AxiomId::A14, b);
  REQUIRE(r.status == CheckStatus::fail);
  REQUIRE(r.certificate.has_value());
  REQUIRE(r.certificate->points == std::vector<std::string>{"0", "1", "1"});
  REQUIRE(verify_certificate(*r.certificate, b));

  Certificate tampered = *r.certificate;
  tampered.points[2] = "0";
  REQUIRE_FALSE(verify_certificate(tampered, b));
}

TEST_CASE("continuity schemas are rejected") {
  FiniteBinding b(one_point(), "finite:one_point");
  REQUIRE_THROWS_AS(exhaustive_check(AxiomId::A11, b), not_checkable_error);
  REQUIRE_THROWS_AS(check_exhaustive(one_point(), AxiomId::A11p), not_checkable_error);
}

TEST_CASE("decidability of equality holds in any finite model") {
  for (long t = 0; t < 20; ++t) {
    SplitMix64 g(derive_stream(402, static_cast<std::uint64_t>(t)));
    FiniteBinding b(random_model(g), "finite:random");
    REQUIRE(exhaustive_check(AxiomId::A0, b).status == CheckStatus::pass);
  }
}
