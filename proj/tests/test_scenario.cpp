#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "slope/errors.hpp"
#include "slope/refsuite.hpp"
#include "slope/scenario.hpp"

using namespace slope;

namespace {
Rational rq(long n, long d = 1) { return Rational(n, d); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(bool(in));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}
}  // namespace

TEST_CASE("every shipped scenario parses and echoes canonically") {
  for (const auto& shipped : shipped_scenario_texts()) {
    CAPTURE(shipped.file);
    Scenario s = parse_scenario_text(shipped.text);
    CHECK(!s.tag.empty());
    std::string echo = scenario_echo(s);
    Scenario again = parse_scenario_text(echo);
    CHECK(scenario_echo(again) == echo);
    CHECK(again.kind == s.kind);
    CHECK(again.tag == s.tag);
    REQUIRE(again.c.has_value() == s.c.has_value());
    if (s.c) CHECK(*again.c == *s.c);

    auto p1 = scenario_profile(s);
    auto p2 = scenario_profile(again);
    REQUIRE(p1.has_value() == p2.has_value());
    if (p1) {
      CHECK(p1->dim() == p2->dim());
      CHECK(p1->a0() == p2->a0());
      CHECK(p1->a1() == p2->a1());
      CHECK(p1->eps().kind == p2->eps().kind);
      CHECK(p1->saturates() == p2->saturates());
    }
  }
  CHECK(shipped_scenarios().size() == shipped_scenario_texts().size());
}

TEST_CASE("scenario files on disk are byte-identical to the embedded library") {
  for (const auto& shipped : shipped_scenario_texts()) {
    CAPTURE(shipped.file);
    std::string path = std::string(SCENARIO_DIR) + "/" + shipped.file;
    CHECK(read_file(path) == shipped.text);
    Scenario from_file = load_scenario_file(path);
    CHECK(scenario_echo(from_file) == scenario_echo(parse_scenario_text(shipped.text)));
  }
  CHECK_THROWS_AS(load_scenario_file("/nonexistent/profile.scenario"), invalid_input);
}

TEST_CASE("parsed values land in the right fields") {
  Scenario s = parse_scenario_text(
      "# comment line\n"
      "kind = surface_curve\n"
      "tag = demo\n"
      "title = a title with spaces\n"
      "KL = -5/2   # inline comment\n"
      "\tL2 = 3/4\n"
      "LZ = 1/2\n"
      "KZ = -1\n"
      "Z2 = -1\n"
      "genus = 0\n"
      "epsilon = exact 1/2\n"
      "c = 2/5\n");
  CHECK(s.kind == ScenarioKind::SurfaceCurve);
  CHECK(s.tag == "demo");
  CHECK(s.title == "a title with spaces");
  CHECK(s.surface.KL == rq(-5, 2));
  CHECK(s.surface.L2 == rq(3, 4));
  CHECK(s.surface.LZ == rq(1, 2));
  CHECK(s.surface.KZ == rq(-1));
  CHECK(s.surface.Z2 == rq(-1));
  REQUIRE(s.surface.genus.has_value());
  CHECK(*s.surface.genus == 0);
  CHECK(s.surface.epsilon.kind == SeshadriBound::Kind::Exact);
  CHECK(s.surface.epsilon.value == rq(1, 2));
  REQUIRE(s.c.has_value());
  CHECK(*s.c == rq(2, 5));
  // The explicit genus = 0 survives the canonical echo.
  CHECK(scenario_echo(s).find("genus = 0") != std::string::npos);

  Scenario t = parse_scenario_text(
      "kind = toric\n"
      "tag = square\n"
      "facet = 1 0 0\n"
      "facet = 0 1 0\n"
      "facet = -1 0 -1\n"
      "facet = 0 -1 -1\n"
      "face = 1 0 0 1\n"
      "face = 0 1 0 2\n");
  REQUIRE(t.toric.facets.size() == 4);
  CHECK(t.toric.facets[2].nx == -1);
  CHECK(t.toric.facets[2].offset == rq(-1));
  REQUIRE(t.toric.Z.faces.size() == 2);
  CHECK(t.toric.Z.faces[1].uy == 1);
  CHECK(t.toric.Z.faces[1].multiplicity == 2);

  Scenario b = parse_scenario_text(
      "kind = bundle\n"
      "tag = bb\n"
      "base_genus = 1\n"
      "base_deg = 1\n"
      "E = 2 1\n"
      "subsheaf = 1 1/2 nosplit halfdeg\n"
      "subsheaf = 1 1\n"
      "m = 2\n");
  CHECK(b.bundle.base.b == 1);
  CHECK(b.bundle.base.muB == rq(0));
  CHECK(b.bundle.E.rank == 2);
  CHECK(b.bundle.E.deg == rq(1));
  REQUIRE(b.bundle.subsheaves.size() == 2);
  CHECK(b.bundle.subsheaves[0].F.deg == rq(1, 2));
  CHECK(b.bundle.subsheaves[0].not_direct_summand);
  CHECK(b.bundle.subsheaves[0].label == "halfdeg");
  CHECK(!b.bundle.subsheaves[1].not_direct_summand);
  CHECK(b.bundle.subsheaves[1].label.empty());
  CHECK(b.bundle.m == rq(2));

  Scenario r = parse_scenario_text(
      "kind = raw_profile\n"
      "tag = rr\n"
      "dim = 2\n"
      "breaks = 0 1 2\n"
      "a0 = 1 0 -1/2 | 2 -2 1/2\n"
      "a1 = 2 -1/2 | 3 -3/2\n"
      "epsilon = exact 2\n"
      "saturates = yes\n");
  CHECK(r.raw.dim == 2);
  REQUIRE(r.raw.breaks.size() == 3);
  CHECK(r.raw.breaks[2] == rq(2));
  REQUIRE(r.raw.a0.size() == 2);
  CHECK(r.raw.a0[1] == Polynomial({rq(2), rq(-2), rq(1, 2)}));
  REQUIRE(r.raw.a1.size() == 2);
  CHECK(r.raw.a1[0] == Polynomial({rq(2), rq(-1, 2)}));
  CHECK(r.raw.sat == Saturation::Yes);
  auto prof = scenario_profile(r);
  REQUIRE(prof.has_value());
  CHECK(prof->x_max() == rq(2));
  CHECK(slope_of_variety(*prof) == rq(2));
}

TEST_CASE("profiles exist exactly when the kind defines one") {
  Scenario sc = parse_scenario_text(
      "kind = smooth_curve\ntag = s\ngenus = 2\ndegL = 2\nd = 1\n");
  auto p = scenario_profile(sc);
  REQUIRE(p.has_value());
  CHECK(p->x_max() == rq(2));

  // Curve in an n-fold without the ambient totals: slopes only, no profile.
  Scenario cn = parse_scenario_text(
      "kind = curve_in_nfold\ntag = c\nn = 3\ngenus = 0\nLZ = 1\nc1nu = 2\n"
      "epsilon = lower 1/2\n");
  CHECK(!scenario_profile(cn).has_value());
  Scenario cn2 = parse_scenario_text(
      "kind = curve_in_nfold\ntag = c\nn = 3\ngenus = 0\nLZ = 1\nc1nu = 2\n"
      "Ln = 1\nKLn1 = -4\nepsilon = exact 1\n");
  CHECK(scenario_profile(cn2).has_value());

  // A bundle without subsheaves still parses; there is just nothing to test.
  Scenario bn = parse_scenario_text(
      "kind = bundle\ntag = b\nbase_genus = 1\nbase_deg = 1\nE = 2 1\nm = 2\n");
  CHECK(!scenario_profile(bn).has_value());
}

TEST_CASE("parser rejects malformed scenario text") {
  auto bad = [](const std::string& text) {
    CHECK_THROWS_AS(parse_scenario_text(text), invalid_input);
  };
  bad("tag = x\n");                                    // no kind
  bad("kind = conic\n");                               // unknown kind
  bad("kind = smooth_curve\nkind = toric\n");          // kind twice
  bad("kind = smooth_curve\ngenus = 0\ndegL = 1\nd = 1\nLZ = 2\n");  // foreign field
  bad("kind = smooth_curve\ngenus = 0\ndegL = 1\ndegL = 2\nd = 1\n");  // field twice
  bad("kind = smooth_curve\ngenus = 0\ndegL = 1/0\nd = 1\n");  // zero denominator
  bad("kind = smooth_curve\ngenus = 0\ndegL = abc\nd = 1\n");  // not a rational
  bad("kind = smooth_curve\ngenus = 1/2\ndegL = 1\nd = 1\n");  // fractional integer
  bad("kind = smooth_curve\ngenus = 0\ndegL = 1\n");           // missing d
  bad("kind = smooth_curve\nhello\ngenus = 0\ndegL = 1\nd = 1\n");  // no '='
  bad("kind = smooth_curve\n= 3\ngenus = 0\ndegL = 1\nd = 1\n");    // empty key
  bad("kind = surface_curve\nKL = 0\nL2 = 1\nLZ = 1\nKZ = 0\nZ2 = -1\n"
      "epsilon = about 1\n");                          // bad epsilon keyword
  bad("kind = surface_curve\nKL = 0\nL2 = 1\nLZ = 1\nKZ = 0\nZ2 = -1\n"
      "epsilon = exact\n");                            // epsilon missing value
  bad("kind = toric\nfacet = 1 0\nface = 1 0 0 1\n");  // facet arity
  bad("kind = toric\nfacet = 1 0 0\nfacet = 0 1 0\nfacet = -1 -1 -1\n"
      "face = 1 0 0\n");                               // face arity
  bad("kind = toric\nface = 1 0 0 1\n");               // no facets
  bad("kind = bundle\nbase_genus = 0\nbase_deg = 1\nE = 2 0\n");  // missing m
  bad("kind = bundle\nbase_genus = 0\nbase_deg = 1\nE = 2\nm = 1\n");  // E arity
  bad("kind = bundle\nbase_genus = 0\nbase_deg = 1\nE = 2 0\n"
      "subsheaf = 1\nm = 1\n");                        // subsheaf arity
  bad("kind = bundle\nbase_genus = 0\nbase_deg = 1\nE = 2 0\n"
      "subsheaf = 1 0 lbl extra\nm = 1\n");            // trailing tokens
  bad("kind = raw_profile\ndim = 2\nbreaks = 0 1\na0 = 1 |\na1 = 1\n");  // empty piece
  bad("kind = raw_profile\ndim = 2\nbreaks = 0 1\na0 = 1 -1\na1 = 1\n"
      "saturates = maybe\n");                          // bad saturation
}
