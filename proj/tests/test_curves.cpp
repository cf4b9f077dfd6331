#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "liftlab/curves.hpp"
#include "liftlab/error.hpp"
#include "liftlab/massey.hpp"
#include "liftlab/selfint.hpp"

using namespace liftlab;

TEST_CASE("family words") {
  CHECK(family_word("gamma", 3).word.str() == "a b^3");
  CHECK(family_word("gamma", 3).expected_i == 3);
  CHECK(family_word("eta", 5).expected_i == 3);
  CHECK(family_word("sigma", 4).expected_i == 2);
  CHECK(family_word("a2bn", 4).expected_i == 3);
  CHECK(family_word("tau", 2, SurfaceSpec{0, 4}).word.length() == 5);
  CHECK(family_word("zeta", 3, SurfaceSpec{3, 2}).home == SurfaceSpec{3, 2});
  CHECK(parse_family("eta:3").word == family_word("eta", 3).word);
}

TEST_CASE("family errors") {
  CHECK_THROWS_AS(family_word("eta", 2), Error);
  CHECK_THROWS_AS(family_word("nope", 2), Error);
  CHECK_THROWS_AS(parse_family("eta"), Error);
}

TEST_CASE("expected values match the engine") {
  for (const char* name : {"gamma", "eta", "sigma", "a2bn"}) {
    for (int p = 3; p <= 7; ++p) {
      const CurveInstance c = family_word(name, p);
      CAPTURE(name);
      CAPTURE(p);
      CHECK(self_intersection(build_fatgraph(c.home), c.word) == c.expected_i);
    }
  }
}

TEST_CASE("selection") {
  for (int m = 0; m <= 4; ++m) {
    const AdmissibleTarget t{TargetKind::Boundaries, validate_rep(build_fatgraph({0, 3}), pants_cover(6, m)).invariants.boundaries};
    const CurveSelection s = select_curve({0, 3}, 6, t);
    CHECK(s.expected_i >= 1);
  }
  const CurveSelection z = select_curve({3, 2}, 3, {TargetKind::Genus, 9});
  CHECK(z.curve.family == "zeta");
  CHECK(z.curve.parameter == 3);
}

TEST_CASE("homology obstruction") {
  const std::set<std::string> q{"c1", "d1"};
  CHECK(homology_forces_nonsimple(parse_word("c1^2 d1^2", q)));
  CHECK_FALSE(homology_forces_nonsimple(parse_word("c1 d1", q)));
  CHECK_FALSE(homology_forces_nonsimple(parse_word("c1 d1 C1 D1", q)));
}
