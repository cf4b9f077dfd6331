#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "liftlab/error.hpp"
#include "liftlab/harness.hpp"

using namespace liftlab;

TEST_CASE("single instance certificate") {
  const Certificate c = verify_instance({0, 3}, 6, {TargetKind::Boundaries, 8});
  CHECK(c.passed);
  CHECK(c.failure.empty());
  REQUIRE(c.computed_i);
  CHECK(*c.computed_i == c.expected_i);
  CHECK(c.lift_i == 0);
  CHECK(c.lift_length == c.lift_degree * static_cast<int>(CyclicWord(parse_word(c.word, {"a", "b"})).length()));
  CHECK(recheck(c).empty());
}

TEST_CASE("every target for small cells") {
  for (const SurfaceSpec s : {SurfaceSpec{1, 1}, SurfaceSpec{0, 4}, SurfaceSpec{2, 0}}) {
    for (const Certificate& c : verify_all_targets(s, 3)) {
      CAPTURE(s.name());
      CAPTURE(c.failure);
      CHECK(c.passed);
    }
  }
}

TEST_CASE("closed certificates carry provenance") {
  const Certificate c = verify_instance({2, 0}, 2, {TargetKind::Genus, 3});
  CHECK(c.passed);
  CHECK_FALSE(c.computed_i.has_value());
  CHECK(c.nonsimple != NonSimpleSource::Computed);
  CHECK(c.simplicity_domain == "neighborhood cover");
}

TEST_CASE("tampered certificates fail the recheck") {
  Certificate c = verify_instance({1, 1}, 4, {TargetKind::Boundaries, 2});
  REQUIRE(c.passed);
  c.lift_i = 3;
  CHECK_FALSE(recheck(c).empty());
}

TEST_CASE("inadmissible targets are invalid input") {
  CHECK_THROWS_AS(verify_instance({0, 3}, 6, {TargetKind::Boundaries, 5}), Error);
}

TEST_CASE("grid report is ordered and independent of jobs") {
  const GridBounds b{1, 3, 2, 3, false};
  const Report one = verify_all(b, 1);
  const Report four = verify_all(b, 4);
  CHECK(one.failed == 0);
  REQUIRE(one.certificates.size() == four.certificates.size());
  for (std::size_t i = 0; i < one.certificates.size(); ++i) {
    CHECK(one.certificates[i].spec == four.certificates[i].spec);
    CHECK(one.certificates[i].target == four.certificates[i].target);
    CHECK(one.certificates[i].rep == four.certificates[i].rep);
  }
}

TEST_CASE("minimal degree search") {
  const FatGraph t = build_fatgraph({1, 1});
  const MinDegResult r = mindeg_search(t, {1, 1}, CyclicWord(parse_word("a b a^3 b", t.labels())), 3);
  CHECK(r.degree == 2);
  CHECK(r.witness.has_value());
  CHECK(r.exhaustive);
  CHECK_THROWS_WITH_AS(mindeg_search(t, {1, 1}, CyclicWord(parse_word("a b", t.labels())), 3), "already simple", Error);
}
