#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "liftlab/covers.hpp"
#include "liftlab/curves.hpp"
#include "liftlab/error.hpp"
#include "liftlab/selfint.hpp"

using namespace liftlab;

namespace {
int i_of(const FatGraph& f, const std::string& text) { return self_intersection(f, CyclicWord(parse_word(text, f.labels()))); }
}  // namespace

TEST_CASE("pants values") {
  const FatGraph p = build_fatgraph({0, 3});
  CHECK(i_of(p, "a b") == 1);
  CHECK(i_of(p, "a b^3") == 3);
  for (int k = 1; k <= 8; ++k) CHECK(i_of(p, "a b^" + std::to_string(k)) == k);
  CHECK(i_of(p, "a") == 0);
  CHECK(i_of(p, "b") == 0);
  CHECK(i_of(p, "a B") == 0);
  CHECK(i_of(p, "a^-1 b") == 0);
}

TEST_CASE("one-holed torus values") {
  const FatGraph t = build_fatgraph({1, 1});
  CHECK(i_of(t, "a b") == 0);
  CHECK(i_of(t, "a b A B") == 0);
  CHECK(i_of(t, "a b a^3 b") == 1);
  CHECK(i_of(t, "a b a^2 b^2") == 2);
  for (int k = 3; k <= 8; ++k) CHECK(i_of(t, "a b a b^" + std::to_string(k)) == k - 2);
  for (int n = 2; n <= 8; ++n) CHECK(i_of(t, "a^2 b^" + std::to_string(n)) == n - 1);
}

TEST_CASE("family words on larger surfaces") {
  for (int k : {4, 6}) {
    const SurfaceSpec s{0, k};
    const FatGraph f = build_fatgraph(s);
    for (int j = 1; j <= 5; ++j) {
      const CurveInstance c = family_word("tau", j, s);
      CHECK(self_intersection(f, c.word) == j);
    }
  }
  const FatGraph f = build_fatgraph({1, 2});
  for (int k = 2; k <= 6; ++k) CHECK(self_intersection(f, family_word("zeta", k, SurfaceSpec{1, 2}).word) == k - 1);
}

TEST_CASE("boundary words are simple") {
  for (const SurfaceSpec s : {SurfaceSpec{0, 3}, SurfaceSpec{1, 1}, SurfaceSpec{0, 5}, SurfaceSpec{2, 2}}) {
    const FatGraph f = build_fatgraph(s);
    for (const CyclicWord& w : boundary_words(f)) CHECK(self_intersection(f, w) == 0);
    for (const std::string& l : f.labels()) CHECK(i_of(f, l) == 0);
  }
}

TEST_CASE("invariance under rotation, inversion and conjugation") {
  const FatGraph t = build_fatgraph({1, 1});
  const CyclicWord w(parse_word("a b^2 A b a", t.labels()));
  const int i = self_intersection(t, w);
  for (std::size_t r = 0; r < w.length(); ++r) CHECK(self_intersection(t, w.rotated(r)) == i);
  CHECK(self_intersection(t, w.inverse()) == i);
  CHECK(i_of(t, "b a b^2 A b a B") == i);
}

TEST_CASE("rejections") {
  const FatGraph p = build_fatgraph({0, 3});
  CHECK_THROWS_WITH_AS(i_of(p, "a b a b"), "proper power unsupported", Error);
  CHECK_THROWS_WITH_AS(i_of(p, "a A"), "null-homotopic", Error);
}

TEST_CASE("vertex-simple certificate implies zero") {
  const FatGraph p = build_fatgraph({0, 3});
  const auto path = closed_path(p, p.word_to_darts(parse_word("a B", p.labels())));
  CHECK(self_intersection(p, path) == 0);
  const auto crossing = closed_path(p, p.word_to_darts(parse_word("a b", p.labels())));
  CHECK_FALSE(vertex_simple_certificate(p, crossing));
  CHECK(is_simple(p, path));
}

TEST_CASE("lifted paths are measured in the cover") {
  // Swap cover of the pants: a b^3 lifts to a curve of degree one that is simple.
  const FatGraph p = build_fatgraph({0, 3});
  CoverRep rep;
  rep.degree = 2;
  rep.perms["a"] = {1, 0};
  rep.perms["b"] = {1, 0};
  const CoverComplex c = build_cover(p, rep);
  bool some_simple = false;
  for (const LiftedPath& l : preimage_components(c, CyclicWord(parse_word("a b", p.labels())))) {
    some_simple |= self_intersection(c.total, l.path) == 0;
  }
  CHECK(some_simple);
}
