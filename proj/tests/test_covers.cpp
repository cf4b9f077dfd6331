#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "liftlab/covers.hpp"
#include "liftlab/error.hpp"
#include "liftlab/selfint.hpp"

using namespace liftlab;

namespace {
CoverRep rep2(const std::string& x, Perm px, const std::string& y, Perm py) {
  CoverRep r;
  r.degree = static_cast<int>(px.size());
  r.perms[x] = std::move(px);
  r.perms[y] = std::move(py);
  return r;
}
}  // namespace

TEST_CASE("permutation helpers") {
  const Perm c = perm_from_cycles(4, {{0, 1, 2}});
  CHECK(c == Perm{1, 2, 0, 3});
  CHECK(cycle_count(c) == 2);
  CHECK_FALSE(is_full_cycle(c));
  CHECK(is_identity(compose(c, inverse_perm(c))));
  // left to right: apply first, then second
  CHECK(compose(Perm{1, 0, 2}, Perm{0, 2, 1}) == Perm{2, 0, 1});
  CHECK(orbit(c, 1).size() == 3);
  CHECK(format_cycles(c) == "(0 1 2)");
  CHECK_THROWS_AS(check_perm({0, 0}, 2), Error);
  CHECK_THROWS_AS(check_perm({0, 1}, 3), Error);
}

TEST_CASE("word monodromy applies letters left to right") {
  const CoverRep r = rep2("a", {1, 0, 2}, "b", {0, 2, 1});
  CHECK(word_monodromy(r, {{"a", 1}, {"b", 1}}) == Perm{2, 0, 1});
  CHECK(is_identity(word_monodromy(r, {{"a", 1}, {"a", -1}})));
}

TEST_CASE("pants swap cover") {
  const FatGraph p = build_fatgraph({0, 3});
  const CoverRep r = rep2("a", {1, 0}, "b", {1, 0});
  const CoverInfo info = validate_rep(p, r);
  CHECK(info.invariants == SurfaceInvariants{-2, 0, 4});
  CHECK(boundary_count_from_monodromy(p, r) == 4);
  const CoverComplex c = build_cover(p, r);
  CHECK(c.total.vertex_count() == 2);
  CHECK(c.total.edge_count() == 4);
  CHECK(c.projection == std::vector<int>{0, 0, 1, 1});
  CHECK(invariants(c.total) == info.invariants);
}

TEST_CASE("one-holed torus double cover") {
  const FatGraph t = build_fatgraph({1, 1});
  const CoverInfo info = validate_rep(t, rep2("a", {0, 1}, "b", {1, 0}));
  CHECK(info.invariants == SurfaceInvariants{-2, 1, 2});
}

TEST_CASE("four-holed sphere double cover") {
  const FatGraph f = build_fatgraph({0, 4});
  CoverRep r = identity_rep(f, 2);
  r.perms["a2"] = {1, 0};
  CHECK(validate_rep(f, r).invariants.boundaries == 6);
}

TEST_CASE("disconnected covers are rejected") {
  const FatGraph p = build_fatgraph({0, 3});
  CHECK_THROWS_WITH_AS(validate_rep(p, identity_rep(p, 2)), "disconnected cover", Error);
  CHECK_FALSE(is_transitive(identity_rep(p, 3)));
}

TEST_CASE("lifts") {
  const FatGraph p = build_fatgraph({0, 3});
  const CoverRep r = rep2("a", {1, 0}, "b", {1, 0});
  const CoverComplex c = build_cover(p, r);
  const CyclicWord ab(parse_word("a b", p.labels()));
  const CyclicWord a(parse_word("a", p.labels()));
  const LiftedPath la = lift_path(c, a, 0);
  CHECK(la.degree == 2);
  CHECK(project(c, la.path) == parse_word("a a", p.labels()));
  const auto comps = preimage_components(c, ab);
  CHECK(comps.size() == 2);
  int total = 0;
  for (const LiftedPath& l : comps) {
    total += l.degree;
    CHECK(project(c, l.path) == ab.letters());
    CHECK_NOTHROW(closed_path(c.total, l.path));
  }
  CHECK(total == 2);
}

TEST_CASE("components over a sub-piece") {
  const FatGraph p = build_fatgraph({0, 3});
  const CoverComplex c = build_cover(p, rep2("a", {1, 0, 2}, "b", {0, 2, 1}));
  const FatGraph piece(1, {{"a", 0, 0}}, {{tail_half(0), head_half(0)}});
  const auto comps = components_over(c, {"a"}, piece);
  CHECK(comps.size() == 2);
  CHECK(comps[0].degree + comps[1].degree == 3);
  CHECK_THROWS_WITH_AS(components_over(c, {"b"}, piece), "piece/labels mismatch", Error);
}

TEST_CASE("boundary parallel words") {
  const FatGraph t = build_fatgraph({1, 1});
  for (const CyclicWord& b : boundary_words(t)) {
    CHECK(is_boundary_parallel(t, b));
    CHECK(is_boundary_parallel(t, b.inverse()));
  }
  CHECK_FALSE(is_boundary_parallel(t, CyclicWord(parse_word("a b", t.labels()))));
}

TEST_CASE("conjugacy canonical form") {
  const CoverRep r = rep2("a", {1, 2, 0}, "b", {0, 2, 1});
  CoverRep s;
  s.degree = 3;
  const Perm relabel{2, 0, 1};
  for (const auto& [label, p] : r.perms) {
    Perm q(3);
    for (int i = 0; i < 3; ++i) q[relabel[i]] = relabel[p[i]];
    s.perms[label] = q;
  }
  CHECK(conjugacy_canonical(r) == conjugacy_canonical(s));
  CHECK(conjugacy_canonical(conjugacy_canonical(r)) == conjugacy_canonical(r));
}
