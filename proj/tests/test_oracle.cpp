#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "liftlab/oracle.hpp"
#include "liftlab/selfint.hpp"

using namespace liftlab;

TEST_CASE("schottky generators pair their discs") {
  for (const SurfaceSpec s : {SurfaceSpec{0, 3}, SurfaceSpec{1, 1}, SurfaceSpec{1, 2}}) {
    const FatGraph f = build_fatgraph(s);
    const auto gens = schottky_rep(f);
    CHECK(gens.size() == static_cast<std::size_t>(f.edge_count()));
    for (const MobiusGen& g : gens) {
      CHECK(fabs(g.matrix.det() - 1) < Real("1e-25"));
      CHECK(pairing_defect(g) < Real("1e-25"));
    }
  }
}

TEST_CASE("oracle matches known values") {
  const FatGraph p = build_fatgraph({0, 3});
  const FatGraph t = build_fatgraph({1, 1});
  struct Case {
    const FatGraph* f;
    const char* word;
    int i;
  };
  const Case cases[] = {{&p, "a b", 1}, {&p, "a b^3", 3}, {&p, "a B", 0}, {&t, "a b", 0},
                        {&t, "a b a^3 b", 1}, {&t, "a b a^2 b^2", 2}, {&t, "a b A B", 0}};
  for (const Case& c : cases) {
    CAPTURE(c.word);
    const OracleResult r = oracle_self_intersection_auto(*c.f, CyclicWord(parse_word(c.word, c.f->labels())), 10);
    CHECK(r.stable);
    CHECK(r.count == c.i);
  }
}

TEST_CASE("oracle agrees with the combinatorial engine on short words") {
  const FatGraph t = build_fatgraph({1, 1});
  for (const char* w : {"a^2 b^3", "a b^2 A b", "a^2 B^2 a b", "a b a b^4"}) {
    CAPTURE(w);
    const CyclicWord c(parse_word(w, t.labels()));
    const OracleResult r = oracle_self_intersection_auto(t, c, 10);
    CHECK(r.stable);
    CHECK(r.count == self_intersection(t, c));
  }
}
