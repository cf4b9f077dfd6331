#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "liftlab/error.hpp"
#include "liftlab/words.hpp"

using namespace liftlab;

namespace {
const std::set<std::string> kAB{"a", "b"};
Word w(const std::string& s, const std::set<std::string>& alphabet = kAB) { return parse_word(s, alphabet); }
}  // namespace

TEST_CASE("parse expands exponents and inverses") {
  CHECK(w("a b^3") == Word{{"a", 1}, {"b", 1}, {"b", 1}, {"b", 1}});
  CHECK(w("a b^-1") == Word{{"a", 1}, {"b", -1}});
  CHECK(w("B a^0") == Word{{"b", -1}});
  CHECK(w("A^-2") == Word{{"a", 1}, {"a", 1}});
  CHECK(parse_word("a2 a3 a4 a2", {"a2", "a3", "a4"}).size() == 4);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_WITH_AS(w("a c"), doctest::Contains("unknown generator"), Error);
  CHECK_THROWS_WITH_AS(w("a^x"), doctest::Contains("malformed exponent"), Error);
  CHECK_THROWS_WITH_AS(w("a^"), doctest::Contains("malformed exponent"), Error);
}

TEST_CASE("cyclic reduction") {
  CHECK(CyclicWord(w("a b B a")).letters() == w("a a"));
  CHECK(CyclicWord(w("B a b")).letters() == w("a"));
  CHECK(CyclicWord(w("a b a b^3")).length() == 6);
  CHECK_THROWS_WITH_AS(CyclicWord(w("a b B A")), "null-homotopic", Error);
  const CyclicWord once(w("a b A b b a"));
  CHECK(CyclicWord(once.letters()) == once);
}

TEST_CASE("rotation and inversion equality") {
  const CyclicWord x(w("a b^2"));
  CHECK(x == CyclicWord(w("b a b")));
  CHECK_FALSE(x == x.inverse());
  CHECK(x.equal_unoriented(x.inverse()));
  CHECK(x.equal_unoriented(CyclicWord(w("B A B"))));
}

TEST_CASE("primitivity") {
  CHECK(is_primitive(CyclicWord(w("a b a b^3"))));
  CHECK_FALSE(is_primitive(CyclicWord(w("a b a b"))));
  CHECK(is_primitive(CyclicWord(w("a"))));
  CHECK_FALSE(is_primitive(CyclicWord(w("a^3"))));
  const CyclicWord p(w("a b^2 a b"));
  CHECK(is_primitive(p) == is_primitive(p.inverse()));
  CHECK(is_primitive(p) == is_primitive(p.rotated(2)));
}

TEST_CASE("substitution") {
  const std::set<std::string> seven{"a2", "a3", "a4", "a5", "a6", "a7", "b6"};
  const CyclicWord tau(parse_word("a2 a3 a4 a5 b6 a2", seven));
  const CyclicWord image = substitute(tau, {{"b6", parse_word("a6 a7", seven)}});
  CHECK(image == CyclicWord(parse_word("a2 a3 a4 a5 a6 a7 a2", seven)));

  const CyclicWord ab(w("a b"));
  CHECK(substitute(ab, {}) == ab);
  CHECK(substitute(ab, {{"b", w("B")}}) == CyclicWord(w("a B")));
  CHECK_THROWS_WITH_AS(substitute(ab, {{"b", w("A")}}), "null-homotopic", Error);

  // functorial: (f then g) = f composed with g
  const Substitution f{{"a", w("a b")}};
  const Substitution g{{"b", w("b b")}};
  const Substitution fg{{"a", w("a b b")}, {"b", w("b b")}};
  CHECK(substitute(substitute(ab, f), g) == substitute(ab, fg));
}

TEST_CASE("formatting uses caret exponents") {
  CHECK(format_word(w("a b b b A")) == "a b^3 a^-1");
  CHECK(CyclicWord(w("a a")).str() == "a^2");
}

TEST_CASE("exponent sums") {
  const auto s = exponent_sums(w("a b a^3 b"));
  CHECK(s.at("a") == 4);
  CHECK(s.at("b") == 2);
}
