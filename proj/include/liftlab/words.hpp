#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

namespace liftlab {

/// A generator or its inverse.
struct Letter {
  std::string gen;
  int sign = 1;  // +1 or -1

  Letter inverse() const { return {gen, -sign}; }
  bool operator==(const Letter&) const = default;
  auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;

/// Parses whitespace separated terms `ident ('^' signed-integer)?`.
/// An identifier starting with an uppercase character denotes the inverse of
/// the lowercased generator. Every generator must belong to `alphabet`.
Word parse_word(const std::string& text, const std::set<std::string>& alphabet);

Word inverse(const Word& w);
Word free_reduce(const Word& w);

/// Prints lowercase generators with caret exponents, e.g. "a b^3 a^-1".
std::string format_word(const Word& w);

/// A nonempty cyclically reduced word. Two cyclic words compare equal when
/// they are rotations of each other.
class CyclicWord {
 public:
  /// Throws InvalidInput("null-homotopic") if `w` reduces to the empty word.
  explicit CyclicWord(const Word& w);

  const Word& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  const Letter& operator[](std::size_t i) const { return letters_[i % letters_.size()]; }

  CyclicWord inverse() const;
  CyclicWord rotated(std::size_t t) const;
  CyclicWord power(int k) const;

  /// Lexicographically least rotation; a canonical key for the rotation class.
  Word canonical_rotation() const;

  bool equal_up_to_rotation(const CyclicWord& other) const;
  /// Equality of unoriented free homotopy classes (rotation and inversion).
  bool equal_unoriented(const CyclicWord& other) const;

  bool operator==(const CyclicWord& other) const { return equal_up_to_rotation(other); }

  std::string str() const { return format_word(letters_); }

 private:
  Word letters_;
};

CyclicWord cyclic_reduce(const Word& w);

/// True iff the word is not a proper power of a shorter cyclic word.
bool is_primitive(const CyclicWord& w);

/// Generators absent from `map` are left fixed.
using Substitution = std::map<std::string, Word>;

CyclicWord substitute(const CyclicWord& w, const Substitution& map);

/// Sum of signed occurrences per generator (abelianization).
std::map<std::string, long> exponent_sums(const Word& w);

}  // namespace liftlab
