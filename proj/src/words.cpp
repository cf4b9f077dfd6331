#include "liftlab/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "liftlab/error.hpp"

namespace liftlab {

namespace {

int parse_exponent(const std::string& text, const std::string& term) {
  int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw invalid_input("malformed exponent in term '" + term + "'");
  }
  return value;
}

}  // namespace

Word parse_word(const std::string& text, const std::set<std::string>& alphabet) {
  Word out;
  std::istringstream in(text);
  std::string term;
  while (in >> term) {
    const auto caret = term.find('^');
    std::string ident = term.substr(0, caret);
    int exponent = 1;
    if (caret != std::string::npos) exponent = parse_exponent(term.substr(caret + 1), term);
    if (ident.empty()) throw invalid_input("missing generator in term '" + term + "'");
    int sign = 1;
    if (std::isupper(static_cast<unsigned char>(ident[0]))) {
      sign = -1;
      ident[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(ident[0])));
    }
    if (!alphabet.contains(ident)) throw invalid_input("unknown generator '" + ident + "'");
    if (exponent < 0) {
      sign = -sign;
      exponent = -exponent;
    }
    for (int i = 0; i < exponent; ++i) out.push_back({ident, sign});
  }
  return out;
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && out.back() == l.inverse()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

std::string format_word(const Word& w) {
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const long run = static_cast<long>(j - i) * w[i].sign;
    if (!out.empty()) out += ' ';
    out += w[i].gen;
    if (run != 1) out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

CyclicWord cyclic_reduce(const Word& w) { return CyclicWord(w); }

CyclicWord::CyclicWord(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0;
  std::size_t hi = r.size();
  while (hi - lo >= 2 && r[lo] == r[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  if (hi <= lo) throw invalid_input("null-homotopic");
  letters_.assign(r.begin() + static_cast<long>(lo), r.begin() + static_cast<long>(hi));
}

CyclicWord CyclicWord::inverse() const { return CyclicWord(liftlab::inverse(letters_)); }

CyclicWord CyclicWord::rotated(std::size_t t) const {
  Word w = letters_;
  std::rotate(w.begin(), w.begin() + static_cast<long>(t % w.size()), w.end());
  return CyclicWord(w);
}

CyclicWord CyclicWord::power(int k) const {
  if (k == 0) throw invalid_input("null-homotopic");
  const Word base = k > 0 ? letters_ : liftlab::inverse(letters_);
  Word w;
  for (int i = 0; i < std::abs(k); ++i) w.insert(w.end(), base.begin(), base.end());
  return CyclicWord(w);
}

Word CyclicWord::canonical_rotation() const {
  Word best = letters_;
  Word cur = letters_;
  for (std::size_t t = 1; t < cur.size(); ++t) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

bool CyclicWord::equal_up_to_rotation(const CyclicWord& other) const {
  if (length() != other.length()) return false;
  return canonical_rotation() == other.canonical_rotation();
}

bool CyclicWord::equal_unoriented(const CyclicWord& other) const {
  return equal_up_to_rotation(other) || equal_up_to_rotation(other.inverse());
}

bool is_primitive(const CyclicWord& w) {
  const std::size_t n = w.length();
  for (std::size_t t = 1; t < n; ++t) {
    if (n % t != 0) continue;
    bool same = true;
    for (std::size_t i = 0; i < n && same; ++i) same = w[i] == w[i + t];
    if (same) return false;
  }
  return true;
}

CyclicWord substitute(const CyclicWord& w, const Substitution& map) {
  Word image;
  for (const Letter& l : w.letters()) {
    const auto it = map.find(l.gen);
    Word piece = it == map.end() ? Word{{l.gen, 1}} : it->second;
    if (l.sign < 0) piece = liftlab::inverse(piece);
    image.insert(image.end(), piece.begin(), piece.end());
  }
  return CyclicWord(image);
}

std::map<std::string, long> exponent_sums(const Word& w) {
  std::map<std::string, long> sums;
  for (const Letter& l : w) sums[l.gen] += l.sign;
  return sums;
}

}  // namespace liftlab
