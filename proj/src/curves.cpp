#include "liftlab/curves.hpp"

#include <numeric>

#include "liftlab/error.hpp"

namespace liftlab {

namespace {

Word repeat(const std::string& gen, int times) { return Word(times, Letter{gen, 1}); }

Word concat(std::initializer_list<Word> parts) {
  Word out;
  for (const Word& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

CurveInstance make(std::string family, int parameter, SurfaceSpec home, const Word& w, int expected) {
  return CurveInstance{std::move(family), parameter, home, CyclicWord(w), expected};
}

void require(bool ok, const std::string& what) {
  if (!ok) throw invalid_input(what);
}

const Substitution kHandle1{{"a", {{"x1", 1}}}, {"b", {{"y1", 1}}}};
// Q reverses the second band of each handle, so b runs along d1 backwards.
const Substitution kClosedHandle1{{"a", {{"c1", 1}}}, {"b", {{"d1", -1}}}};
const Substitution kPantsToA{{"a", {{"a2", 1}}}, {"b", {{"a3", -1}}}};

CurveSelection selection(CurveInstance curve, int sheet, const Substitution& sub, std::string embedding) {
  CyclicWord w = sub.empty() ? curve.word : substitute(curve.word, sub);
  const int expected = curve.expected_i;
  return CurveSelection{std::move(curve), std::move(w), expected, sheet, std::move(embedding)};
}

int param(const Construction& c, const std::string& key) {
  auto it = c.provenance.parameters.find(key);
  if (it == c.provenance.parameters.end()) throw internal_error("construction lacks parameter " + key);
  return it->second;
}

// Planar curve on S_{0,k} as realized by a planar construction of degree n.
CurveSelection planar_selection(const Construction& c, int n, int k, bool into_composite) {
  if (k == 3) {
    const int m = param(c, "m");
    CurveInstance gamma = family_word("gamma", m + 1);
    if (!into_composite) return selection(std::move(gamma), m + 1, {}, "");
    return selection(std::move(gamma), m + 1, kPantsToA, "pants on a2, a3 (b = a3^-1)");
  }
  const bool even = k % 2 == 0;
  // For odd k the curve lives on the sub-surface spanned by a2..a_{k-1}, whose
  // gluing pairs cancel just as in the even case.
  CurveInstance tau = family_word("tau", n - 1, SurfaceSpec{0, even ? k : k - 1});
  std::string embedding = even ? "" : "S_{0," + std::to_string(k - 1) + "} on a2..a" + std::to_string(k - 1);
  Substitution identity;
  if (!even) identity["a2"] = {{"a2", 1}};
  return selection(std::move(tau), 0, identity, std::move(embedding));
}

}  // namespace

CurveInstance family_word(const std::string& name, int p, std::optional<SurfaceSpec> home) {
  if (name == "gamma") {
    require(p >= 1, "gamma needs k >= 1");
    require(!home || *home == SurfaceSpec{0, 3}, "gamma lives on S_{0,3}");
    return make(name, p, {0, 3}, concat({{{"a", 1}}, repeat("b", p)}), p);
  }
  if (name == "tau") {
    const SurfaceSpec h = home.value_or(SurfaceSpec{0, 4});
    require(h.genus == 0 && h.boundaries >= 4, "tau lives on S_{0,k}, k >= 4");
    require(p >= 1, "tau needs j >= 1");
    Word w;
    for (int i = 2; i <= h.boundaries; ++i) w.push_back({"a" + std::to_string(i), 1});
    return make(name, p, h, concat({w, repeat("a2", p)}), p);
  }
  if (name == "eta" || name == "sigma" || name == "a2bn") {
    require(!home || *home == SurfaceSpec{1, 1}, name + " lives on S_{1,1}");
    const Word a{{"a", 1}};
    const Word b{{"b", 1}};
    if (name == "eta") {
      require(p >= 3, "eta needs k >= 3");
      return make(name, p, {1, 1}, concat({a, b, a, repeat("b", p)}), p - 2);
    }
    if (name == "sigma") {
      require(p >= 3, "sigma needs n >= 3");
      return make(name, p, {1, 1}, concat({a, b, repeat("a", p), b}), p - 2);
    }
    require(p >= 2, "a2bn needs n >= 2");
    return make(name, p, {1, 1}, concat({repeat("a", 2), repeat("b", p)}), p - 1);
  }
  if (name == "zeta") {
    const SurfaceSpec h = home.value_or(SurfaceSpec{1, 2});
    require(h.boundaries == 2 && h.genus >= 1, "zeta lives on S_{g,2}, g >= 1");
    require(p >= 2, "zeta needs k >= 2");
    return make(name, p, h, concat({repeat("c", p), {{"x1", 1}}}), p - 1);
  }
  throw invalid_input("unknown curve family '" + name + "'");
}

CurveInstance parse_family(const std::string& text, std::optional<SurfaceSpec> home) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw invalid_input("curve must look like name:parameter");
  int p = 0;
  try {
    std::size_t used = 0;
    p = std::stoi(text.substr(colon + 1), &used);
    if (used != text.size() - colon - 1) throw std::invalid_argument("trailing");
  } catch (const std::logic_error&) {
    throw invalid_input("malformed curve parameter in '" + text + "'");
  }
  return family_word(text.substr(0, colon), p, home);
}

CurveInstance s11_curve(int n, int q) {
  require(n >= 2 && q >= 1 && q <= n && (n - q) % 2 == 0, "no one-holed torus cover with these parameters");
  if (n == 2) return family_word("sigma", 3);
  if (n == 3) {
    if (q == 1) return family_word("sigma", 3);
    return make("a b a^2 b^2", 0, {1, 1}, parse_word("a b a^2 b^2", {"a", "b"}), 2);
  }
  if (n % 2 == 0 || q >= 3) return family_word("eta", n - 1);
  return family_word("eta", n - 2);
}

CurveSelection select_curve(const Construction& c) {
  const SurfaceSpec& s = c.spec;
  const int n = c.degree;
  const std::string& kind = c.provenance.construction;
  if (kind == "pair of pants" || kind == "planar") return planar_selection(c, n, s.boundaries, false);
  if (kind == "one-holed torus") return selection(s11_curve(n, param(c, "q")), 0, {}, "");
  if (kind == "genus g, one boundary") {
    return selection(s11_curve(n, param(c, "q")), 0, kHandle1, "S_{1,1} on x1, y1");
  }
  if (kind == "genus g, two boundaries") {
    const int u = param(c, "u");
    if (u == 0) return selection(family_word("zeta", n, s), 0, {}, "");
    return selection(s11_curve(u + 1, u + 1), 0, kHandle1, "S_{1,1} on x1, y1");
  }
  if (kind == "genus g, k boundaries") {
    if (c.provenance.variant == "case 1") {
      return selection(s11_curve(n, param(c, "q")), 0, kHandle1, "S_{1,1} on x1, y1");
    }
    if (c.provenance.variant == "case 2") {
      CurveSelection sel = planar_selection(c, n, s.boundaries, true);
      if (sel.embedding.empty()) sel.embedding = "S_{0," + std::to_string(s.boundaries) + "} on a2..a" + std::to_string(s.boundaries);
      return sel;
    }
    const int l = param(c, "l");
    return selection(s11_curve(l, l), 0, kHandle1, "S_{1,1} on x1, y1");
  }
  if (kind == "closed") {
    return selection(s11_curve(n, n), 0, kClosedHandle1, "S_{1,1} on c1, d1 inside the neighborhood Q");
  }
  throw internal_error("no curve selection for construction '" + kind + "'");
}

CurveSelection select_curve(const SurfaceSpec& spec, int n, const AdmissibleTarget& target) {
  return select_curve(realize(spec, n, target));
}

bool homology_forces_nonsimple(const Word& w) {
  long g = 0;
  for (const auto& [_, e] : exponent_sums(w)) g = std::gcd(g, e < 0 ? -e : e);
  return g > 1;
}

}  // namespace liftlab
