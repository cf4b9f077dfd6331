#include "liftlab/massey.hpp"

#include <algorithm>

#include "liftlab/error.hpp"

namespace liftlab {

std::string format_target(const AdmissibleTarget& t) {
  return (t.kind == TargetKind::Boundaries ? "k~=" : "g~=") + std::to_string(t.value);
}

TargetKind target_kind(const SurfaceSpec& spec) {
  if (spec.genus == 0 || (spec.genus == 1 && spec.boundaries == 1)) return TargetKind::Boundaries;
  return TargetKind::Genus;
}

namespace {

void check_degree(int n) {
  if (n < 2) throw invalid_input("degree must be at least 2");
}

void check_spec(const SurfaceSpec& spec) {
  if (spec.genus < 0 || spec.boundaries < 0) throw invalid_input("unsupported surface " + spec.name());
  if (spec.closed() ? spec.genus < 2 : spec.euler() >= 0) {
    throw invalid_input("unsupported surface " + spec.name());
  }
}

std::vector<AdmissibleTarget> range(TargetKind kind, int lo, int hi, int step) {
  std::vector<AdmissibleTarget> out;
  for (int v = lo; v <= hi; v += step) out.push_back({kind, v});
  return out;
}

int first_with_parity(int lo, int parity) { return ((lo - parity) % 2 + 2) % 2 == 0 ? lo : lo + 1; }

std::vector<int> iota_list(int from, int to) {
  std::vector<int> out;
  for (int i = from; i <= to; ++i) out.push_back(i);
  return out;
}

CoverRep base_rep(const SurfaceSpec& spec, int n) {
  CoverRep rep;
  rep.degree = n;
  for (const std::string& l : model_labels(spec)) rep.perms[l] = identity_perm(n);
  return rep;
}

FatGraph model_of(const SurfaceSpec& spec) {
  return spec.closed() ? regular_neighborhood(spec.genus) : build_fatgraph(spec);
}

Construction make(const SurfaceSpec& spec, int n, CoverRep rep, Provenance prov) {
  Construction c;
  c.spec = spec;
  c.degree = n;
  c.rep = std::move(rep);
  c.provenance = std::move(prov);
  const CoverInfo info = validate_rep(model_of(spec), c.rep);
  c.target = {target_kind(spec), realized_value(spec, info)};
  return c;
}

std::string label(const char* prefix, int i) { return prefix + std::to_string(i); }

// Cycle counts for the pairs of a planar cover, greedily filling from the left.
std::vector<int> split_cycles(int total, int pairs, int n) {
  std::vector<int> out;
  for (int i = 0; i < pairs; ++i) {
    const int rest = pairs - i - 1;
    const int c = std::min(n, total - rest);
    out.push_back(c);
    total -= c;
  }
  return out;
}

std::vector<Perm> planar_pi(int n, const std::vector<int>& cycles) {
  std::vector<Perm> pi{perm_with_cycles(n, 1)};
  for (int c : cycles) pi.push_back(perm_with_cycles(n, c));
  return pi;
}

Provenance planar_provenance(const char* variant, const std::vector<int>& cycles) {
  Provenance p{"planar", variant, {}};
  for (std::size_t i = 0; i < cycles.size(); ++i) p.parameters["pair" + std::to_string(i + 2) + "_cycles"] = cycles[i];
  return p;
}

// Candidates for the free permutation of the odd planar case, in search order.
std::vector<Perm> odd_catalog(int n) {
  std::vector<Perm> out;
  const Perm full = perm_with_cycles(n, 1);
  out.push_back(identity_perm(n));
  Perm power = full;
  for (int j = 1; j < n; ++j) {
    out.push_back(power);
    power = compose(power, full);
  }
  for (int c = 2; c < n; ++c) out.push_back(perm_with_cycles(n, c));
  if (n <= 6) {
    Perm p = identity_perm(n);
    while (std::next_permutation(p.begin(), p.end())) out.push_back(p);
  }
  return out;
}

// Boundary count of the odd planar cover: 1 + 2*sum + cyc(rho) + cyc(pi1 rho).
int odd_rho_contribution(const Perm& rho, int n) {
  return cycle_count(rho) + cycle_count(compose(perm_with_cycles(n, 1), rho));
}

std::vector<Construction> planar_even_all(int n, int k) {
  const SurfaceSpec spec{0, k};
  const int pairs = (k - 2) / 2;
  std::vector<Construction> out;
  for (int total = pairs; total <= pairs * n; ++total) {
    const auto cycles = split_cycles(total, pairs, n);
    out.push_back(make(spec, n, planar_cover(n, k, planar_pi(n, cycles)), planar_provenance("even", cycles)));
  }
  return out;
}

std::vector<Construction> planar_odd_all(int n, int k) {
  const SurfaceSpec spec{0, k};
  const int pairs = (k - 3) / 2;
  std::vector<Construction> out;
  std::vector<int> seen_t;
  for (const Perm& rho : odd_catalog(n)) {
    const int t = odd_rho_contribution(rho, n);
    if (std::find(seen_t.begin(), seen_t.end(), t) != seen_t.end()) continue;
    seen_t.push_back(t);
    for (int total = pairs; total <= pairs * n; ++total) {
      const auto cycles = split_cycles(total, pairs, n);
      Provenance prov = planar_provenance("odd", cycles);
      prov.parameters["rho_cycles"] = cycle_count(rho);
      prov.parameters["outer_cycles"] = t - cycle_count(rho);
      out.push_back(make(spec, n, planar_cover_odd(n, k, planar_pi(n, cycles), rho), std::move(prov)));
    }
  }
  return out;
}

Construction planar_realize(int n, int k, int target) {
  if (k == 3) {
    for (int m = 0; m <= n - 2; ++m) {
      Construction c = make({0, 3}, n, pants_cover(n, m), {"pair of pants", "", {{"m", m}}});
      if (c.target.value == target) return c;
    }
  } else if (k % 2 == 0) {
    const int pairs = (k - 2) / 2;
    const auto cycles = split_cycles((target - 2) / 2, pairs, n);
    Construction c = make({0, k}, n, planar_cover(n, k, planar_pi(n, cycles)), planar_provenance("even", cycles));
    if (c.target.value == target) return c;
  } else {
    for (const Construction& c : planar_odd_all(n, k)) {
      if (c.target.value == target) return c;
    }
  }
  throw internal_error("no planar cover found for " + SurfaceSpec{0, k}.name() + " n=" + std::to_string(n) +
                       " k~=" + std::to_string(target));
}

// Copies a planar cover of S_{0,k} onto the a-generators of S_{g,k}.
CoverRep planar_into(const Construction& planar, int n, int g, int k) {
  CoverRep rep = base_rep({g, k}, n);
  if (k == 3) {
    rep.perms["a2"] = planar.rep.at("a");
    rep.perms["a3"] = inverse_perm(planar.rep.at("b"));
  } else {
    for (int i = 2; i <= k; ++i) rep.perms[label("a", i)] = planar.rep.at(label("a", i));
  }
  return rep;
}

void require_admissible(const SurfaceSpec& spec, int n, const AdmissibleTarget& target) {
  const auto all = admissible_targets(spec, n);
  if (std::find(all.begin(), all.end(), target) == all.end()) {
    throw invalid_input("target " + format_target(target) + " is not admissible for " + spec.name() +
                        " at degree " + std::to_string(n));
  }
}

// sgk case selection; returns 1, 2 or 3.
int sgk_case(int n, int g, int target) {
  if (2 * target <= 2 * n * g - (n - 1)) return 1;
  if (target >= n * g) return 2;
  return 3;
}

Construction sgk_case1(int n, int g, int k, int q) {
  CoverRep rep = base_rep({g, k}, n);
  const CoverRep t = s11_cover(n, q);
  rep.perms["x1"] = t.at("a");
  rep.perms["y1"] = t.at("b");
  return make({g, k}, n, std::move(rep), {"genus g, k boundaries", "case 1", {{"q", q}}});
}

Construction sgk_case2(const Construction& planar, int n, int g, int k) {
  Provenance prov{"genus g, k boundaries", "case 2", planar.provenance.parameters};
  prov.parameters["planar_boundaries"] = planar.target.value;
  return make({g, k}, n, planar_into(planar, n, g, k), std::move(prov));
}

Construction sgk_case3(int n, int g, int k, int l) {
  CoverRep rep = base_rep({g, k}, n);
  std::vector<int> y_cycle = iota_list(0, l - 1);
  std::vector<int> a_cycle{0};
  for (int s = l; s < n; ++s) a_cycle.push_back(s);
  rep.perms["y1"] = perm_from_cycles(n, {y_cycle});
  rep.perms["a2"] = perm_from_cycles(n, {a_cycle});
  return make({g, k}, n, std::move(rep), {"genus g, k boundaries", "case 3", {{"l", l}}});
}

}  // namespace

Perm perm_with_cycles(int n, int c) {
  if (c < 1 || c > n) throw invalid_input("cycle count out of range");
  return perm_from_cycles(n, {iota_list(0, n - c)});
}

std::vector<AdmissibleTarget> admissible_targets(const SurfaceSpec& spec, int n) {
  check_degree(n);
  check_spec(spec);
  const int g = spec.genus;
  const int k = spec.boundaries;
  if (spec.closed()) return {{TargetKind::Genus, 1 + n * (g - 1)}};
  if (g == 0) {
    const int hi = k == 3 ? n + 2 : (k - 2) * n + 2;
    return range(TargetKind::Boundaries, first_with_parity(k, (n * k) % 2), hi, 2);
  }
  if (g == 1 && k == 1) return range(TargetKind::Boundaries, first_with_parity(1, n % 2), n, 2);
  const int lo = n * g - n + 1;
  if (k == 1) return range(TargetKind::Genus, lo, (2 * n * (g - 1) + n + 1) / 2, 1);
  if (k == 2) return range(TargetKind::Genus, lo, n * g, 1);
  return range(TargetKind::Genus, lo, (2 * n * g + (n - 1) * k - 2 * n + 2) / 2, 1);
}

int realized_value(const SurfaceSpec& spec, const CoverInfo& info) {
  return target_kind(spec) == TargetKind::Boundaries ? info.invariants.boundaries : info.invariants.genus;
}

CoverRep pants_cover(int n, int m) {
  check_degree(n);
  if (m < 0 || m > n - 2) throw invalid_input("m out of range");
  CoverRep rep;
  rep.degree = n;
  rep.perms["b"] = perm_with_cycles(n, 1);
  Perm a = identity_perm(n);
  a[m + 1] = 0;
  a[0] = n - 1;
  for (int j = m + 2; j <= n - 1; ++j) a[j] = j - 1;
  rep.perms["a"] = a;
  return rep;
}

CoverRep s11_cover(int n, int q) {
  check_degree(n);
  if (q < 1 || q > n || (n - q) % 2 != 0) throw invalid_input("q must satisfy 1 <= q <= n and q = n mod 2");
  CoverRep rep;
  rep.degree = n;
  rep.perms["b"] = perm_with_cycles(n, 1);
  std::vector<std::vector<int>> swaps;
  for (int s = q; s + 1 < n; s += 2) swaps.push_back({s, s + 1});
  rep.perms["a"] = perm_from_cycles(n, swaps);
  return rep;
}

CoverRep planar_cover(int n, int k, const std::vector<Perm>& pi) {
  check_degree(n);
  if (k < 4 || k % 2 != 0) throw invalid_input("planar_cover needs even k >= 4");
  if (static_cast<int>(pi.size()) != k / 2) throw invalid_input("planar_cover needs k/2 gluing permutations");
  for (const Perm& p : pi) check_perm(p, n);
  if (!is_full_cycle(pi[0])) throw invalid_input("first gluing permutation must be an n-cycle");
  CoverRep rep;
  rep.degree = n;
  rep.perms["a2"] = pi[0];
  for (int i = 2; i <= k / 2; ++i) {
    rep.perms[label("a", 2 * i - 1)] = pi[i - 1];
    rep.perms[label("a", 2 * i)] = inverse_perm(pi[i - 1]);
  }
  return rep;
}

CoverRep planar_cover_odd(int n, int k, const std::vector<Perm>& pi, const Perm& rho) {
  check_degree(n);
  if (k < 5 || k % 2 == 0) throw invalid_input("planar_cover_odd needs odd k >= 5");
  if (static_cast<int>(pi.size()) != (k - 1) / 2) throw invalid_input("planar_cover_odd needs (k-1)/2 gluing permutations");
  for (const Perm& p : pi) check_perm(p, n);
  check_perm(rho, n);
  if (!is_full_cycle(pi[0])) throw invalid_input("first gluing permutation must be an n-cycle");
  CoverRep rep;
  rep.degree = n;
  rep.perms["a2"] = pi[0];
  for (int i = 2; i <= (k - 1) / 2; ++i) {
    rep.perms[label("a", 2 * i - 1)] = pi[i - 1];
    rep.perms[label("a", 2 * i)] = inverse_perm(pi[i - 1]);
  }
  rep.perms[label("a", k)] = rho;
  return rep;
}

CoverRep sg1_cover(int n, int g, int q) {
  if (g < 1) throw invalid_input("genus must be at least 1");
  const CoverRep t = s11_cover(n, q);
  if (g == 1) return t;
  CoverRep rep = base_rep({g, 1}, n);
  rep.perms["x1"] = t.at("a");
  rep.perms["y1"] = t.at("b");
  return rep;
}

CoverRep sg2_cover(int n, int g, int u) {
  check_degree(n);
  if (g < 1) throw invalid_input("genus must be at least 1");
  if (u < 0 || u > n - 1) throw invalid_input("u out of range");
  CoverRep rep = base_rep({g, 2}, n);
  if (u == 0) {
    rep.perms["c"] = perm_with_cycles(n, 1);
    return rep;
  }
  std::vector<int> c_cycle = iota_list(u, n - 1);
  rep.perms["y1"] = perm_from_cycles(n, {iota_list(0, u)});
  rep.perms["c"] = perm_from_cycles(n, {c_cycle});
  return rep;
}

Construction sgk_cover(int n, int g, int k, int target_genus) {
  const SurfaceSpec spec{g, k};
  if (g < 1 || k < 3) throw invalid_input("sgk_cover needs g >= 1 and k >= 3");
  require_admissible(spec, n, {TargetKind::Genus, target_genus});
  Construction c;
  switch (sgk_case(n, g, target_genus)) {
    case 1:
      c = sgk_case1(n, g, k, 2 * (n * g - target_genus) + 2 - n);
      break;
    case 2: {
      const int planar = 2 - 2 * n + n * k - 2 * (target_genus - n * g);
      c = sgk_case2(planar_realize(n, k, planar), n, g, k);
      break;
    }
    default:
      c = sgk_case3(n, g, k, n * g - target_genus + 1);
  }
  if (c.target.value != target_genus) throw internal_error("sgk_cover realized the wrong genus");
  return c;
}

ClosedCover closed_cover(int n, int g) {
  check_degree(n);
  if (g < 2) throw invalid_input("closed covers need genus >= 2");
  ClosedCover out;
  out.rep = base_rep({g, 0}, n);
  out.rep.perms["d1"] = perm_with_cycles(n, 1);
  Word relator;
  for (int i = 1; i <= g; ++i) {
    const std::string c = label("c", i);
    const std::string d = label("d", i);
    relator.insert(relator.end(), {{c, 1}, {d, 1}, {c, -1}, {d, -1}});
  }
  out.relator_identity = is_identity(word_monodromy(out.rep, relator));
  if (!out.relator_identity) throw internal_error("relator monodromy is not the identity");
  out.q_rep = out.rep;
  const CoverInfo q = validate_rep(regular_neighborhood(g), out.q_rep);
  // Each boundary of the neighborhood cover lifts the relator once, so capping
  // them with discs leaves the genus unchanged.
  if (q.invariants.boundaries != n) throw internal_error("relator lifts are not all of degree 1");
  out.genus = q.invariants.genus;
  if (out.genus != 1 + n * (g - 1)) throw internal_error("closed cover genus is not 1 + n(g-1)");
  return out;
}

Construction realize(const SurfaceSpec& spec, int n, const AdmissibleTarget& target) {
  require_admissible(spec, n, target);
  const int g = spec.genus;
  const int k = spec.boundaries;
  const int v = target.value;
  Construction c;
  if (spec.closed()) {
    ClosedCover cc = closed_cover(n, g);
    c.spec = spec;
    c.degree = n;
    c.rep = cc.rep;
    c.target = {TargetKind::Genus, cc.genus};
    c.provenance = {"closed", "", {}};
  } else if (g == 0) {
    c = planar_realize(n, k, v);
  } else if (g == 1 && k == 1) {
    c = make(spec, n, s11_cover(n, v), {"one-holed torus", "", {{"q", v}}});
  } else if (k == 1) {
    const int q = 2 * (n * g - v) + 2 - n;
    c = make(spec, n, sg1_cover(n, g, q), {"genus g, one boundary", "", {{"q", q}}});
  } else if (k == 2) {
    const int u = n * g - v;
    c = make(spec, n, sg2_cover(n, g, u), {"genus g, two boundaries", u == 0 ? "case 2" : "case 1", {{"u", u}}});
  } else {
    c = sgk_cover(n, g, k, v);
  }
  if (!(c.target == target)) {
    throw internal_error("constructor realized " + format_target(c.target) + " instead of " + format_target(target));
  }
  return c;
}

std::vector<Construction> enumerate_constructions(const SurfaceSpec& spec, int n) {
  check_degree(n);
  check_spec(spec);
  const int g = spec.genus;
  const int k = spec.boundaries;
  std::vector<Construction> out;
  if (spec.closed()) {
    out.push_back(realize(spec, n, admissible_targets(spec, n).front()));
  } else if (g == 0 && k == 3) {
    for (int m = 0; m <= n - 2; ++m) out.push_back(make(spec, n, pants_cover(n, m), {"pair of pants", "", {{"m", m}}}));
  } else if (g == 0) {
    out = k % 2 == 0 ? planar_even_all(n, k) : planar_odd_all(n, k);
  } else if (g == 1 && k == 1) {
    for (int q = 2 - n % 2; q <= n; q += 2) out.push_back(make(spec, n, s11_cover(n, q), {"one-holed torus", "", {{"q", q}}}));
  } else if (k == 1) {
    for (int q = 2 - n % 2; q <= n; q += 2) {
      out.push_back(make(spec, n, sg1_cover(n, g, q), {"genus g, one boundary", "", {{"q", q}}}));
    }
  } else if (k == 2) {
    for (int u = 0; u < n; ++u) {
      out.push_back(make(spec, n, sg2_cover(n, g, u), {"genus g, two boundaries", u == 0 ? "case 2" : "case 1", {{"u", u}}}));
    }
  } else {
    for (int q = 2 - n % 2; q <= n; q += 2) out.push_back(sgk_case1(n, g, k, q));
    std::vector<Construction> planar;
    if (k == 3) {
      for (int m = 0; m <= n - 2; ++m) planar.push_back(make({0, 3}, n, pants_cover(n, m), {"pair of pants", "", {{"m", m}}}));
    } else {
      planar = k % 2 == 0 ? planar_even_all(n, k) : planar_odd_all(n, k);
    }
    for (const Construction& p : planar) out.push_back(sgk_case2(p, n, g, k));
    for (int l = 2; 2 * l < n + 1; ++l) out.push_back(sgk_case3(n, g, k, l));
  }
  return out;
}

}  // namespace liftlab
