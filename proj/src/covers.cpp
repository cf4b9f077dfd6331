#include "liftlab/covers.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "liftlab/error.hpp"

namespace liftlab {

Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Perm p = identity_perm(n);
  std::vector<char> used(n, 0);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const int x = cyc[i];
      if (x < 0 || x >= n || used[x]) throw invalid_input("bad cycle notation");
      used[x] = 1;
      p[x] = cyc[(i + 1) % cyc.size()];
    }
  }
  return p;
}

Perm inverse_perm(const Perm& p) {
  Perm q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
  return q;
}

Perm compose(const Perm& first, const Perm& then) {
  Perm out(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) out[i] = then[first[i]];
  return out;
}

int cycle_count(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  int count = 0;
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    ++count;
    for (int x = static_cast<int>(s); !seen[x]; x = p[x]) seen[x] = 1;
  }
  return count;
}

bool is_full_cycle(const Perm& p) { return !p.empty() && cycle_count(p) == 1; }

bool is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != static_cast<int>(i)) return false;
  }
  return true;
}

std::vector<int> orbit(const Perm& p, int s) {
  std::vector<int> out{s};
  for (int x = p[s]; x != s; x = p[x]) out.push_back(x);
  return out;
}

void check_perm(const Perm& p, int n) {
  if (static_cast<int>(p.size()) != n) throw invalid_input("permutation has wrong degree");
  std::vector<char> hit(n, 0);
  for (int x : p) {
    if (x < 0 || x >= n || hit[x]) throw invalid_input("not a permutation");
    hit[x] = 1;
  }
}

std::string format_cycles(const Perm& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s] || p[s] == static_cast<int>(s)) continue;
    out += "(";
    for (int x = static_cast<int>(s); !seen[x]; x = p[x]) {
      seen[x] = 1;
      if (out.back() != '(') out += " ";
      out += std::to_string(x);
    }
    out += ")";
  }
  return out.empty() ? "id" : out;
}

const Perm& CoverRep::at(const std::string& label) const {
  auto it = perms.find(label);
  if (it == perms.end()) throw invalid_input("representation has no permutation for '" + label + "'");
  return it->second;
}

CoverRep identity_rep(const FatGraph& f, int n) {
  CoverRep rep;
  rep.degree = n;
  for (const std::string& l : f.labels()) rep.perms[l] = identity_perm(n);
  return rep;
}

Perm word_monodromy(const CoverRep& rep, const Word& w) {
  Perm out = identity_perm(rep.degree);
  for (const Letter& l : w) {
    const Perm& p = rep.at(l.gen);
    out = compose(out, l.sign > 0 ? p : inverse_perm(p));
  }
  return out;
}

std::vector<std::vector<int>> sheet_orbits(const CoverRep& rep,
                                           const std::vector<std::string>& labels) {
  std::vector<const Perm*> gens;
  if (labels.empty()) {
    for (const auto& [_, p] : rep.perms) gens.push_back(&p);
  } else {
    for (const std::string& l : labels) gens.push_back(&rep.at(l));
  }
  std::vector<int> comp(rep.degree, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < rep.degree; ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (const Perm* p : gens) {
        const Perm inv = inverse_perm(*p);
        for (int t : {(*p)[members[i]], inv[members[i]]}) {
          if (comp[t] == -1) {
            comp[t] = comp[s];
            members.push_back(t);
          }
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool is_transitive(const CoverRep& rep) { return sheet_orbits(rep).size() == 1; }

namespace {

void check_rep_labels(const FatGraph& f, const CoverRep& rep) {
  if (rep.degree < 1) throw invalid_input("degree must be positive");
  const auto labels = f.labels();
  for (const auto& [label, p] : rep.perms) {
    if (!labels.count(label)) throw invalid_input("representation names unknown generator '" + label + "'");
    check_perm(p, rep.degree);
  }
  for (const std::string& l : labels) {
    if (!rep.perms.count(l)) throw invalid_input("representation has no permutation for '" + l + "'");
  }
}

struct TotalData {
  int vertices = 0;
  std::vector<Edge> edges;
  std::vector<int> projection;
};

TotalData total_edges(const FatGraph& f, const CoverRep& rep) {
  const int n = rep.degree;
  TotalData t;
  t.vertices = f.vertex_count() * n;
  for (int e = 0; e < f.edge_count(); ++e) {
    const Edge& be = f.edge(e);
    const Perm& p = rep.at(be.label);
    for (int s = 0; s < n; ++s) {
      t.edges.push_back({be.label + "_" + std::to_string(s), be.tail * n + s, be.head * n + p[s]});
      t.projection.push_back(e);
    }
  }
  return t;
}

}  // namespace

CoverComplex build_cover(const FatGraph& f, const CoverRep& rep) {
  check_rep_labels(f, rep);
  const int n = rep.degree;
  TotalData t = total_edges(f, rep);
  if (!is_connected(t.vertices, t.edges)) throw invalid_input("disconnected cover");
  std::vector<std::vector<HalfEdge>> orders(t.vertices);
  for (int v = 0; v < f.vertex_count(); ++v) {
    for (int s = 0; s < n; ++s) {
      auto& ord = orders[v * n + s];
      for (HalfEdge h : f.order(v)) {
        const int e = edge_of(h);
        if (is_tail(h)) {
          ord.push_back(tail_half(e * n + s));
        } else {
          const Perm inv = inverse_perm(rep.at(f.edge(e).label));
          ord.push_back(head_half(e * n + inv[s]));
        }
      }
    }
  }
  return CoverComplex{f, rep, FatGraph(t.vertices, std::move(t.edges), std::move(orders)),
                      std::move(t.projection)};
}

int boundary_count_from_monodromy(const FatGraph& f, const CoverRep& rep) {
  int total = 0;
  for (const auto& cycle : trace_boundaries(f)) {
    total += cycle_count(word_monodromy(rep, f.darts_to_word(cycle)));
  }
  return total;
}

CoverInfo validate_rep(const FatGraph& f, const CoverRep& rep) {
  const CoverComplex c = build_cover(f, rep);
  CoverInfo info;
  info.degree = rep.degree;
  info.transitive = true;
  info.invariants = invariants(c.total);
  const SurfaceInvariants base = invariants(f);
  const int n = rep.degree;
  if (info.invariants.euler != n * base.euler) throw internal_error("cover Euler characteristic is not n*chi");
  if (info.invariants.boundaries < base.boundaries || info.invariants.boundaries > n * base.boundaries) {
    throw internal_error("cover boundary count outside [k, nk]");
  }
  if (info.invariants.boundaries != boundary_count_from_monodromy(f, rep)) {
    throw internal_error("traced boundary count disagrees with boundary monodromy");
  }
  return info;
}

LiftedPath lift_path(const CoverComplex& c, const CyclicWord& w, int sheet) {
  const int n = c.rep.degree;
  if (sheet < 0 || sheet >= n) throw invalid_input("start sheet out of range");
  const auto darts = c.base.word_to_darts(w.letters());
  std::vector<Perm> inverses(c.base.edge_count());
  for (int e = 0; e < c.base.edge_count(); ++e) inverses[e] = inverse_perm(c.rep.at(c.base.edge(e).label));

  LiftedPath out;
  out.start_sheet = sheet;
  out.degree = 0;
  int cur = sheet;
  do {
    for (HalfEdge h : darts) {
      const int e = edge_of(h);
      if (is_tail(h)) {
        out.path.push_back(tail_half(c.total_edge(e, cur)));
        cur = c.rep.at(c.base.edge(e).label)[cur];
      } else {
        cur = inverses[e][cur];
        out.path.push_back(head_half(c.total_edge(e, cur)));
      }
    }
    ++out.degree;
  } while (cur != sheet);
  return out;
}

std::vector<LiftedPath> preimage_components(const CoverComplex& c, const CyclicWord& w) {
  const Perm mono = word_monodromy(c.rep, w.letters());
  std::vector<char> seen(c.rep.degree, 0);
  std::vector<LiftedPath> out;
  for (int s = 0; s < c.rep.degree; ++s) {
    if (seen[s]) continue;
    for (int x : orbit(mono, s)) seen[x] = 1;
    out.push_back(lift_path(c, w, s));
  }
  return out;
}

Word project(const CoverComplex& c, const std::vector<HalfEdge>& path) {
  Word w;
  for (HalfEdge h : path) {
    w.push_back({c.base.edge(c.projection[edge_of(h)]).label, is_tail(h) ? 1 : -1});
  }
  return w;
}

std::vector<PieceComponent> components_over(const CoverComplex& c,
                                            const std::vector<std::string>& labels,
                                            const FatGraph& piece) {
  const std::set<std::string> wanted(labels.begin(), labels.end());
  if (wanted != piece.labels()) throw invalid_input("piece/labels mismatch");
  for (const std::string& l : labels) c.rep.at(l);
  std::vector<PieceComponent> out;
  for (const auto& sheets : sheet_orbits(c.rep, labels)) {
    std::vector<int> local(c.rep.degree, -1);
    for (std::size_t i = 0; i < sheets.size(); ++i) local[sheets[i]] = static_cast<int>(i);
    CoverRep sub;
    sub.degree = static_cast<int>(sheets.size());
    for (const std::string& l : labels) {
      const Perm& p = c.rep.at(l);
      Perm q(sheets.size());
      for (std::size_t i = 0; i < sheets.size(); ++i) q[i] = local[p[sheets[i]]];
      sub.perms[l] = q;
    }
    PieceComponent comp;
    comp.sheets = sheets;
    comp.degree = sub.degree;
    comp.invariants = validate_rep(piece, sub).invariants;
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<CyclicWord> boundary_words(const FatGraph& f) {
  std::vector<CyclicWord> out;
  for (const auto& cycle : trace_boundaries(f)) out.emplace_back(f.darts_to_word(cycle));
  return out;
}

bool is_boundary_parallel(const FatGraph& f, const CyclicWord& w) {
  for (const CyclicWord& b : boundary_words(f)) {
    if (b.equal_unoriented(w)) return true;
  }
  return false;
}

CoverRep canonical_relabel(const CoverRep& rep, int start) {
  const int n = rep.degree;
  std::vector<int> label(n, -1);
  std::vector<int> queue{start};
  label[start] = 0;
  std::vector<Perm> inverses;
  for (const auto& [_, p] : rep.perms) inverses.push_back(inverse_perm(p));
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int s = queue[i];
    std::size_t g = 0;
    for (const auto& [_, p] : rep.perms) {
      for (int t : {p[s], inverses[g][s]}) {
        if (label[t] == -1) {
          label[t] = static_cast<int>(queue.size());
          queue.push_back(t);
        }
      }
      ++g;
    }
  }
  if (static_cast<int>(queue.size()) != n) throw invalid_input("disconnected cover");
  CoverRep out;
  out.degree = n;
  for (const auto& [l, p] : rep.perms) {
    Perm q(n);
    for (int s = 0; s < n; ++s) q[label[s]] = label[p[s]];
    out.perms[l] = q;
  }
  return out;
}

CoverRep conjugacy_canonical(const CoverRep& rep) {
  CoverRep best = canonical_relabel(rep, 0);
  for (int s = 1; s < rep.degree; ++s) {
    CoverRep r = canonical_relabel(rep, s);
    if (r.perms < best.perms) best = std::move(r);
  }
  return best;
}

}  // namespace liftlab
