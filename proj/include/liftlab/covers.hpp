#pragma once

#include <map>
#include <string>
#include <vector>

#include "liftlab/fatgraph.hpp"
#include "liftlab/words.hpp"

namespace liftlab {

/// Permutation of sheets 0..n-1, stored as the image list.
using Perm = std::vector<int>;

Perm identity_perm(int n);
/// Builds a permutation from disjoint cycles, e.g. {{0, 1, 2}}.
Perm perm_from_cycles(int n, const std::vector<std::vector<int>>& cycles);
Perm inverse_perm(const Perm& p);
/// `then(first(s))`.
Perm compose(const Perm& first, const Perm& then);
int cycle_count(const Perm& p);
bool is_full_cycle(const Perm& p);
bool is_identity(const Perm& p);
/// Orbit of `s` under repeated application, starting with s.
std::vector<int> orbit(const Perm& p, int s);
/// Throws unless `p` is a bijection of 0..n-1.
void check_perm(const Perm& p, int n);
std::string format_cycles(const Perm& p);

/// Monodromy: one permutation per base generator label.
struct CoverRep {
  int degree = 1;
  std::map<std::string, Perm> perms;

  const Perm& at(const std::string& label) const;
  bool operator==(const CoverRep&) const = default;
};

CoverRep identity_rep(const FatGraph& f, int n);

/// Word g1 g2 ... gL sends s to sigma_gL(...sigma_g1(s)...).
Perm word_monodromy(const CoverRep& rep, const Word& w);

/// Orbits of the group generated by the given labels (all labels if empty).
std::vector<std::vector<int>> sheet_orbits(const CoverRep& rep,
                                           const std::vector<std::string>& labels = {});
bool is_transitive(const CoverRep& rep);

struct CoverInfo {
  int degree = 1;
  SurfaceInvariants invariants;
  bool transitive = false;
};

/// Invariants of the induced cover, checked against chi~ = n chi and
/// k <= k~ <= n k. Throws "disconnected cover" for non-transitive input.
CoverInfo validate_rep(const FatGraph& f, const CoverRep& rep);

/// Boundary count of the cover from the monodromy of the base boundary words
/// alone, without building the cover graph.
int boundary_count_from_monodromy(const FatGraph& f, const CoverRep& rep);

/// Cover fat graph. Vertex (v, s) has id v*n + s, edge (e, s) has id e*n + s
/// and runs from (tail(e), s) to (head(e), sigma_e(s)).
struct CoverComplex {
  FatGraph base;
  CoverRep rep;
  FatGraph total;
  std::vector<int> projection;  // total edge -> base edge

  int sheet_of_edge(int total_edge) const { return total_edge % rep.degree; }
  int total_edge(int base_edge, int sheet) const { return base_edge * rep.degree + sheet; }
};

CoverComplex build_cover(const FatGraph& f, const CoverRep& rep);

struct LiftedPath {
  int start_sheet = 0;
  int degree = 1;
  std::vector<HalfEdge> path;  // darts of the cover graph
};

/// Lift of w starting at sheet s, followed until it closes up.
LiftedPath lift_path(const CoverComplex& c, const CyclicWord& w, int sheet);

/// One lift per orbit of the word's monodromy, in increasing start sheet.
std::vector<LiftedPath> preimage_components(const CoverComplex& c, const CyclicWord& w);

/// Base word of a lifted path (projection letter by letter).
Word project(const CoverComplex& c, const std::vector<HalfEdge>& path);

struct PieceComponent {
  std::vector<int> sheets;
  int degree = 0;
  SurfaceInvariants invariants;
};

/// Components of the preimage of a subsurface whose one-vertex model `piece`
/// uses exactly `labels`: one per orbit of those generators, with the
/// invariants of the restricted cover of the piece.
std::vector<PieceComponent> components_over(const CoverComplex& c,
                                            const std::vector<std::string>& labels,
                                            const FatGraph& piece);

std::vector<CyclicWord> boundary_words(const FatGraph& f);

/// True iff w is a boundary cycle word or its inverse, up to rotation.
bool is_boundary_parallel(const FatGraph& f, const CyclicWord& w);

/// Relabels sheets in BFS order from `start`, visiting generators in label
/// order, each forwards then backwards.
CoverRep canonical_relabel(const CoverRep& rep, int start = 0);

/// Canonical representative of the conjugacy class (least relabeling over
/// all start sheets). Requires a transitive rep.
CoverRep conjugacy_canonical(const CoverRep& rep);

}  // namespace liftlab
