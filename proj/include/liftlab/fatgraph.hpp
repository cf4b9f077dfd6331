#pragma once

#include <string>
#include <vector>

#include "liftlab/words.hpp"

namespace liftlab {

/// Half-edge 2e is the tail end of edge e, 2e+1 its head end. A half-edge
/// doubles as a dart: traversal departing through that end. Dart 2e reads
/// the edge label forwards, dart 2e+1 reads its inverse.
using HalfEdge = int;

inline constexpr int edge_of(HalfEdge h) { return h >> 1; }
inline constexpr bool is_tail(HalfEdge h) { return (h & 1) == 0; }
inline constexpr HalfEdge opposite(HalfEdge h) { return h ^ 1; }
inline constexpr HalfEdge tail_half(int e) { return 2 * e; }
inline constexpr HalfEdge head_half(int e) { return 2 * e + 1; }

struct SurfaceSpec {
  int genus = 0;
  int boundaries = 0;

  bool closed() const { return boundaries == 0; }
  int euler() const { return 2 - 2 * genus - boundaries; }
  std::string name() const;
  auto operator<=>(const SurfaceSpec&) const = default;
};

struct Edge {
  std::string label;
  int tail = 0;
  int head = 0;
  bool operator==(const Edge&) const = default;
};

struct SurfaceInvariants {
  int euler = 0;
  int genus = 0;
  int boundaries = 0;
  bool operator==(const SurfaceInvariants&) const = default;
};

/// Ribbon graph: a graph with a cyclic order of half-edges at every vertex.
/// Immutable after construction; the constructor validates the structure.
class FatGraph {
 public:
  FatGraph(int vertex_count, std::vector<Edge> edges, std::vector<std::vector<HalfEdge>> orders);

  int vertex_count() const { return static_cast<int>(orders_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[e]; }
  const std::vector<std::vector<HalfEdge>>& orders() const { return orders_; }
  const std::vector<HalfEdge>& order(int v) const { return orders_[v]; }

  /// Vertex a half-edge is attached to (the departure vertex of the dart).
  int vertex(HalfEdge h) const {
    return is_tail(h) ? edges_[edge_of(h)].tail : edges_[edge_of(h)].head;
  }
  int position(HalfEdge h) const { return position_[h]; }
  int degree(int v) const { return static_cast<int>(orders_[v].size()); }
  HalfEdge successor(HalfEdge h) const;

  /// Steps from `from` to `to` along the cyclic order at their common vertex.
  int cyclic_distance(HalfEdge from, HalfEdge to) const {
    const int d = degree(vertex(from));
    return ((position_[to] - position_[from]) % d + d) % d;
  }

  Letter dart_letter(HalfEdge h) const { return {edges_[edge_of(h)].label, is_tail(h) ? 1 : -1}; }
  Word darts_to_word(const std::vector<HalfEdge>& darts) const;

  /// Darts of a word on a graph whose labels are unique; throws on unknown
  /// labels or when consecutive darts do not form a path.
  std::vector<HalfEdge> word_to_darts(const Word& w) const;
  int edge_by_label(const std::string& label) const;
  std::set<std::string> labels() const;

  bool operator==(const FatGraph&) const = default;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<HalfEdge>> orders_;
  std::vector<int> position_;
};

/// Canonical one-vertex model of S_{g,k}, k >= 1, chi < 0. Throws
/// "unsupported surface" otherwise.
FatGraph build_fatgraph(const SurfaceSpec& spec);

/// Generator labels of the canonical model, in edge order.
std::vector<std::string> model_labels(const SurfaceSpec& spec);

/// Each boundary cycle as a dart sequence; next(h) = successor(opposite(h)).
std::vector<std::vector<HalfEdge>> trace_boundaries(const FatGraph& f);

SurfaceInvariants invariants(const FatGraph& f);

/// Genus-g one-boundary model on generators c1,d1,...,cg,dg whose boundary
/// reads the product of commutators [c1,d1]...[cg,dg].
FatGraph regular_neighborhood(int genus);

bool is_connected(int vertex_count, const std::vector<Edge>& edges);

}  // namespace liftlab
