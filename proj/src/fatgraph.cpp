#include "liftlab/fatgraph.hpp"

#include <numeric>

#include "liftlab/error.hpp"

namespace liftlab {

std::string SurfaceSpec::name() const {
  if (closed()) return "S_" + std::to_string(genus);
  return "S_{" + std::to_string(genus) + "," + std::to_string(boundaries) + "}";
}

bool is_connected(int vertex_count, const std::vector<Edge>& edges) {
  if (vertex_count == 0) return false;
  std::vector<int> parent(vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = vertex_count;
  for (const Edge& e : edges) {
    const int a = find(e.tail);
    const int b = find(e.head);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

FatGraph::FatGraph(int vertex_count, std::vector<Edge> edges,
                   std::vector<std::vector<HalfEdge>> orders)
    : edges_(std::move(edges)), orders_(std::move(orders)) {
  if (vertex_count < 1 || static_cast<int>(orders_.size()) != vertex_count) {
    throw invalid_input("fat graph needs one cyclic order per vertex");
  }
  const int half_count = 2 * static_cast<int>(edges_.size());
  for (const Edge& e : edges_) {
    if (e.tail < 0 || e.tail >= vertex_count || e.head < 0 || e.head >= vertex_count) {
      throw invalid_input("edge '" + e.label + "' references a missing vertex");
    }
  }
  position_.assign(half_count, -1);
  std::size_t listed = 0;
  for (int v = 0; v < vertex_count; ++v) {
    for (std::size_t i = 0; i < orders_[v].size(); ++i) {
      const HalfEdge h = orders_[v][i];
      if (h < 0 || h >= half_count) throw invalid_input("cyclic order lists an unknown half-edge");
      if (position_[h] != -1) throw invalid_input("half-edge listed twice in cyclic orders");
      if (vertex(h) != v) throw invalid_input("half-edge listed at a vertex it is not incident to");
      position_[h] = static_cast<int>(i);
      ++listed;
    }
  }
  if (static_cast<int>(listed) != half_count) throw invalid_input("cyclic orders omit a half-edge");
  if (!is_connected(vertex_count, edges_)) throw invalid_input("not connected");
}

HalfEdge FatGraph::successor(HalfEdge h) const {
  const auto& ord = orders_[vertex(h)];
  return ord[(position_[h] + 1) % ord.size()];
}

Word FatGraph::darts_to_word(const std::vector<HalfEdge>& darts) const {
  Word w;
  w.reserve(darts.size());
  for (HalfEdge h : darts) w.push_back(dart_letter(h));
  return w;
}

int FatGraph::edge_by_label(const std::string& label) const {
  int found = -1;
  for (int e = 0; e < edge_count(); ++e) {
    if (edges_[e].label != label) continue;
    if (found != -1) throw invalid_input("label '" + label + "' is not unique");
    found = e;
  }
  if (found == -1) throw invalid_input("unknown generator '" + label + "'");
  return found;
}

std::set<std::string> FatGraph::labels() const {
  std::set<std::string> out;
  for (const Edge& e : edges_) out.insert(e.label);
  return out;
}

std::vector<HalfEdge> FatGraph::word_to_darts(const Word& w) const {
  std::vector<HalfEdge> darts;
  darts.reserve(w.size());
  for (const Letter& l : w) {
    const int e = edge_by_label(l.gen);
    darts.push_back(l.sign > 0 ? tail_half(e) : head_half(e));
  }
  for (std::size_t i = 0; i < darts.size(); ++i) {
    const HalfEdge next = darts[(i + 1) % darts.size()];
    if (vertex(opposite(darts[i])) != vertex(next)) throw invalid_input("word is not a closed path");
  }
  return darts;
}

std::vector<std::vector<HalfEdge>> trace_boundaries(const FatGraph& f) {
  const int half_count = 2 * f.edge_count();
  std::vector<char> seen(half_count, 0);
  std::vector<std::vector<HalfEdge>> cycles;
  for (HalfEdge start = 0; start < half_count; ++start) {
    if (seen[start]) continue;
    std::vector<HalfEdge> cycle;
    HalfEdge h = start;
    while (!seen[h]) {
      seen[h] = 1;
      cycle.push_back(h);
      h = f.successor(opposite(h));
    }
    if (h != start) throw internal_error("boundary tracing did not close");
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

SurfaceInvariants invariants(const FatGraph& f) {
  SurfaceInvariants inv;
  inv.euler = f.vertex_count() - f.edge_count();
  inv.boundaries = static_cast<int>(trace_boundaries(f).size());
  const int twice_genus = 2 - inv.euler - inv.boundaries;
  if (twice_genus < 0 || twice_genus % 2 != 0) {
    throw internal_error("non-orientable or corrupt ribbon data");
  }
  inv.genus = twice_genus / 2;
  return inv;
}

namespace {

struct ModelLayout {
  std::vector<std::string> planar;                           // boundary generators
  std::vector<std::pair<std::string, std::string>> handles;  // (x, y) pairs
  bool pants = false;
  bool relator = false;  // handles read [x, y] = x y X Y on the boundary
};

ModelLayout layout_for(const SurfaceSpec& spec) {
  if (spec.closed() || spec.euler() >= 0) throw invalid_input("unsupported surface " + spec.name());
  ModelLayout m;
  const int g = spec.genus;
  const int k = spec.boundaries;
  if (g == 0 && k == 3) {
    m.planar = {"a", "b"};
    m.pants = true;
    return m;
  }
  if (g == 1 && k == 1) {
    m.handles = {{"a", "b"}};
    return m;
  }
  if (k == 2) {
    m.planar = {"c"};
  } else if (k >= 3) {
    for (int i = 2; i <= k; ++i) m.planar.push_back("a" + std::to_string(i));
  }
  for (int i = 1; i <= g; ++i) {
    m.handles.emplace_back("x" + std::to_string(i), "y" + std::to_string(i));
  }
  return m;
}

FatGraph one_vertex_model(const ModelLayout& m) {
  std::vector<Edge> edges;
  std::vector<HalfEdge> order;
  auto add = [&](const std::string& label) {
    edges.push_back({label, 0, 0});
    return static_cast<int>(edges.size()) - 1;
  };
  for (std::size_t i = 0; i < m.planar.size(); ++i) {
    const int e = add(m.planar[i]);
    // All boundary generators share one orientation, except the pants model
    // where b is reversed so that a b^-1 is the third boundary.
    if (m.pants && i > 0) {
      order.insert(order.end(), {head_half(e), tail_half(e)});
    } else {
      order.insert(order.end(), {tail_half(e), head_half(e)});
    }
  }
  for (const auto& [x, y] : m.handles) {
    const int ex = add(x);
    const int ey = add(y);
    if (m.relator) {
      order.insert(order.end(), {tail_half(ex), head_half(ey), head_half(ex), tail_half(ey)});
    } else {
      order.insert(order.end(), {tail_half(ex), tail_half(ey), head_half(ex), head_half(ey)});
    }
  }
  return FatGraph(1, std::move(edges), {std::move(order)});
}

}  // namespace

std::vector<std::string> model_labels(const SurfaceSpec& spec) {
  if (spec.closed()) {
    std::vector<std::string> out;
    for (int i = 1; i <= spec.genus; ++i) {
      out.push_back("c" + std::to_string(i));
      out.push_back("d" + std::to_string(i));
    }
    return out;
  }
  const ModelLayout m = layout_for(spec);
  std::vector<std::string> out = m.planar;
  for (const auto& [x, y] : m.handles) {
    out.push_back(x);
    out.push_back(y);
  }
  return out;
}

FatGraph build_fatgraph(const SurfaceSpec& spec) { return one_vertex_model(layout_for(spec)); }

FatGraph regular_neighborhood(int genus) {
  if (genus < 1) throw invalid_input("regular neighborhood needs genus >= 1");
  ModelLayout m;
  m.relator = true;
  for (int i = 1; i <= genus; ++i) {
    m.handles.emplace_back("c" + std::to_string(i), "d" + std::to_string(i));
  }
  return one_vertex_model(m);
}

}  // namespace liftlab
