#include "liftlab/selfint.hpp"

#include "liftlab/error.hpp"

namespace liftlab {

namespace {

bool path_is_power(const std::vector<HalfEdge>& p) {
  const std::size_t n = p.size();
  for (std::size_t t = 1; t < n; ++t) {
    if (n % t != 0) continue;
    bool same = true;
    for (std::size_t i = 0; i < n && same; ++i) same = p[i] == p[(i + t) % n];
    if (same) return true;
  }
  return false;
}

// `a` is met before `b` when turning from `from` along the cyclic order.
bool comes_first(const FatGraph& f, HalfEdge from, HalfEdge a, HalfEdge b) {
  return f.cyclic_distance(from, a) < f.cyclic_distance(from, b);
}

// Chords (a1,b1) and (a2,b2) on four distinct half-edges at one vertex.
bool chords_interleave(const FatGraph& f, HalfEdge a1, HalfEdge b1, HalfEdge a2, HalfEdge b2) {
  const int span = f.cyclic_distance(a1, b1);
  return (f.cyclic_distance(a1, a2) < span) != (f.cyclic_distance(a1, b2) < span);
}

}  // namespace

std::vector<HalfEdge> closed_path(const FatGraph& f, std::vector<HalfEdge> darts) {
  if (darts.empty()) throw invalid_input("null-homotopic");
  const int half_count = 2 * f.edge_count();
  const std::size_t n = darts.size();
  for (std::size_t i = 0; i < n; ++i) {
    const HalfEdge cur = darts[i];
    const HalfEdge next = darts[(i + 1) % n];
    if (cur < 0 || cur >= half_count) throw invalid_input("path references an unknown half-edge");
    if (f.vertex(opposite(cur)) != f.vertex(next)) throw invalid_input("path is not closed");
    if (next == opposite(cur)) throw invalid_input("path is not cyclically reduced");
  }
  return darts;
}

std::vector<StrandMeeting> strand_meetings(const FatGraph& f, const std::vector<HalfEdge>& path) {
  const auto d = closed_path(f, path);
  const int n = static_cast<int>(d.size());
  if (path_is_power(d)) throw invalid_input("proper power unsupported");
  auto at = [&](long i) { return d[static_cast<std::size_t>(((i % n) + n) % n)]; };
  // Two strands sharing more than 2n edges would be the same bi-infinite line.
  const int bound = 2 * n + 1;

  std::vector<StrandMeeting> out;
  for (int s = 0; s < n; ++s) {
    const HalfEdge in1 = opposite(at(s - 1));
    const HalfEdge out1 = at(s);
    const int v = f.vertex(out1);
    for (int t = 0; t < n; ++t) {
      if (t == s || f.vertex(at(t)) != v) continue;
      const HalfEdge in2 = opposite(at(t - 1));
      const HalfEdge out2 = at(t);
      // The overlap must begin here: the second strand avoids our incoming band.
      if (in1 == in2 || in1 == out2) continue;

      StrandMeeting m;
      m.first = s;
      m.second = t;
      if (out1 != out2 && out1 != in2) {
        m.linked = chords_interleave(f, in1, out1, in2, out2);
        out.push_back(m);
        continue;
      }
      m.reversed = (out1 == in2);
      const HalfEdge other_in = m.reversed ? out2 : in2;
      // Second strand's k-th dart along the overlap direction.
      auto second_dart = [&](long k) { return m.reversed ? opposite(at(t - 1 - k)) : at(t + k); };
      int p = 1;
      while (at(s + p) == second_dart(p)) {
        if (++p > bound) throw invalid_input("degenerate (reversible) class unsupported");
      }
      m.overlap = p;
      const HalfEdge arrival = opposite(at(s + p - 1));
      const bool first_left_at_start = comes_first(f, out1, in1, other_in);
      const bool first_right_at_end = comes_first(f, arrival, at(s + p), second_dart(p));
      m.linked = first_left_at_start == first_right_at_end;
      out.push_back(m);
    }
  }
  return out;
}

int self_intersection(const FatGraph& f, const std::vector<HalfEdge>& path) {
  int linked = 0;
  for (const StrandMeeting& m : strand_meetings(f, path)) linked += m.linked ? 1 : 0;
  if (linked % 2 != 0) throw internal_error("unpaired strand crossing");
  return linked / 2;
}

int self_intersection(const FatGraph& f, const CyclicWord& w) {
  return self_intersection(f, f.word_to_darts(w.letters()));
}

bool is_simple(const FatGraph& f, const std::vector<HalfEdge>& path) {
  return self_intersection(f, path) == 0;
}

bool is_simple(const FatGraph& f, const CyclicWord& w) { return self_intersection(f, w) == 0; }

bool vertex_simple_certificate(const FatGraph& f, const std::vector<HalfEdge>& path) {
  const auto d = closed_path(f, path);
  std::vector<char> seen(f.vertex_count(), 0);
  for (HalfEdge h : d) {
    const int v = f.vertex(h);
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

}  // namespace liftlab
