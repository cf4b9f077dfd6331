#include "liftlab/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "liftlab/error.hpp"

namespace liftlab {

using boost::multiprecision::exp;
using boost::multiprecision::fabs;
using boost::multiprecision::floor;
using boost::multiprecision::log;
using boost::multiprecision::sqrt;

namespace {

constexpr Real kSpacing = 2.5L;
constexpr Real kRadius = 1.0L;

Real apply(const Mobius& m, Real z) { return (m.a * z + m.b) / (m.c * z + m.d); }

struct Point {
  Real x;
  Real y;
};

Point apply(const Mobius& m, Point z) {
  // (a z + b) / (c z + d) with z = x + iy
  const Real nx = m.a * z.x + m.b;
  const Real ny = m.a * z.y;
  const Real dx = m.c * z.x + m.d;
  const Real dy = m.c * z.y;
  const Real den = dx * dx + dy * dy;
  return {(nx * dx + ny * dy) / den, (ny * dx - nx * dy) / den};
}

Real modulus(Point z) { return sqrt(z.x * z.x + z.y * z.y); }

struct Line {
  Real x;  // endpoints in coordinates where the reference axis is 0..infinity
  Real y;
  int length;
};

struct Generators {
  std::vector<Mobius> letters;  // index 2e: edge e, 2e+1: its inverse
};

Generators letter_matrices(const std::vector<MobiusGen>& gens) {
  Generators out;
  for (const MobiusGen& g : gens) {
    out.letters.push_back(g.matrix);
    out.letters.push_back(g.matrix.inverse());
  }
  return out;
}

}  // namespace

std::vector<MobiusGen> schottky_rep(const FatGraph& f) {
  if (f.vertex_count() != 1) throw invalid_input("oracle needs a one-vertex fat graph");
  std::vector<MobiusGen> gens;
  for (int e = 0; e < f.edge_count(); ++e) {
    MobiusGen g;
    g.label = f.edge(e).label;
    g.tail = {kSpacing * f.position(tail_half(e)), kRadius};
    g.head = {kSpacing * f.position(head_half(e)), kRadius};
    const Real p = g.head.center;
    const Real q = g.tail.center;
    const Real s = kRadius;
    // z -> q - s^2 / (z - p)
    g.matrix = {q, -s * s - p * q, 1, -p};
    gens.push_back(g);
  }
  return gens;
}

Real pairing_defect(const MobiusGen& g) {
  Real worst = fabs(g.matrix.det() - g.head.radius * g.tail.radius);
  for (int i = 1; i < 16; ++i) {
    const Real theta = Real(std::numbers::pi_v<long double>) * i / 16;
    const Point z{g.head.center + g.head.radius * cos(theta), g.head.radius * sin(theta)};
    const Point w = apply(g.matrix, z);
    worst = std::max(worst, Real(fabs(modulus({w.x - g.tail.center, w.y}) - g.tail.radius)));
    if (w.y <= 0) worst = std::max<Real>(worst, 1);
  }
  // A point outside the head disc must land inside the tail disc.
  const Real outside = apply(g.matrix, g.head.center + 3 * g.head.radius);
  if (fabs(outside - g.tail.center) >= g.tail.radius) worst = std::max<Real>(worst, 1);
  return worst;
}

OracleResult oracle_self_intersection(const FatGraph& f, const CyclicWord& w, int depth) {
  const auto gens = schottky_rep(f);
  const Generators mats = letter_matrices(gens);
  const auto darts = f.word_to_darts(w.letters());
  if (depth < static_cast<int>(darts.size())) throw invalid_input("oracle depth below word length");

  Mobius mw;
  for (HalfEdge h : darts) mw = mw * mats.letters[h];

  const Real disc = (mw.a - mw.d) * (mw.a - mw.d) + 4 * mw.b * mw.c;
  if (disc <= 0 || mw.c == 0) throw internal_error("oracle: element is not hyperbolic");
  const Real root = sqrt(disc);
  const Real fix1 = ((mw.a - mw.d) - root) / (2 * mw.c);
  const Real fix2 = ((mw.a - mw.d) + root) / (2 * mw.c);

  const Mobius to_axis{1, -fix1, 1, -fix2};
  const Mobius conj = to_axis * mw * to_axis.inverse();
  const Real lambda = apply(conj, Real(1));
  const Real period = fabs(log(lambda));
  if (!(period > 1e-9L)) throw internal_error("oracle: degenerate translation length");

  const Real span = kSpacing * (2 * f.edge_count() - 1);
  const Real anchor = log(modulus(apply(to_axis, Point{span / 2, span})));

  std::vector<Line> lines;
  // Elements are grown on the left, so endpoints g(fix) are carried as points
  // and each step applies a single generator; composing matrices instead
  // loses too much precision at depth.
  struct Frame {
    Real p1;
    Real p2;
    int first;
    int length;
  };
  std::vector<Frame> stack{{fix1, fix2, -1, 0}};
  while (!stack.empty()) {
    const Frame fr = stack.back();
    stack.pop_back();
    const Real dx = fr.p1 - fix2;
    const Real dy = fr.p2 - fix2;
    if (dx != 0 && dy != 0) {
      const Real x = (fr.p1 - fix1) / dx;
      const Real y = (fr.p2 - fix1) / dy;
      const Real lo = std::min(fabs(x), fabs(y));
      const Real hi = std::max(fabs(x), fabs(y));
      if (x * y < 0 && lo > 1e-14L * hi) {
        // Translate along the axis so the crossing height lies in one period.
        const Real height = 0.5L * log(-x * y) - anchor;
        const Real shift = floor(height / period + 0.5L);
        // Far translates sit next to the fixed points where the coordinates
        // cancel; their window representative is reached by a longer word.
        if (fabs(shift) <= 1) {
          const Real scale = exp(-shift * period);
          lines.push_back({x * scale, y * scale, fr.length});
        }
      }
    }
    if (fr.length == depth) continue;
    for (int l = 0; l < static_cast<int>(mats.letters.size()); ++l) {
      if (fr.first >= 0 && l == opposite(fr.first)) continue;
      const Mobius& m = mats.letters[l];
      stack.push_back({apply(m, fr.p1), apply(m, fr.p2), l, fr.length + 1});
    }
  }

  std::sort(lines.begin(), lines.end(), [](const Line& p, const Line& q) { return p.x < q.x; });
  auto same = [](const Line& p, const Line& q) {
    auto close = [](Real u, Real v) {
      return fabs(u - v) <= 1e-15L * std::max<Real>(1, std::max(fabs(u), fabs(v)));
    };
    return close(p.x, q.x) && close(p.y, q.y);
  };
  std::vector<Line> distinct;
  for (const Line& line : lines) {
    bool merged = false;
    for (auto it = distinct.rbegin(); it != distinct.rend(); ++it) {
      if (!same(*it, line)) {
        if (line.x - it->x > 1e-14L * std::max<Real>(1, fabs(line.x))) break;
        continue;
      }
      it->length = std::min(it->length, line.length);
      merged = true;
      break;
    }
    if (!merged) distinct.push_back(line);
  }

  int at_depth = 0;
  int below = 0;
  for (const Line& line : distinct) {
    ++at_depth;
    if (line.length < depth) ++below;
  }
  OracleResult r;
  r.depth = depth;
  r.stable = at_depth == below && at_depth % 2 == 0;
  r.count = at_depth / 2;
  return r;
}

OracleResult oracle_self_intersection_auto(const FatGraph& f, const CyclicWord& w, int max_depth) {
  const int start = static_cast<int>(w.length()) + 1;
  OracleResult last;
  for (int depth = start; depth <= max_depth; ++depth) {
    OracleResult r = oracle_self_intersection(f, w, depth);
    if (r.stable && depth > start && last.stable && last.count == r.count) return r;
    last = r;
  }
  last.stable = false;
  return last;
}

}  // namespace liftlab
