#pragma once

#include <string>

#include <boost/multiprecision/float128.hpp>
#include <vector>

#include "liftlab/fatgraph.hpp"
#include "liftlab/words.hpp"

namespace liftlab {

// Deep group elements lose about fourteen digits; quad precision leaves margin.
using Real = boost::multiprecision::float128;

/// Real 2x2 matrix acting on the upper half plane by z -> (a z + b)/(c z + d).
struct Mobius {
  Real a = 1, b = 0, c = 0, d = 1;

  Mobius operator*(const Mobius& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Mobius inverse() const { return {d, -b, -c, a}; }
  Real det() const { return a * d - b * c; }
};

/// Closed interval on the real line, given by center and radius.
struct Interval {
  Real center = 0;
  Real radius = 0;
};

/// Generator of a Schottky group realizing a one-vertex fat graph: maps the
/// exterior of the disc over `head` onto the interior of the disc over `tail`.
struct MobiusGen {
  std::string label;
  Mobius matrix;
  Interval tail;
  Interval head;
};

/// Intervals laid out along the line in the cyclic order of the vertex.
std::vector<MobiusGen> schottky_rep(const FatGraph& f);

/// Largest deviation of the pairing property over sample points on the
/// boundary circles; used to check a realization numerically.
Real pairing_defect(const MobiusGen& g);

struct OracleResult {
  int count = 0;
  bool stable = false;
  int depth = 0;
};

/// Counts translates of the axis of `w` linked with the axis itself, modulo
/// the cyclic subgroup generated by `w`, using every reduced word of length
/// at most `depth` as a translating element. Stable when depth-1 agrees.
OracleResult oracle_self_intersection(const FatGraph& f, const CyclicWord& w, int depth);

/// Raises the depth from length(w)+1 until two consecutive depths agree, or
/// `max_depth` is reached.
OracleResult oracle_self_intersection_auto(const FatGraph& f, const CyclicWord& w, int max_depth);

}  // namespace liftlab
