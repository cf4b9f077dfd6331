#pragma once

#include <vector>

#include "liftlab/fatgraph.hpp"
#include "liftlab/words.hpp"

namespace liftlab {

/// One ordered pair of passages whose lifts to the universal cover meet, with
/// the common segment starting at passage `first` of the first strand.
struct StrandMeeting {
  int first = 0;         // passage index on the first strand
  int second = 0;        // passage index on the second strand
  bool reversed = false; // second strand runs against the first along the overlap
  int overlap = 0;       // number of shared edges
  bool linked = false;
};

/// Closed reduced edge-path on a fat graph, as a cyclic dart sequence.
/// Validates closure and the absence of backtracking (including wrap-around).
std::vector<HalfEdge> closed_path(const FatGraph& f, std::vector<HalfEdge> darts);

/// Every meeting of two distinct strands through a common vertex, in the
/// orientation where the overlap begins at `first`. Each geometric
/// crossing appears twice, once from either strand.
std::vector<StrandMeeting> strand_meetings(const FatGraph& f, const std::vector<HalfEdge>& path);

/// Minimal self-intersection number of the free homotopy class of a closed
/// edge-path. Rejects proper powers.
int self_intersection(const FatGraph& f, const std::vector<HalfEdge>& path);
int self_intersection(const FatGraph& f, const CyclicWord& w);

bool is_simple(const FatGraph& f, const std::vector<HalfEdge>& path);
bool is_simple(const FatGraph& f, const CyclicWord& w);

/// True iff the closed path visits every vertex at most once, which makes it
/// an embedded cycle of the spine. False is inconclusive.
bool vertex_simple_certificate(const FatGraph& f, const std::vector<HalfEdge>& path);

}  // namespace liftlab
