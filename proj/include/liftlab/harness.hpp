#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liftlab/covers.hpp"
#include "liftlab/curves.hpp"
#include "liftlab/massey.hpp"

namespace liftlab {

/// How non-simplicity of the curve downstairs was established.
enum class NonSimpleSource { Computed, Homology, PaperClaim };
std::string to_string(NonSimpleSource s);
NonSimpleSource nonsimple_source_from_string(const std::string& s);

struct Certificate {
  SurfaceSpec spec;
  int degree = 0;
  AdmissibleTarget target;
  Provenance provenance;
  CoverRep rep;
  SurfaceInvariants cover;  // the closed cover itself for closed surfaces

  std::string curve_family;
  int curve_parameter = 0;
  std::string word;  // ambient alphabet
  std::string embedding;
  int expected_i = 0;
  std::optional<int> computed_i;  // absent for closed surfaces
  NonSimpleSource nonsimple = NonSimpleSource::Computed;
  bool essential = false;

  int start_sheet = 0;
  int lift_degree = 0;
  int lift_length = 0;
  int lift_i = -1;
  bool vertex_simple = false;
  std::string simplicity_domain;  // "cover", or the neighborhood cover for closed surfaces

  std::vector<std::string> checks;  // passed checks, in order
  bool passed = false;
  std::string failure;  // first violated invariant
};

/// constructor -> validate -> curve -> downstairs i -> lift -> upstairs i.
/// Never throws for a failed check; the failure is recorded instead.
Certificate verify_construction(const Construction& c);
Certificate verify_construction(const Construction& c, const CurveSelection& curve);
Certificate verify_instance(const SurfaceSpec& spec, int n, const AdmissibleTarget& target);
std::vector<Certificate> verify_all_targets(const SurfaceSpec& spec, int n);

/// Re-derives every recorded number from the spec, rep, word and start sheet
/// alone and returns the list of disagreements (empty when it re-validates).
std::vector<std::string> recheck(const Certificate& cert);

struct GridBounds {
  int max_g = 0;
  int max_k = 0;
  int min_n = 2;
  int max_n = 1;
  bool closed = false;  // add closed genera 2..max_g
};

struct SurfaceDegree {
  SurfaceSpec spec;
  int degree = 0;
};

/// Surfaces with chi < 0, 0 <= g <= max_g, 1 <= k <= max_k and degrees in
/// [min_n, max_n], in lexicographic (g, k, n) order.
std::vector<SurfaceDegree> grid_cells(const GridBounds& bounds);

struct Report {
  std::vector<Certificate> certificates;
  int passed = 0;
  int failed = 0;
};

/// One certificate per (surface, degree, admissible target). The ordering is
/// independent of `jobs`.
Report verify_all(const GridBounds& bounds, int jobs = 1);

struct MinDegResult {
  std::string word;
  SurfaceSpec surface;
  std::optional<int> degree;
  std::optional<CoverRep> witness;
  int witness_sheet = 0;
  int bound = 0;
  bool exhaustive = false;
  long classes_examined = 0;
};

/// Smallest degree d <= max_degree with a transitive rep, up to conjugacy,
/// for which some preimage component of w is simple.
MinDegResult mindeg_search(const FatGraph& f, const SurfaceSpec& spec, const CyclicWord& w, int max_degree);

}  // namespace liftlab
