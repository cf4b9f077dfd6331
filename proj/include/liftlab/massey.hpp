#pragma once

#include <map>
#include <string>
#include <vector>

#include "liftlab/covers.hpp"
#include "liftlab/fatgraph.hpp"

namespace liftlab {

enum class TargetKind { Boundaries, Genus };

/// Requested invariant of the cover: boundary count for planar surfaces and
/// the one-holed torus, genus otherwise.
struct AdmissibleTarget {
  TargetKind kind = TargetKind::Boundaries;
  int value = 0;
  bool operator==(const AdmissibleTarget&) const = default;
  auto operator<=>(const AdmissibleTarget&) const = default;
};

std::string format_target(const AdmissibleTarget& t);

/// Target kind used for a surface: boundary count when g = 0 or (g,k) = (1,1).
TargetKind target_kind(const SurfaceSpec& spec);

/// Every invariant value an n-sheeted cover of `spec` can take. For closed
/// surfaces this is the single genus 1 + n(g-1).
std::vector<AdmissibleTarget> admissible_targets(const SurfaceSpec& spec, int n);

/// Which constructor produced a rep, and with what parameters.
struct Provenance {
  std::string construction;
  std::string variant;
  std::map<std::string, int> parameters;
  bool operator==(const Provenance&) const = default;
};

struct Construction {
  SurfaceSpec spec;
  int degree = 0;
  AdmissibleTarget target;
  CoverRep rep;
  Provenance provenance;
};

/// sigma_b = (0 1 ... n-1); sigma_a fixes 1..m, sends m+1 to 0, 0 to n-1 and
/// j to j-1 for m+2 <= j <= n-1.
CoverRep pants_cover(int n, int m);

/// sigma_b = (0 1 ... n-1); sigma_a fixes 0..q-1 and swaps (q,q+1), (q+2,q+3), ...
CoverRep s11_cover(int n, int q);

/// Even k >= 4 on labels a2..ak: sigma(a2) = pi[0] (an n-cycle), and each
/// later pair gets (pi[i], pi[i]^-1).
CoverRep planar_cover(int n, int k, const std::vector<Perm>& pi);

/// Odd k >= 5: pi[0] on a2, pairs (a3,a4), ..., (a_{k-2}, a_{k-1}) as in the
/// even case, and a free permutation `rho` on a_k.
CoverRep planar_cover_odd(int n, int k, const std::vector<Perm>& pi, const Perm& rho);

/// s11_cover on (x1, y1), identity on the other handles.
CoverRep sg1_cover(int n, int g, int q);

/// u = 0: sigma(c) = (0 ... n-1). u >= 1: sigma(y1) = (0 ... u),
/// sigma(c) = (u ... n-1). Everything else is the identity.
CoverRep sg2_cover(int n, int g, int u);

/// Cover of S_{g,k}, k >= 3, with the requested genus.
Construction sgk_cover(int n, int g, int k, int target_genus);

/// sigma(d1) = (0 ... n-1) on generators c_i, d_i of the closed surface.
struct ClosedCover {
  CoverRep rep;      // on the closed surface's generators
  CoverRep q_rep;    // restriction to the regular neighborhood of the generators
  bool relator_identity = false;
  int genus = 0;     // genus of the closed cover
};
ClosedCover closed_cover(int n, int g);

/// Runs the constructor for the surface's case, searching parameters in a
/// fixed order, and checks that the realized invariant equals the target.
/// Throws InvalidInput for inadmissible targets and Internal when the search
/// is exhausted.
Construction realize(const SurfaceSpec& spec, int n, const AdmissibleTarget& target);

/// Every parameter choice of the base constructor, in search order, with the
/// invariant it realizes. Used for completeness checks.
std::vector<Construction> enumerate_constructions(const SurfaceSpec& spec, int n);

/// Invariant of the induced cover in the kind used by the surface's targets.
int realized_value(const SurfaceSpec& spec, const CoverInfo& info);

/// Permutation with exactly c cycles: (0 1 ... n-c), the rest fixed.
Perm perm_with_cycles(int n, int c);

}  // namespace liftlab
