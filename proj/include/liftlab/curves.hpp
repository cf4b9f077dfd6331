#pragma once

#include <optional>
#include <string>

#include "liftlab/fatgraph.hpp"
#include "liftlab/massey.hpp"
#include "liftlab/words.hpp"

namespace liftlab {

/// A named curve family member on its home surface with its closed-form
/// self-intersection number.
struct CurveInstance {
  std::string family;  // gamma, tau, eta, sigma, a2bn, zeta, or a literal word
  int parameter = 0;
  SurfaceSpec home;
  CyclicWord word;
  int expected_i = 0;
};

/// gamma^k = a b^k on S_{0,3}               i = k      (k >= 1)
/// tau^j   = a2 a3 ... ak a2^j on S_{0,k}    i = j      (j >= 1, k >= 4)
/// eta^k   = a b a b^k on S_{1,1}            i = k - 2  (k >= 3)
/// sigma^n = a b a^n b on S_{1,1}            i = n - 2  (n >= 3)
/// a2bn    = a^2 b^n on S_{1,1}              i = n - 1  (n >= 2)
/// zeta^k  = c^k x1 on S_{g,2}               i = k - 1  (k >= 2)
/// The home surface fixes k for tau and g for zeta; it defaults to the
/// family's smallest home when omitted.
CurveInstance family_word(const std::string& name, int parameter,
                          std::optional<SurfaceSpec> home = std::nullopt);

/// Parses "name:parameter", e.g. "eta:3".
CurveInstance parse_family(const std::string& text, std::optional<SurfaceSpec> home = std::nullopt);

/// One-holed torus curve for the q-th n-sheeted cover.
CurveInstance s11_curve(int n, int q);

struct CurveSelection {
  CurveInstance curve;       // family member on its home surface
  CyclicWord word;           // the same curve in the ambient alphabet
  int expected_i = 0;
  int start_sheet = 0;
  std::string embedding;     // how the home surface sits in the ambient one
};

/// Curve chosen for a construction. For closed surfaces the word lives on the
/// regular neighborhood of the generators.
CurveSelection select_curve(const Construction& c);
CurveSelection select_curve(const SurfaceSpec& spec, int n, const AdmissibleTarget& target);

/// Nonzero homology class with non-primitive coefficients; such a class has
/// no simple representative on a closed surface.
bool homology_forces_nonsimple(const Word& w);

}  // namespace liftlab
