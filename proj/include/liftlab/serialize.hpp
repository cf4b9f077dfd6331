#pragma once

#include <string>

#include "json.hpp"

#include "liftlab/covers.hpp"
#include "liftlab/fatgraph.hpp"
#include "liftlab/harness.hpp"
#include "liftlab/massey.hpp"

namespace liftlab {

using nlohmann::json;

inline constexpr const char* kCertificateSchema = "liftlab-cert/1";

/// {"vertices": n, "edges": [{"id","label","tail","head"}], "order": {"0": ["e0+", "e0-", ...]}}
/// where "+" is the tail half-edge and "-" the head half-edge.
json fatgraph_to_json(const FatGraph& f);
FatGraph fatgraph_from_json(const json& j);

/// One node per vertex, one labeled directed edge per edge, and the cyclic
/// order of each vertex in a `// order` comment that the parser reads back.
std::string fatgraph_to_dot(const FatGraph& f, const std::string& name = "fatgraph");
FatGraph fatgraph_from_dot(const std::string& text);

/// {"degree": n, "perms": {"a": [images...], ...}}
json rep_to_json(const CoverRep& rep);
CoverRep rep_from_json(const json& j);

json spec_to_json(const SurfaceSpec& s);
SurfaceSpec spec_from_json(const json& j);
json target_to_json(const AdmissibleTarget& t);
AdmissibleTarget target_from_json(const json& j);
json invariants_to_json(const SurfaceInvariants& i);
SurfaceInvariants invariants_from_json(const json& j);
json provenance_to_json(const Provenance& p);
Provenance provenance_from_json(const json& j);
json construction_to_json(const Construction& c);

json lifted_path_to_json(const CoverComplex& c, const LiftedPath& p);

json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const json& j);

json report_to_json(const Report& r);
json mindeg_to_json(const MinDegResult& r);

}  // namespace liftlab
