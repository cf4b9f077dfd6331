#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "liftlab/error.hpp"
#include "liftlab/serialize.hpp"

using namespace liftlab;

TEST_CASE("fat graph JSON round trip") {
  for (const SurfaceSpec s : {SurfaceSpec{0, 3}, SurfaceSpec{1, 1}, SurfaceSpec{2, 3}}) {
    const FatGraph f = build_fatgraph(s);
    const json j = fatgraph_to_json(f);
    const FatGraph back = fatgraph_from_json(j);
    CHECK(back == f);
    CHECK(fatgraph_to_json(back).dump() == j.dump());
  }
}

TEST_CASE("fat graph DOT round trip") {
  const FatGraph p = build_fatgraph({0, 3});
  const CoverRep r{2, {{"a", {1, 0}}, {"b", {1, 0}}}};
  const FatGraph cover = build_cover(p, r).total;
  for (const FatGraph* f : {&p, &cover}) {
    const std::string dot = fatgraph_to_dot(*f);
    CHECK(dot.find("digraph") != std::string::npos);
    const FatGraph back = fatgraph_from_dot(dot);
    CHECK(back == *f);
    CHECK(fatgraph_to_dot(back) == dot);
  }
}

TEST_CASE("malformed inputs") {
  CHECK_THROWS_AS(fatgraph_from_json(json::parse(R"({"vertices": 1})")), Error);
  CHECK_THROWS_AS(fatgraph_from_dot("digraph x { }"), Error);
  CHECK_THROWS_AS(rep_from_json(json::parse(R"({"degree": 2, "perms": {"a": [0, 0]}})")), Error);
}

TEST_CASE("certificate round trip") {
  const Certificate c = verify_instance({1, 1}, 3, {TargetKind::Boundaries, 3});
  const json j = certificate_to_json(c);
  CHECK(j.at("schema") == kCertificateSchema);
  const Certificate back = certificate_from_json(j);
  CHECK(certificate_to_json(back).dump() == j.dump());
  CHECK(recheck(back).empty());
  json wrong = j;
  wrong["schema"] = "other/9";
  CHECK_THROWS_AS(certificate_from_json(wrong), Error);
}

TEST_CASE("closed certificates omit the downstairs value") {
  const json j = certificate_to_json(verify_instance({2, 0}, 2, {TargetKind::Genus, 3}));
  CHECK_FALSE(j.contains("computed_i"));
  CHECK(certificate_to_json(certificate_from_json(j)).dump() == j.dump());
}
