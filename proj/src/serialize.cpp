#include "liftlab/serialize.hpp"

#include <regex>
#include <sstream>

#include "liftlab/error.hpp"

namespace liftlab {

namespace {

std::string half_name(HalfEdge h) { return "e" + std::to_string(edge_of(h)) + (is_tail(h) ? "+" : "-"); }

HalfEdge parse_half(const std::string& s) {
  static const std::regex re(R"(e(\d+)([+-]))");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw invalid_input("malformed half-edge '" + s + "'");
  const int e = std::stoi(m[1]);
  return m[2] == "+" ? tail_half(e) : head_half(e);
}

template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw invalid_input(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw invalid_input(std::string("bad field '") + key + "'");
  }
}

}  // namespace

json fatgraph_to_json(const FatGraph& f) {
  json j;
  j["vertices"] = f.vertex_count();
  json edges = json::array();
  for (int e = 0; e < f.edge_count(); ++e) {
    const Edge& ed = f.edge(e);
    edges.push_back({{"id", "e" + std::to_string(e)}, {"label", ed.label}, {"tail", ed.tail}, {"head", ed.head}});
  }
  j["edges"] = edges;
  json order = json::object();
  for (int v = 0; v < f.vertex_count(); ++v) {
    json list = json::array();
    for (HalfEdge h : f.order(v)) list.push_back(half_name(h));
    order[std::to_string(v)] = list;
  }
  j["order"] = order;
  return j;
}

FatGraph fatgraph_from_json(const json& j) {
  const int n = field<int>(j, "vertices");
  if (n < 1) throw invalid_input("fat graph needs at least one vertex");
  const json edges = field<json>(j, "edges");
  if (!edges.is_array()) throw invalid_input("'edges' must be an array");
  std::vector<Edge> list(edges.size());
  std::vector<char> seen(edges.size(), 0);
  for (const json& e : edges) {
    const HalfEdge h = parse_half(field<std::string>(e, "id") + "+");
    const std::size_t id = static_cast<std::size_t>(edge_of(h));
    if (id >= list.size() || seen[id]) throw invalid_input("edge ids must be e0..e(E-1), each once");
    seen[id] = 1;
    list[id] = {field<std::string>(e, "label"), field<int>(e, "tail"), field<int>(e, "head")};
  }
  const json order = field<json>(j, "order");
  std::vector<std::vector<HalfEdge>> orders(n);
  for (int v = 0; v < n; ++v) {
    for (const json& h : field<json>(order, std::to_string(v).c_str())) {
      if (!h.is_string()) throw invalid_input("half-edge names must be strings");
      orders[v].push_back(parse_half(h.get<std::string>()));
    }
  }
  return FatGraph(n, std::move(list), std::move(orders));
}

std::string fatgraph_to_dot(const FatGraph& f, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  out << "  // vertices " << f.vertex_count() << "\n";
  for (int v = 0; v < f.vertex_count(); ++v) out << "  v" << v << ";\n";
  for (int e = 0; e < f.edge_count(); ++e) {
    const Edge& ed = f.edge(e);
    out << "  v" << ed.tail << " -> v" << ed.head << " [label=\"" << ed.label << "\", id=\"e" << e << "\"];\n";
  }
  for (int v = 0; v < f.vertex_count(); ++v) {
    out << "  // order v" << v << ":";
    for (HalfEdge h : f.order(v)) out << " " << half_name(h);
    out << "\n";
  }
  out << "}\n";
  return out.str();
}

FatGraph fatgraph_from_dot(const std::string& text) {
  static const std::regex vertices_re(R"(^\s*// vertices (\d+)\s*$)");
  static const std::regex edge_re(R"re(^\s*v(\d+) -> v(\d+) \[label="([^"]*)", id="e(\d+)"\];\s*$)re");
  static const std::regex order_re(R"(^\s*// order v(\d+):(.*)$)");
  int n = -1;
  std::vector<std::pair<int, Edge>> edges;
  std::vector<std::pair<int, std::vector<HalfEdge>>> orders;
  std::istringstream in(text);
  std::string line;
  std::smatch m;
  while (std::getline(in, line)) {
    if (std::regex_match(line, m, vertices_re)) {
      n = std::stoi(m[1]);
    } else if (std::regex_match(line, m, edge_re)) {
      edges.push_back({std::stoi(m[4]), Edge{m[3], std::stoi(m[1]), std::stoi(m[2])}});
    } else if (std::regex_match(line, m, order_re)) {
      std::istringstream items(m[2].str());
      std::vector<HalfEdge> ord;
      for (std::string tok; items >> tok;) ord.push_back(parse_half(tok));
      orders.push_back({std::stoi(m[1]), std::move(ord)});
    }
  }
  if (n < 1) throw invalid_input("DOT input lacks a '// vertices' line");
  std::vector<Edge> list(edges.size());
  std::vector<char> seen(edges.size(), 0);
  for (auto& [id, e] : edges) {
    if (id < 0 || id >= static_cast<int>(list.size()) || seen[id]) throw invalid_input("DOT edge ids must be e0..e(E-1)");
    seen[id] = 1;
    list[id] = e;
  }
  std::vector<std::vector<HalfEdge>> ord(n);
  std::vector<char> have(n, 0);
  for (auto& [v, o] : orders) {
    if (v < 0 || v >= n || have[v]) throw invalid_input("DOT order comments must name each vertex once");
    have[v] = 1;
    ord[v] = std::move(o);
  }
  return FatGraph(n, std::move(list), std::move(ord));
}

json rep_to_json(const CoverRep& rep) {
  json perms = json::object();
  for (const auto& [l, p] : rep.perms) perms[l] = p;
  return {{"degree", rep.degree}, {"perms", perms}};
}

CoverRep rep_from_json(const json& j) {
  CoverRep rep;
  rep.degree = field<int>(j, "degree");
  if (rep.degree < 1) throw invalid_input("degree must be positive");
  const json perms = field<json>(j, "perms");
  if (!perms.is_object()) throw invalid_input("'perms' must be an object");
  for (auto it = perms.begin(); it != perms.end(); ++it) {
    Perm p;
    try {
      p = it.value().get<Perm>();
    } catch (const json::exception&) {
      throw invalid_input("permutation for '" + it.key() + "' must be an integer list");
    }
    check_perm(p, rep.degree);
    rep.perms[it.key()] = std::move(p);
  }
  return rep;
}

json spec_to_json(const SurfaceSpec& s) {
  return {{"genus", s.genus}, {"boundaries", s.boundaries}, {"closed", s.closed()}, {"name", s.name()}};
}

SurfaceSpec spec_from_json(const json& j) { return {field<int>(j, "genus"), field<int>(j, "boundaries")}; }

json target_to_json(const AdmissibleTarget& t) {
  return {{"kind", t.kind == TargetKind::Boundaries ? "boundaries" : "genus"}, {"value", t.value}};
}

AdmissibleTarget target_from_json(const json& j) {
  const std::string kind = field<std::string>(j, "kind");
  if (kind != "boundaries" && kind != "genus") throw invalid_input("target kind must be boundaries or genus");
  return {kind == "boundaries" ? TargetKind::Boundaries : TargetKind::Genus, field<int>(j, "value")};
}

json invariants_to_json(const SurfaceInvariants& i) {
  return {{"euler", i.euler}, {"genus", i.genus}, {"boundaries", i.boundaries}};
}

SurfaceInvariants invariants_from_json(const json& j) {
  return {field<int>(j, "euler"), field<int>(j, "genus"), field<int>(j, "boundaries")};
}

json provenance_to_json(const Provenance& p) {
  return {{"construction", p.construction}, {"case", p.variant}, {"parameters", p.parameters}};
}

Provenance provenance_from_json(const json& j) {
  return {field<std::string>(j, "construction"), field<std::string>(j, "case"),
          field<std::map<std::string, int>>(j, "parameters")};
}

json construction_to_json(const Construction& c) {
  return {{"surface", spec_to_json(c.spec)},
          {"degree", c.degree},
          {"target", target_to_json(c.target)},
          {"provenance", provenance_to_json(c.provenance)},
          {"rep", rep_to_json(c.rep)}};
}

json lifted_path_to_json(const CoverComplex& c, const LiftedPath& p) {
  json path = json::array();
  for (HalfEdge h : p.path) path.push_back(half_name(h));
  return {{"start_sheet", p.start_sheet},
          {"degree", p.degree},
          {"length", p.path.size()},
          {"path", path},
          {"word", format_word(c.total.darts_to_word(p.path))}};
}

json certificate_to_json(const Certificate& c) {
  json j;
  j["schema"] = kCertificateSchema;
  j["surface"] = spec_to_json(c.spec);
  j["degree"] = c.degree;
  j["target"] = target_to_json(c.target);
  j["provenance"] = provenance_to_json(c.provenance);
  j["rep"] = rep_to_json(c.rep);
  j["cover"] = invariants_to_json(c.cover);
  j["curve"] = {{"family", c.curve_family},
                {"parameter", c.curve_parameter},
                {"word", c.word},
                {"embedding", c.embedding},
                {"expected_i", c.expected_i},
                {"computed_i", c.computed_i ? json(*c.computed_i) : json(nullptr)},
                {"nonsimple", to_string(c.nonsimple)},
                {"essential", c.essential}};
  j["lift"] = {{"start_sheet", c.start_sheet},
               {"degree", c.lift_degree},
               {"length", c.lift_length},
               {"i", c.lift_i},
               {"vertex_simple", c.vertex_simple},
               {"domain", c.simplicity_domain}};
  j["checks"] = c.checks;
  j["passed"] = c.passed;
  j["failure"] = c.failure;
  return j;
}

Certificate certificate_from_json(const json& j) {
  if (field<std::string>(j, "schema") != kCertificateSchema) throw invalid_input("unsupported certificate schema");
  Certificate c;
  c.spec = spec_from_json(field<json>(j, "surface"));
  c.degree = field<int>(j, "degree");
  c.target = target_from_json(field<json>(j, "target"));
  c.provenance = provenance_from_json(field<json>(j, "provenance"));
  c.rep = rep_from_json(field<json>(j, "rep"));
  c.cover = invariants_from_json(field<json>(j, "cover"));
  const json curve = field<json>(j, "curve");
  c.curve_family = field<std::string>(curve, "family");
  c.curve_parameter = field<int>(curve, "parameter");
  c.word = field<std::string>(curve, "word");
  c.embedding = field<std::string>(curve, "embedding");
  c.expected_i = field<int>(curve, "expected_i");
  const json ci = field<json>(curve, "computed_i");
  if (!ci.is_null()) c.computed_i = field<int>(curve, "computed_i");
  c.nonsimple = nonsimple_source_from_string(field<std::string>(curve, "nonsimple"));
  c.essential = field<bool>(curve, "essential");
  const json lift = field<json>(j, "lift");
  c.start_sheet = field<int>(lift, "start_sheet");
  c.lift_degree = field<int>(lift, "degree");
  c.lift_length = field<int>(lift, "length");
  c.lift_i = field<int>(lift, "i");
  c.vertex_simple = field<bool>(lift, "vertex_simple");
  c.simplicity_domain = field<std::string>(lift, "domain");
  c.checks = field<std::vector<std::string>>(j, "checks");
  c.passed = field<bool>(j, "passed");
  c.failure = field<std::string>(j, "failure");
  return c;
}

json report_to_json(const Report& r) {
  json certs = json::array();
  for (const Certificate& c : r.certificates) certs.push_back(certificate_to_json(c));
  return {{"schema", kCertificateSchema},
          {"total", r.certificates.size()},
          {"passed", r.passed},
          {"failed", r.failed},
          {"certificates", certs}};
}

json mindeg_to_json(const MinDegResult& r) {
  return {{"word", r.word},
          {"surface", spec_to_json(r.surface)},
          {"degree", r.degree ? json(*r.degree) : json(nullptr)},
          {"witness", r.witness ? rep_to_json(*r.witness) : json(nullptr)},
          {"witness_sheet", r.witness ? json(r.witness_sheet) : json(nullptr)},
          {"bound", r.bound},
          {"exhaustive", r.exhaustive},
          {"classes_examined", r.classes_examined}};
}

}  // namespace liftlab
