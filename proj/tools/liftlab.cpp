// liftlab: finite covers of surfaces, curve lifting and simple-lift certificates.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "liftlab/covers.hpp"
#include "liftlab/curves.hpp"
#include "liftlab/error.hpp"
#include "liftlab/harness.hpp"
#include "liftlab/massey.hpp"
#include "liftlab/oracle.hpp"
#include "liftlab/selfint.hpp"
#include "liftlab/serialize.hpp"

using namespace liftlab;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitInvalid = 2;

SurfaceSpec parse_surface(const std::string& text) {
  std::istringstream in(text);
  SurfaceSpec s;
  char comma = 0;
  if (!(in >> s.genus >> comma >> s.boundaries) || comma != ',' || !in.eof() || s.genus < 0 || s.boundaries < 0) {
    throw invalid_input("surface must look like g,k");
  }
  if (s.closed() ? s.genus < 2 : s.euler() >= 0) throw invalid_input("unsupported surface " + s.name());
  return s;
}

FatGraph model_of(const SurfaceSpec& s) { return s.closed() ? regular_neighborhood(s.genus) : build_fatgraph(s); }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw invalid_input(path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw invalid_input("cannot write " + path);
  out << text;
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

void setup_logging() {
  auto logger = spdlog::stderr_logger_mt("liftlab");
  spdlog::set_default_logger(logger);
  spdlog::set_pattern("[%l] %v");
  spdlog::set_level(spdlog::level::err);
  if (const char* env = std::getenv("LIFTLAB_LOG")) {
    const std::string level(env);
    if (level == "info") {
      spdlog::set_level(spdlog::level::info);
    } else if (level == "debug") {
      spdlog::set_level(spdlog::level::debug);
    } else if (level != "error") {
      spdlog::warn("LIFTLAB_LOG must be error, info or debug; using error");
    }
  }
}

// Options shared by the commands that need a cover.
struct CoverOptions {
  std::string surface;
  int degree = 0;
  std::vector<std::string> params;
  int target_boundaries = -1;
  int target_genus = -1;
  std::string rep_file;

  void add_target(CLI::App* app) {
    app->add_option("--target-boundaries", target_boundaries, "Boundary count of the cover");
    app->add_option("--target-genus", target_genus, "Genus of the cover");
  }

  std::optional<AdmissibleTarget> target() const {
    if (target_boundaries >= 0 && target_genus >= 0) throw invalid_input("give one target only");
    if (target_boundaries >= 0) return AdmissibleTarget{TargetKind::Boundaries, target_boundaries};
    if (target_genus >= 0) return AdmissibleTarget{TargetKind::Genus, target_genus};
    return std::nullopt;
  }
};

std::map<std::string, int> parse_params(const std::vector<std::string>& items) {
  std::map<std::string, int> out;
  for (const std::string& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw invalid_input("parameter must look like key=value");
    try {
      std::size_t used = 0;
      const int v = std::stoi(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument("trailing");
      out[item.substr(0, eq)] = v;
    } catch (const std::logic_error&) {
      throw invalid_input("malformed parameter value in '" + item + "'");
    }
  }
  return out;
}

Construction construct_from_params(const SurfaceSpec& s, int n, const std::map<std::string, int>& p,
                                   const std::optional<AdmissibleTarget>& target) {
  auto only = [&](const std::string& key) {
    if (p.size() != 1 || !p.count(key)) throw invalid_input("this surface takes the single parameter " + key);
    return p.at(key);
  };
  const auto finish = [&](CoverRep rep, Provenance prov) {
    Construction c;
    c.spec = s;
    c.degree = n;
    c.rep = std::move(rep);
    c.provenance = std::move(prov);
    c.target = {target_kind(s), realized_value(s, validate_rep(model_of(s), c.rep))};
    if (target && !(*target == c.target)) throw invalid_input("parameters realize " + format_target(c.target));
    return c;
  };
  if (s == SurfaceSpec{0, 3}) {
    const int m = only("m");
    return finish(pants_cover(n, m), {"pair of pants", "", {{"m", m}}});
  }
  if (s == SurfaceSpec{1, 1}) {
    const int q = only("q");
    return finish(s11_cover(n, q), {"one-holed torus", "", {{"q", q}}});
  }
  if (s.genus >= 2 && s.boundaries == 1) {
    const int q = only("q");
    return finish(sg1_cover(n, s.genus, q), {"genus g, one boundary", "", {{"q", q}}});
  }
  if (s.genus >= 1 && s.boundaries == 2) {
    const int u = only("u");
    return finish(sg2_cover(n, s.genus, u), {"genus g, two boundaries", u == 0 ? "case 2" : "case 1", {{"u", u}}});
  }
  throw invalid_input("parameters are supported for S_{0,3}, S_{1,1}, S_{g,1} and S_{g,2}; use a target");
}

Construction resolve_construction(const CoverOptions& o) {
  const SurfaceSpec s = parse_surface(o.surface);
  if (o.degree < 1) throw invalid_input("--degree is required");
  const auto target = o.target();
  if (!o.params.empty()) return construct_from_params(s, o.degree, parse_params(o.params), target);
  if (!target) throw invalid_input("give --param or a target");
  return realize(s, o.degree, *target);
}

// The cover for `lift` and `emit`: an explicit rep file or a construction.
CoverRep resolve_rep(const CoverOptions& o, const SurfaceSpec& s) {
  if (!o.rep_file.empty()) return rep_from_json(read_json(o.rep_file));
  CoverOptions copy = o;
  copy.surface = std::to_string(s.genus) + "," + std::to_string(s.boundaries);
  return resolve_construction(copy).rep;
}

json boundary_words_json(const FatGraph& f) {
  json out = json::array();
  for (const CyclicWord& w : boundary_words(f)) out.push_back(w.str());
  return out;
}

int run_verify_list(const std::vector<Certificate>& certs) {
  Report r;
  r.certificates = certs;
  for (const Certificate& c : certs) (c.passed ? r.passed : r.failed)++;
  print(report_to_json(r));
  return r.failed == 0 ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  setup_logging();
  CLI::App app{"Finite covers of surfaces, curve lifting and simple-lift certificates"};
  app.require_subcommand(1);
  unsigned seed = 0;
  app.add_option("--seed", seed, "Reserved; every command is deterministic and ignores it");

  // surface
  auto* surface = app.add_subcommand("surface", "Canonical fat graph of S_{g,k} with its invariants");
  std::string surface_spec;
  bool surface_dot = false;
  surface->add_option("--surface", surface_spec, "g,k (k = 0 for closed genus g >= 2)")->required();
  surface->add_flag("--dot", surface_dot, "Print DOT instead of JSON");

  // cover build / check
  auto* cover = app.add_subcommand("cover", "Build or check a cover");
  cover->require_subcommand(1);
  auto* cover_build = cover->add_subcommand("build", "Construct an n-sheeted cover");
  CoverOptions build_opts;
  cover_build->add_option("--surface", build_opts.surface, "g,k")->required();
  cover_build->add_option("--degree", build_opts.degree, "Number of sheets")->required();
  cover_build->add_option("--param", build_opts.params, "Constructor parameter key=value (m, q or u)");
  build_opts.add_target(cover_build);
  auto* cover_check = cover->add_subcommand("check", "Invariants of the cover given by a rep file");
  std::string check_surface;
  std::string check_rep;
  cover_check->add_option("--surface", check_surface, "g,k")->required();
  cover_check->add_option("--rep", check_rep, "Rep JSON file")->required();

  // selfint
  auto* selfint = app.add_subcommand("selfint", "Self-intersection number of a curve");
  std::string si_surface;
  std::string si_word;
  selfint->add_option("--surface", si_surface, "g,k")->required();
  selfint->add_option("--word", si_word, "Curve word, e.g. \"a b^3\"")->required();

  // lift
  auto* lift = app.add_subcommand("lift", "Lift a curve to a cover");
  CoverOptions lift_opts;
  std::string lift_word;
  int lift_sheet = 0;
  bool lift_all = false;
  lift->add_option("--surface", lift_opts.surface, "g,k")->required();
  lift->add_option("--word", lift_word, "Curve word")->required();
  lift->add_option("--rep", lift_opts.rep_file, "Rep JSON file");
  lift->add_option("--degree", lift_opts.degree, "Number of sheets (with a target or --param)");
  lift->add_option("--param", lift_opts.params, "Constructor parameter key=value");
  lift_opts.add_target(lift);
  lift->add_option("--sheet", lift_sheet, "Start sheet");
  lift->add_flag("--all", lift_all, "Every component of the preimage");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Numerical cross-check of the self-intersection number");
  std::string or_surface;
  std::string or_word;
  int or_depth = 0;
  int or_max_depth = 12;
  oracle->add_option("--surface", or_surface, "g,k (one-vertex model)")->required();
  oracle->add_option("--word", or_word, "Curve word")->required();
  oracle->add_option("--depth", or_depth, "Fixed search depth; raised automatically when omitted");
  oracle->add_option("--max-depth", or_max_depth, "Largest depth tried automatically");

  // verify
  auto* verify = app.add_subcommand("verify", "Certify simple lifts for one surface and degree");
  CoverOptions ver_opts;
  bool ver_all = false;
  std::string ver_recheck;
  verify->add_option("--surface", ver_opts.surface, "g,k");
  verify->add_option("--degree", ver_opts.degree, "Number of sheets");
  ver_opts.add_target(verify);
  verify->add_flag("--all-targets", ver_all, "Every admissible target");
  verify->add_option("--recheck", ver_recheck, "Re-validate a certificate JSON file");

  // verify-grid
  auto* grid = app.add_subcommand("verify-grid", "Certify every admissible target over a grid");
  GridBounds bounds;
  bounds.max_n = 0;
  int jobs = 1;
  bool grid_summary = false;
  grid->add_option("--max-g", bounds.max_g, "Largest genus")->required();
  grid->add_option("--max-k", bounds.max_k, "Largest boundary count")->required();
  grid->add_option("--max-n", bounds.max_n, "Largest degree")->required();
  grid->add_option("--min-n", bounds.min_n, "Smallest degree");
  grid->add_flag("--closed", bounds.closed, "Include closed surfaces of genus 2..max-g");
  grid->add_option("--jobs", jobs, "Worker threads");
  grid->add_flag("--summary", grid_summary, "Print counts and failures only");

  // mindeg
  auto* mindeg = app.add_subcommand("mindeg", "Smallest degree of a cover where the curve lifts simply");
  std::string md_surface;
  std::string md_word;
  int md_max = 3;
  mindeg->add_option("--surface", md_surface, "g,k")->required();
  mindeg->add_option("--word", md_word, "Curve word")->required();
  mindeg->add_option("--max-degree", md_max, "Largest degree searched");

  // emit
  auto* emit = app.add_subcommand("emit", "Write a surface or cover fat graph as JSON or DOT");
  CoverOptions emit_opts;
  std::string emit_json;
  std::string emit_dot;
  std::string emit_input;
  emit->add_option("--surface", emit_opts.surface, "g,k");
  emit->add_option("--degree", emit_opts.degree, "Emit the cover of this degree instead of the base");
  emit->add_option("--param", emit_opts.params, "Constructor parameter key=value");
  emit->add_option("--rep", emit_opts.rep_file, "Rep JSON file");
  emit_opts.add_target(emit);
  emit->add_option("--input", emit_input, "Fat graph JSON or DOT file to re-emit");
  auto* jopt = emit->add_option("--json", emit_json, "JSON output path (- for stdout)");
  auto* dopt = emit->add_option("--dot", emit_dot, "DOT output path (- for stdout)");
  jopt->excludes(dopt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitInvalid;
  }

  try {
    if (*surface) {
      const SurfaceSpec s = parse_surface(surface_spec);
      const FatGraph f = model_of(s);
      if (surface_dot) {
        std::cout << fatgraph_to_dot(f);
        return 0;
      }
      const auto labels = model_labels(s);
      print({{"surface", spec_to_json(s)},
             {"model", s.closed() ? "regular neighborhood of the generators" : "one-vertex spine"},
             {"invariants", invariants_to_json(invariants(f))},
             {"labels", labels},
             {"boundary_words", boundary_words_json(f)},
             {"fatgraph", fatgraph_to_json(f)}});
      return 0;
    }

    if (*cover_build) {
      const Construction c = resolve_construction(build_opts);
      const CoverInfo info = validate_rep(model_of(c.spec), c.rep);
      spdlog::info("built {} cover of {}", c.provenance.construction, c.spec.name());
      json out = construction_to_json(c);
      out["invariants"] = invariants_to_json(info.invariants);
      out["cycles"] = json::object();
      for (const auto& [l, p] : c.rep.perms) out["cycles"][l] = format_cycles(p);
      print(out);
      return 0;
    }

    if (*cover_check) {
      const SurfaceSpec s = parse_surface(check_surface);
      const CoverRep rep = rep_from_json(read_json(check_rep));
      const CoverInfo info = validate_rep(model_of(s), rep);
      print({{"surface", spec_to_json(s)},
             {"degree", info.degree},
             {"transitive", info.transitive},
             {"invariants", invariants_to_json(info.invariants)},
             {"boundaries_from_monodromy", boundary_count_from_monodromy(model_of(s), rep)}});
      return 0;
    }

    if (*selfint) {
      const SurfaceSpec s = parse_surface(si_surface);
      if (s.closed()) throw invalid_input("self-intersection on closed surfaces is not supported");
      const FatGraph f = build_fatgraph(s);
      const CyclicWord w(parse_word(si_word, f.labels()));
      const auto darts = f.word_to_darts(w.letters());
      const int i = self_intersection(f, w);
      print({{"word", w.str()},
             {"length", w.length()},
             {"i", i},
             {"simple", i == 0},
             {"boundary_parallel", is_boundary_parallel(f, w)},
             {"certificate_used", vertex_simple_certificate(f, darts) ? "vertex-simple" : "linked-pairs"}});
      return 0;
    }

    if (*lift) {
      const SurfaceSpec s = parse_surface(lift_opts.surface);
      const FatGraph f = model_of(s);
      const CoverComplex c = build_cover(f, resolve_rep(lift_opts, s));
      const CyclicWord w(parse_word(lift_word, f.labels()));
      auto describe = [&](const LiftedPath& p) {
        json j = lifted_path_to_json(c, p);
        j["i"] = self_intersection(c.total, p.path);
        j["vertex_simple"] = vertex_simple_certificate(c.total, p.path);
        j["boundary_parallel"] = is_boundary_parallel(c.total, CyclicWord(c.total.darts_to_word(p.path)));
        return j;
      };
      if (lift_all) {
        json comps = json::array();
        for (const LiftedPath& p : preimage_components(c, w)) comps.push_back(describe(p));
        print({{"word", w.str()}, {"components", comps}});
      } else {
        print(describe(lift_path(c, w, lift_sheet)));
      }
      return 0;
    }

    if (*oracle) {
      const SurfaceSpec s = parse_surface(or_surface);
      if (s.closed()) throw invalid_input("the oracle needs a surface with boundary");
      const FatGraph f = build_fatgraph(s);
      const CyclicWord w(parse_word(or_word, f.labels()));
      const OracleResult r =
          or_depth > 0 ? oracle_self_intersection(f, w, or_depth) : oracle_self_intersection_auto(f, w, or_max_depth);
      print({{"word", w.str()}, {"count", r.count}, {"stable", r.stable}, {"depth", r.depth}});
      return 0;
    }

    if (*verify) {
      if (!ver_recheck.empty()) {
        const Certificate cert = certificate_from_json(read_json(ver_recheck));
        const auto bad = recheck(cert);
        print({{"recheck", bad.empty()}, {"passed", cert.passed}, {"disagreements", bad}});
        return bad.empty() && cert.passed ? 0 : kExitFailure;
      }
      if (ver_opts.surface.empty() || ver_opts.degree < 1) throw invalid_input("--surface and --degree are required");
      const SurfaceSpec s = parse_surface(ver_opts.surface);
      if (ver_all) return run_verify_list(verify_all_targets(s, ver_opts.degree));
      const auto target = ver_opts.target();
      if (!target) throw invalid_input("give a target or --all-targets");
      const Certificate cert = verify_instance(s, ver_opts.degree, *target);
      print(certificate_to_json(cert));
      return cert.passed ? 0 : kExitFailure;
    }

    if (*grid) {
      if (jobs < 1) throw invalid_input("--jobs must be positive");
      const Report r = verify_all(bounds, jobs);
      spdlog::info("grid: {} passed, {} failed", r.passed, r.failed);
      if (grid_summary) {
        json failures = json::array();
        for (const Certificate& c : r.certificates) {
          if (!c.passed) {
            failures.push_back({{"surface", c.spec.name()}, {"degree", c.degree},
                                {"target", format_target(c.target)}, {"failure", c.failure}});
          }
        }
        print({{"total", r.certificates.size()}, {"passed", r.passed}, {"failed", r.failed}, {"failures", failures}});
      } else {
        print(report_to_json(r));
      }
      return r.failed == 0 ? 0 : kExitFailure;
    }

    if (*mindeg) {
      const SurfaceSpec s = parse_surface(md_surface);
      if (s.closed()) throw invalid_input("mindeg needs a surface with boundary");
      const FatGraph f = build_fatgraph(s);
      const CyclicWord w(parse_word(md_word, f.labels()));
      print(mindeg_to_json(mindeg_search(f, s, w, md_max)));
      return 0;
    }

    if (*emit) {
      if (emit_json.empty() && emit_dot.empty()) throw invalid_input("give --json PATH or --dot PATH");
      std::optional<FatGraph> graph;
      if (!emit_input.empty()) {
        const std::string text = read_file(emit_input);
        const auto first = text.find_first_not_of(" \t\r\n");
        graph = first != std::string::npos && text[first] == '{' ? fatgraph_from_json(json::parse(text))
                                                                 : fatgraph_from_dot(text);
      } else {
        if (emit_opts.surface.empty()) throw invalid_input("give --surface or --input");
        const SurfaceSpec s = parse_surface(emit_opts.surface);
        const FatGraph base = model_of(s);
        if (emit_opts.degree > 0 || !emit_opts.rep_file.empty()) {
          graph = build_cover(base, resolve_rep(emit_opts, s)).total;
        } else {
          graph = base;
        }
      }
      if (!emit_json.empty()) write_text(emit_json, fatgraph_to_json(*graph).dump(2) + "\n");
      if (!emit_dot.empty()) write_text(emit_dot, fatgraph_to_dot(*graph));
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::InvalidInput ? kExitInvalid : kExitFailure;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return 0;
}
