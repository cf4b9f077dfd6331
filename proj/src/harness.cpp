#include "liftlab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "liftlab/error.hpp"
#include "liftlab/selfint.hpp"

namespace liftlab {

std::string to_string(NonSimpleSource s) {
  switch (s) {
    case NonSimpleSource::Computed: return "computed";
    case NonSimpleSource::Homology: return "homology";
    case NonSimpleSource::PaperClaim: return "paper-claim";
  }
  return "computed";
}

NonSimpleSource nonsimple_source_from_string(const std::string& s) {
  if (s == "computed") return NonSimpleSource::Computed;
  if (s == "homology") return NonSimpleSource::Homology;
  if (s == "paper-claim") return NonSimpleSource::PaperClaim;
  throw invalid_input("unknown non-simplicity source '" + s + "'");
}

namespace {

FatGraph model_for(const SurfaceSpec& spec) {
  return spec.closed() ? regular_neighborhood(spec.genus) : build_fatgraph(spec);
}

// Invariants of the cover of the whole surface (capping the relator lifts for
// closed surfaces).
SurfaceInvariants surface_cover_invariants(const SurfaceSpec& spec, const CoverInfo& info) {
  if (!spec.closed()) return info.invariants;
  SurfaceInvariants s;
  s.genus = info.invariants.genus;
  s.boundaries = 0;
  s.euler = 2 - 2 * s.genus;
  return s;
}

struct Checker {
  Certificate& cert;
  bool ok = true;
  void operator()(bool pass, const std::string& name) {
    if (!ok) return;
    if (pass) {
      cert.checks.push_back(name);
    } else {
      ok = false;
      cert.failure = name;
    }
  }
};

Word power_letters(const CyclicWord& w, int d) {
  Word out;
  for (int i = 0; i < d; ++i) out.insert(out.end(), w.letters().begin(), w.letters().end());
  return out;
}

}  // namespace

Certificate verify_construction(const Construction& c) {
  try {
    return verify_construction(c, select_curve(c));
  } catch (const std::exception& e) {
    Certificate cert;
    cert.spec = c.spec;
    cert.degree = c.degree;
    cert.target = c.target;
    cert.provenance = c.provenance;
    cert.rep = c.rep;
    cert.failure = std::string("curve selection: ") + e.what();
    return cert;
  }
}

Certificate verify_construction(const Construction& c, const CurveSelection& curve) {
  Certificate cert;
  cert.spec = c.spec;
  cert.degree = c.degree;
  cert.target = c.target;
  cert.provenance = c.provenance;
  cert.rep = c.rep;
  cert.curve_family = curve.curve.family;
  cert.curve_parameter = curve.curve.parameter;
  cert.word = curve.word.str();
  cert.embedding = curve.embedding;
  cert.expected_i = curve.expected_i;
  cert.start_sheet = curve.start_sheet;
  Checker check{cert};
  try {
    const SurfaceSpec& spec = c.spec;
    const int n = c.degree;
    const FatGraph f = model_for(spec);
    const CoverInfo info = validate_rep(f, c.rep);
    check(info.transitive, "cover connected");
    cert.cover = surface_cover_invariants(spec, info);
    check(cert.cover.euler == n * spec.euler(), "euler characteristic multiplies by the degree");
    if (!spec.closed()) {
      check(cert.cover.boundaries >= spec.boundaries && cert.cover.boundaries <= n * spec.boundaries,
            "boundary count within [k, nk]");
    } else {
      check(info.invariants.boundaries == n, "relator lifts with degree one");
    }
    const auto targets = admissible_targets(spec, n);
    check(std::find(targets.begin(), targets.end(), c.target) != targets.end(), "target admissible");
    check(realized_value(spec, CoverInfo{n, cert.cover, true}) == c.target.value, "target invariant realized");

    cert.essential = !is_boundary_parallel(f, curve.word);
    check(cert.essential, "curve essential");
    if (spec.closed()) {
      cert.nonsimple = homology_forces_nonsimple(curve.word.letters()) ? NonSimpleSource::Homology
                                                                        : NonSimpleSource::PaperClaim;
      check(curve.expected_i >= 1, "expected self-intersection positive");
    } else {
      cert.nonsimple = NonSimpleSource::Computed;
      cert.computed_i = self_intersection(f, curve.word);
      check(*cert.computed_i == curve.expected_i, "downstairs self-intersection matches expected");
      check(*cert.computed_i >= 1, "downstairs curve non-simple");
    }

    const CoverComplex cover = build_cover(f, c.rep);
    const LiftedPath lift = lift_path(cover, curve.word, curve.start_sheet);
    cert.lift_degree = lift.degree;
    cert.lift_length = static_cast<int>(lift.path.size());
    const Perm mono = word_monodromy(c.rep, curve.word.letters());
    check(lift.degree == static_cast<int>(orbit(mono, curve.start_sheet).size()), "lift degree equals orbit length");
    check(project(cover, lift.path) == power_letters(curve.word, lift.degree), "lift projects to w^d");
    closed_path(cover.total, lift.path);  // throws unless closed and reduced
    check(!lift.path.empty(), "lift closed and reduced");
    cert.lift_i = self_intersection(cover.total, lift.path);
    cert.vertex_simple = vertex_simple_certificate(cover.total, lift.path);
    check(!cert.vertex_simple || cert.lift_i == 0, "vertex-simple certificate agrees with engine");
    cert.simplicity_domain = spec.closed() ? "neighborhood cover" : "cover";
    check(cert.lift_i == 0, "lift simple");
  } catch (const std::exception& e) {
    if (check.ok) {
      check.ok = false;
      cert.failure = e.what();
    }
  }
  cert.passed = check.ok;
  return cert;
}

Certificate verify_instance(const SurfaceSpec& spec, int n, const AdmissibleTarget& target) {
  Construction c;
  try {
    c = realize(spec, n, target);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidInput) throw;
    Certificate cert;
    cert.spec = spec;
    cert.degree = n;
    cert.target = target;
    cert.failure = std::string("construction: ") + e.what();
    return cert;
  }
  return verify_construction(c);
}

std::vector<Certificate> verify_all_targets(const SurfaceSpec& spec, int n) {
  std::vector<Certificate> out;
  for (const AdmissibleTarget& t : admissible_targets(spec, n)) out.push_back(verify_instance(spec, n, t));
  return out;
}

std::vector<std::string> recheck(const Certificate& cert) {
  std::vector<std::string> bad;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) bad.push_back(what);
  };
  try {
    const FatGraph f = model_for(cert.spec);
    const CoverInfo info = validate_rep(f, cert.rep);
    const SurfaceInvariants inv = surface_cover_invariants(cert.spec, info);
    expect(inv == cert.cover, "cover invariants");
    expect(inv.euler == cert.degree * cert.spec.euler(), "euler characteristic");
    expect(cert.rep.degree == cert.degree, "degree");
    expect(realized_value(cert.spec, CoverInfo{cert.degree, inv, true}) == cert.target.value, "target");
    const CyclicWord w(parse_word(cert.word, f.labels()));
    expect(!is_boundary_parallel(f, w) == cert.essential, "essential flag");
    if (cert.spec.closed()) {
      const NonSimpleSource src =
          homology_forces_nonsimple(w.letters()) ? NonSimpleSource::Homology : NonSimpleSource::PaperClaim;
      expect(src == cert.nonsimple, "non-simplicity source");
      expect(!cert.computed_i.has_value(), "closed surfaces carry no computed downstairs value");
    } else {
      const int i = self_intersection(f, w);
      expect(cert.computed_i && *cert.computed_i == i, "downstairs self-intersection");
      expect(cert.nonsimple == NonSimpleSource::Computed, "non-simplicity source");
    }
    const CoverComplex cover = build_cover(f, cert.rep);
    const LiftedPath lift = lift_path(cover, w, cert.start_sheet);
    expect(lift.degree == cert.lift_degree, "lift degree");
    expect(static_cast<int>(lift.path.size()) == cert.lift_length, "lift length");
    expect(self_intersection(cover.total, lift.path) == cert.lift_i, "lift self-intersection");
    expect(vertex_simple_certificate(cover.total, lift.path) == cert.vertex_simple, "vertex-simple flag");
    const bool should_pass = cert.lift_i == 0 && cert.essential &&
                             (cert.spec.closed() || (cert.computed_i && *cert.computed_i == cert.expected_i &&
                                                     cert.expected_i >= 1));
    expect(should_pass == cert.passed, "pass flag");
  } catch (const std::exception& e) {
    bad.push_back(std::string("recheck raised: ") + e.what());
  }
  return bad;
}

std::vector<SurfaceDegree> grid_cells(const GridBounds& b) {
  std::vector<SurfaceDegree> out;
  for (int g = 0; g <= b.max_g; ++g) {
    for (int k = 1; k <= b.max_k; ++k) {
      const SurfaceSpec s{g, k};
      if (s.euler() >= 0) continue;
      for (int n = b.min_n; n <= b.max_n; ++n) out.push_back({s, n});
    }
  }
  if (b.closed) {
    for (int g = 2; g <= b.max_g; ++g) {
      for (int n = b.min_n; n <= b.max_n; ++n) out.push_back({{g, 0}, n});
    }
  }
  return out;
}

Report verify_all(const GridBounds& bounds, int jobs) {
  struct Task {
    SurfaceSpec spec;
    int degree;
    AdmissibleTarget target;
  };
  std::vector<Task> tasks;
  for (const SurfaceDegree& cell : grid_cells(bounds)) {
    for (const AdmissibleTarget& t : admissible_targets(cell.spec, cell.degree)) tasks.push_back({cell.spec, cell.degree, t});
  }
  Report report;
  report.certificates.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      report.certificates[i] = verify_instance(tasks[i].spec, tasks[i].degree, tasks[i].target);
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const Certificate& c : report.certificates) (c.passed ? report.passed : report.failed)++;
  return report;
}

MinDegResult mindeg_search(const FatGraph& f, const SurfaceSpec& spec, const CyclicWord& w, int max_degree) {
  if (is_simple(f, w)) throw invalid_input("already simple");
  if (is_boundary_parallel(f, w)) throw invalid_input("curve is boundary parallel");
  MinDegResult out;
  out.word = w.str();
  out.surface = spec;
  out.bound = max_degree;
  const auto labels_set = f.labels();
  const std::vector<std::string> labels(labels_set.begin(), labels_set.end());
  for (int d = 2; d <= max_degree; ++d) {
    std::vector<Perm> perms;
    Perm p = identity_perm(d);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::vector<std::size_t> idx(labels.size(), 0);
    while (true) {
      CoverRep rep;
      rep.degree = d;
      for (std::size_t i = 0; i < labels.size(); ++i) rep.perms[labels[i]] = perms[idx[i]];
      if (is_transitive(rep) && conjugacy_canonical(rep) == rep) {
        ++out.classes_examined;
        const CoverComplex c = build_cover(f, rep);
        for (const LiftedPath& lift : preimage_components(c, w)) {
          if (self_intersection(c.total, lift.path) == 0) {
            out.degree = d;
            out.witness = rep;
            out.witness_sheet = lift.start_sheet;
            out.exhaustive = true;  // every smaller degree was searched completely
            return out;
          }
        }
      }
      std::size_t pos = 0;
      while (pos < idx.size() && ++idx[pos] == perms.size()) idx[pos++] = 0;
      if (pos == idx.size()) break;
    }
  }
  out.exhaustive = true;
  return out;
}

}  // namespace liftlab
