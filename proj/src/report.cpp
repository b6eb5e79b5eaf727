#include "repvar/report.hpp"

#include <sstream>
#include <stdexcept>

#include "repvar/algebra_io.hpp"
#include "repvar/errors.hpp"

namespace repvar {

using json = nlohmann::ordered_json;

std::string ReportDocument::rendered(const std::string& format) const {
  if (format == "structured") return json.dump(2) + "\n";
  return text;
}

namespace {

json layering_json(const SemisimpleSequence& s) {
  json layers = json::array();
  for (const DimVector& l : s.layers) layers.push_back(l.v);
  return json{{"text", layering_to_string(s)}, {"layers", layers}};
}

json skeleton_json(const Quiver& q, const Skeleton& sk) {
  json paths = json::array();
  for (const SkeletonPath& sp : sk.paths)
    paths.push_back(render_skeleton_path(q, sk, sp));
  json tops = json::array();
  for (int v : sk.tops) tops.push_back(v);
  return json{{"tops", tops}, {"paths", paths}};
}

json presentation_json(const GenericPresentation& gp) {
  json rels = json::array();
  for (int r = 0; r < static_cast<int>(gp.relations.size()); ++r) {
    const Relation& rel = gp.relations[r];
    json terms = json::array();
    for (const RelationTerm& t : rel.terms)
      terms.push_back(
          json{{"param", "x" + std::to_string(t.param + 1)},
               {"path", render_skeleton_path(gp.algebra.quiver, gp.skeleton,
                                             gp.skeleton.paths[t.path_index])}});
    rels.push_back(
        json{{"critical", render_skeleton_path(gp.algebra.quiver, gp.skeleton,
                                               rel.critical)},
             {"terms", terms},
             {"rendered", render_relation(gp, r)}});
  }
  return json{{"skeleton", skeleton_json(gp.algebra.quiver, gp.skeleton)},
              {"relations", rels},
              {"param_count", gp.param_count}};
}

json component_json(const ComponentReport& c) {
  json j;
  j["radical_layering"] = layering_json(c.radical_layering);
  j["socle_layering"] = layering_json(c.socle_layering);
  j["presentation"] = presentation_json(c.presentation);
  j["sampled_end_dim"] = c.sampled_end_dim;
  j["indecomposability"] = to_string(c.indecomposability);
  if (c.kac_summands) {
    json ks = json::array();
    for (const DimVector& v : *c.kac_summands) ks.push_back(v.v);
    j["kac_summands"] = ks;
    j["kac_verified"] = c.kac_verified.value_or(false);
  }
  if (c.mu) j["mu"] = *c.mu;
  if (c.dense_orbit) j["dense_orbit"] = *c.dense_orbit;
  j["detection_route"] = to_string(c.route);
  j["certification"] = to_string(c.certification);
  return j;
}

void render_component_text(std::ostream& os, int index,
                           const ComponentReport& c) {
  os << "component " << index + 1 << ":\n";
  os << "  radical layering: " << layering_to_string(c.radical_layering)
     << "\n";
  os << "  socle layering:   " << layering_to_string(c.socle_layering)
     << "\n";
  os << "  skeleton:        ";
  for (const SkeletonPath& sp : c.skeleton.paths)
    os << " "
       << render_skeleton_path(c.presentation.algebra.quiver, c.skeleton, sp);
  os << "\n";
  if (!c.presentation.relations.empty()) {
    os << "  relations:\n";
    for (int r = 0; r < static_cast<int>(c.presentation.relations.size());
         ++r)
      os << "    " << render_relation(c.presentation, r) << "\n";
  }
  os << "  sampled end dim:  " << c.sampled_end_dim << "\n";
  os << "  indecomposable:   " << to_string(c.indecomposability) << "\n";
  if (c.kac_summands) {
    os << "  kac summands:    ";
    for (const DimVector& v : *c.kac_summands) os << " " << v.to_string();
    os << (c.kac_verified.value_or(false) ? "  [verified]" : "  [unverified]")
       << "\n";
  }
  if (c.mu)
    os << "  mu: " << *c.mu
       << (c.dense_orbit.value_or(false) ? "  (dense orbit)"
                                         : "  (no dense orbit)")
       << "\n";
  os << "  detection route:  " << to_string(c.route) << "\n";
  os << "  certification:    " << to_string(c.certification) << "\n";
}

json algebra_json(const TruncatedAlgebra& a) {
  json arrows = json::array();
  for (const Arrow& ar : a.quiver.arrows)
    arrows.push_back(json{
        {"name", ar.name}, {"source", ar.source}, {"target", ar.target}});
  return json{{"vertices", a.quiver.n},
              {"arrows", arrows},
              {"loewy_bound", a.loewy_bound}};
}

json header_json(const JobConfig& job, const TruncatedAlgebra& a) {
  json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["command"] = job.command;
  j["algebra"] = algebra_json(a);
  j["seed"] = job.oracle.seed;
  j["prime"] = job.oracle.prime;
  json fps = json::array();
  for (uint32_t p : job.oracle.filtration_primes) fps.push_back(p);
  j["filtration_primes"] = fps;
  j["samples"] = job.oracle.samples;
  j["caps"] = json{{"sequences", job.oracle.seq_cap},
                   {"search_nodes", job.oracle.node_cap},
                   {"grassmannian", job.oracle.grass_cap}};
  return j;
}

DimVector require_dim(const JobConfig& job, const TruncatedAlgebra& a) {
  if (!job.dim_text)
    throw std::invalid_argument("command '" + job.command +
                                "' requires --dim");
  return parse_dim_vector(*job.dim_text, a.quiver.n);
}

SemisimpleSequence require_layering(const JobConfig& job,
                                    const TruncatedAlgebra& a) {
  if (!job.layering_text)
    throw std::invalid_argument("command '" + job.command +
                                "' requires --layering");
  return parse_layering(*job.layering_text, a.quiver.n, a.loewy_bound);
}

ReportDocument run_components(const JobConfig& job,
                              const TruncatedAlgebra& a) {
  DimVector d = require_dim(job, a);
  ComponentsResult res = compute_components(a, d, job.mode, job.oracle);

  ReportDocument doc;
  doc.json = header_json(job, a);
  doc.json["dim"] = d.v;
  doc.json["mode"] = to_string(job.mode);
  doc.json["realizable_sequences"] = res.realizable_count;
  doc.json["component_count"] = res.components.size();
  json comps = json::array();
  for (const ComponentReport& c : res.components)
    comps.push_back(component_json(c));
  doc.json["components"] = comps;
  json und = json::array();
  for (const UndecidedCandidate& u : res.undecided)
    und.push_back(json{{"radical_layering", layering_to_string(u.radical_layering)},
                       {"reason", u.reason}});
  doc.json["undecided"] = und;
  doc.exit_code = res.undecided.empty() ? 0 : 2;

  std::ostringstream os;
  os << kToolName << " " << kToolVersion << " components\n";
  os << "dim " << d.to_string() << ", mode " << to_string(job.mode)
     << ", seed " << job.oracle.seed << ", prime " << job.oracle.prime
     << "\n";
  os << "realizable sequences: " << res.realizable_count << "\n";
  os << "irreducible components: " << res.components.size() << "\n\n";
  for (size_t i = 0; i < res.components.size(); ++i)
    render_component_text(os, static_cast<int>(i), res.components[i]);
  if (!res.undecided.empty()) {
    os << "undecided candidates:\n";
    for (const UndecidedCandidate& u : res.undecided)
      os << "  " << layering_to_string(u.radical_layering) << "  ("
         << u.reason << ")\n";
  }
  doc.text = os.str();
  return doc;
}

ReportDocument run_canon_decomp(const JobConfig& job,
                                const TruncatedAlgebra& a) {
  DimVector d = require_dim(job, a);
  CanonicalDecomposition cd =
      canonical_decomposition(a.quiver, d, job.oracle.samples,
                              job.oracle.prime, job.oracle.seed);
  long long mu = mu_generic_params(a.quiver, cd);

  ReportDocument doc;
  doc.json = header_json(job, a);
  doc.json["dim"] = d.v;
  json summands = json::array();
  for (const auto& [v, mult] : cd.summands)
    summands.push_back(json{{"dim", v.v}, {"multiplicity", mult}});
  doc.json["summands"] = summands;
  doc.json["verified"] = cd.verified;
  doc.json["mu"] = mu;
  doc.json["dense_orbit"] = (mu == 0);

  std::ostringstream os;
  os << kToolName << " " << kToolVersion << " canon-decomp\n";
  os << "dim " << d.to_string() << ", p = " << job.oracle.prime
     << ", samples = " << job.oracle.samples << ", seed = " << job.oracle.seed
     << "\n";
  os << "canonical decomposition:";
  for (const auto& [v, mult] : cd.summands)
    os << " " << v.to_string() << "x" << mult;
  os << (cd.verified ? "  [verified]" : "  [UNVERIFIED]") << "\n";
  os << "mu = " << mu << (mu == 0 ? " (dense orbit)" : " (no dense orbit)")
     << "\n";
  doc.text = os.str();
  return doc;
}

ReportDocument run_subdims(const JobConfig& job, const TruncatedAlgebra& a) {
  DimVector d = require_dim(job, a);
  std::vector<DimVector> sub = sub_dimension_vectors(
      a.quiver, d, job.oracle.samples, job.oracle.prime, job.oracle.seed);

  ReportDocument doc;
  doc.json = header_json(job, a);
  doc.json["dim"] = d.v;
  json subs = json::array();
  for (const DimVector& v : sub) subs.push_back(v.v);
  doc.json["sub_dimension_vectors"] = subs;

  std::ostringstream os;
  os << kToolName << " " << kToolVersion << " subdims\n";
  os << "Sub" << d.to_string() << " =";
  for (const DimVector& v : sub) os << " " << v.to_string();
  os << "\n";
  doc.text = os.str();
  return doc;
}

ReportDocument run_socle_layering(const JobConfig& job,
                                  const TruncatedAlgebra& a) {
  SemisimpleSequence s = require_layering(job, a);
  SemisimpleSequence soc = generic_socle_layering(s, a);

  ReportDocument doc;
  doc.json = header_json(job, a);
  doc.json["radical_layering"] = layering_json(s);
  doc.json["generic_socle_layering"] = layering_json(soc);
  doc.text = layering_to_string(soc) + "\n";
  return doc;
}

ReportDocument run_radical_hereditary(const JobConfig& job,
                                      const TruncatedAlgebra& a) {
  DimVector d = require_dim(job, a);
  SemisimpleSequence s = generic_radical_layering_hereditary(a.quiver, d);

  ReportDocument doc;
  doc.json = header_json(job, a);
  doc.json["dim"] = d.v;
  doc.json["generic_radical_layering"] = layering_json(s);
  doc.text = layering_to_string(s) + "\n";
  return doc;
}

ReportDocument run_generic_module(const JobConfig& job,
                                  const TruncatedAlgebra& a) {
  SemisimpleSequence s = require_layering(job, a);
  GenericPresentation gp = generic_presentation(s, a);
  Rng rng(job.oracle.seed);
  SpecializedModule sm =
      specialize(gp, job.oracle.prime, rng, job.oracle.specialize_retries);

  ReportDocument doc;
  doc.json = header_json(job, a);
  doc.json["layering"] = layering_json(s);
  doc.json["presentation"] = presentation_json(gp);
  json params = json::array();
  for (uint32_t x : sm.params) params.push_back(x);
  doc.json["params"] = params;
  json mats = json::array();
  for (size_t i = 0; i < sm.rep.matrices.size(); ++i) {
    const FpMat& m = sm.rep.matrices[i];
    json rows = json::array();
    for (int r = 0; r < m.rows; ++r) rows.push_back(m.row(r));
    mats.push_back(
        json{{"arrow", a.quiver.arrows[i].name}, {"matrix", rows}});
  }
  doc.json["matrices"] = mats;
  doc.json["dim"] = sm.rep.dim.v;

  std::ostringstream os;
  os << kToolName << " " << kToolVersion << " generic-module\n";
  os << "layering " << layering_to_string(s) << ", p = " << job.oracle.prime
     << ", seed = " << job.oracle.seed << "\n";
  os << "skeleton:";
  for (const SkeletonPath& sp : gp.skeleton.paths)
    os << " " << render_skeleton_path(a.quiver, gp.skeleton, sp);
  os << "\nrelations:\n";
  for (int r = 0; r < static_cast<int>(gp.relations.size()); ++r)
    os << "  " << render_relation(gp, r) << "\n";
  os << "parameters:";
  for (size_t i = 0; i < sm.params.size(); ++i)
    os << " x" << i + 1 << "=" << sm.params[i];
  os << "\nmatrices:\n";
  for (size_t i = 0; i < sm.rep.matrices.size(); ++i)
    os << "  " << a.quiver.arrows[i].name << " = "
       << sm.rep.matrices[i].to_string() << "\n";
  doc.text = os.str();
  return doc;
}

ReportDocument run_gamma(const JobConfig& job, const TruncatedAlgebra& a) {
  SemisimpleSequence s = require_layering(job, a);
  GenericPresentation gp = generic_presentation(s, a);
  uint32_t p = job.oracle.filtration_primes.empty()
                   ? 5
                   : job.oracle.filtration_primes.front();
  Rng rng(job.oracle.seed);
  SpecializedModule sm = specialize(gp, p, rng, job.oracle.specialize_retries);
  GammaOptions go;
  go.seq_cap = job.oracle.seq_cap;
  go.node_cap = job.oracle.node_cap;
  GammaResult gr = gamma(sm.rep, go);

  ReportDocument doc;
  doc.json = header_json(job, a);
  doc.json["layering"] = layering_json(s);
  doc.json["gamma_prime"] = p;
  doc.json["gamma"] = gr.value;
  json w = json::array();
  for (const SemisimpleSequence& ws : gr.witnesses)
    w.push_back(layering_to_string(ws));
  doc.json["witnesses"] = w;
  doc.json["certification"] = "F_p-specialization";

  std::ostringstream os;
  os << kToolName << " " << kToolVersion << " gamma\n";
  os << "layering " << layering_to_string(s) << ", p = " << p << ", seed = "
     << job.oracle.seed << "\n";
  os << "Gamma = " << gr.value << "  (certified over F_p specialization)\n";
  os << "governing sequences:\n";
  for (const SemisimpleSequence& ws : gr.witnesses)
    os << "  " << layering_to_string(ws) << "\n";
  doc.text = os.str();
  return doc;
}

ReportDocument run_skeleta(const JobConfig& job, const TruncatedAlgebra& a) {
  SemisimpleSequence s = require_layering(job, a);
  std::vector<Skeleton> sks = enumerate_skeleta(s, a);

  ReportDocument doc;
  doc.json = header_json(job, a);
  doc.json["layering"] = layering_json(s);
  doc.json["skeleton_count"] = sks.size();
  json arr = json::array();
  for (const Skeleton& sk : sks) arr.push_back(skeleton_json(a.quiver, sk));
  doc.json["skeleta"] = arr;

  std::ostringstream os;
  os << kToolName << " " << kToolVersion << " skeleta\n";
  os << "layering " << layering_to_string(s) << ": " << sks.size()
     << " skeleta\n";
  for (const Skeleton& sk : sks) {
    os << " ";
    for (const SkeletonPath& sp : sk.paths)
      os << " " << render_skeleton_path(a.quiver, sk, sp);
    os << "\n";
  }
  doc.text = os.str();
  return doc;
}

}  // namespace

ReportDocument run(const JobConfig& job) {
  TruncatedAlgebra a = load_algebra_file(job.algebra_path);
  if (job.command == "components") return run_components(job, a);
  if (job.command == "canon-decomp") return run_canon_decomp(job, a);
  if (job.command == "subdims") return run_subdims(job, a);
  if (job.command == "socle-layering") return run_socle_layering(job, a);
  if (job.command == "radical-layering-hereditary")
    return run_radical_hereditary(job, a);
  if (job.command == "generic-module") return run_generic_module(job, a);
  if (job.command == "gamma") return run_gamma(job, a);
  if (job.command == "skeleta") return run_skeleta(job, a);
  throw std::invalid_argument("unknown command '" + job.command + "'");
}

}  // namespace repvar
