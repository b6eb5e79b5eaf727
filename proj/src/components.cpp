#include "repvar/components.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "repvar/errors.hpp"

namespace repvar {

const char* to_string(DetectionRoute r) {
  switch (r) {
    case DetectionRoute::local: return "local";
    case DetectionRoute::acyclic_theta: return "acyclic-theta";
    case DetectionRoute::rad_square_zero: return "rad-square-zero";
    case DetectionRoute::theta_minimal: return "theta-minimal";
    case DetectionRoute::gamma_certified: return "gamma-certified";
  }
  return "?";
}

const char* to_string(Certification c) {
  switch (c) {
    case Certification::exact: return "exact";
    case Certification::fp_specialization: return "F_p-specialization";
  }
  return "?";
}

const char* to_string(Indecomposability i) {
  switch (i) {
    case Indecomposability::generic_indecomposable:
      return "generic-indecomposable (probabilistic)";
    case Indecomposability::decomposes: return "decomposes";
    case Indecomposability::unknown: return "unknown";
  }
  return "?";
}

Mode mode_from_string(const std::string& s) {
  if (s == "auto") return Mode::auto_detect;
  if (s == "local") return Mode::local;
  if (s == "acyclic") return Mode::acyclic;
  if (s == "radsq" || s == "rad-square-zero") return Mode::rad_square_zero;
  if (s == "general") return Mode::general;
  throw std::invalid_argument("unknown mode '" + s + "'");
}

const char* to_string(Mode m) {
  switch (m) {
    case Mode::auto_detect: return "auto";
    case Mode::local: return "local";
    case Mode::acyclic: return "acyclic";
    case Mode::rad_square_zero: return "rad-square-zero";
    case Mode::general: return "general";
  }
  return "?";
}

namespace {

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Seed stream for one component / candidate, independent of processing
// order: derived from the global seed and the layering text.
Rng layering_rng(const OracleConfig& cfg, const SemisimpleSequence& s,
                 uint64_t salt) {
  return Rng(cfg.seed ^ fnv1a(layering_to_string(s)) ^
             (salt * 0x9e3779b97f4a7c15ULL));
}

ComponentReport build_report(const TruncatedAlgebra& a,
                             const SemisimpleSequence& rad,
                             DetectionRoute route, Certification cert,
                             const OracleConfig& cfg) {
  ComponentReport rep;
  rep.radical_layering = rad;
  rep.socle_layering = generic_socle_layering(rad, a);
  rep.presentation = generic_presentation(rad, a);
  rep.skeleton = rep.presentation.skeleton;
  rep.route = route;
  rep.certification = cert;

  if (rad.total().is_zero()) {
    rep.sampled_end_dim = 0;
    rep.indecomposability = Indecomposability::unknown;
    return rep;
  }

  Rng rng = layering_rng(cfg, rad, 1);
  SpecializedModule sm =
      specialize(rep.presentation, cfg.prime, rng, cfg.specialize_retries);
  rep.sampled_end_dim = end_dim(sm.rep);
  if (rep.sampled_end_dim == 1) {
    rep.indecomposability = Indecomposability::generic_indecomposable;
  } else {
    Rng rf = layering_rng(cfg, rad, 2);
    std::vector<Representation> parts = fitting_decompose(sm.rep, rf);
    rep.indecomposability = parts.size() >= 2 ? Indecomposability::decomposes
                                              : Indecomposability::unknown;
  }
  return rep;
}

}  // namespace

std::vector<SemisimpleSequence> components_local(int r, int loewy_bound,
                                                 int d) {
  if (r < 1) throw std::invalid_argument("components_local: r >= 1");
  if (loewy_bound < 0 || d < 0)
    throw std::invalid_argument("components_local: negative input");
  int L = loewy_bound;
  auto seq_of = [&](const std::vector<int>& a) {
    std::vector<DimVector> layers;
    for (int x : a) layers.push_back(DimVector(std::vector<int>{x}));
    return SemisimpleSequence(std::move(layers));
  };

  if (d == 0) return {SemisimpleSequence::zeros(1, L)};

  if (r == 1) {
    // Truncated polynomial ring: one component, the conjugate partition of
    // (L+1, ..., L+1, d mod (L+1)).
    int q = d / (L + 1), s = d % (L + 1);
    std::vector<int> a(L + 1, q);
    for (int l = 0; l < s; ++l) ++a[l];
    return {seq_of(a)};
  }

  if (d <= L + 1) {
    // Generically uniserial.
    std::vector<int> a(L + 1, 0);
    for (int l = 0; l < d; ++l) a[l] = 1;
    return {seq_of(a)};
  }

  // All positive compositions with consecutive layers within a factor r.
  std::vector<SemisimpleSequence> out;
  std::vector<int> a(L + 1, 0);
  std::function<void(int, int)> rec = [&](int l, int rem) {
    if (l == L) {
      if (rem >= 1 && rem <= static_cast<long long>(r) * a[l - 1] &&
          a[l - 1] <= static_cast<long long>(r) * rem) {
        a[l] = rem;
        out.push_back(seq_of(a));
      }
      return;
    }
    int lo = 1, hi = rem - (L - l);  // leave at least 1 per later layer
    if (l > 0) {
      lo = std::max(lo, (a[l - 1] + r - 1) / r);
      hi = std::min<long long>(hi, static_cast<long long>(r) * a[l - 1]);
    }
    for (int x = lo; x <= hi; ++x) {
      a[l] = x;
      rec(l + 1, rem - x);
    }
  };
  rec(0, d);
  return out;
}

ComponentsResult components_acyclic(const TruncatedAlgebra& a,
                                    const DimVector& d,
                                    const OracleConfig& cfg) {
  if (!a.quiver.is_acyclic())
    throw std::invalid_argument("components_acyclic: quiver has a cycle");
  std::vector<SemisimpleSequence> seqs =
      realizable_sequences(a, d, cfg.seq_cap);
  std::vector<LayeringPair> pairs;
  pairs.reserve(seqs.size());
  for (const SemisimpleSequence& s : seqs)
    pairs.push_back(LayeringPair{s, generic_socle_layering(s, a)});
  std::vector<LayeringPair> mins = minimal_pairs(pairs);

  ComponentsResult res;
  res.realizable_count = static_cast<int>(seqs.size());
  for (const LayeringPair& mp : mins)
    res.components.push_back(build_report(a, mp.radical,
                                          DetectionRoute::acyclic_theta,
                                          Certification::exact, cfg));

  // Genuinely hereditary input: enrich with the Kac decomposition data.
  if (a.loewy_bound >= a.quiver.longest_path_length()) {
    for (ComponentReport& rep : res.components) {
      CanonicalDecomposition cd = canonical_decomposition(
          a.quiver, d, cfg.samples, cfg.prime,
          cfg.seed ^ fnv1a(layering_to_string(rep.radical_layering)));
      rep.kac_summands = cd.flattened();
      rep.kac_verified = cd.verified;
      long long mu = mu_generic_params(a.quiver, cd);
      rep.mu = mu;
      rep.dense_orbit = (mu == 0);
    }
  }
  return res;
}

ComponentsResult components_rad_square_zero(const TruncatedAlgebra& a,
                                            const DimVector& d,
                                            const OracleConfig& cfg) {
  if (a.loewy_bound != 1)
    throw std::invalid_argument("components_rad_square_zero: needs L = 1");
  std::vector<SemisimpleSequence> seqs =
      realizable_sequences(a, d, cfg.seq_cap);
  std::vector<LayeringPair> pairs;
  for (const SemisimpleSequence& s : seqs)
    pairs.push_back(LayeringPair{s, generic_socle_layering(s, a)});
  std::vector<LayeringPair> mins = minimal_pairs(pairs);

  ComponentsResult res;
  res.realizable_count = static_cast<int>(seqs.size());
  Quiver sep = a.quiver.separated();
  for (const LayeringPair& mp : mins) {
    ComponentReport rep = build_report(a, mp.radical,
                                       DetectionRoute::rad_square_zero,
                                       Certification::exact, cfg);
    // Transfer along the separated quiver: Kac decomposition of
    // (top, d - top) collapses back to summand dimension vectors.
    DimVector top = mp.radical.layers[0];
    DimVector dhat = hat_dim(top, d);
    CanonicalDecomposition cd = canonical_decomposition(
        sep, dhat, cfg.samples, cfg.prime,
        cfg.seed ^ fnv1a(layering_to_string(mp.radical)));
    std::vector<DimVector> kac;
    for (const DimVector& vh : cd.flattened()) kac.push_back(unhat_dim(vh));
    rep.kac_summands = std::move(kac);
    rep.kac_verified = cd.verified;
    long long mu = mu_generic_params(sep, cd);
    rep.mu = mu;
    rep.dense_orbit = (mu == 0);
    res.components.push_back(std::move(rep));
  }
  return res;
}

bool membership_rad_square_zero(const Representation& m,
                                const SemisimpleSequence& s) {
  if (m.algebra.loewy_bound != 1 || s.loewy_bound() != 1)
    throw std::invalid_argument("membership_rad_square_zero: needs L = 1");
  if (s.total() != m.dim)
    throw std::invalid_argument(
        "membership_rad_square_zero: dimension mismatch");
  DimVector rad = radical_of(m, full_subspace(m)).dims();
  DimVector top = m.dim.minus(rad);
  DimVector soc = socle(m).dims();
  DimVector generic_soc =
      generic_socle_layering(s, m.algebra).layers[0];
  return s.layers[0].leq(top) && generic_soc.leq(soc);
}

namespace {

// ---- The staged general pipeline -----------------------------------------

enum class Verdict { accepted, rejected, undecided };

struct MembershipTester {
  const TruncatedAlgebra& algebra;
  const OracleConfig& cfg;

  // Largest ladder primes whose Grassmannians over the ambient vertex
  // dimensions stay below grass_cap; at least the two smallest primes.
  std::vector<uint32_t> choose_primes(const DimVector& d) const {
    std::vector<uint32_t> ladder = cfg.filtration_primes;
    std::sort(ladder.begin(), ladder.end());
    std::vector<uint32_t> feasible;
    for (uint32_t p : ladder) {
      uint64_t worst = 0;
      for (int i = 0; i < d.size(); ++i)
        worst = std::max(worst, count_subspaces(d[i], d[i] / 2, p,
                                                cfg.grass_cap + 1));
      if (worst <= cfg.grass_cap) feasible.push_back(p);
    }
    if (feasible.size() < 2) {
      feasible.assign(ladder.begin(),
                      ladder.begin() + std::min<size_t>(2, ladder.size()));
    }
    std::sort(feasible.rbegin(), feasible.rend());
    if (feasible.size() > 4) feasible.resize(4);
    return feasible;
  }

  // Does some accepted candidate govern a filtration of the generic module
  // of `target`? One prime's verdict is a majority vote over seeded
  // specializations; the final verdict needs two agreeing primes.
  Verdict governed_by_any(const SemisimpleSequence& target,
                          const std::vector<SemisimpleSequence>& candidates,
                          std::string& reason) const {
    GenericPresentation gp = generic_presentation(target, algebra);
    // Top-heavy candidates first: their first steps are nearly forced,
    // which finds the common witnesses quickly.
    std::vector<SemisimpleSequence> cands = candidates;
    std::stable_sort(cands.begin(), cands.end(),
                     [](const SemisimpleSequence& x,
                        const SemisimpleSequence& y) {
                       return x.layers[0].total() > y.layers[0].total();
                     });

    int yes_votes = 0, no_votes = 0;
    for (uint32_t p : choose_primes(target.total())) {
      int yes = 0, no = 0, bad = 0;
      for (int si = 0; si < cfg.filtration_seeds; ++si) {
        Rng rng(cfg.seed ^ fnv1a(layering_to_string(target)) ^
                (static_cast<uint64_t>(p) << 32) ^
                static_cast<uint64_t>(si) * 0x9e3779b97f4a7c15ULL);
        SpecializedModule sm;
        try {
          sm = specialize(gp, p, rng, cfg.specialize_retries);
        } catch (const SpecializeError&) {
          ++bad;
          continue;
        }
        bool found = false, capped = false;
        for (const SemisimpleSequence& s : cands) {
          FiltrationOptions fo;
          fo.node_cap = cfg.node_cap;
          FiltrationResult r = filtration_search(sm.rep, s, fo);
          if (r.found) {
            found = true;
            break;
          }
          if (r.capped) capped = true;  // a NO here is not trustworthy
        }
        if (found)
          ++yes;
        else if (capped)
          ++bad;
        else
          ++no;
      }
      if (yes > no && yes > 0)
        ++yes_votes;
      else if (no > yes && no > 0)
        ++no_votes;
      if (yes_votes >= 2) return Verdict::rejected;
      if (no_votes >= 2) return Verdict::accepted;
    }
    reason = "membership test did not reach agreement at two primes";
    return Verdict::undecided;
  }
};

}  // namespace

ComponentsResult components_general_truncated(const TruncatedAlgebra& a,
                                              const DimVector& d,
                                              const OracleConfig& cfg) {
  std::vector<SemisimpleSequence> seqs =
      realizable_sequences(a, d, cfg.seq_cap);
  std::vector<LayeringPair> pairs;
  pairs.reserve(seqs.size());
  for (const SemisimpleSequence& s : seqs)
    pairs.push_back(LayeringPair{s, generic_socle_layering(s, a)});
  std::vector<std::vector<int>> stages = minimality_layers(pairs);

  ComponentsResult res;
  res.realizable_count = static_cast<int>(seqs.size());
  MembershipTester tester{a, cfg};
  std::vector<int> accepted;

  for (size_t k = 0; k < stages.size(); ++k) {
    for (int idx : stages[k]) {
      if (k == 0) {
        accepted.push_back(idx);
        res.components.push_back(build_report(a, pairs[idx].radical,
                                              DetectionRoute::theta_minimal,
                                              Certification::exact, cfg));
        continue;
      }
      // Only already-accepted strictly dominance-smaller pairs can swallow
      // this stratum.
      std::vector<SemisimpleSequence> cands;
      for (int ai : accepted) {
        if (dominance_lt(pairs[ai].radical, pairs[idx].radical) &&
            dominance_lt(pairs[ai].socle, pairs[idx].socle))
          cands.push_back(pairs[ai].radical);
      }
      if (cands.empty()) {
        // no accepted pair sits strictly below in both orders, so nothing
        // can swallow this stratum; that argument is exact
        accepted.push_back(idx);
        res.components.push_back(build_report(a, pairs[idx].radical,
                                              DetectionRoute::gamma_certified,
                                              Certification::exact, cfg));
        continue;
      }
      std::string reason;
      Verdict v = tester.governed_by_any(pairs[idx].radical, cands, reason);
      if (v == Verdict::accepted) {
        accepted.push_back(idx);
        res.components.push_back(
            build_report(a, pairs[idx].radical,
                         DetectionRoute::gamma_certified,
                         Certification::fp_specialization, cfg));
      } else if (v == Verdict::undecided) {
        res.undecided.push_back(
            UndecidedCandidate{pairs[idx].radical, reason});
      }
    }
  }
  return res;
}

ComponentsResult compute_components(const TruncatedAlgebra& a,
                                    const DimVector& d, Mode mode,
                                    const OracleConfig& cfg) {
  if (d.size() != a.quiver.n)
    throw std::invalid_argument("compute_components: size mismatch");
  if (!d.nonnegative())
    throw std::invalid_argument("compute_components: negative dimension");

  if (mode == Mode::auto_detect) {
    if (a.quiver.n == 1)
      mode = Mode::local;
    else if (a.loewy_bound == 1)
      mode = Mode::rad_square_zero;
    else if (a.quiver.is_acyclic())
      mode = Mode::acyclic;
    else
      mode = Mode::general;
  }

  switch (mode) {
    case Mode::local: {
      if (a.quiver.n != 1)
        throw std::invalid_argument("mode local: quiver must have 1 vertex");
      int r = static_cast<int>(a.quiver.arrows.size());
      std::vector<SemisimpleSequence> layerings =
          components_local(r, a.loewy_bound, d[0]);
      ComponentsResult res;
      res.realizable_count =
          static_cast<int>(realizable_sequences(a, d, cfg.seq_cap).size());
      for (const SemisimpleSequence& s : layerings)
        res.components.push_back(build_report(
            a, s, DetectionRoute::local, Certification::exact, cfg));
      return res;
    }
    case Mode::rad_square_zero:
      return components_rad_square_zero(a, d, cfg);
    case Mode::acyclic:
      return components_acyclic(a, d, cfg);
    case Mode::general:
      return components_general_truncated(a, d, cfg);
    case Mode::auto_detect:
      break;
  }
  throw std::logic_error("compute_components: unreachable");
}

}  // namespace repvar
