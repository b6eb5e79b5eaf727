#include "repvar/skeleta.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "repvar/errors.hpp"

namespace repvar {

SemisimpleSequence Skeleton::layering(int loewy_bound,
                                      int vertex_count) const {
  SemisimpleSequence s = SemisimpleSequence::zeros(vertex_count, loewy_bound);
  for (const SkeletonPath& sp : paths)
    ++s.layers[sp.path.length()][sp.path.end - 1];
  return s;
}

int Skeleton::find(int top, const Path& p) const {
  for (int i = 0; i < static_cast<int>(paths.size()); ++i)
    if (paths[i].top == top && paths[i].path == p) return i;
  return -1;
}

bool skeleton_path_less(const Quiver& q, const SkeletonPath& a,
                        const SkeletonPath& b) {
  if (a.path.length() != b.path.length())
    return a.path.length() < b.path.length();
  if (a.top != b.top) return a.top < b.top;
  return path_less(q, a.path, b.path);
}

void validate_skeleton(const Skeleton& sk, const SemisimpleSequence& s,
                       const TruncatedAlgebra& a) {
  int L = a.loewy_bound;
  // tops agree with layer 0
  DimVector t0 = DimVector::zeros(a.quiver.n);
  for (int v : sk.tops) {
    if (v < 1 || v > a.quiver.n)
      throw std::invalid_argument("skeleton: top at a missing vertex");
    ++t0[v - 1];
  }
  if (t0 != s.layers[0])
    throw std::invalid_argument("skeleton: tops do not match layer 0");
  for (const SkeletonPath& sp : sk.paths) {
    if (sp.top < 0 || sp.top >= static_cast<int>(sk.tops.size()))
      throw std::invalid_argument("skeleton: path on a missing top");
    if (sp.path.start != sk.tops[sp.top])
      throw std::invalid_argument("skeleton: path does not start at its top");
    if (sp.path.length() > L)
      throw std::invalid_argument("skeleton: path longer than the Loewy bound");
    if (sp.path.length() > 0) {
      Path init = sp.path;
      init.end = a.quiver.arrows[init.arrow_ids.back()].source;
      init.arrow_ids.pop_back();
      if (sk.find(sp.top, init) < 0)
        throw std::invalid_argument(
            "skeleton: not closed under initial subpaths");
    }
  }
  if (sk.layering(L, a.quiver.n) != s)
    throw std::invalid_argument("skeleton: layer counts do not match");
}

std::vector<Skeleton> enumerate_skeleta(const SemisimpleSequence& s,
                                        const TruncatedAlgebra& a,
                                        uint64_t cap) {
  if (s.layer_count() != a.layer_count())
    throw std::invalid_argument("enumerate_skeleta: Loewy bound mismatch");
  int L = a.loewy_bound;
  int n = a.quiver.n;

  std::vector<int> tops;
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < s.layers[0][i]; ++c) tops.push_back(i + 1);

  std::vector<Skeleton> out;
  std::vector<SkeletonPath> chosen;  // all paths chosen so far
  for (int t = 0; t < static_cast<int>(tops.size()); ++t)
    chosen.push_back(SkeletonPath{t, Path::trivial(tops[t])});

  std::function<void(int, const std::vector<SkeletonPath>&)> rec =
      [&](int layer, const std::vector<SkeletonPath>& prev) {
        if (layer > L) {
          Skeleton sk;
          sk.tops = tops;
          sk.paths = chosen;
          std::sort(sk.paths.begin(), sk.paths.end(),
                    [&](const SkeletonPath& x, const SkeletonPath& y) {
                      return skeleton_path_less(a.quiver, x, y);
                    });
          if (out.size() >= cap)
            throw CapExceeded("enumerate_skeleta: more than " +
                              std::to_string(cap) + " skeleta");
          out.push_back(std::move(sk));
          return;
        }
        // candidate extensions, grouped by end vertex
        std::vector<std::vector<SkeletonPath>> cands(n);
        for (const SkeletonPath& sp : prev) {
          for (int ai : a.quiver.arrows_from(sp.path.end)) {
            SkeletonPath ext = sp;
            ext.path.arrow_ids.push_back(ai);
            ext.path.end = a.quiver.arrows[ai].target;
            cands[ext.path.end - 1].push_back(std::move(ext));
          }
        }
        for (auto& c : cands)
          std::sort(c.begin(), c.end(),
                    [&](const SkeletonPath& x, const SkeletonPath& y) {
                      return skeleton_path_less(a.quiver, x, y);
                    });
        for (int i = 0; i < n; ++i)
          if (s.layers[layer][i] > static_cast<int>(cands[i].size()))
            return;  // not realizable along this branch

        // per-vertex combinations, lexicographic
        std::vector<SkeletonPath> picked;
        std::function<void(int)> pick_vertex = [&](int vi) {
          if (vi == n) {
            size_t mark = chosen.size();
            chosen.insert(chosen.end(), picked.begin(), picked.end());
            rec(layer + 1, picked);
            chosen.resize(mark);
            return;
          }
          int need = s.layers[layer][vi];
          int have = static_cast<int>(cands[vi].size());
          std::vector<int> idx(need);
          for (int k = 0; k < need; ++k) idx[k] = k;
          while (true) {
            size_t mark = picked.size();
            for (int k : idx) picked.push_back(cands[vi][k]);
            pick_vertex(vi + 1);
            picked.resize(mark);
            // next combination
            int k = need - 1;
            while (k >= 0 && idx[k] == have - need + k) --k;
            if (k < 0) break;
            ++idx[k];
            for (int j = k + 1; j < need; ++j) idx[j] = idx[j - 1] + 1;
          }
        };
        pick_vertex(0);
      };

  rec(1, chosen);
  return out;
}

std::vector<SkeletonPath> critical_paths(const Skeleton& sk,
                                         const TruncatedAlgebra& a) {
  std::vector<SkeletonPath> out;
  for (const SkeletonPath& sp : sk.paths) {
    if (sp.path.length() + 1 > a.loewy_bound) continue;
    for (int ai : a.quiver.arrows_from(sp.path.end)) {
      SkeletonPath ext = sp;
      ext.path.arrow_ids.push_back(ai);
      ext.path.end = a.quiver.arrows[ai].target;
      if (sk.find(ext.top, ext.path) < 0) out.push_back(std::move(ext));
    }
  }
  std::sort(out.begin(), out.end(),
            [&](const SkeletonPath& x, const SkeletonPath& y) {
              return skeleton_path_less(a.quiver, x, y);
            });
  return out;
}

GenericPresentation generic_presentation(const SemisimpleSequence& s,
                                         const TruncatedAlgebra& a,
                                         const std::optional<Skeleton>& sk) {
  if (!is_realizable(s, a))
    throw std::invalid_argument(
        "generic_presentation: sequence is not realizable");
  GenericPresentation gp;
  gp.algebra = a;
  gp.layering = s;
  if (sk.has_value()) {
    validate_skeleton(*sk, s, a);
    gp.skeleton = *sk;
  } else {
    std::vector<Skeleton> all = enumerate_skeleta(s, a);
    if (all.empty())
      throw std::logic_error("generic_presentation: realizable but no skeleton");
    gp.skeleton = std::move(all.front());
  }
  int params = 0;
  for (const SkeletonPath& crit : critical_paths(gp.skeleton, a)) {
    Relation rel;
    rel.critical = crit;
    for (int i = 0; i < static_cast<int>(gp.skeleton.paths.size()); ++i) {
      const SkeletonPath& bp = gp.skeleton.paths[i];
      if (bp.path.end == crit.path.end &&
          bp.path.length() >= crit.path.length())
        rel.terms.push_back(RelationTerm{params++, i});
    }
    gp.relations.push_back(std::move(rel));
  }
  gp.param_count = params;
  return gp;
}

std::string render_skeleton_path(const Quiver& q, const Skeleton&,
                                 const SkeletonPath& p) {
  std::string z = "z" + std::to_string(p.top + 1);
  if (p.path.length() == 0) return z;
  return p.path.to_string(q) + "*" + z;
}

std::string render_relation(const GenericPresentation& gp, int rel_index) {
  const Relation& rel = gp.relations[rel_index];
  std::string out =
      render_skeleton_path(gp.algebra.quiver, gp.skeleton, rel.critical);
  for (const RelationTerm& t : rel.terms) {
    out += " - x" + std::to_string(t.param + 1) + "*" +
           render_skeleton_path(gp.algebra.quiver, gp.skeleton,
                                gp.skeleton.paths[t.path_index]);
  }
  return out;
}

namespace {

Representation build_specialized(const GenericPresentation& gp, uint32_t p,
                                 const std::vector<uint32_t>& params) {
  const TruncatedAlgebra& a = gp.algebra;
  int n = a.quiver.n;
  int nb = static_cast<int>(gp.skeleton.paths.size());

  // basis positions within each vertex block
  std::vector<int> vertex_of(nb), pos(nb);
  DimVector dims = DimVector::zeros(n);
  for (int i = 0; i < nb; ++i) {
    int v = gp.skeleton.paths[i].path.end - 1;
    vertex_of[i] = v;
    pos[i] = dims[v]++;
  }

  std::map<std::pair<int, std::vector<int>>, int> basis_index;
  for (int i = 0; i < nb; ++i)
    basis_index[{gp.skeleton.paths[i].top,
                 gp.skeleton.paths[i].path.arrow_ids}] = i;
  std::map<std::pair<int, std::vector<int>>, int> relation_index;
  for (int r = 0; r < static_cast<int>(gp.relations.size()); ++r)
    relation_index[{gp.relations[r].critical.top,
                    gp.relations[r].critical.path.arrow_ids}] = r;

  std::vector<FpMat> mats;
  for (int ai = 0; ai < static_cast<int>(a.quiver.arrows.size()); ++ai) {
    const Arrow& ar = a.quiver.arrows[ai];
    FpMat m(p, dims[ar.target - 1], dims[ar.source - 1]);
    for (int b = 0; b < nb; ++b) {
      const SkeletonPath& bp = gp.skeleton.paths[b];
      if (bp.path.end != ar.source) continue;
      if (bp.path.length() + 1 > a.loewy_bound) continue;  // truncated away
      std::vector<int> ext = bp.path.arrow_ids;
      ext.push_back(ai);
      auto hit = basis_index.find({bp.top, ext});
      if (hit != basis_index.end()) {
        m.at(pos[hit->second], pos[b]) = 1;
        continue;
      }
      auto rel = relation_index.find({bp.top, ext});
      if (rel == relation_index.end())
        throw std::logic_error(
            "specialize: extension neither in the skeleton nor critical");
      for (const RelationTerm& t : gp.relations[rel->second].terms)
        m.at(pos[t.path_index], pos[b]) =
            fp_add(m.at(pos[t.path_index], pos[b]), params[t.param], p);
    }
    mats.push_back(std::move(m));
  }
  return Representation(a, p, dims, std::move(mats));
}

}  // namespace

SpecializedModule specialize_with(const GenericPresentation& gp, uint32_t p,
                                  const std::vector<uint32_t>& params) {
  if (static_cast<int>(params.size()) != gp.param_count)
    throw std::invalid_argument("specialize_with: wrong parameter count");
  Representation rep = build_specialized(gp, p, params);
  if (radical_layering(rep) != gp.layering)
    throw SpecializeError(
        "specialize_with: assignment degenerates the radical layering");
  return SpecializedModule{std::move(rep), params};
}

SpecializedModule specialize(const GenericPresentation& gp, uint32_t p,
                             Rng& rng, int retries) {
  for (int t = 0; t < retries; ++t) {
    std::vector<uint32_t> params(gp.param_count);
    for (auto& x : params) x = rng.nonzero_mod_p(p);
    Representation rep = build_specialized(gp, p, params);
    if (radical_layering(rep) == gp.layering)
      return SpecializedModule{std::move(rep), std::move(params)};
  }
  throw SpecializeError("specialize: no valid specialization in " +
                        std::to_string(retries) +
                        " attempts at p = " + std::to_string(p) +
                        " (prime too small or assignment degenerate)");
}

}  // namespace repvar
