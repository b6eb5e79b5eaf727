#include "repvar/repfield.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "repvar/errors.hpp"

namespace repvar {

Representation::Representation(TruncatedAlgebra a, uint32_t prime, DimVector d,
                               std::vector<FpMat> mats)
    : algebra(std::move(a)), p(prime), dim(std::move(d)),
      matrices(std::move(mats)) {
  if (dim.size() != algebra.quiver.n)
    throw std::invalid_argument("Representation: dimension vector size");
  if (!dim.nonnegative())
    throw std::invalid_argument("Representation: negative dimension");
  if (matrices.size() != algebra.quiver.arrows.size())
    throw std::invalid_argument("Representation: one matrix per arrow");
  for (size_t i = 0; i < matrices.size(); ++i) {
    const Arrow& ar = algebra.quiver.arrows[i];
    if (matrices[i].p != p || matrices[i].rows != dim[ar.target - 1] ||
        matrices[i].cols != dim[ar.source - 1])
      throw std::invalid_argument("Representation: matrix shape for arrow '" +
                                  ar.name + "'");
  }
}

Representation Representation::zero_module(const TruncatedAlgebra& a,
                                           uint32_t prime,
                                           const DimVector& d) {
  std::vector<FpMat> mats;
  for (const Arrow& ar : a.quiver.arrows)
    mats.emplace_back(prime, d[ar.target - 1], d[ar.source - 1]);
  return Representation(a, prime, d, std::move(mats));
}

bool Representation::truncation_holds() const {
  // J^{L+1} = 0 iff applying arrows L+1 times kills everything.
  ModuleSubspace v = full_subspace(*this);
  for (int l = 0; l <= algebra.loewy_bound; ++l) v = radical_of(*this, v);
  return v.dims().is_zero();
}

DimVector ModuleSubspace::dims() const {
  DimVector d = DimVector::zeros(static_cast<int>(at.size()));
  for (size_t i = 0; i < at.size(); ++i) d[static_cast<int>(i)] = at[i].dim();
  return d;
}

ModuleSubspace full_subspace(const Representation& m) {
  ModuleSubspace u;
  for (int i = 0; i < m.dim.size(); ++i)
    u.at.push_back(Subspace::full(m.p, m.dim[i]));
  return u;
}

ModuleSubspace zero_subspace(const Representation& m) {
  ModuleSubspace u;
  for (int i = 0; i < m.dim.size(); ++i)
    u.at.push_back(Subspace::zero(m.p, m.dim[i]));
  return u;
}

bool is_subrepresentation(const Representation& m, const ModuleSubspace& u) {
  for (size_t a = 0; a < m.matrices.size(); ++a) {
    const Arrow& ar = m.algebra.quiver.arrows[a];
    Subspace img = apply_to_subspace(m.matrices[a], u.at[ar.source - 1]);
    if (!u.at[ar.target - 1].contains(img)) return false;
  }
  return true;
}

ModuleSubspace radical_of(const Representation& m, const ModuleSubspace& u) {
  ModuleSubspace r;
  for (int i = 0; i < m.dim.size(); ++i)
    r.at.push_back(Subspace::zero(m.p, m.dim[i]));
  for (size_t a = 0; a < m.matrices.size(); ++a) {
    const Arrow& ar = m.algebra.quiver.arrows[a];
    Subspace img = apply_to_subspace(m.matrices[a], u.at[ar.source - 1]);
    if (img.dim() > 0)
      r.at[ar.target - 1] = r.at[ar.target - 1].sum(img);
  }
  return r;
}

ModuleSubspace socle(const Representation& m) {
  ModuleSubspace s;
  for (int i = 1; i <= m.dim.size(); ++i) {
    std::vector<int> out = m.algebra.quiver.arrows_from(i);
    if (out.empty()) {
      s.at.push_back(Subspace::full(m.p, m.dim[i - 1]));
      continue;
    }
    FpMat stacked(m.p, 0, m.dim[i - 1]);
    for (int a : out) stacked = stacked.vstack(m.matrices[a]);
    s.at.push_back(Subspace::span_of(nullspace(stacked)));
  }
  return s;
}

SemisimpleSequence radical_layering(const Representation& m) {
  int L = m.algebra.loewy_bound;
  std::vector<DimVector> layers;
  ModuleSubspace v = full_subspace(m);
  for (int l = 0; l <= L; ++l) {
    ModuleSubspace w = radical_of(m, v);
    layers.push_back(v.dims().minus(w.dims()));
    v = std::move(w);
  }
  if (!v.dims().is_zero())
    throw std::logic_error("radical_layering: truncation relations violated");
  return SemisimpleSequence(std::move(layers));
}

SemisimpleSequence socle_layering(const Representation& m) {
  int L = m.algebra.loewy_bound;
  std::vector<DimVector> layers;
  Representation cur = m;
  for (int l = 0; l <= L; ++l) {
    if (cur.dim.is_zero()) {
      layers.push_back(DimVector::zeros(m.dim.size()));
      continue;
    }
    ModuleSubspace s = socle(cur);
    layers.push_back(s.dims());
    cur = quotient(cur, s);
  }
  if (!cur.dim.is_zero())
    throw std::logic_error("socle_layering: series does not exhaust");
  return SemisimpleSequence(std::move(layers));
}

FpMat path_matrix(const Representation& m, const Path& path) {
  FpMat acc = FpMat::identity(m.p, m.dim[path.start - 1]);
  for (int ai : path.arrow_ids) acc = m.matrices[ai].mul(acc);
  return acc;
}

int path_nullity(const Representation& m, const Path& path) {
  if (path.length() > m.algebra.loewy_bound)
    throw std::invalid_argument("path_nullity: path longer than Loewy bound");
  FpMat pm = path_matrix(m, path);
  return m.dim[path.start - 1] - rank(pm);
}

namespace {

// Coefficient matrix of { f_{t(a)} x_a = y_a f_{s(a)} } with unknowns the
// entries of the f_i (target-dims x source-dims), flattened vertex by
// vertex, row-major.
FpMat intertwiner_matrix(const Representation& m, const Representation& n) {
  uint32_t p = m.p;
  int nv = m.dim.size();
  std::vector<int> offset(nv + 1, 0);
  for (int i = 0; i < nv; ++i)
    offset[i + 1] = offset[i] + n.dim[i] * m.dim[i];
  int unknowns = offset[nv];

  int eqs = 0;
  for (size_t a = 0; a < m.matrices.size(); ++a) {
    const Arrow& ar = m.algebra.quiver.arrows[a];
    eqs += n.dim[ar.target - 1] * m.dim[ar.source - 1];
  }

  FpMat sys(p, eqs, unknowns);
  int eq = 0;
  for (size_t a = 0; a < m.matrices.size(); ++a) {
    const Arrow& ar = m.algebra.quiver.arrows[a];
    int s = ar.source - 1, t = ar.target - 1;
    const FpMat& x = m.matrices[a];
    const FpMat& y = n.matrices[a];
    for (int r = 0; r < n.dim[t]; ++r) {
      for (int c = 0; c < m.dim[s]; ++c) {
        // sum_k f_t[r,k] x[k,c] - sum_k y[r,k] f_s[k,c] = 0
        for (int k = 0; k < m.dim[t]; ++k)
          sys.at(eq, offset[t] + r * m.dim[t] + k) = x.at(k, c);
        for (int k = 0; k < n.dim[s]; ++k) {
          int col = offset[s] + k * m.dim[s] + c;
          sys.at(eq, col) = fp_sub(sys.at(eq, col), y.at(r, k), p);
        }
        ++eq;
      }
    }
  }
  return sys;
}

}  // namespace

int hom_dim(const Representation& m, const Representation& n) {
  if (!(m.algebra == n.algebra) || m.p != n.p)
    throw std::invalid_argument("hom_dim: algebra or prime mismatch");
  if (m.dim.total() == 0 || n.dim.total() == 0) return 0;
  return nullspace(intertwiner_matrix(m, n)).rows;
}

int end_dim(const Representation& m) { return hom_dim(m, m); }

Representation quotient(const Representation& m, const ModuleSubspace& u) {
  if (!is_subrepresentation(m, u))
    throw std::invalid_argument("quotient: not a subrepresentation");
  uint32_t p = m.p;
  int nv = m.dim.size();
  // Quotient coordinates are the non-pivot columns of each subspace basis.
  std::vector<std::vector<int>> coords(nv);
  DimVector qdim = DimVector::zeros(nv);
  for (int i = 0; i < nv; ++i) {
    std::vector<bool> is_piv(m.dim[i], false);
    for (int c : u.at[i].pivots) is_piv[c] = true;
    for (int c = 0; c < m.dim[i]; ++c)
      if (!is_piv[c]) coords[i].push_back(c);
    qdim[i] = static_cast<int>(coords[i].size());
  }
  auto project = [&](int vertex, std::vector<uint32_t> v) {
    u.at[vertex].reduce(v);
    std::vector<uint32_t> out(coords[vertex].size());
    for (size_t k = 0; k < coords[vertex].size(); ++k)
      out[k] = v[coords[vertex][k]];
    return out;
  };
  std::vector<FpMat> mats;
  for (size_t a = 0; a < m.matrices.size(); ++a) {
    const Arrow& ar = m.algebra.quiver.arrows[a];
    int s = ar.source - 1, t = ar.target - 1;
    FpMat q(p, qdim[t], qdim[s]);
    for (int c = 0; c < qdim[s]; ++c) {
      // image of the c-th quotient basis vector (a unit vector upstairs)
      std::vector<uint32_t> img(m.dim[t], 0);
      for (int r = 0; r < m.dim[t]; ++r)
        img[r] = m.matrices[a].at(r, coords[s][c]);
      std::vector<uint32_t> pj = project(t, std::move(img));
      for (int r = 0; r < qdim[t]; ++r) q.at(r, c) = pj[r];
    }
    mats.push_back(std::move(q));
  }
  return Representation(m.algebra, p, qdim, std::move(mats));
}

Representation restrict_to(const Representation& m, const ModuleSubspace& u) {
  if (!is_subrepresentation(m, u))
    throw std::invalid_argument("restrict_to: not a subrepresentation");
  uint32_t p = m.p;
  DimVector rdim = u.dims();
  // rref bases make coordinate extraction a pivot lookup
  std::vector<FpMat> mats;
  for (size_t a = 0; a < m.matrices.size(); ++a) {
    const Arrow& ar = m.algebra.quiver.arrows[a];
    int s = ar.source - 1, t = ar.target - 1;
    FpMat r(p, rdim[t], rdim[s]);
    for (int c = 0; c < rdim[s]; ++c) {
      std::vector<uint32_t> vec = u.at[s].basis.row(c);
      // image under the arrow
      std::vector<uint32_t> img(m.dim[t], 0);
      for (int i = 0; i < m.dim[t]; ++i) {
        uint64_t acc = 0;
        for (int j = 0; j < m.dim[s]; ++j)
          acc += static_cast<uint64_t>(m.matrices[a].at(i, j)) * vec[j];
        img[i] = static_cast<uint32_t>(acc % p);
      }
      for (int k = 0; k < rdim[t]; ++k)
        r.at(k, c) = img[u.at[t].pivots[k]];
      // defensive: the residual must vanish
      std::vector<uint32_t> check = img;
      u.at[t].reduce(check);
      for (uint32_t x : check)
        if (x != 0)
          throw std::logic_error("restrict_to: image escapes the subspace");
    }
    mats.push_back(std::move(r));
  }
  return Representation(m.algebra, p, rdim, std::move(mats));
}

namespace {

struct FiltrationSearch {
  const Representation& m;
  const SemisimpleSequence& s;
  const FiltrationOptions& opts;
  FiltrationResult res;

  // returns false to abort the whole search
  bool step(int level, const ModuleSubspace& cur) {
    int L = m.algebra.loewy_bound;
    ModuleSubspace rad = radical_of(m, cur);
    DimVector top = cur.dims().minus(rad.dims());
    const DimVector& need = s.layers[level];
    if (!need.leq(top)) return true;  // dead branch
    if (level == L) {
      // M_{L+1} = 0 forces M_L semisimple of the exact remaining size.
      if (rad.dims().is_zero() && cur.dims() == need) {
        ++res.witnesses;
        res.found = true;
        if (!opts.count_all) return false;
      }
      return true;
    }

    // Complement representatives of J.cur inside cur, per vertex.
    int nv = m.dim.size();
    std::vector<FpMat> comp(nv);
    for (int i = 0; i < nv; ++i) {
      FpMat rows(m.p, 0, m.dim[i]);
      for (int r = 0; r < cur.at[i].basis.rows; ++r) {
        std::vector<uint32_t> v = cur.at[i].basis.row(r);
        rad.at[i].reduce(v);
        FpMat one(m.p, 1, m.dim[i]);
        one.set_row(0, v);
        rows = rows.vstack(one);
      }
      std::vector<int> piv = rref(rows);
      FpMat basis(m.p, static_cast<int>(piv.size()), m.dim[i]);
      for (int r = 0; r < basis.rows; ++r)
        for (int c = 0; c < m.dim[i]; ++c) basis.at(r, c) = rows.at(r, c);
      comp[i] = std::move(basis);
      if (comp[i].rows != top[i])
        throw std::logic_error("filtration_search: top dimension mismatch");
    }

    // Choose, per vertex, a (top_i - need_i)-dimensional subspace of the
    // top; the pullback together with J.cur is the next submodule.
    std::vector<FpMat> choice(nv);
    std::function<bool(int)> pick = [&](int vi) -> bool {
      if (vi == nv) {
        ++res.nodes;
        if (res.nodes > opts.node_cap) {
          res.capped = true;
          return false;
        }
        ModuleSubspace next;
        next.at.reserve(nv);
        for (int i = 0; i < nv; ++i) {
          // rows of choice are coefficients against comp[i]
          FpMat actual = choice[i].rows == 0
                             ? FpMat(m.p, 0, m.dim[i])
                             : choice[i].mul(comp[i]);
          next.at.push_back(
              Subspace::span_of(rad.at[i].basis.vstack(actual)));
        }
        return step(level + 1, next);
      }
      int k = top[vi] - need[vi];
      return for_each_subspace(m.p, top[vi], k, [&](const FpMat& w) {
        choice[vi] = w;
        return pick(vi + 1);
      });
    };
    return pick(0);
  }
};

}  // namespace

FiltrationResult filtration_search(const Representation& m,
                                   const SemisimpleSequence& s,
                                   const FiltrationOptions& opts) {
  if (s.layer_count() != m.algebra.layer_count())
    throw std::invalid_argument("filtration_search: Loewy bound mismatch");
  if (s.total() != m.dim)
    throw std::invalid_argument("filtration_search: total dimension mismatch");
  FiltrationSearch fs{m, s, opts, {}};
  // A governing sequence is dominated by the radical layering; skip the
  // search when that necessary condition already fails.
  if (!dominance_leq(s, radical_layering(m))) return fs.res;
  fs.step(0, full_subspace(m));
  return fs.res;
}

bool filtration_exists(const Representation& m, const SemisimpleSequence& s,
                       uint64_t node_cap) {
  FiltrationOptions opts;
  opts.node_cap = node_cap;
  FiltrationResult r = filtration_search(m, s, opts);
  if (r.found) return true;
  if (r.capped)
    throw CapExceeded("filtration_exists: search cap of " +
                      std::to_string(node_cap) +
                      " nodes exceeded without a witness");
  return false;
}

GammaResult gamma(const Representation& m, const GammaOptions& opts) {
  GammaResult out;
  std::vector<SemisimpleSequence> seqs =
      realizable_sequences(m.algebra, m.dim, opts.seq_cap);
  for (const SemisimpleSequence& s : seqs) {
    FiltrationOptions fo;
    fo.node_cap = opts.node_cap;
    FiltrationResult r = filtration_search(m, s, fo);
    if (r.capped && !r.found)
      throw CapExceeded("gamma: filtration search cap exceeded on candidate " +
                        layering_to_string(s));
    if (r.found) {
      ++out.value;
      out.witnesses.push_back(s);
      if (opts.early_exit_at_two && out.value >= 2) break;
    }
  }
  return out;
}

bool gamma_exceeds_one(const Representation& m, const GammaOptions& opts) {
  GammaOptions o = opts;
  o.early_exit_at_two = true;
  return gamma(m, o).value > 1;
}

namespace {

// Assemble one endomorphism from a flat solution row of the intertwiner
// system: per-vertex square matrices.
std::vector<FpMat> unflatten_endo(const Representation& m,
                                  const std::vector<uint32_t>& flat) {
  std::vector<FpMat> f;
  size_t pos = 0;
  for (int i = 0; i < m.dim.size(); ++i) {
    FpMat fi(m.p, m.dim[i], m.dim[i]);
    for (int r = 0; r < m.dim[i]; ++r)
      for (int c = 0; c < m.dim[i]; ++c) fi.at(r, c) = flat[pos++];
    f.push_back(std::move(fi));
  }
  return f;
}

}  // namespace

std::vector<Representation> fitting_decompose(const Representation& m,
                                              Rng& rng, int split_tries) {
  if (m.dim.total() == 0) return {};
  FpMat endo = nullspace(intertwiner_matrix(m, m));
  if (endo.rows <= 1) return {m};  // End = K: certified indecomposable

  for (int t = 0; t < split_tries; ++t) {
    // random element of End(m)
    std::vector<uint32_t> flat(endo.cols, 0);
    for (int r = 0; r < endo.rows; ++r) {
      uint32_t c = rng.mod_p(m.p);
      if (c == 0) continue;
      for (int j = 0; j < endo.cols; ++j)
        flat[j] = fp_add(flat[j], fp_mul(c, endo.at(r, j), m.p), m.p);
    }
    std::vector<FpMat> f = unflatten_endo(m, flat);
    FpPoly chi = FpPoly::one(m.p);
    for (const FpMat& fi : f) chi = chi.mul(charpoly(fi));
    std::vector<std::pair<FpPoly, int>> factors = fp_poly_factor(chi, rng);
    if (factors.size() < 2) continue;

    std::vector<Representation> out;
    DimVector seen = DimVector::zeros(m.dim.size());
    for (const auto& [g, mult] : factors) {
      FpPoly ge = FpPoly::one(m.p);
      for (int e = 0; e < mult; ++e) ge = ge.mul(g);
      ModuleSubspace u;
      for (int i = 0; i < m.dim.size(); ++i)
        u.at.push_back(Subspace::span_of(nullspace(poly_at_matrix(ge, f[i]))));
      DimVector du = u.dims();
      if (du.is_zero()) continue;
      seen = seen.plus(du);
      Representation part = restrict_to(m, u);
      std::vector<Representation> sub = fitting_decompose(part, rng,
                                                          split_tries);
      out.insert(out.end(), sub.begin(), sub.end());
    }
    if (seen != m.dim)
      throw std::logic_error("fitting_decompose: eigenspaces do not fill");
    return out;
  }
  return {m};
}

}  // namespace repvar
