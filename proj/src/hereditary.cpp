#include "repvar/hereditary.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "repvar/errors.hpp"

namespace repvar {

Representation sample_representation(const TruncatedAlgebra& a,
                                     const DimVector& d, uint32_t p, Rng& rng,
                                     bool check_truncation) {
  if (d.size() != a.quiver.n)
    throw std::invalid_argument("sample_representation: size mismatch");
  std::vector<FpMat> mats;
  for (const Arrow& ar : a.quiver.arrows) {
    FpMat m(p, d[ar.target - 1], d[ar.source - 1]);
    for (auto& x : m.a) x = rng.mod_p(p);
    mats.push_back(std::move(m));
  }
  Representation rep(a, p, d, std::move(mats));
  if (check_truncation && !rep.truncation_holds())
    throw std::invalid_argument(
        "sample_representation: random sample violates the truncation "
        "relations (cyclic quiver with positive dimensions on a cycle)");
  return rep;
}

TruncatedAlgebra hereditary_algebra(const Quiver& q) {
  if (!q.is_acyclic())
    throw std::invalid_argument("hereditary_algebra: quiver has a cycle");
  return TruncatedAlgebra(q, q.longest_path_length());
}

Representation sample_hereditary(const Quiver& q, const DimVector& d,
                                 uint32_t p, Rng& rng) {
  return sample_representation(hereditary_algebra(q), d, p, rng, false);
}

int generic_ext(const Quiver& q, const DimVector& d1, const DimVector& d2,
                int samples, uint32_t p, uint64_t seed) {
  if (!q.is_acyclic())
    throw std::invalid_argument("generic_ext: quiver has a cycle");
  if (samples < 1) throw std::invalid_argument("generic_ext: samples >= 1");
  TruncatedAlgebra a = hereditary_algebra(q);
  long long euler = euler_form(q, d1, d2);
  Rng base(seed);
  long long best = -1;
  for (int i = 0; i < samples; ++i) {
    Rng r1 = base.fork(2 * static_cast<uint64_t>(i));
    Rng r2 = base.fork(2 * static_cast<uint64_t>(i) + 1);
    Representation m = sample_representation(a, d1, p, r1, false);
    Representation n = sample_representation(a, d2, p, r2, false);
    long long ext = hom_dim(m, n) - euler;
    if (ext < 0)
      throw std::logic_error("generic_ext: negative Ext dimension");
    if (best < 0 || ext < best) best = ext;
    if (best == 0) break;  // minimum cannot drop further
  }
  return static_cast<int>(best);
}

namespace {

bool next_vector_below(DimVector& v, const DimVector& bound) {
  for (int i = v.size(); i-- > 0;) {
    if (v[i] < bound[i]) {
      ++v[i];
      return true;
    }
    v[i] = 0;
  }
  return false;
}

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::vector<DimVector> sub_dimension_vectors(const Quiver& q,
                                             const DimVector& d, int samples,
                                             uint32_t p, uint64_t seed) {
  std::vector<DimVector> out;
  DimVector v = DimVector::zeros(d.size());
  while (true) {
    uint64_t sub_seed = seed ^ fnv1a(v.to_string());
    if (generic_ext(q, v, d.minus(v), samples, p, sub_seed) == 0)
      out.push_back(v);
    if (!next_vector_below(v, d)) break;
  }
  return out;
}

bool is_schur_root(const Quiver& q, const DimVector& d, int samples,
                   uint32_t p, uint64_t seed) {
  if (!q.is_acyclic())
    throw std::invalid_argument("is_schur_root: quiver has a cycle");
  TruncatedAlgebra a = hereditary_algebra(q);
  Rng base(seed);
  int best = -1;
  for (int i = 0; i < samples; ++i) {
    Rng r = base.fork(i);
    Representation m = sample_representation(a, d, p, r, false);
    int e = end_dim(m);
    if (best < 0 || e < best) best = e;
    if (best <= 1) break;
  }
  return best == 1;
}

DimVector CanonicalDecomposition::total(int n) const {
  DimVector t = DimVector::zeros(n);
  for (const auto& [v, mult] : summands)
    for (int k = 0; k < mult; ++k) t = t.plus(v);
  return t;
}

std::vector<DimVector> CanonicalDecomposition::flattened() const {
  std::vector<DimVector> out;
  for (const auto& [v, mult] : summands)
    for (int k = 0; k < mult; ++k) out.push_back(v);
  return out;
}

CanonicalDecomposition canonical_decomposition(const Quiver& q,
                                               const DimVector& d, int samples,
                                               uint32_t p, uint64_t seed,
                                               int rounds) {
  if (!q.is_acyclic())
    throw std::invalid_argument(
        "canonical_decomposition: quiver has a cycle");
  TruncatedAlgebra a = hereditary_algebra(q);
  CanonicalDecomposition last;
  if (d.is_zero()) {
    last.verified = true;
    return last;
  }
  Rng base(seed);
  int cur_samples = samples;
  for (int round = 0; round < rounds; ++round) {
    Rng rs = base.fork(1000 + round);
    Representation m = sample_representation(a, d, p, rs, false);
    Rng rf = base.fork(2000 + round);
    std::vector<Representation> parts = fitting_decompose(m, rf);

    std::map<DimVector, int> tally;
    for (const Representation& part : parts) ++tally[part.dim];
    CanonicalDecomposition cd;
    for (const auto& [v, mult] : tally) cd.summands.emplace_back(v, mult);

    bool ok = true;
    Rng rv = base.fork(3000 + round);
    for (const auto& [v, mult] : cd.summands) {
      if (!is_schur_root(q, v, cur_samples, p, rv.next())) {
        ok = false;
        break;
      }
      if (mult >= 2 &&
          generic_ext(q, v, v, cur_samples, p, rv.next()) != 0) {
        ok = false;
        break;
      }
    }
    if (ok) {
      for (size_t i = 0; i < cd.summands.size() && ok; ++i)
        for (size_t j = 0; j < cd.summands.size() && ok; ++j) {
          if (i == j) continue;
          if (generic_ext(q, cd.summands[i].first, cd.summands[j].first,
                          cur_samples, p, rv.next()) != 0)
            ok = false;
        }
    }
    cd.verified = ok;
    if (ok) return cd;
    last = cd;
    cur_samples *= 2;
  }
  last.verified = false;
  return last;
}

long long mu_generic_params(const Quiver& q,
                            const CanonicalDecomposition& cd) {
  long long mu = 0;
  for (const auto& [v, mult] : cd.summands)
    mu += mult * (1 - euler_form(q, v, v));
  return mu;
}

}  // namespace repvar
