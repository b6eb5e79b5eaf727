#include "repvar/layers.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "repvar/errors.hpp"

namespace repvar {

SemisimpleSequence SemisimpleSequence::zeros(int n, int loewy_bound) {
  return SemisimpleSequence(
      std::vector<DimVector>(loewy_bound + 1, DimVector::zeros(n)));
}

DimVector SemisimpleSequence::total() const {
  if (layers.empty()) return DimVector();
  DimVector t = DimVector::zeros(layers[0].size());
  for (const DimVector& l : layers) t = t.plus(l);
  return t;
}

int SemisimpleSequence::loewy_length() const {
  for (int l = layer_count(); l-- > 0;)
    if (!layers[l].is_zero()) return l + 1;
  return 0;
}

bool dominance_leq(const SemisimpleSequence& s, const SemisimpleSequence& t) {
  if (s.layer_count() != t.layer_count())
    throw std::invalid_argument("dominance_leq: Loewy bounds differ");
  if (s.total() != t.total())
    throw std::invalid_argument("dominance_leq: totals differ");
  DimVector ps = DimVector::zeros(s.total().size());
  DimVector pt = ps;
  for (int l = 0; l < s.layer_count(); ++l) {
    ps = ps.plus(s.layers[l]);
    pt = pt.plus(t.layers[l]);
    if (!ps.leq(pt)) return false;
  }
  return true;
}

bool dominance_lt(const SemisimpleSequence& s, const SemisimpleSequence& t) {
  return s != t && dominance_leq(s, t);
}

uint64_t count_sequences(const DimVector& d, int loewy_bound, uint64_t cap) {
  unsigned __int128 total = 1;
  for (int i = 0; i < d.size(); ++i) {
    // C(d_i + L, L)
    unsigned __int128 c = 1;
    for (int k = 1; k <= loewy_bound; ++k) {
      c = c * (d[i] + k) / k;  // exact at each step
      if (c > cap) return cap;
    }
    total *= c;
    if (total > cap) return cap;
  }
  return static_cast<uint64_t>(total);
}

namespace {

// Advance v through { 0 <= v <= bound } in lexicographic order (last
// coordinate fastest). Returns false after the maximum.
bool next_vector_leq(DimVector& v, const DimVector& bound) {
  for (int i = v.size(); i-- > 0;) {
    if (v[i] < bound[i]) {
      ++v[i];
      return true;
    }
    v[i] = 0;
  }
  return false;
}

}  // namespace

std::vector<SemisimpleSequence> enumerate_sequences(const DimVector& d,
                                                    int loewy_bound,
                                                    uint64_t cap) {
  if (count_sequences(d, loewy_bound, cap) >= cap)
    throw CapExceeded("enumerate_sequences: |Seq(d)| exceeds the cap of " +
                      std::to_string(cap) +
                      "; restrict the dimension vector or raise --cap");
  std::vector<SemisimpleSequence> out;
  std::vector<DimVector> layers(loewy_bound + 1, DimVector::zeros(d.size()));
  std::function<void(int, const DimVector&)> rec = [&](int l,
                                                       const DimVector& rem) {
    if (l == loewy_bound) {
      layers[l] = rem;
      out.emplace_back(layers);
      return;
    }
    DimVector v = DimVector::zeros(d.size());
    while (true) {
      layers[l] = v;
      rec(l + 1, rem.minus(v));
      if (!next_vector_leq(v, rem)) break;
    }
  };
  rec(0, d);
  return out;
}

bool is_realizable(const SemisimpleSequence& s, const TruncatedAlgebra& a) {
  if (s.layer_count() != a.layer_count())
    throw std::invalid_argument("is_realizable: Loewy bound mismatch");
  auto adj = a.quiver.adjacency_matrix();
  for (int l = 0; l + 1 < s.layer_count(); ++l)
    if (!s.layers[l + 1].leq(times_adjacency(s.layers[l], adj))) return false;
  return true;
}

std::vector<SemisimpleSequence> realizable_sequences(const TruncatedAlgebra& a,
                                                     const DimVector& d,
                                                     uint64_t cap) {
  int L = a.loewy_bound;
  if (count_sequences(d, L, cap) >= cap)
    throw CapExceeded("realizable_sequences: |Seq(d)| exceeds the cap of " +
                      std::to_string(cap) +
                      "; restrict the dimension vector or raise --cap");
  auto adj = a.quiver.adjacency_matrix();
  std::vector<SemisimpleSequence> out;
  std::vector<DimVector> layers(L + 1, DimVector::zeros(d.size()));
  std::function<void(int, const DimVector&)> rec = [&](int l,
                                                       const DimVector& rem) {
    if (l == L) {
      if (l == 0 || rem.leq(times_adjacency(layers[l - 1], adj))) {
        layers[l] = rem;
        out.emplace_back(layers);
      }
      return;
    }
    DimVector bound =
        l == 0 ? rem
               : DimVector::inf(rem, times_adjacency(layers[l - 1], adj));
    if (!bound.nonnegative()) return;
    DimVector v = DimVector::zeros(d.size());
    while (true) {
      layers[l] = v;
      rec(l + 1, rem.minus(v));
      if (!next_vector_leq(v, bound)) break;
    }
  };
  rec(0, d);
  return out;
}

namespace {

// x . A^T, i.e. the dimension vector of the first injective co-layer of a
// semisimple with dimension vector x.
DimVector times_transposed(const DimVector& x,
                           const std::vector<std::vector<int>>& adj) {
  int n = x.size();
  DimVector r = DimVector::zeros(n);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) r[k] += adj[k][j] * x[j];
  return r;
}

std::vector<DimVector> socle_recursion(
    const std::vector<DimVector>& cur,
    const std::vector<std::vector<int>>& adj) {
  int L = static_cast<int>(cur.size()) - 1;
  int n = cur[0].size();
  DimVector total = DimVector::zeros(n);
  for (const DimVector& l : cur) total = total.plus(l);
  if (total.is_zero())
    return std::vector<DimVector>(L + 1, DimVector::zeros(n));

  // Socle: sup over suffix sums of (layer_l - layer_{l+1} . A^T).
  DimVector soc;
  {
    DimVector run = DimVector::zeros(n);
    DimVector best;
    for (int j = 0; j <= L; ++j) {
      int l = L - j;
      DimVector above =
          l + 1 <= L ? times_transposed(cur[l + 1], adj) : DimVector::zeros(n);
      run = run.plus(cur[l].minus(above));
      best = j == 0 ? run : DimVector::sup(best, run);
    }
    soc = best;
  }
  if (!soc.nonnegative() || soc.total() == 0)
    throw std::logic_error("generic_socle_layering: degenerate socle");

  // Generic radical layering of M/soc M.
  std::vector<DimVector> quot(L + 1, DimVector::zeros(n));
  DimVector e1_sum = DimVector::zeros(n);
  DimVector q_sum = DimVector::zeros(n);
  for (int m = 1; m <= L; ++m) {
    e1_sum = e1_sum.plus(times_transposed(cur[L - m + 1], adj));
    quot[L - m] = DimVector::inf(cur[L - m], e1_sum.minus(q_sum));
    if (!quot[L - m].nonnegative())
      throw std::logic_error("generic_socle_layering: negative quotient layer");
    q_sum = q_sum.plus(quot[L - m]);
  }
  if (q_sum != total.minus(soc))
    throw std::logic_error(
        "generic_socle_layering: quotient layering does not account for "
        "the socle");

  std::vector<DimVector> tail = socle_recursion(quot, adj);
  if (!tail[L].is_zero())
    throw std::logic_error("generic_socle_layering: tail overflow");
  std::vector<DimVector> out(L + 1, DimVector::zeros(n));
  out[0] = soc;
  for (int l = 1; l <= L; ++l) out[l] = tail[l - 1];
  return out;
}

}  // namespace

SemisimpleSequence generic_socle_layering(const SemisimpleSequence& s,
                                          const TruncatedAlgebra& a) {
  if (!is_realizable(s, a))
    throw std::invalid_argument(
        "generic_socle_layering: sequence is not realizable");
  return SemisimpleSequence(
      socle_recursion(s.layers, a.quiver.adjacency_matrix()));
}

SemisimpleSequence generic_radical_layering_hereditary(const Quiver& q,
                                                       const DimVector& d) {
  if (!q.is_acyclic())
    throw std::invalid_argument(
        "generic_radical_layering_hereditary: quiver has a cycle");
  if (d.size() != q.n)
    throw std::invalid_argument(
        "generic_radical_layering_hereditary: size mismatch");
  int L = q.longest_path_length();
  auto adj = q.adjacency_matrix();
  std::vector<DimVector> layers;
  DimVector rem = d;
  for (int l = 0; l <= L; ++l) {
    DimVector t = rem.minus(times_adjacency(rem, adj)).clamp0();
    layers.push_back(t);
    rem = rem.minus(t);
  }
  if (!rem.is_zero())
    throw std::logic_error(
        "generic_radical_layering_hereditary: layers do not absorb d");
  return SemisimpleSequence(std::move(layers));
}

bool pair_leq(const LayeringPair& a, const LayeringPair& b) {
  return dominance_leq(a.radical, b.radical) && dominance_leq(a.socle, b.socle);
}

std::vector<LayeringPair> minimal_pairs(const std::vector<LayeringPair>& ps) {
  std::vector<LayeringPair> out;
  for (size_t i = 0; i < ps.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < ps.size() && !dominated; ++j) {
      if (i == j) continue;
      if (pair_leq(ps[j], ps[i]) && !(ps[j] == ps[i])) dominated = true;
    }
    if (!dominated) out.push_back(ps[i]);
  }
  return out;
}

std::vector<std::vector<int>> minimality_layers(
    const std::vector<LayeringPair>& ps) {
  std::vector<std::vector<int>> out;
  std::vector<bool> used(ps.size(), false);
  size_t left = ps.size();
  while (left > 0) {
    std::vector<int> layer;
    for (size_t i = 0; i < ps.size(); ++i) {
      if (used[i]) continue;
      bool dominated = false;
      for (size_t j = 0; j < ps.size() && !dominated; ++j) {
        if (used[j] || i == j) continue;
        if (pair_leq(ps[j], ps[i]) && !(ps[j] == ps[i])) dominated = true;
      }
      if (!dominated) layer.push_back(static_cast<int>(i));
    }
    for (int i : layer) used[i] = true;
    left -= layer.size();
    out.push_back(std::move(layer));
  }
  return out;
}

std::string layering_to_string(const SemisimpleSequence& s) {
  std::ostringstream os;
  for (int l = 0; l < s.layer_count(); ++l) {
    if (l) os << ";";
    bool first = true;
    for (int i = 0; i < s.layers[l].size(); ++i) {
      if (s.layers[l][i] == 0) continue;
      if (!first) os << ",";
      first = false;
      os << (i + 1) << ":" << s.layers[l][i];
    }
  }
  return os.str();
}

}  // namespace repvar
