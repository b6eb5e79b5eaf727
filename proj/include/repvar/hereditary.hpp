#pragma once

// Canonical decompositions and generic invariants over hereditary path
// algebras of acyclic quivers, estimated by seeded sampling over F_p.
//
// For hereditary algebras dim Ext(M,N) = dim Hom(M,N) - <dim M, dim N>, so
// the generic ext value is estimated as a minimum of sampled Hom dimensions
// shifted by the Euler form. The estimator is an upper bound on the true
// generic value and equals it with high probability; increasing the sample
// count never increases the estimate.

#include <cstdint>
#include <vector>

#include "repvar/quiver.hpp"
#include "repvar/repfield.hpp"

namespace repvar {

// Uniform random matrices per arrow. For a general (possibly cyclic)
// algebra the truncation relations are checked and a violating sample is
// rejected with an exception; acyclic algebras with full Loewy bound can
// never violate them.
Representation sample_representation(const TruncatedAlgebra& a,
                                     const DimVector& d, uint32_t p, Rng& rng,
                                     bool check_truncation = true);

// Convenience for hereditary use: the path algebra of an acyclic quiver.
TruncatedAlgebra hereditary_algebra(const Quiver& q);
Representation sample_hereditary(const Quiver& q, const DimVector& d,
                                 uint32_t p, Rng& rng);

// min over sampled pairs of (dim Hom - Euler form). Each value is the exact
// Ext dimension of the sampled pair, hence >= 0.
int generic_ext(const Quiver& q, const DimVector& d1, const DimVector& d2,
                int samples, uint32_t p, uint64_t seed);

// { d' <= d : generic_ext(d', d - d') = 0 }, the dimension vectors
// generically attained on submodules; ascending lexicographic order.
std::vector<DimVector> sub_dimension_vectors(const Quiver& q,
                                             const DimVector& d, int samples,
                                             uint32_t p, uint64_t seed);

// True iff the minimal sampled endomorphism-ring dimension equals 1.
bool is_schur_root(const Quiver& q, const DimVector& d, int samples,
                   uint32_t p, uint64_t seed);

struct CanonicalDecomposition {
  // (dimension vector, multiplicity), sorted by vector.
  std::vector<std::pair<DimVector, int>> summands;
  // True when every summand passed the Schur-root test and all pairwise ext
  // estimates (both directions, and self-ext for multiplicity >= 2) vanish.
  bool verified = false;

  DimVector total(int n) const;
  std::vector<DimVector> flattened() const;  // multiplicity expanded
};

// Las-Vegas: sample, split into indecomposable summands, tally dimension
// vectors, then verify the two decomposition conditions. Retries with a
// doubled sample budget; after `rounds` failures the last candidate is
// returned with verified = false (never silently dropped).
CanonicalDecomposition canonical_decomposition(const Quiver& q,
                                               const DimVector& d, int samples,
                                               uint32_t p, uint64_t seed,
                                               int rounds = 3);

// mu(d) = sum over summands (with multiplicity) of 1 - <v, v>; a dense
// orbit exists precisely when this vanishes.
long long mu_generic_params(const Quiver& q, const CanonicalDecomposition& cd);

}  // namespace repvar
