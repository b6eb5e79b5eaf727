#pragma once

// Skeleta and generic-module presentations.
//
// A skeleton is a forest of paths in the projective cover of a top: a set
// of (path, top element) pairs closed under initial subpaths whose per-layer
// counts match a semisimple sequence. A path one arrow outside the skeleton
// is critical; expanding every critical path as a generic linear combination
// of the longer-or-equal skeleton paths at the same vertex presents the
// generic module of the stratum. Specializing the coefficients to random
// field elements turns that presentation into a concrete representation.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "repvar/layers.hpp"
#include "repvar/quiver.hpp"
#include "repvar/repfield.hpp"

namespace repvar {

struct SkeletonPath {
  int top = 0;  // index into Skeleton::tops
  Path path;    // starts at the top's vertex

  bool operator==(const SkeletonPath& o) const = default;
};

struct Skeleton {
  std::vector<int> tops;            // normed vertex of z_1, z_2, ...
  std::vector<SkeletonPath> paths;  // sorted by (length, top, path)

  // Per-layer vertex counts of the paths.
  SemisimpleSequence layering(int loewy_bound, int vertex_count) const;
  int find(int top, const Path& p) const;  // index into paths, or -1

  bool operator==(const Skeleton& o) const = default;
};

// Order used for the path basis and all listings.
bool skeleton_path_less(const Quiver& q, const SkeletonPath& a,
                        const SkeletonPath& b);

// Throws std::invalid_argument when sk is not a skeleton with layering s
// over a (closure under initial subpaths, counts, path lengths).
void validate_skeleton(const Skeleton& sk, const SemisimpleSequence& s,
                       const TruncatedAlgebra& a);

// All skeleta with the given layering, deterministic order; empty iff the
// sequence is not realizable.
std::vector<Skeleton> enumerate_skeleta(const SemisimpleSequence& s,
                                        const TruncatedAlgebra& a,
                                        uint64_t cap = 10'000'000);

// Paths q z_r outside the skeleton with q = arrow . q1, q1 z_r inside, and
// len(q) <= L; sorted by (length, top, path).
std::vector<SkeletonPath> critical_paths(const Skeleton& sk,
                                         const TruncatedAlgebra& a);

struct RelationTerm {
  int param = 0;       // 0-based; printed as x{param+1}
  int path_index = 0;  // index into Skeleton::paths
};

// critical = sum of terms; an empty term list means critical = 0.
struct Relation {
  SkeletonPath critical;
  std::vector<RelationTerm> terms;
};

struct GenericPresentation {
  TruncatedAlgebra algebra;
  SemisimpleSequence layering;
  Skeleton skeleton;
  std::vector<Relation> relations;
  int param_count = 0;
};

// One relation per critical path; expansion over skeleton paths at the same
// end vertex of at least the critical path's length, with fresh parameters
// x1, x2, ... in listing order. Uses the first enumerated skeleton unless
// one is supplied.
GenericPresentation generic_presentation(
    const SemisimpleSequence& s, const TruncatedAlgebra& a,
    const std::optional<Skeleton>& sk = std::nullopt);

// "a1*b1*z2" (function order; bare "z2" for a trivial path).
std::string render_skeleton_path(const Quiver& q, const Skeleton& sk,
                                 const SkeletonPath& p);
// "b3*z1 - x1*b1*z1 - x2*b2*z1"
std::string render_relation(const GenericPresentation& gp, int rel_index);

struct SpecializedModule {
  Representation rep;
  std::vector<uint32_t> params;  // value of x1, x2, ...
};

// Builds the quotient of the projective cover by the relations with the
// given parameter values, in the skeleton-path basis, and verifies that the
// radical layering is the presented one. Throws SpecializeError otherwise.
SpecializedModule specialize_with(const GenericPresentation& gp, uint32_t p,
                                  const std::vector<uint32_t>& params);

// Las-Vegas: uniform random nonzero parameters, retried until the radical
// layering verifies; throws SpecializeError when the budget runs out.
SpecializedModule specialize(const GenericPresentation& gp, uint32_t p,
                             Rng& rng, int retries = 20);

}  // namespace repvar
