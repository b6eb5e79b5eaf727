#pragma once

// Concrete representations over prime fields and their module-theoretic
// invariants: radical and socle layerings, Hom spaces, path nullities,
// exhaustive filtration search (the Gamma statistic), and a probabilistic
// Fitting decomposition into direct summands.

#include <cstdint>
#include <vector>

#include "repvar/fp.hpp"
#include "repvar/layers.hpp"
#include "repvar/quiver.hpp"

namespace repvar {

// A point of the representation variety: one d_target x d_source matrix per
// arrow, acting on column vectors. Valid points satisfy the truncation
// relations (all compositions of L+1 arrows vanish); the constructor checks
// shapes only, truncation_holds() checks the relations.
struct Representation {
  TruncatedAlgebra algebra;
  uint32_t p = 2;
  DimVector dim;
  std::vector<FpMat> matrices;

  Representation() = default;
  Representation(TruncatedAlgebra a, uint32_t prime, DimVector d,
                 std::vector<FpMat> mats);

  static Representation zero_module(const TruncatedAlgebra& a, uint32_t prime,
                                    const DimVector& d);

  bool truncation_holds() const;
};

// Per-vertex subspaces; a subrepresentation when closed under every arrow.
struct ModuleSubspace {
  std::vector<Subspace> at;  // indexed by vertex-1

  DimVector dims() const;
  bool operator==(const ModuleSubspace& o) const = default;
};

ModuleSubspace full_subspace(const Representation& m);
ModuleSubspace zero_subspace(const Representation& m);
bool is_subrepresentation(const Representation& m, const ModuleSubspace& u);

// J * U: the arrow images of a family of subspaces.
ModuleSubspace radical_of(const Representation& m, const ModuleSubspace& u);

// soc M: at each vertex, the joint kernel of all arrows leaving it.
ModuleSubspace socle(const Representation& m);

SemisimpleSequence radical_layering(const Representation& m);
SemisimpleSequence socle_layering(const Representation& m);

// Composite matrix of a path (identity for a trivial path).
FpMat path_matrix(const Representation& m, const Path& path);

// Nullity of the path acting on the source vertex space e_start M.
int path_nullity(const Representation& m, const Path& path);

// dim_F_p Hom(m, n) via the intertwining linear system.
int hom_dim(const Representation& m, const Representation& n);
int end_dim(const Representation& m);

// Quotient by a subrepresentation / restriction to one.
Representation quotient(const Representation& m, const ModuleSubspace& u);
Representation restrict_to(const Representation& m, const ModuleSubspace& u);

// Exhaustive search for a submodule chain M = M_0 >= ... >= M_{L+1} = 0 with
// semisimple quotients of prescribed dimension vectors. Each step picks a
// subspace of the current top (every such pullback contains J M_l and is
// automatically a subrepresentation), so candidates are F_p-points of
// per-vertex Grassmannians, walked depth-first with dimension pruning.
struct FiltrationOptions {
  uint64_t node_cap = 1'000'000;
  bool count_all = false;  // keep going after the first witness
};

struct FiltrationResult {
  bool found = false;
  bool capped = false;      // stopped by node_cap before exhausting
  uint64_t witnesses = 0;   // exact only when count_all and not capped
  uint64_t nodes = 0;
};

FiltrationResult filtration_search(const Representation& m,
                                   const SemisimpleSequence& s,
                                   const FiltrationOptions& opts = {});

// True iff some filtration of m is governed by s. Throws CapExceeded when
// the search hit the cap without finding a witness (answer unknown).
bool filtration_exists(const Representation& m, const SemisimpleSequence& s,
                       uint64_t node_cap = 1'000'000);

// Gamma(m): the number of realizable semisimple sequences governing a
// filtration of m; always >= 1 for m != 0 (the radical layering governs the
// radical chain). The early-exit variant stops at the second witness.
struct GammaOptions {
  uint64_t seq_cap = 10'000'000;
  uint64_t node_cap = 1'000'000;
  bool early_exit_at_two = false;
};

struct GammaResult {
  uint64_t value = 0;
  std::vector<SemisimpleSequence> witnesses;
};

GammaResult gamma(const Representation& m, const GammaOptions& opts = {});
bool gamma_exceeds_one(const Representation& m, const GammaOptions& opts = {});

// Probabilistic direct-sum decomposition: samples endomorphisms, splits
// along coprime factors of their characteristic polynomials, recurses.
// A summand is returned unsplit once split_tries samples yield no split
// (or its endomorphism ring is one-dimensional, which certifies it).
std::vector<Representation> fitting_decompose(const Representation& m,
                                              Rng& rng, int split_tries = 6);

}  // namespace repvar
