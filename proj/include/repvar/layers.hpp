#pragma once

// Semisimple sequences: the layer data that labels irreducible components.
//
// A semisimple sequence over an algebra with J^{L+1} = 0 is a list of L+1
// dimension vectors (isomorphic semisimples are identified, so a layer is
// just its dimension vector). The dominance order compares prefix sums
// componentwise. A sequence is realizable iff each layer fits under the
// previous one pushed through the adjacency matrix; the generic socle
// layering of a realizable sequence is computed by a sup/inf recursion on
// dimension vectors, and for acyclic quivers the generic radical layering
// of the full hereditary variety comes from a top-down peeling recursion.

#include <cstdint>
#include <vector>

#include "repvar/quiver.hpp"

namespace repvar {

struct SemisimpleSequence {
  std::vector<DimVector> layers;  // L+1 entries

  SemisimpleSequence() = default;
  explicit SemisimpleSequence(std::vector<DimVector> l)
      : layers(std::move(l)) {}
  static SemisimpleSequence zeros(int n, int loewy_bound);

  int loewy_bound() const { return static_cast<int>(layers.size()) - 1; }
  int layer_count() const { return static_cast<int>(layers.size()); }
  DimVector total() const;
  bool is_zero() const { return total().is_zero(); }
  // Index of the last nonzero layer plus one (0 for the zero sequence).
  int loewy_length() const;

  bool operator==(const SemisimpleSequence& o) const = default;
  auto operator<=>(const SemisimpleSequence& o) const = default;  // lex
};

// Dominance: prefix sums of layers compare componentwise at every level.
// Requires equal Loewy bounds and equal totals.
bool dominance_leq(const SemisimpleSequence& s, const SemisimpleSequence& t);
bool dominance_lt(const SemisimpleSequence& s, const SemisimpleSequence& t);

// Number of sequences with total d and the given bound: prod_i C(d_i+L, L).
// Saturates at cap.
uint64_t count_sequences(const DimVector& d, int loewy_bound, uint64_t cap);

// All semisimple sequences with total d, in lexicographic order on the
// concatenated layer vectors. Throws CapExceeded when the count exceeds cap.
std::vector<SemisimpleSequence> enumerate_sequences(const DimVector& d,
                                                    int loewy_bound,
                                                    uint64_t cap);

// Realizability over a truncated algebra: layer l+1 <= layer l . A for all l.
bool is_realizable(const SemisimpleSequence& s, const TruncatedAlgebra& a);

// The realizable sequences with total d, enumerated directly with pruning;
// the result order agrees with enumerate_sequences filtered. The cap applies
// to |Seq(d)|, matching enumerate_sequences.
std::vector<SemisimpleSequence> realizable_sequences(const TruncatedAlgebra& a,
                                                     const DimVector& d,
                                                     uint64_t cap);

// Generic socle layering of the modules with radical layering s (truncated
// algebra, s realizable). Part (a) of the recursion produces the socle from
// weighted partial sums against the transposed adjacency matrix; part (b)
// produces the generic radical layering of M/soc M, and the tail of the
// result is the recursion applied to that quotient layering.
SemisimpleSequence generic_socle_layering(const SemisimpleSequence& s,
                                          const TruncatedAlgebra& a);

// Generic radical layering of all d-dimensional representations of an
// acyclic quiver's path algebra (Loewy bound = longest path length):
// t0 = sup{0, d - d.A}, then peel and repeat on the remainder.
SemisimpleSequence generic_radical_layering_hereditary(const Quiver& q,
                                                       const DimVector& d);

struct LayeringPair {
  SemisimpleSequence radical;
  SemisimpleSequence socle;

  bool operator==(const LayeringPair& o) const = default;
};

// Componentwise dominance on pairs.
bool pair_leq(const LayeringPair& a, const LayeringPair& b);

// The minimal elements, in input order. All pairs must share the total.
std::vector<LayeringPair> minimal_pairs(const std::vector<LayeringPair>& ps);

// Partition into layers of iterated minimality: layer 0 is the minimal set,
// layer k the minimal elements of what remains. Returned as indices into
// the input, each layer in input order.
std::vector<std::vector<int>> minimality_layers(
    const std::vector<LayeringPair>& ps);

// Text form "v:m,v:m;...;..." with one segment per layer; zero layers are
// empty segments. Parsing lives in algebra_io.
std::string layering_to_string(const SemisimpleSequence& s);

}  // namespace repvar
