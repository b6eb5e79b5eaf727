#pragma once

// Irreducible-component detection for module varieties of truncated path
// algebras, and the per-component report.
//
// Four routes, in increasing order of effort:
//   local:           layer-size inequalities on a one-vertex quiver;
//   acyclic:         minimal (radical, generic socle) pairs are complete;
//   radical-square-zero: minimal (top, socle) pairs, enriched through the
//                    separated-quiver transfer (Kac summands, dense orbit);
//   general:         staged minimality with a filtration-membership test on
//                    specialized generic modules deciding the later layers.
//
// The general route certifies over F_p specializations: a candidate is
// rejected when an already-accepted smaller sequence governs a filtration
// of its specialized generic module, consistently across primes and seeds;
// disagreement is surfaced as "undecided", never resolved silently.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "repvar/hereditary.hpp"
#include "repvar/layers.hpp"
#include "repvar/skeleta.hpp"

namespace repvar {

enum class DetectionRoute {
  local,
  acyclic_theta,
  rad_square_zero,
  theta_minimal,
  gamma_certified,
};

enum class Certification { exact, fp_specialization };

enum class Indecomposability {
  generic_indecomposable,  // probabilistic: sampled End dimension 1
  decomposes,
  unknown,
};

const char* to_string(DetectionRoute r);
const char* to_string(Certification c);
const char* to_string(Indecomposability i);

struct ComponentReport {
  SemisimpleSequence radical_layering;
  SemisimpleSequence socle_layering;
  Skeleton skeleton;
  GenericPresentation presentation;
  int sampled_end_dim = 0;
  Indecomposability indecomposability = Indecomposability::unknown;
  std::optional<std::vector<DimVector>> kac_summands;
  std::optional<bool> kac_verified;
  std::optional<long long> mu;
  std::optional<bool> dense_orbit;
  DetectionRoute route = DetectionRoute::theta_minimal;
  Certification certification = Certification::exact;
};

struct OracleConfig {
  uint32_t prime = 10007;  // sampling-based invariants
  // Candidate primes for the exhaustive filtration searches; the two used
  // for a given test are the largest whose per-vertex Grassmannians fit
  // grass_cap, cross-checked downward on disagreement.
  std::vector<uint32_t> filtration_primes = {5, 7, 11, 13, 17, 23, 31,
                                             47, 67, 97};
  int filtration_seeds = 3;  // specializations per prime, majority vote
  int samples = 12;          // hereditary sampling
  uint64_t seed = 1;
  uint64_t seq_cap = 10'000'000;
  uint64_t node_cap = 300'000;
  uint64_t grass_cap = 200'000;
  int specialize_retries = 20;
};

struct UndecidedCandidate {
  SemisimpleSequence radical_layering;
  std::string reason;
};

struct ComponentsResult {
  std::vector<ComponentReport> components;
  std::vector<UndecidedCandidate> undecided;
  int realizable_count = 0;
};

// Generic radical layerings of the irreducible components for the local
// truncated algebra with r loops and J^{L+1} = 0, dimension d. For
// d <= L+1 (or r = 1) a single layering; otherwise all length-(L+1)
// compositions of d with positive entries and consecutive layers within a
// factor of r of each other.
std::vector<SemisimpleSequence> components_local(int r, int loewy_bound,
                                                 int d);

ComponentsResult components_acyclic(const TruncatedAlgebra& a,
                                    const DimVector& d,
                                    const OracleConfig& cfg = {});

ComponentsResult components_rad_square_zero(const TruncatedAlgebra& a,
                                            const DimVector& d,
                                            const OracleConfig& cfg = {});

ComponentsResult components_general_truncated(const TruncatedAlgebra& a,
                                              const DimVector& d,
                                              const OracleConfig& cfg = {});

// Closure membership for L = 1: the module lies in the closure of the
// stratum of s iff its top contains layer 0 of s and its socle contains
// the generic socle of s, componentwise.
bool membership_rad_square_zero(const Representation& m,
                                const SemisimpleSequence& s);

enum class Mode { auto_detect, local, acyclic, rad_square_zero, general };

Mode mode_from_string(const std::string& s);
const char* to_string(Mode m);

// Dispatch: local for one-vertex quivers, the L=1 route for radical-square-
// zero algebras, the Theta route for acyclic quivers, the staged general
// pipeline otherwise. An explicit mode overrides (and general forces the
// full pipeline on any input, which the cross-validation tests rely on).
ComponentsResult compute_components(const TruncatedAlgebra& a,
                                    const DimVector& d, Mode mode,
                                    const OracleConfig& cfg = {});

}  // namespace repvar
