#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "disjnet/random.hpp"

namespace disjnet {

struct VerifyOptions {
  unsigned n = 4;
  std::uint64_t samples = 500;
  std::uint64_t seed = kDefaultSeed;
  unsigned enum_cap = 4;  // largest n for exhaustive digraph enumeration
};

struct VerifyResult {
  std::string id;
  bool pass = true;
  std::uint64_t cases = 0;
  std::vector<std::string> failures;  // counterexamples, capped at 10 listed
  std::uint64_t failure_count = 0;    // total, including unlisted
  std::vector<std::pair<std::string, std::string>> stats;
  double seconds = 0.0;
};

/// The theorem suites behind `verify <id>`. Each is deterministic given the
/// seed; exhaustive parts are bounded by min(n, built-in exhaustive limit) and
/// sampled parts draw dimensions up to n.
VerifyResult verify_representation_equivalence(const VerifyOptions& o);  // four evaluation routes agree
VerifyResult verify_char1(const VerifyOptions& o);        // join-morphism characterisation
VerifyResult verify_char2(const VerifyOptions& o);        // monotone + submodular + f(0)=0
VerifyResult verify_sandwich(const VerifyOptions& o);     // conjunctive <= f <= disjunctive
VerifyResult verify_distance(const VerifyOptions& o);     // closed form + minimality
VerifyResult verify_image_test(const VerifyOptions& o);   // maximal preimage vs oracle
VerifyResult verify_dpartite(const VerifyOptions& o);     // periodic points of strong graphs
VerifyResult verify_topology(const VerifyOptions& o);     // fixed points <-> finite topologies
VerifyResult verify_permutation(const VerifyOptions& o);  // bijective monotone = variable permutation
VerifyResult verify_near_bijective(const VerifyOptions& o);  // singular max image rank
VerifyResult verify_periodic_max(const VerifyOptions& o);
VerifyResult verify_fixed_max(const VerifyOptions& o);
VerifyResult verify_low_rank(const VerifyOptions& o);     // constructed rank triples
VerifyResult verify_rank_invariants(const VerifyOptions& o);

/// Dispatch by CLI id: char1, char2, sandwich, distance, image-test, dpartite,
/// topology, permutation, near-bijective, periodic-max, fixed-max, low-rank.
/// Unknown ids throw InputError listing the choices.
VerifyResult verify_theorem(const std::string& id, const VerifyOptions& o);

/// Ids accepted by verify_theorem, in display order.
const std::vector<std::string>& verify_ids();

}  // namespace disjnet
