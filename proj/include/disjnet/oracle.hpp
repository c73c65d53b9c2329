#pragma once

#include <cstdint>
#include <vector>

#include "disjnet/network.hpp"

namespace disjnet {

/// Exhaustive picture of the deterministic dynamics of an arbitrary network
/// over all 2^n states: the successor map plus, per state, whether it lies on
/// a cycle, the number of steps to reach one, and the length of the cycle it
/// eventually reaches. s is on a cycle iff transients[s] == 0 iff
/// successor^(periods[s])(s) == s.
struct FunctionalGraph {
  unsigned n = 0;
  std::vector<std::uint64_t> successor;
  std::vector<bool> on_cycle;
  std::vector<std::uint32_t> transients;
  std::vector<std::uint32_t> periods;
};

/// Single pass over the state space with three-colour path walking; linear in
/// 2^n. Throws ResourceError when n exceeds the cap.
FunctionalGraph build_functional_graph(const TruthTableNetwork& f,
                                       unsigned cap = kDefaultBruteForceCap);

/// Distinct successor values, ascending.
std::vector<std::uint64_t> oracle_image_set(const TruthTableNetwork& f,
                                            unsigned cap = kDefaultBruteForceCap);

/// States on cycles, ascending.
std::vector<std::uint64_t> oracle_periodic_set(const TruthTableNetwork& f,
                                               unsigned cap = kDefaultBruteForceCap);

/// States with f(s) = s, ascending.
std::vector<std::uint64_t> oracle_fixed_set(const TruthTableNetwork& f,
                                            unsigned cap = kDefaultBruteForceCap);

}  // namespace disjnet
