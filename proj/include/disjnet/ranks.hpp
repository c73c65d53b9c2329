#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "disjnet/graph.hpp"
#include "disjnet/network.hpp"

namespace disjnet {

struct RankTriple {
  std::uint64_t image_rank = 0;
  std::uint64_t periodic_rank = 0;
  std::uint64_t fixed_rank = 0;

  friend bool operator==(const RankTriple&, const RankTriple&) = default;
};

/// Image, periodic, and fixed rank of the disjunctive network, computed from
/// the functional graph and cross-checked against the structural routes where
/// those apply (maximal-preimage test for the image, 2^l for strong graphs,
/// up-set count for nontrivial graphs). Throws ResourceError over the cap.
RankTriple ranks(const DisjunctiveNetwork& f, unsigned cap = kDefaultBruteForceCap);

/// Monotone idempotent network with all three ranks equal to k, 1 <= k <= 2^n:
/// states are sorted by Hamming weight (ties by ascending state index), the
/// first k-1 are fixed, and everything else maps to the all-ones state.
TruthTableNetwork construct_monotone_with_rank(unsigned n, std::uint64_t k,
                                               unsigned cap = kDefaultBruteForceCap);

/// Least prime strictly greater than m.
unsigned smallest_prime_greater_than(unsigned m);

/// Factorisation r = a * b with 2 <= a <= b minimising a + b. Throws
/// InputError when r < 4 or r is prime.
std::pair<unsigned, unsigned> factor_min_sum(unsigned r);

/// Graph on n vertices whose disjunctive network is idempotent with all three
/// ranks equal to r, valid for 1 <= r <= p-1 where p is the least prime
/// greater than n+1: a reflexive transitive tournament T_{r-1} padded with
/// isolated vertices when r <= n+1, and T_{a-1} + T_{b-1} + padding with
/// (a, b) = factor_min_sum(r) otherwise. Out-of-range r throws InputError
/// naming p and the valid range.
DirectedGraph construct_disjunctive_with_rank(unsigned n, unsigned r);

enum class RankKind { image, periodic, fixed };

/// Result of an exhaustive scan over all 2^(n^2) digraphs on n vertices,
/// restricted to singular (non-bijective) disjunctive networks, together with
/// the comparison against the predicted extremal family.
struct ExtremalScan {
  unsigned n = 0;
  RankKind kind = RankKind::image;
  std::uint64_t graphs_scanned = 0;
  std::uint64_t singular_count = 0;
  std::uint64_t max_rank = 0;
  std::uint64_t expected_max = 0;
  std::vector<DirectedGraph> achievers;  // ascending graph enumeration order
  std::vector<std::pair<std::string, unsigned>> achiever_shapes;  // witness -> count
  bool matches_theorem = false;
  std::vector<std::string> mismatches;  // counterexample descriptions (capped)
};

/// Maximum image rank over singular networks; predicted maximum 3 * 2^(n-2)
/// with achievers exactly the near-cyclic graphs.
ExtremalScan verify_singular_max(unsigned n, unsigned enum_cap = 4);

/// Same scan for the periodic rank; predicted achievers are the graphs
/// B_{1,1} + cycles.
ExtremalScan verify_singular_periodic_max(unsigned n, unsigned enum_cap = 4);

/// Same scan for the fixed rank; predicted achievers are the copies of G_n.
ExtremalScan verify_singular_fixed_max(unsigned n, unsigned enum_cap = 4);

}  // namespace disjnet
