#pragma once

#include <cstdint>
#include <random>

#include "disjnet/graph.hpp"
#include "disjnet/network.hpp"

namespace disjnet {

/// Default seed for every randomised suite; recorded in reports.
inline constexpr std::uint64_t kDefaultSeed = 12345;

/// mt19937_64 with explicit derivation helpers, so sampled corpora are
/// reproducible across standard libraries (std distributions are not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform value in [0, k); k must be positive.
  std::uint64_t below(std::uint64_t k) { return next() % k; }

  /// Uniform value in [lo, hi], inclusive.
  unsigned range(unsigned lo, unsigned hi) {
    return lo + static_cast<unsigned>(below(hi - lo + 1));
  }

  /// True with probability num/den.
  bool chance(unsigned num, unsigned den) { return below(den) < num; }

 private:
  std::mt19937_64 engine_;
};

/// Random digraph on n vertices; the arc density is itself sampled so sparse
/// and dense graphs both appear.
DirectedGraph random_graph(Rng& rng, unsigned n);

/// Random strongly connected graph with at least one cycle. Mixes rejection
/// sampling of plain random graphs (loop number almost always 1) with random
/// blown-up cycles, so loop numbers above 1 appear regularly.
DirectedGraph random_strong_graph(Rng& rng, unsigned n);

/// Random nontrivial graph: a random graph with loops added on each vertex
/// whose component carries no cycle.
DirectedGraph random_nontrivial_graph(Rng& rng, unsigned n);

/// Uniformly random truth table.
TruthTableNetwork random_network(Rng& rng, unsigned n);

/// Random monotone network via upward closure of a random table.
TruthTableNetwork random_monotone_network(Rng& rng, unsigned n);

/// Random table pinned at f(0...0) = 0...0 and f(1...1) = 1...1.
TruthTableNetwork random_locally_idempotent_network(Rng& rng, unsigned n);

/// Random network whose coordinate i is a random function of the
/// g-in-neighbourhood of i (its interaction graph is a subgraph of g).
TruthTableNetwork random_network_on_graph(Rng& rng, const DirectedGraph& g);

}  // namespace disjnet
