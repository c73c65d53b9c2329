#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "disjnet/config.hpp"
#include "disjnet/graph.hpp"
#include "disjnet/network.hpp"

namespace disjnet {

/// Cap on how many points a structural enumeration may materialise.
inline constexpr std::uint64_t kDefaultPointCap = std::uint64_t{1} << 20;

/// How a result was obtained: via the structural characterisation or by a
/// full state-space scan.
enum class Method { structural, brute_force };

// ---------------------------------------------------------------------------
// Image points
// ---------------------------------------------------------------------------

/// Y* = [n] \ N^in([n] \ X): the union of all preimages of X when X is an
/// image point, and the unique maximal candidate in general.
Config maximal_preimage(const DisjunctiveNetwork& f, const Config& x);

/// X lies in the image iff f(Y*) = X; a single evaluation, no scan.
bool is_image_point(const DisjunctiveNetwork& f, const Config& x);

/// All image points as ascending state indices (full scan of 2^n states).
std::vector<std::uint64_t> image_set(const DisjunctiveNetwork& f,
                                     unsigned cap = kDefaultBruteForceCap);

// ---------------------------------------------------------------------------
// Periodic points
// ---------------------------------------------------------------------------

/// Periodic points of f. For a strong graph with loop number l >= 1 the
/// structural path applies: the periodic points are exactly the unions of the
/// partition classes (2^l of them) and each period divides l. A non-strong
/// graph with at least one cycle falls back to the oracle scan (method ==
/// brute_force, subject to the brute-force cap). An acyclic graph throws
/// PreconditionError.
///
/// When more than max_points would have to be materialised the structure
/// comes back in counts-only mode: periodic_count (and classes) filled,
/// points and periods empty.
struct PeriodicStructure {
  unsigned loop_number = 0;
  std::vector<std::uint64_t> classes;          // structural path only
  std::vector<std::uint64_t> points;           // ascending state indices
  std::map<std::uint64_t, std::uint64_t> periods;  // point -> least period
  std::uint64_t periodic_count = 0;
  Method method = Method::structural;
  bool counts_only = false;
};

PeriodicStructure periodic_structure(const DisjunctiveNetwork& f,
                                     unsigned cap = kDefaultBruteForceCap,
                                     std::uint64_t max_points = kDefaultPointCap);

/// Least p >= 1 with f^p(X) = X, found by iteration (Brent cycle detection,
/// so the walk is transient + period steps with O(1) extra memory). Throws
/// PreconditionError when X is not periodic.
std::uint64_t period_of_point(const DisjunctiveNetwork& f, const Config& x);

/// Steps until the orbit of X first enters a cycle; 0 for periodic X.
std::uint64_t transient_length(const DisjunctiveNetwork& f, const Config& x,
                               unsigned cap = kDefaultBruteForceCap);

// ---------------------------------------------------------------------------
// Fixed points
// ---------------------------------------------------------------------------

/// Reachability closure of the vertex set s (reflexive: s itself is included).
std::uint64_t upset_closure(const DirectedGraph& g, std::uint64_t s);

/// A finite set system on [n]; plain carrier, validated by is_topology.
struct Topology {
  unsigned n = 0;
  std::vector<std::uint64_t> opens;  // ascending masks

  friend bool operator==(const Topology&, const Topology&) = default;
};

/// Checks the finite topology axioms: contains the empty and the full set and
/// is closed under pairwise union and intersection. Throws InputError when a
/// member has vertices outside [n].
bool is_topology(const std::vector<std::uint64_t>& sets, unsigned n);
bool is_topology(const Topology& t);

/// Fixed points of f. When the graph is nontrivial (every vertex on a cycle)
/// they are exactly the up-sets of the reachability preorder, enumerated
/// antichain-free over the topologically sorted components, and form a finite
/// topology. Otherwise the oracle scan runs (method == brute_force) and the
/// returned collection is a plain set, not guaranteed a topology.
struct FixedPointSet {
  Topology topology;
  Method method = Method::structural;
};

FixedPointSet fixed_points(const DisjunctiveNetwork& f,
                           unsigned cap = kDefaultBruteForceCap,
                           std::uint64_t max_sets = kDefaultPointCap);

/// The nontrivial graph whose disjunctive network has fixed-point set exactly
/// t: arc (i, j) iff j lies in the minimal open containing i. Validates t
/// first (InputError when it is not a topology).
DirectedGraph graph_from_topology(const Topology& t);

}  // namespace disjnet
