#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "disjnet/bits.hpp"

namespace disjnet {

/// Hard representation ceiling: adjacency rows and configurations live in one
/// 64-bit word.
inline constexpr unsigned kMaxVertices = 64;

/// A digraph on vertices 0..n-1 with adjacency stored as bit rows.
/// out_row(i) holds the out-neighbourhood of i, in_row(i) the in-neighbourhood;
/// the two arrays are transposes of each other by construction. Instances are
/// immutable once built.
class DirectedGraph {
 public:
  DirectedGraph() = default;

  /// n vertices, no arcs. Throws InputError if n > 64.
  explicit DirectedGraph(unsigned n);

  /// Throws InputError on out-of-range endpoints (message names the arc).
  static DirectedGraph from_edge_list(unsigned n,
                                      const std::vector<std::pair<unsigned, unsigned>>& arcs);

  /// Adopts the given out-rows (row i = out-neighbourhood of i) and derives
  /// the in-rows. Throws InputError on stray bits or more than 64 rows.
  static DirectedGraph from_out_rows(std::vector<std::uint64_t> rows);

  unsigned size() const { return n_; }
  std::uint64_t vertex_mask() const { return low_mask(n_); }

  std::uint64_t out_row(unsigned i) const { return out_[i]; }
  std::uint64_t in_row(unsigned i) const { return in_[i]; }
  bool has_arc(unsigned i, unsigned j) const { return test_bit(out_[i], j); }

  unsigned out_degree(unsigned i) const { return popcount(out_[i]); }
  unsigned in_degree(unsigned i) const { return popcount(in_[i]); }
  unsigned arc_count() const;

  /// N^out(S) / N^in(S) for a vertex set S given as a bit mask.
  std::uint64_t out_neighbourhood(std::uint64_t vs) const;
  std::uint64_t in_neighbourhood(std::uint64_t vs) const;

  /// Arcs sorted by source, then target.
  std::vector<std::pair<unsigned, unsigned>> edge_list() const;

  friend bool operator==(const DirectedGraph&, const DirectedGraph&) = default;

 private:
  unsigned n_ = 0;
  std::vector<std::uint64_t> out_;
  std::vector<std::uint64_t> in_;
};

// ---------------------------------------------------------------------------
// Named families
// ---------------------------------------------------------------------------

/// Cycle C_n on 0..n-1 (arcs i -> i+1 mod n); C_1 is the single looped vertex.
DirectedGraph cycle_graph(unsigned n);

/// Chorded cycle A_{p,q}: C_p plus the chord (0, q), 0 <= q <= p-1.
/// The chord duplicates a cycle arc when q == 1 (or p == 1), in which case the
/// result is just C_p.
DirectedGraph chorded_cycle(unsigned p, unsigned q);

/// Link of cycles B_{s,t}: C_s on 0..s-1, C_t on s..s+t-1, plus the arc (0, s).
DirectedGraph link_of_cycles(unsigned s, unsigned t);

/// G_n: loops on all n vertices plus the arc (0, 1); equals B_{1,1} joined
/// with n-2 looped vertices. Requires n >= 2.
DirectedGraph g_graph(unsigned n);

/// Reflexive transitive tournament T_a: arcs (i, j) for all i <= j < a.
DirectedGraph transitive_tournament(unsigned a);

/// E_c: c vertices, no arcs.
DirectedGraph empty_graph(unsigned c);

/// Disjoint union; h's vertices are shifted up by g.size().
DirectedGraph disjoint_union(const DirectedGraph& g, const DirectedGraph& h);

enum class Family { cycle, chorded_cycle, link_of_cycles, g_n, transitive_tournament, empty };

/// Dispatcher used by the CLI family grammar; validates parameter counts.
DirectedGraph make_graph(Family family, const std::vector<unsigned>& params);

// ---------------------------------------------------------------------------
// Structure
// ---------------------------------------------------------------------------

/// Strongly connected components. Components are stored in topological order
/// of the condensation (arcs of the condensation go from lower to higher
/// component index), so topo_order is 0..k-1 by construction.
struct SccDecomposition {
  std::vector<std::uint64_t> components;
  std::vector<unsigned> component_of;
  DirectedGraph condensation;  // loop-free digraph on component indices
  std::vector<unsigned> topo_order;
};

SccDecomposition scc(const DirectedGraph& g);

/// True when the whole graph is one strongly connected component (vacuously
/// true for n = 0).
bool is_strong(const DirectedGraph& g);

/// True when every vertex lies on a cycle.
bool is_nontrivial(const DirectedGraph& g);

/// gcd of all cycle lengths; 0 for an acyclic graph. Computed per strongly
/// connected component from BFS level differences, then combined.
unsigned loop_number(const DirectedGraph& g);

/// Strong with loop number 1.
bool is_primitive(const DirectedGraph& g);

/// For a strong graph with loop number l >= 1: the classes V_0..V_{l-1} with
/// N^out(V_i) = V_{i+1 mod l}; V_0 contains vertex 0. Throws PreconditionError
/// otherwise.
std::vector<std::uint64_t> partition_classes(const DirectedGraph& g);

struct StructuralSummary {
  bool is_strong = false;
  bool is_nontrivial = false;
  bool is_reflexive = false;
  std::uint64_t sources = 0;  // vertices with empty in-neighbourhood
  std::uint64_t sinks = 0;    // vertices with empty out-neighbourhood
  std::vector<unsigned> in_degrees;

  friend bool operator==(const StructuralSummary&, const StructuralSummary&) = default;
};

StructuralSummary structural_predicates(const DirectedGraph& g);

/// Weakly connected components as vertex masks, ordered by lowest vertex.
std::vector<std::uint64_t> weak_components(const DirectedGraph& g);

// ---------------------------------------------------------------------------
// Family recognition
// ---------------------------------------------------------------------------

enum class ComponentShape { cycle, chorded_cycle, link_of_cycles, other };

/// Shape of one weakly connected component, with parameters:
/// cycle -> a = length; chorded_cycle -> A_{a,b}; link_of_cycles -> B_{a,b}.
struct ShapeMatch {
  ComponentShape shape = ComponentShape::other;
  unsigned a = 0;
  unsigned b = 0;
};

/// Classifies the component with vertex set comp (which must be a weak
/// component: no arcs may leave it). Membership is decided up to isomorphism
/// by degree fingerprinting plus explicit parameter matching; chords that
/// merely duplicate a cycle arc cannot occur (arcs are simple), so a matched
/// chorded cycle or link always carries a genuine extra arc.
ShapeMatch classify_component(const DirectedGraph& g, std::uint64_t comp);

struct NearCyclicWitness {
  ComponentShape core = ComponentShape::other;  // chorded_cycle or link_of_cycles
  unsigned a = 0;
  unsigned b = 0;
  std::vector<unsigned> cycles;  // lengths of the remaining components, sorted

  /// Witness in the CLI family grammar, e.g. "link_of_cycles:1,1+cycle:2".
  std::string describe() const;

  friend bool operator==(const NearCyclicWitness&, const NearCyclicWitness&) = default;
};

/// True iff exactly one weak component is a chorded cycle or link of cycles
/// and every other component is a cycle.
struct NearCyclicResult {
  bool flag = false;
  std::optional<NearCyclicWitness> witness;
};

NearCyclicResult is_near_cyclic(const DirectedGraph& g);

/// Whether the arcs contain a spanning union of disjoint cycles, i.e. a
/// permutation pi with every (i, pi(i)) an arc; found by bipartite matching.
struct CycleCover {
  bool flag = false;
  std::optional<std::vector<unsigned>> permutation;
};

CycleCover coverable_by_cycles(const DirectedGraph& g);

}  // namespace disjnet
