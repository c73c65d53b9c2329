#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "disjnet/config.hpp"
#include "disjnet/errors.hpp"
#include "disjnet/graph.hpp"

namespace disjnet {

/// Default cap for operations that walk all 2^n states.
inline constexpr unsigned kDefaultBruteForceCap = 20;

/// The disjunctive network of a graph: f_i(x) = OR of x_j over j in N^in(i).
/// A source coordinate is constantly 0 (empty disjunction).
struct DisjunctiveNetwork {
  DirectedGraph graph;

  DisjunctiveNetwork() = default;
  explicit DisjunctiveNetwork(DirectedGraph g) : graph(std::move(g)) {}
  unsigned dim() const { return graph.size(); }

  friend bool operator==(const DisjunctiveNetwork&, const DisjunctiveNetwork&) = default;
};

/// An arbitrary Boolean network given by its full truth table: entry at state
/// index s is f(s). Table length must be 2^n and entries must fit n bits.
class TruthTableNetwork {
 public:
  TruthTableNetwork() = default;
  TruthTableNetwork(unsigned n, std::vector<std::uint64_t> table);

  unsigned dim() const { return n_; }
  std::uint64_t states() const { return std::uint64_t{1} << n_; }
  const std::vector<std::uint64_t>& table() const { return table_; }
  std::uint64_t apply(std::uint64_t s) const { return table_[s]; }
  Config eval(const Config& x) const;

  friend bool operator==(const TruthTableNetwork&, const TruthTableNetwork&) = default;

 private:
  unsigned n_ = 0;
  std::vector<std::uint64_t> table_;
};

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

/// f(x) as the OR of the out-rows of supp(x): the image of a set of vertices
/// is its out-neighbourhood.
std::uint64_t eval_disjunctive_bits(const DirectedGraph& g, std::uint64_t x);

/// Conjunctive dual: bit i is set iff x covers N^in(i). A source coordinate is
/// constantly 1 (empty conjunction).
std::uint64_t eval_conjunctive_bits(const DirectedGraph& g, std::uint64_t x);

Config eval_disjunctive(const DisjunctiveNetwork& f, const Config& x);
Config eval_conjunctive(const DirectedGraph& g, const Config& x);

/// Row vector times adjacency matrix over the Boolean semiring, computed
/// column-wise: bit j of the result tests x against the in-row of j. Agrees
/// with eval_disjunctive_bits by the transpose duality.
std::uint64_t vec_mat_mul(std::uint64_t x, const DirectedGraph& g);

/// Boolean matrix product of adjacency matrices (row formulation); the result
/// is the graph whose arcs are the length-2 walks.
DirectedGraph bool_mat_mul(const DirectedGraph& a, const DirectedGraph& b);

/// Identity matrix: loops on every vertex.
DirectedGraph identity_matrix(unsigned n);

/// a^k by repeated squaring; k = 0 yields the identity.
DirectedGraph mat_power(const DirectedGraph& a, std::uint64_t k);

/// Full truth table of the disjunctive (resp. conjunctive) network. Throws
/// ResourceError when n exceeds the cap.
TruthTableNetwork to_truth_table(const DisjunctiveNetwork& f,
                                 unsigned cap = kDefaultBruteForceCap);
TruthTableNetwork conjunctive_truth_table(const DirectedGraph& g,
                                          unsigned cap = kDefaultBruteForceCap);

/// One synchronous step of token sliding: the new token set at i is the union
/// of the old token sets of its in-neighbours.
template <typename Token>
std::vector<std::set<Token>> token_sliding_eval(const DirectedGraph& g,
                                                const std::vector<std::set<Token>>& state) {
  if (state.size() != g.size())
    throw InputError("token state has " + std::to_string(state.size()) +
                     " entries for a graph on " + std::to_string(g.size()) + " vertices");
  std::vector<std::set<Token>> next(g.size());
  for (unsigned i = 0; i < g.size(); ++i)
    for_each_bit(g.in_row(i), [&](unsigned j) {
      next[i].insert(state[j].begin(), state[j].end());
    });
  return next;
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

/// Interaction graph: arc (i, j) iff coordinate j essentially depends on
/// variable i (some state flip of x_i changes f_j).
DirectedGraph interaction_graph(const TruthTableNetwork& f);

/// Monotone over the componentwise order, checked on Hamming-distance-1 pairs.
bool is_monotone(const TruthTableNetwork& f);

/// Join-morphism test: f(0) = 0 and f(x | y) = f(x) | f(y) for all pairs.
bool is_disjunctive_by_morphism(const TruthTableNetwork& f);

/// f(x | y) | f(x & y) <= f(x) | f(y) for all pairs.
bool is_submodular(const TruthTableNetwork& f);

/// Fixes both constant configurations (each local function is idempotent).
bool is_locally_idempotent(const TruthTableNetwork& f);

/// For a locally idempotent f with interaction graph D, checks the sandwich
/// conjunctive(D) <= f <= disjunctive(D) at every state. Throws
/// PreconditionError when f is not locally idempotent.
bool sandwich_check(const TruthTableNetwork& f);

/// d_C(f): summed over coordinates, the cheaper rewrite count
/// min(|f_i^-1(0)|, |f_i^-1(1)|) to make the coordinate constant.
std::uint64_t distance_to_constant(const TruthTableNetwork& f);

/// Sum of 2^(n - d_i) over non-source vertices; equals d_C of both the
/// disjunctive and the conjunctive network of g. Throws ResourceError if the
/// sum overflows 64 bits.
std::uint64_t closed_form_distance(const DirectedGraph& g);

/// f(f(s)) = f(s) for every state.
bool is_idempotent(const TruthTableNetwork& f);

bool is_bijective(const TruthTableNetwork& f);

/// Detects f(x) = (x_{pi(0)}, ..., x_{pi(n-1)}): permutation holds pi with
/// output coordinate i reading input coordinate pi[i].
struct VariablePermutation {
  bool flag = false;
  std::optional<std::vector<unsigned>> permutation;
};

VariablePermutation is_permutation_of_variables(const TruthTableNetwork& f);

}  // namespace disjnet
