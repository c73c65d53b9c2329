#include "disjnet/random.hpp"

#include <algorithm>
#include <numeric>

#include "disjnet/errors.hpp"

namespace disjnet {

DirectedGraph random_graph(Rng& rng, unsigned n) {
  if (n > kMaxVertices)
    throw InputError("random graph size " + std::to_string(n) + " is over the " +
                     std::to_string(kMaxVertices) + "-vertex limit");
  const unsigned num = rng.range(0, 16);
  std::vector<std::uint64_t> rows(n, 0);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      if (rng.chance(num, 16)) rows[i] |= bit(j);
  return DirectedGraph::from_out_rows(std::move(rows));
}

namespace {

/// Blown-up cycle: vertices are split into l nonempty classes arranged in a
/// ring, with every arc from each class to the next. Strong with loop number l.
DirectedGraph blown_up_cycle(Rng& rng, unsigned n, unsigned l) {
  std::vector<unsigned> labels(n);
  std::iota(labels.begin(), labels.end(), 0u);
  for (unsigned i = n; i > 1; --i)
    std::swap(labels[i - 1], labels[rng.below(i)]);
  std::vector<unsigned> class_of(n);
  for (unsigned i = 0; i < n; ++i)
    class_of[labels[i]] = i < l ? i : rng.range(0, l - 1);
  std::vector<std::uint64_t> class_mask(l, 0);
  for (unsigned v = 0; v < n; ++v) class_mask[class_of[v]] |= bit(v);
  std::vector<std::uint64_t> rows(n, 0);
  for (unsigned v = 0; v < n; ++v) rows[v] = class_mask[(class_of[v] + 1) % l];
  return DirectedGraph::from_out_rows(std::move(rows));
}

}  // namespace

DirectedGraph random_strong_graph(Rng& rng, unsigned n) {
  if (n == 0) throw InputError("a strong graph with a cycle needs n >= 1");
  if (rng.chance(1, 2)) return blown_up_cycle(rng, n, rng.range(1, n));
  for (int attempt = 0; attempt < 100; ++attempt) {
    const unsigned num = rng.range(4, 16);
    std::vector<std::uint64_t> rows(n, 0);
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j)
        if (rng.chance(num, 16)) rows[i] |= bit(j);
    DirectedGraph g = DirectedGraph::from_out_rows(std::move(rows));
    if (is_strong(g) && loop_number(g) >= 1) return g;
  }
  return blown_up_cycle(rng, n, rng.range(1, n));
}

DirectedGraph random_nontrivial_graph(Rng& rng, unsigned n) {
  DirectedGraph g = random_graph(rng, n);
  const SccDecomposition dec = scc(g);
  auto arcs = g.edge_list();
  bool changed = false;
  for (const std::uint64_t comp : dec.components)
    if (popcount(comp) == 1) {
      const auto v = static_cast<unsigned>(std::countr_zero(comp));
      if (!g.has_arc(v, v)) {
        arcs.emplace_back(v, v);
        changed = true;
      }
    }
  return changed ? DirectedGraph::from_edge_list(n, arcs) : g;
}

TruthTableNetwork random_network(Rng& rng, unsigned n) {
  const std::uint64_t states = std::uint64_t{1} << n;
  std::vector<std::uint64_t> table(states);
  for (std::uint64_t s = 0; s < states; ++s) table[s] = rng.below(states);
  return TruthTableNetwork(n, std::move(table));
}

TruthTableNetwork random_monotone_network(Rng& rng, unsigned n) {
  const std::uint64_t states = std::uint64_t{1} << n;
  std::vector<std::uint64_t> table(states);
  for (std::uint64_t s = 0; s < states; ++s) table[s] = rng.below(states);
  // Push each value up to all covers; subsets precede supersets numerically,
  // so one ascending pass closes the table upward.
  for (std::uint64_t s = 0; s < states; ++s)
    for (unsigned i = 0; i < n; ++i)
      if (!test_bit(s, i)) table[s | bit(i)] |= table[s];
  return TruthTableNetwork(n, std::move(table));
}

TruthTableNetwork random_locally_idempotent_network(Rng& rng, unsigned n) {
  const std::uint64_t states = std::uint64_t{1} << n;
  std::vector<std::uint64_t> table(states);
  for (std::uint64_t s = 0; s < states; ++s) table[s] = rng.below(states);
  table[0] = 0;
  table[states - 1] = states - 1;
  return TruthTableNetwork(n, std::move(table));
}

TruthTableNetwork random_network_on_graph(Rng& rng, const DirectedGraph& g) {
  const unsigned n = g.size();
  const std::uint64_t states = std::uint64_t{1} << n;
  // One random local truth table per coordinate, over its in-neighbourhood.
  std::vector<std::vector<unsigned char>> locals(n);
  for (unsigned i = 0; i < n; ++i) {
    locals[i].resize(std::uint64_t{1} << popcount(g.in_row(i)));
    for (auto& b : locals[i]) b = static_cast<unsigned char>(rng.below(2));
  }
  const auto compress = [](std::uint64_t s, std::uint64_t mask) {
    std::uint64_t index = 0;
    unsigned pos = 0;
    for_each_bit(mask, [&](unsigned j) {
      if (test_bit(s, j)) index |= bit(pos);
      ++pos;
    });
    return index;
  };
  std::vector<std::uint64_t> table(states, 0);
  for (std::uint64_t s = 0; s < states; ++s)
    for (unsigned i = 0; i < n; ++i)
      if (locals[i][compress(s, g.in_row(i))]) table[s] |= bit(i);
  return TruthTableNetwork(n, std::move(table));
}

}  // namespace disjnet
