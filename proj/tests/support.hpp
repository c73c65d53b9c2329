// Shared helpers for the unit tests: small brute-force reference
// implementations that recompute library results by independent means.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "disjnet/graph.hpp"
#include "disjnet/network.hpp"

namespace testsupport {

// True when fn() throws an E whose message contains needle.
template <class E, class F>
bool throws_containing(F&& fn, const std::string& needle) {
  try {
    fn();
  } catch (const E& e) {
    return std::string(e.what()).find(needle) != std::string::npos;
  } catch (...) {
    return false;
  }
  return false;
}

// Convenience builder: a graph from an explicit arc list.
inline disjnet::DirectedGraph digraph(
    unsigned n, const std::vector<std::pair<unsigned, unsigned>>& arcs) {
  return disjnet::DirectedGraph::from_edge_list(n, arcs);
}

// Reference strong-connectivity test: per-vertex reachability closure.
inline bool brute_is_strong(const disjnet::DirectedGraph& g) {
  const unsigned n = g.size();
  if (n == 0) return true;
  for (unsigned s = 0; s < n; ++s) {
    std::uint64_t seen = disjnet::bit(s);
    bool grew = true;
    while (grew) {
      grew = false;
      for (unsigned v = 0; v < n; ++v) {
        if (!disjnet::test_bit(seen, v)) continue;
        const std::uint64_t nxt = seen | g.out_neighbourhood(disjnet::bit(v));
        if (nxt != seen) { seen = nxt; grew = true; }
      }
    }
    if (seen != disjnet::low_mask(n)) return false;
  }
  return true;
}

// Reference loop number: gcd of the lengths of all closed walks of length
// at most n, found via boolean matrix powers.  Every such walk decomposes
// into elementary cycles and every elementary cycle has length at most n,
// so this gcd equals the gcd of all cycle lengths (0 when acyclic).
inline unsigned brute_loop_number(const disjnet::DirectedGraph& g) {
  const unsigned n = g.size();
  std::vector<std::vector<bool>> power(n, std::vector<bool>(n, false));
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      adj[i][j] = g.has_arc(i, j);
      power[i][j] = (i == j);
    }
  unsigned result = 0;
  for (unsigned k = 1; k <= n; ++k) {
    std::vector<std::vector<bool>> next(n, std::vector<bool>(n, false));
    for (unsigned i = 0; i < n; ++i)
      for (unsigned m = 0; m < n; ++m)
        if (power[i][m])
          for (unsigned j = 0; j < n; ++j)
            if (adj[m][j]) next[i][j] = true;
    power = std::move(next);
    for (unsigned i = 0; i < n; ++i)
      if (power[i][i]) result = std::gcd(result, k);
  }
  return result;
}

// Reference cycle-cover test: search all vertex permutations directly.
inline bool brute_cycle_cover(const disjnet::DirectedGraph& g) {
  const unsigned n = g.size();
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  do {
    bool ok = true;
    for (unsigned v = 0; v < n && ok; ++v) ok = g.has_arc(v, perm[v]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return n > 0 ? false : true;
}

// Reference boolean matrix product over the OR/AND semiring.
inline std::vector<std::uint64_t> brute_mat_mul(
    const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
    unsigned n) {
  std::vector<std::uint64_t> c(n, 0);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned k = 0; k < n; ++k)
      if (disjnet::test_bit(a[i], k))
        for (unsigned j = 0; j < n; ++j)
          if (disjnet::test_bit(b[k], j)) c[i] |= disjnet::bit(j);
  return c;
}

// Decode a graph on n vertices from a 2^(n*n) enumeration index:
// bit i*n+j of the index switches the arc (i, j) on.
inline disjnet::DirectedGraph graph_from_index(unsigned n, std::uint64_t idx) {
  std::vector<std::pair<unsigned, unsigned>> arcs;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      if (disjnet::test_bit(idx, i * n + j)) arcs.emplace_back(i, j);
  return disjnet::DirectedGraph::from_edge_list(n, arcs);
}

// Naive per-state orbit walk: follow the successor map with a visit list
// until a repeat, yielding (transient length, eventual period).
inline std::pair<std::uint64_t, std::uint64_t> brute_orbit(
    const disjnet::TruthTableNetwork& f, std::uint64_t start) {
  std::vector<std::uint64_t> path;
  std::uint64_t s = start;
  for (;;) {
    for (std::size_t i = 0; i < path.size(); ++i)
      if (path[i] == s) return {i, path.size() - i};
    path.push_back(s);
    s = f.apply(s);
  }
}

}  // namespace testsupport
