#include "disjnet/graph.hpp"

#include <algorithm>
#include <numeric>

#include "disjnet/errors.hpp"

namespace disjnet {

DirectedGraph::DirectedGraph(unsigned n) : n_(n), out_(n, 0), in_(n, 0) {
  if (n > kMaxVertices)
    throw InputError("vertex count " + std::to_string(n) + " exceeds the " +
                     std::to_string(kMaxVertices) + "-vertex limit");
}

DirectedGraph DirectedGraph::from_edge_list(
    unsigned n, const std::vector<std::pair<unsigned, unsigned>>& arcs) {
  DirectedGraph g(n);
  for (const auto& [i, j] : arcs) {
    if (i >= n || j >= n)
      throw InputError("arc (" + std::to_string(i) + ", " + std::to_string(j) +
                       ") out of range for n = " + std::to_string(n));
    g.out_[i] |= bit(j);
    g.in_[j] |= bit(i);
  }
  return g;
}

DirectedGraph DirectedGraph::from_out_rows(std::vector<std::uint64_t> rows) {
  const auto n = static_cast<unsigned>(rows.size());
  DirectedGraph g(n);
  for (unsigned i = 0; i < n; ++i) {
    if ((rows[i] & ~low_mask(n)) != 0)
      throw InputError("row " + std::to_string(i) + " has bits above n = " +
                       std::to_string(n));
    g.out_[i] = rows[i];
    for_each_bit(rows[i], [&](unsigned j) { g.in_[j] |= bit(i); });
  }
  return g;
}

unsigned DirectedGraph::arc_count() const {
  unsigned total = 0;
  for (std::uint64_t row : out_) total += popcount(row);
  return total;
}

std::uint64_t DirectedGraph::out_neighbourhood(std::uint64_t vs) const {
  std::uint64_t acc = 0;
  for_each_bit(vs, [&](unsigned i) { acc |= out_[i]; });
  return acc;
}

std::uint64_t DirectedGraph::in_neighbourhood(std::uint64_t vs) const {
  std::uint64_t acc = 0;
  for_each_bit(vs, [&](unsigned i) { acc |= in_[i]; });
  return acc;
}

std::vector<std::pair<unsigned, unsigned>> DirectedGraph::edge_list() const {
  std::vector<std::pair<unsigned, unsigned>> arcs;
  for (unsigned i = 0; i < n_; ++i)
    for_each_bit(out_[i], [&](unsigned j) { arcs.emplace_back(i, j); });
  return arcs;
}

// ---------------------------------------------------------------------------
// Families
// ---------------------------------------------------------------------------

DirectedGraph cycle_graph(unsigned n) {
  if (n == 0) throw InputError("cycle length must be at least 1");
  std::vector<std::pair<unsigned, unsigned>> arcs;
  for (unsigned i = 0; i < n; ++i) arcs.emplace_back(i, (i + 1) % n);
  return DirectedGraph::from_edge_list(n, arcs);
}

DirectedGraph chorded_cycle(unsigned p, unsigned q) {
  if (p == 0) throw InputError("chorded cycle needs p >= 1");
  if (q >= p)
    throw InputError("chord target q = " + std::to_string(q) +
                     " must satisfy 0 <= q <= p-1 for p = " + std::to_string(p));
  auto arcs = cycle_graph(p).edge_list();
  arcs.emplace_back(0, q);
  return DirectedGraph::from_edge_list(p, arcs);
}

DirectedGraph link_of_cycles(unsigned s, unsigned t) {
  if (s == 0 || t == 0) throw InputError("link of cycles needs s, t >= 1");
  DirectedGraph g = disjoint_union(cycle_graph(s), cycle_graph(t));
  auto arcs = g.edge_list();
  arcs.emplace_back(0, s);
  return DirectedGraph::from_edge_list(s + t, arcs);
}

DirectedGraph g_graph(unsigned n) {
  if (n < 2) throw InputError("G_n needs n >= 2");
  std::vector<std::pair<unsigned, unsigned>> arcs;
  for (unsigned i = 0; i < n; ++i) arcs.emplace_back(i, i);
  arcs.emplace_back(0, 1);
  return DirectedGraph::from_edge_list(n, arcs);
}

DirectedGraph transitive_tournament(unsigned a) {
  std::vector<std::pair<unsigned, unsigned>> arcs;
  for (unsigned i = 0; i < a; ++i)
    for (unsigned j = i; j < a; ++j) arcs.emplace_back(i, j);
  return DirectedGraph::from_edge_list(a, arcs);
}

DirectedGraph empty_graph(unsigned c) { return DirectedGraph(c); }

DirectedGraph disjoint_union(const DirectedGraph& g, const DirectedGraph& h) {
  const unsigned n = g.size() + h.size();
  if (n > kMaxVertices)
    throw InputError("disjoint union has " + std::to_string(n) +
                     " vertices, over the " + std::to_string(kMaxVertices) +
                     "-vertex limit");
  std::vector<std::uint64_t> rows(n, 0);
  for (unsigned i = 0; i < g.size(); ++i) rows[i] = g.out_row(i);
  for (unsigned i = 0; i < h.size(); ++i)
    rows[g.size() + i] = h.out_row(i) << g.size();
  return DirectedGraph::from_out_rows(std::move(rows));
}

namespace {

void need_params(Family f, const std::vector<unsigned>& params, unsigned count,
                 const char* usage) {
  if (params.size() != count)
    throw InputError(std::string("family takes ") + usage + ", got " +
                     std::to_string(params.size()) + " parameter(s)");
  (void)f;
}

}  // namespace

DirectedGraph make_graph(Family family, const std::vector<unsigned>& params) {
  switch (family) {
    case Family::cycle:
      need_params(family, params, 1, "one parameter (length)");
      return cycle_graph(params[0]);
    case Family::chorded_cycle:
      need_params(family, params, 2, "two parameters (p, q)");
      return chorded_cycle(params[0], params[1]);
    case Family::link_of_cycles:
      need_params(family, params, 2, "two parameters (s, t)");
      return link_of_cycles(params[0], params[1]);
    case Family::g_n:
      need_params(family, params, 1, "one parameter (n)");
      return g_graph(params[0]);
    case Family::transitive_tournament:
      need_params(family, params, 1, "one parameter (a)");
      return transitive_tournament(params[0]);
    case Family::empty:
      need_params(family, params, 1, "one parameter (vertex count)");
      return empty_graph(params[0]);
  }
  throw InputError("unknown family");
}

// ---------------------------------------------------------------------------
// Strongly connected components (iterative Tarjan)
// ---------------------------------------------------------------------------

SccDecomposition scc(const DirectedGraph& g) {
  const unsigned n = g.size();
  std::vector<int> index(n, -1);
  std::vector<int> lowlink(n, 0);
  std::uint64_t on_stack = 0;
  std::vector<unsigned> stack;
  std::vector<std::uint64_t> completed;  // components in completion order

  struct Frame {
    unsigned v;
    std::uint64_t pending;
  };
  std::vector<Frame> call;
  int next_index = 0;

  for (unsigned root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack |= bit(root);
    call.push_back({root, g.out_row(root)});
    while (!call.empty()) {
      Frame& fr = call.back();
      if (fr.pending != 0) {
        const unsigned w = static_cast<unsigned>(std::countr_zero(fr.pending));
        fr.pending &= fr.pending - 1;
        if (index[w] < 0) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack |= bit(w);
          call.push_back({w, g.out_row(w)});  // fr may dangle from here on
        } else if (test_bit(on_stack, w)) {
          lowlink[fr.v] = std::min(lowlink[fr.v], index[w]);
        }
      } else {
        const unsigned v = fr.v;
        call.pop_back();
        if (!call.empty())
          lowlink[call.back().v] = std::min(lowlink[call.back().v], lowlink[v]);
        if (lowlink[v] == index[v]) {
          std::uint64_t comp = 0;
          unsigned w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack &= ~bit(w);
            comp |= bit(w);
          } while (w != v);
          completed.push_back(comp);
        }
      }
    }
  }

  // Tarjan completes components in reverse topological order; flip so that
  // condensation arcs always point from lower to higher component index.
  const auto k = static_cast<unsigned>(completed.size());
  SccDecomposition out;
  out.components.resize(k);
  for (unsigned c = 0; c < k; ++c) out.components[k - 1 - c] = completed[c];
  out.component_of.assign(n, 0);
  for (unsigned c = 0; c < k; ++c)
    for_each_bit(out.components[c], [&](unsigned v) { out.component_of[v] = c; });

  std::vector<std::uint64_t> cond(k, 0);
  for (unsigned v = 0; v < n; ++v)
    for_each_bit(g.out_row(v), [&](unsigned w) {
      const unsigned cv = out.component_of[v], cw = out.component_of[w];
      if (cv != cw) cond[cv] |= bit(cw);
    });
  out.condensation = DirectedGraph::from_out_rows(std::move(cond));
  out.topo_order.resize(k);
  std::iota(out.topo_order.begin(), out.topo_order.end(), 0u);
  return out;
}

bool is_strong(const DirectedGraph& g) {
  return g.size() == 0 || scc(g).components.size() == 1;
}

bool is_nontrivial(const DirectedGraph& g) {
  for (std::uint64_t comp : scc(g).components) {
    if (popcount(comp) > 1) continue;
    const auto v = static_cast<unsigned>(std::countr_zero(comp));
    if (!g.has_arc(v, v)) return false;  // trivial component: no cycle through v
  }
  return true;
}

namespace {

/// BFS levels from `start` along arcs inside `comp`; unvisited stays -1.
std::vector<int> bfs_levels(const DirectedGraph& g, std::uint64_t comp, unsigned start) {
  std::vector<int> level(g.size(), -1);
  level[start] = 0;
  std::uint64_t frontier = bit(start);
  int depth = 0;
  std::uint64_t seen = frontier;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for_each_bit(frontier, [&](unsigned v) { next |= g.out_row(v) & comp; });
    next &= ~seen;
    ++depth;
    for_each_bit(next, [&](unsigned v) { level[v] = depth; });
    seen |= next;
    frontier = next;
  }
  return level;
}

/// gcd of cycle lengths within one strongly connected component: gcd of
/// level[u] + 1 - level[v] over the internal arcs (u, v).
std::uint64_t component_cycle_gcd(const DirectedGraph& g, std::uint64_t comp) {
  const auto start = static_cast<unsigned>(std::countr_zero(comp));
  if (popcount(comp) == 1 && !g.has_arc(start, start)) return 0;
  const std::vector<int> level = bfs_levels(g, comp, start);
  std::uint64_t d = 0;
  for_each_bit(comp, [&](unsigned u) {
    for_each_bit(g.out_row(u) & comp, [&](unsigned v) {
      d = std::gcd(d, static_cast<std::uint64_t>(level[u] + 1 - level[v]));
    });
  });
  return d;
}

}  // namespace

unsigned loop_number(const DirectedGraph& g) {
  std::uint64_t overall = 0;
  for (std::uint64_t comp : scc(g).components)
    overall = std::gcd(overall, component_cycle_gcd(g, comp));
  return static_cast<unsigned>(overall);
}

bool is_primitive(const DirectedGraph& g) {
  return g.size() > 0 && is_strong(g) && loop_number(g) == 1;
}

std::vector<std::uint64_t> partition_classes(const DirectedGraph& g) {
  if (g.size() == 0 || !is_strong(g))
    throw PreconditionError("partition classes require a strong graph");
  const unsigned l = loop_number(g);
  if (l == 0) throw PreconditionError("partition classes require a cycle (loop number >= 1)");
  const std::vector<int> level = bfs_levels(g, g.vertex_mask(), 0);
  std::vector<std::uint64_t> classes(l, 0);
  for (unsigned v = 0; v < g.size(); ++v)
    classes[static_cast<unsigned>(level[v]) % l] |= bit(v);
  return classes;
}

StructuralSummary structural_predicates(const DirectedGraph& g) {
  StructuralSummary s;
  s.is_strong = is_strong(g);
  s.is_nontrivial = is_nontrivial(g);
  s.is_reflexive = true;
  s.in_degrees.resize(g.size());
  for (unsigned v = 0; v < g.size(); ++v) {
    if (!g.has_arc(v, v)) s.is_reflexive = false;
    if (g.in_row(v) == 0) s.sources |= bit(v);
    if (g.out_row(v) == 0) s.sinks |= bit(v);
    s.in_degrees[v] = g.in_degree(v);
  }
  return s;
}

std::vector<std::uint64_t> weak_components(const DirectedGraph& g) {
  std::vector<std::uint64_t> comps;
  std::uint64_t remaining = g.vertex_mask();
  while (remaining != 0) {
    std::uint64_t comp = bit(static_cast<unsigned>(std::countr_zero(remaining)));
    for (;;) {
      std::uint64_t grown = comp;
      for_each_bit(comp, [&](unsigned v) { grown |= g.out_row(v) | g.in_row(v); });
      if (grown == comp) break;
      comp = grown;
    }
    comps.push_back(comp);
    remaining &= ~comp;
  }
  return comps;
}

// ---------------------------------------------------------------------------
// Family recognition
// ---------------------------------------------------------------------------

namespace {

/// Follows the unique out-arc inside `rows` starting at `start` until the walk
/// returns to it. Reports the visited set, the walk length, and the position
/// of `target` along the walk (0 when target == start). Fails when any vertex
/// on the walk lacks a unique out-arc.
struct WalkResult {
  bool ok = false;
  std::uint64_t visited = 0;
  unsigned length = 0;
  unsigned target_pos = 0;
};

WalkResult walk_cycle(const std::vector<std::uint64_t>& rows, unsigned start,
                      unsigned target) {
  WalkResult r;
  unsigned cur = start;
  for (;;) {
    if (cur == target) r.target_pos = r.length;
    r.visited |= bit(cur);
    const std::uint64_t next = rows[cur];
    if (popcount(next) != 1) return r;
    cur = static_cast<unsigned>(std::countr_zero(next));
    ++r.length;
    if (cur == start) break;
    if (test_bit(r.visited, cur)) return r;  // rejoined off the start
  }
  r.ok = true;
  return r;
}

}  // namespace

ShapeMatch classify_component(const DirectedGraph& g, std::uint64_t comp) {
  const unsigned m = popcount(comp);
  if (m == 0) return {};

  std::vector<std::uint64_t> rows(g.size(), 0);
  unsigned arcs = 0;
  for_each_bit(comp, [&](unsigned v) {
    rows[v] = g.out_row(v) & comp;
    arcs += popcount(rows[v]);
  });

  const auto first = static_cast<unsigned>(std::countr_zero(comp));

  if (arcs == m) {
    // Every degree must be 1; the component is weakly connected, so the arcs
    // form a single cycle, confirmed by walking it.
    for_each_bit(comp, [&](unsigned v) {
      if (popcount(rows[v]) != 1 || popcount(g.in_row(v) & comp) != 1) arcs = 0;
    });
    if (arcs == 0) return {};
    const WalkResult w = walk_cycle(rows, first, first);
    if (w.ok && w.visited == comp && w.length == m)
      return {ComponentShape::cycle, m, 0};
    return {};
  }

  if (arcs != m + 1) return {};

  // One extra arc: look for the unique out-degree-2 vertex z and the unique
  // in-degree-2 vertex w; all other degrees must be 1.
  unsigned z = g.size(), w = g.size();
  bool shape_ok = true;
  for_each_bit(comp, [&](unsigned v) {
    const unsigned od = popcount(rows[v]);
    const unsigned id = popcount(g.in_row(v) & comp);
    if (od == 2) {
      if (z != g.size()) shape_ok = false;
      z = v;
    } else if (od != 1) {
      shape_ok = false;
    }
    if (id == 2) {
      if (w != g.size()) shape_ok = false;
      w = v;
    } else if (id != 1) {
      shape_ok = false;
    }
  });
  if (!shape_ok || z == g.size() || w == g.size()) return {};
  if (!test_bit(rows[z], w)) return {};

  // Drop the extra arc (z, w); what remains must be a permutation of the
  // component, i.e. one or two disjoint cycles.
  rows[z] &= ~bit(w);
  const WalkResult first_cycle = walk_cycle(rows, z, w);
  if (!first_cycle.ok) return {};
  if (first_cycle.visited == comp) {
    // Single Hamiltonian cycle: chorded cycle with z playing vertex 0, so the
    // chord target sits target_pos steps along the cycle.
    return {ComponentShape::chorded_cycle, m, first_cycle.target_pos};
  }
  if (test_bit(first_cycle.visited, w)) return {};
  const WalkResult second_cycle = walk_cycle(rows, w, w);
  if (!second_cycle.ok) return {};
  if ((first_cycle.visited | second_cycle.visited) != comp) return {};
  return {ComponentShape::link_of_cycles, first_cycle.length, second_cycle.length};
}

std::string NearCyclicWitness::describe() const {
  std::string s = core == ComponentShape::chorded_cycle ? "chorded_cycle:" : "link_of_cycles:";
  s += std::to_string(a) + "," + std::to_string(b);
  for (unsigned len : cycles) s += "+cycle:" + std::to_string(len);
  return s;
}

NearCyclicResult is_near_cyclic(const DirectedGraph& g) {
  NearCyclicWitness witness;
  unsigned cores = 0;
  for (std::uint64_t comp : weak_components(g)) {
    const ShapeMatch m = classify_component(g, comp);
    switch (m.shape) {
      case ComponentShape::cycle:
        witness.cycles.push_back(m.a);
        break;
      case ComponentShape::chorded_cycle:
      case ComponentShape::link_of_cycles:
        ++cores;
        witness.core = m.shape;
        witness.a = m.a;
        witness.b = m.b;
        break;
      case ComponentShape::other:
        return {};
    }
  }
  if (cores != 1) return {};
  std::sort(witness.cycles.begin(), witness.cycles.end());
  return {true, std::move(witness)};
}

namespace {

bool kuhn_augment(const DirectedGraph& g, unsigned i, std::uint64_t& visited,
                  std::vector<unsigned>& match_right) {
  bool found = false;
  for_each_bit(g.out_row(i) & ~visited, [&](unsigned j) {
    if (found || test_bit(visited, j)) return;
    visited |= bit(j);
    if (match_right[j] == g.size() ||
        kuhn_augment(g, match_right[j], visited, match_right)) {
      match_right[j] = i;
      found = true;
    }
  });
  return found;
}

}  // namespace

CycleCover coverable_by_cycles(const DirectedGraph& g) {
  const unsigned n = g.size();
  std::vector<unsigned> match_right(n, n);
  for (unsigned i = 0; i < n; ++i) {
    std::uint64_t visited = 0;
    if (!kuhn_augment(g, i, visited, match_right)) return {};
  }
  std::vector<unsigned> perm(n, 0);
  for (unsigned j = 0; j < n; ++j) perm[match_right[j]] = j;
  return {true, std::move(perm)};
}

}  // namespace disjnet
