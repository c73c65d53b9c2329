#include "disjnet/dynamics.hpp"

#include <algorithm>

#include "disjnet/errors.hpp"
#include "disjnet/oracle.hpp"

namespace disjnet {

Config maximal_preimage(const DisjunctiveNetwork& f, const Config& x) {
  if (x.dim() != f.dim())
    throw InputError("configuration dimension " + std::to_string(x.dim()) +
                     " does not match network dimension " + std::to_string(f.dim()));
  const std::uint64_t full = f.graph.vertex_mask();
  const std::uint64_t y = full & ~f.graph.in_neighbourhood(full & ~x.bits());
  return Config(y, f.dim());
}

bool is_image_point(const DisjunctiveNetwork& f, const Config& x) {
  const Config y = maximal_preimage(f, x);
  return eval_disjunctive_bits(f.graph, y.bits()) == x.bits();
}

std::vector<std::uint64_t> image_set(const DisjunctiveNetwork& f, unsigned cap) {
  if (f.dim() > cap)
    throw ResourceError("dimension " + std::to_string(f.dim()) +
                        " exceeds the brute-force cap " + std::to_string(cap));
  const std::uint64_t states = std::uint64_t{1} << f.dim();
  std::vector<std::uint64_t> image(states);
  for (std::uint64_t s = 0; s < states; ++s)
    image[s] = eval_disjunctive_bits(f.graph, s);
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return image;
}

// ---------------------------------------------------------------------------
// Periodic points
// ---------------------------------------------------------------------------

namespace {

std::vector<std::uint64_t> divisors_of(unsigned l) {
  std::vector<std::uint64_t> ds;
  for (unsigned d = 1; d <= l; ++d)
    if (l % d == 0) ds.push_back(d);
  return ds;
}

/// Least cyclic-shift period of the index set I within Z_l.
std::uint64_t rotation_period(std::uint64_t index_set, unsigned l,
                              const std::vector<std::uint64_t>& divisors) {
  const std::uint64_t m = low_mask(l);
  for (std::uint64_t p : divisors) {
    const std::uint64_t rotated =
        ((index_set >> p) | (index_set << (l - p))) & m;
    if (rotated == index_set) return p;
  }
  return l;
}

}  // namespace

PeriodicStructure periodic_structure(const DisjunctiveNetwork& f, unsigned cap,
                                     std::uint64_t max_points) {
  const unsigned l = loop_number(f.graph);
  if (l == 0)
    throw PreconditionError("periodic structure requires at least one cycle");

  PeriodicStructure out;
  out.loop_number = l;

  if (is_strong(f.graph)) {
    out.method = Method::structural;
    out.classes = partition_classes(f.graph);
    if (l >= 64)
      throw ResourceError("loop number " + std::to_string(l) +
                          " makes the periodic count overflow 64 bits");
    out.periodic_count = std::uint64_t{1} << l;
    if (out.periodic_count > max_points) {
      out.counts_only = true;
      return out;
    }
    const std::vector<std::uint64_t> divisors = divisors_of(l);
    for (std::uint64_t index_set = 0; index_set < out.periodic_count; ++index_set) {
      std::uint64_t point = 0;
      for_each_bit(index_set, [&](unsigned i) { point |= out.classes[i]; });
      out.points.push_back(point);
      out.periods[point] = rotation_period(index_set, l, divisors);
    }
    std::sort(out.points.begin(), out.points.end());
    return out;
  }

  // Not strong but has a cycle: fall back to the oracle scan.
  out.method = Method::brute_force;
  const FunctionalGraph fg = build_functional_graph(to_truth_table(f, cap), cap);
  const std::uint64_t states = std::uint64_t{1} << f.dim();
  for (std::uint64_t s = 0; s < states; ++s)
    if (fg.on_cycle[s]) {
      out.points.push_back(s);
      out.periods[s] = fg.periods[s];
    }
  out.periodic_count = out.points.size();
  return out;
}

namespace {

/// Brent cycle detection on the orbit of x: returns (transient, period).
std::pair<std::uint64_t, std::uint64_t> orbit_shape(const DirectedGraph& g,
                                                    std::uint64_t x) {
  std::uint64_t power = 1, lambda = 1;
  std::uint64_t tortoise = x;
  std::uint64_t hare = eval_disjunctive_bits(g, x);
  while (tortoise != hare) {
    if (power == lambda) {
      tortoise = hare;
      power *= 2;
      lambda = 0;
    }
    hare = eval_disjunctive_bits(g, hare);
    ++lambda;
  }
  std::uint64_t mu = 0;
  tortoise = hare = x;
  for (std::uint64_t i = 0; i < lambda; ++i) hare = eval_disjunctive_bits(g, hare);
  while (tortoise != hare) {
    tortoise = eval_disjunctive_bits(g, tortoise);
    hare = eval_disjunctive_bits(g, hare);
    ++mu;
  }
  return {mu, lambda};
}

}  // namespace

std::uint64_t period_of_point(const DisjunctiveNetwork& f, const Config& x) {
  if (x.dim() != f.dim())
    throw InputError("configuration dimension does not match the network");
  const auto [mu, lambda] = orbit_shape(f.graph, x.bits());
  if (mu != 0)
    throw PreconditionError("state " + x.to_string() + " is not periodic: it takes " +
                            std::to_string(mu) + " steps to reach its cycle");
  return lambda;
}

std::uint64_t transient_length(const DisjunctiveNetwork& f, const Config& x,
                               unsigned cap) {
  if (x.dim() != f.dim())
    throw InputError("configuration dimension does not match the network");
  if (f.dim() > cap)
    throw ResourceError("dimension " + std::to_string(f.dim()) +
                        " exceeds the brute-force cap " + std::to_string(cap));
  return orbit_shape(f.graph, x.bits()).first;
}

// ---------------------------------------------------------------------------
// Fixed points
// ---------------------------------------------------------------------------

std::uint64_t upset_closure(const DirectedGraph& g, std::uint64_t s) {
  if ((s & ~g.vertex_mask()) != 0)
    throw InputError("vertex set has members outside the graph");
  std::uint64_t closure = s;
  for (;;) {
    const std::uint64_t grown = closure | g.out_neighbourhood(closure);
    if (grown == closure) return closure;
    closure = grown;
  }
}

bool is_topology(const std::vector<std::uint64_t>& sets, unsigned n) {
  const std::uint64_t full = low_mask(n);
  std::vector<std::uint64_t> sorted = sets;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (std::uint64_t s : sorted)
    if ((s & ~full) != 0)
      throw InputError("set system has members outside the " + std::to_string(n) +
                       "-vertex ground set");
  const auto member = [&](std::uint64_t s) {
    return std::binary_search(sorted.begin(), sorted.end(), s);
  };
  if (!member(0) || !member(full)) return false;
  for (std::size_t a = 0; a < sorted.size(); ++a)
    for (std::size_t b = a + 1; b < sorted.size(); ++b) {
      if (!member(sorted[a] | sorted[b])) return false;
      if (!member(sorted[a] & sorted[b])) return false;
    }
  return true;
}

bool is_topology(const Topology& t) { return is_topology(t.opens, t.n); }

FixedPointSet fixed_points(const DisjunctiveNetwork& f, unsigned cap,
                           std::uint64_t max_sets) {
  FixedPointSet out;
  out.topology.n = f.dim();

  if (is_nontrivial(f.graph)) {
    out.method = Method::structural;
    const SccDecomposition dec = scc(f.graph);
    const auto k = static_cast<unsigned>(dec.components.size());
    // Fixed points are the unions of components closed under condensation
    // successors. Components are in topological order, so deciding membership
    // from the last component down makes every branch valid: one leaf per
    // up-set, no filtering.
    auto emit = [&](std::uint64_t vs) {
      out.topology.opens.push_back(vs);
      if (out.topology.opens.size() > max_sets)
        throw ResourceError("fixed-point enumeration exceeds the cap of " +
                            std::to_string(max_sets) + " sets");
    };
    auto rec = [&](auto&& self, int c, std::uint64_t chosen, std::uint64_t vs) -> void {
      if (c < 0) {
        emit(vs);
        return;
      }
      self(self, c - 1, chosen, vs);
      const std::uint64_t succ = dec.condensation.out_row(static_cast<unsigned>(c));
      if ((succ & chosen) == succ)
        self(self, c - 1, chosen | bit(static_cast<unsigned>(c)),
             vs | dec.components[static_cast<unsigned>(c)]);
    };
    rec(rec, static_cast<int>(k) - 1, 0, 0);
    std::sort(out.topology.opens.begin(), out.topology.opens.end());
    return out;
  }

  out.method = Method::brute_force;
  out.topology.opens = oracle_fixed_set(to_truth_table(f, cap), cap);
  return out;
}

DirectedGraph graph_from_topology(const Topology& t) {
  if (!is_topology(t))
    throw InputError("the given set system is not a topology");
  std::vector<std::uint64_t> rows(t.n, 0);
  for (unsigned i = 0; i < t.n; ++i) {
    std::uint64_t minimal_open = low_mask(t.n);
    for (std::uint64_t open : t.opens)
      if (test_bit(open, i)) minimal_open &= open;
    rows[i] = minimal_open;
  }
  return DirectedGraph::from_out_rows(std::move(rows));
}

}  // namespace disjnet
