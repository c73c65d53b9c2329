#include "disjnet/network.hpp"

#include <algorithm>

namespace disjnet {

TruthTableNetwork::TruthTableNetwork(unsigned n, std::vector<std::uint64_t> table)
    : n_(n), table_(std::move(table)) {
  if (n > kMaxVertices)
    throw InputError("network dimension " + std::to_string(n) + " exceeds " +
                     std::to_string(kMaxVertices));
  if (n >= 48 || table_.size() != (std::uint64_t{1} << n))
    throw InputError("truth table for dimension " + std::to_string(n) + " must have 2^" +
                     std::to_string(n) + " entries, got " + std::to_string(table_.size()));
  for (std::uint64_t entry : table_)
    if ((entry & ~low_mask(n)) != 0)
      throw InputError("truth table entry has bits above dimension " + std::to_string(n));
}

Config TruthTableNetwork::eval(const Config& x) const {
  if (x.dim() != n_)
    throw InputError("configuration dimension " + std::to_string(x.dim()) +
                     " does not match network dimension " + std::to_string(n_));
  return Config(table_[x.bits()], n_);
}

std::uint64_t eval_disjunctive_bits(const DirectedGraph& g, std::uint64_t x) {
  return g.out_neighbourhood(x);
}

std::uint64_t eval_conjunctive_bits(const DirectedGraph& g, std::uint64_t x) {
  std::uint64_t y = 0;
  for (unsigned i = 0; i < g.size(); ++i) {
    const std::uint64_t req = g.in_row(i);
    if ((x & req) == req) y |= bit(i);
  }
  return y;
}

namespace {
void check_dim(const DirectedGraph& g, const Config& x) {
  if (x.dim() != g.size())
    throw InputError("configuration dimension " + std::to_string(x.dim()) +
                     " does not match graph on " + std::to_string(g.size()) + " vertices");
}
}  // namespace

Config eval_disjunctive(const DisjunctiveNetwork& f, const Config& x) {
  check_dim(f.graph, x);
  return Config(eval_disjunctive_bits(f.graph, x.bits()), x.dim());
}

Config eval_conjunctive(const DirectedGraph& g, const Config& x) {
  check_dim(g, x);
  return Config(eval_conjunctive_bits(g, x.bits()), x.dim());
}

std::uint64_t vec_mat_mul(std::uint64_t x, const DirectedGraph& g) {
  std::uint64_t y = 0;
  for (unsigned j = 0; j < g.size(); ++j)
    if ((x & g.in_row(j)) != 0) y |= bit(j);
  return y;
}

DirectedGraph bool_mat_mul(const DirectedGraph& a, const DirectedGraph& b) {
  if (a.size() != b.size())
    throw InputError("matrix dimensions differ: " + std::to_string(a.size()) + " vs " +
                     std::to_string(b.size()));
  std::vector<std::uint64_t> rows(a.size(), 0);
  for (unsigned i = 0; i < a.size(); ++i)
    rows[i] = b.out_neighbourhood(a.out_row(i));
  return DirectedGraph::from_out_rows(std::move(rows));
}

DirectedGraph identity_matrix(unsigned n) {
  std::vector<std::uint64_t> rows(n, 0);
  for (unsigned i = 0; i < n; ++i) rows[i] = bit(i);
  return DirectedGraph::from_out_rows(std::move(rows));
}

DirectedGraph mat_power(const DirectedGraph& a, std::uint64_t k) {
  DirectedGraph result = identity_matrix(a.size());
  DirectedGraph base = a;
  while (k != 0) {
    if (k & 1) result = bool_mat_mul(result, base);
    k >>= 1;
    if (k != 0) base = bool_mat_mul(base, base);
  }
  return result;
}

namespace {
void check_cap(unsigned n, unsigned cap) {
  if (n > cap)
    throw ResourceError("dimension " + std::to_string(n) +
                        " exceeds the brute-force cap " + std::to_string(cap));
}
}  // namespace

TruthTableNetwork to_truth_table(const DisjunctiveNetwork& f, unsigned cap) {
  check_cap(f.dim(), cap);
  const std::uint64_t states = std::uint64_t{1} << f.dim();
  std::vector<std::uint64_t> table(states);
  for (std::uint64_t s = 0; s < states; ++s)
    table[s] = eval_disjunctive_bits(f.graph, s);
  return TruthTableNetwork(f.dim(), std::move(table));
}

TruthTableNetwork conjunctive_truth_table(const DirectedGraph& g, unsigned cap) {
  check_cap(g.size(), cap);
  const std::uint64_t states = std::uint64_t{1} << g.size();
  std::vector<std::uint64_t> table(states);
  for (std::uint64_t s = 0; s < states; ++s)
    table[s] = eval_conjunctive_bits(g, s);
  return TruthTableNetwork(g.size(), std::move(table));
}

DirectedGraph interaction_graph(const TruthTableNetwork& f) {
  const std::uint64_t states = f.states();
  std::vector<std::uint64_t> rows(f.dim(), 0);
  for (unsigned i = 0; i < f.dim(); ++i) {
    std::uint64_t diff = 0;
    for (std::uint64_t s = 0; s < states; ++s)
      if (!test_bit(s, i)) diff |= f.apply(s) ^ f.apply(s | bit(i));
    rows[i] = diff;  // bit j set iff coordinate j depends on variable i
  }
  return DirectedGraph::from_out_rows(std::move(rows));
}

bool is_monotone(const TruthTableNetwork& f) {
  const std::uint64_t states = f.states();
  for (std::uint64_t s = 0; s < states; ++s)
    for (unsigned i = 0; i < f.dim(); ++i) {
      if (test_bit(s, i)) continue;
      if ((f.apply(s) & ~f.apply(s | bit(i))) != 0) return false;
    }
  return true;
}

bool is_disjunctive_by_morphism(const TruthTableNetwork& f) {
  if (f.apply(0) != 0) return false;
  const std::uint64_t states = f.states();
  for (std::uint64_t x = 0; x < states; ++x)
    for (std::uint64_t y = x + 1; y < states; ++y)
      if (f.apply(x | y) != (f.apply(x) | f.apply(y))) return false;
  return true;
}

bool is_submodular(const TruthTableNetwork& f) {
  const std::uint64_t states = f.states();
  for (std::uint64_t x = 0; x < states; ++x)
    for (std::uint64_t y = x + 1; y < states; ++y) {
      const std::uint64_t lhs = f.apply(x | y) | f.apply(x & y);
      if ((lhs & ~(f.apply(x) | f.apply(y))) != 0) return false;
    }
  return true;
}

bool is_locally_idempotent(const TruthTableNetwork& f) {
  const std::uint64_t full = low_mask(f.dim());
  return f.apply(0) == 0 && f.apply(full) == full;
}

bool sandwich_check(const TruthTableNetwork& f) {
  if (!is_locally_idempotent(f))
    throw PreconditionError("sandwich bounds require a locally idempotent network");
  const DirectedGraph d = interaction_graph(f);
  const std::uint64_t states = f.states();
  for (std::uint64_t s = 0; s < states; ++s) {
    const std::uint64_t fs = f.apply(s);
    if ((eval_conjunctive_bits(d, s) & ~fs) != 0) return false;
    if ((fs & ~eval_disjunctive_bits(d, s)) != 0) return false;
  }
  return true;
}

std::uint64_t distance_to_constant(const TruthTableNetwork& f) {
  const std::uint64_t states = f.states();
  std::uint64_t total = 0;
  for (unsigned i = 0; i < f.dim(); ++i) {
    std::uint64_t ones = 0;
    for (std::uint64_t s = 0; s < states; ++s)
      if (test_bit(f.apply(s), i)) ++ones;
    total += std::min(ones, states - ones);
  }
  return total;
}

std::uint64_t closed_form_distance(const DirectedGraph& g) {
  std::uint64_t total = 0;
  for (unsigned i = 0; i < g.size(); ++i) {
    const unsigned d = g.in_degree(i);
    if (d == 0) continue;  // source coordinate is constant already
    const std::uint64_t term = std::uint64_t{1} << (g.size() - d);
    if (total > ~std::uint64_t{0} - term)
      throw ResourceError("closed-form distance overflows 64 bits");
    total += term;
  }
  return total;
}

bool is_idempotent(const TruthTableNetwork& f) {
  const std::uint64_t states = f.states();
  for (std::uint64_t s = 0; s < states; ++s) {
    const std::uint64_t fs = f.apply(s);
    if (f.apply(fs) != fs) return false;
  }
  return true;
}

bool is_bijective(const TruthTableNetwork& f) {
  std::vector<bool> seen(f.states(), false);
  for (std::uint64_t s = 0; s < f.states(); ++s) {
    const std::uint64_t fs = f.apply(s);
    if (seen[fs]) return false;
    seen[fs] = true;
  }
  return true;
}

VariablePermutation is_permutation_of_variables(const TruthTableNetwork& f) {
  const unsigned n = f.dim();
  std::vector<unsigned> perm(n, n);
  std::uint64_t used = 0;
  for (unsigned j = 0; j < n; ++j) {
    const std::uint64_t u = f.apply(bit(j));
    if (popcount(u) != 1) return {};
    const auto k = static_cast<unsigned>(std::countr_zero(u));
    if (test_bit(used, k)) return {};
    used |= bit(k);
    perm[k] = j;  // output coordinate k reads input coordinate j
  }
  const std::uint64_t states = f.states();
  for (std::uint64_t s = 0; s < states; ++s) {
    std::uint64_t expect = 0;
    for (unsigned i = 0; i < n; ++i)
      if (test_bit(s, perm[i])) expect |= bit(i);
    if (f.apply(s) != expect) return {};
  }
  return {true, std::move(perm)};
}

}  // namespace disjnet
