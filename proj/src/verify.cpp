#include "disjnet/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "disjnet/dynamics.hpp"
#include "disjnet/errors.hpp"
#include "disjnet/oracle.hpp"
#include "disjnet/ranks.hpp"

namespace disjnet {

namespace {

class Suite {
 public:
  explicit Suite(std::string id) : start_(std::chrono::steady_clock::now()) {
    result_.id = std::move(id);
  }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++result_.cases;
    if (ok) return;
    result_.pass = false;
    ++result_.failure_count;
    if (result_.failures.size() < 10) result_.failures.push_back(describe());
  }

  void stat(const std::string& key, const std::string& value) {
    result_.stats.emplace_back(key, value);
  }
  void stat(const std::string& key, std::uint64_t value) {
    stat(key, std::to_string(value));
  }

  VerifyResult finish() {
    const auto elapsed = std::chrono::steady_clock::now() - start_;
    result_.seconds = std::chrono::duration<double>(elapsed).count();
    return result_;
  }

 private:
  VerifyResult result_;
  std::chrono::steady_clock::time_point start_;
};

/// Sampled dimensions stay within the brute-force cap: every sampling suite
/// cross-checks a capped exhaustive or oracle computation, so larger
/// dimensions cannot be exercised. A clamp is disclosed in the stats.
unsigned sampled_dim_max(Suite& suite, unsigned requested) {
  if (requested <= kDefaultBruteForceCap) return requested;
  suite.stat("sample_dim_capped_at", std::uint64_t{kDefaultBruteForceCap});
  return kDefaultBruteForceCap;
}

std::string brief(const DirectedGraph& g) {
  std::string s = "n=" + std::to_string(g.size()) + " arcs {";
  bool first = true;
  for (auto [i, j] : g.edge_list()) {
    if (!first) s += ", ";
    first = false;
    s += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  }
  return s + "}";
}

std::string brief(const TruthTableNetwork& f) {
  std::string s = "n=" + std::to_string(f.dim()) + " table [";
  for (std::uint64_t v : f.table()) s += " " + std::to_string(v);
  return s + " ]";
}

DirectedGraph graph_from_index(unsigned n, std::uint64_t index) {
  std::vector<std::uint64_t> rows(n, 0);
  for (unsigned i = 0; i < n; ++i)
    rows[i] = (index >> (static_cast<std::uint64_t>(i) * n)) & low_mask(n);
  return DirectedGraph::from_out_rows(std::move(rows));
}

std::uint64_t graph_count(unsigned n) {
  return std::uint64_t{1} << (static_cast<std::uint64_t>(n) * n);
}

std::vector<std::uint64_t> divisors_of(std::uint64_t l) {
  std::vector<std::uint64_t> ds;
  for (std::uint64_t d = 1; d <= l; ++d)
    if (l % d == 0) ds.push_back(d);
  return ds;
}

/// All 2^(2^n) truth tables exist only for n = 2; this walks them.
TruthTableNetwork table_from_index(unsigned n, std::uint64_t index) {
  const std::uint64_t states = std::uint64_t{1} << n;
  std::vector<std::uint64_t> table(states);
  for (std::uint64_t s = 0; s < states; ++s) {
    table[s] = index & (states - 1);
    index >>= n;
  }
  return TruthTableNetwork(n, std::move(table));
}

bool equals_disjunctive_on_interaction_graph(const TruthTableNetwork& f) {
  const DirectedGraph d = interaction_graph(f);
  for (std::uint64_t s = 0; s < f.states(); ++s)
    if (f.apply(s) != eval_disjunctive_bits(d, s)) return false;
  return true;
}

/// A corpus entry for the characterisation suites: mostly random tables, with
/// planted disjunctive networks and one-bit perturbations of them so both
/// sides of the equivalence are exercised.
TruthTableNetwork characterisation_sample(Rng& rng, unsigned n) {
  const unsigned kind = rng.range(0, 3);
  if (kind == 0) return random_network(rng, n);
  if (kind == 1) return random_monotone_network(rng, n);
  TruthTableNetwork f = to_truth_table(DisjunctiveNetwork{random_graph(rng, n)});
  if (kind == 3 && n > 0) {
    std::vector<std::uint64_t> table = f.table();
    table[rng.below(table.size())] ^= bit(rng.range(0, n - 1));
    f = TruthTableNetwork(n, std::move(table));
  }
  return f;
}

}  // namespace

// ---------------------------------------------------------------------------
// Evaluation routes
// ---------------------------------------------------------------------------

VerifyResult verify_representation_equivalence(const VerifyOptions& o) {
  Suite suite("representation");
  Rng rng(o.seed);
  const unsigned nmax = std::max(1u, sampled_dim_max(suite, o.n));
  for (std::uint64_t g_index = 0; g_index < o.samples; ++g_index) {
    const unsigned n = rng.range(0, nmax);
    const DirectedGraph g = random_graph(rng, n);
    bool ok = true;
    std::uint64_t bad_state = 0;
    std::string via;
    for (std::uint64_t x = 0; ok && x < (std::uint64_t{1} << n); ++x) {
      const std::uint64_t by_neighbourhood = eval_disjunctive_bits(g, x);
      const std::uint64_t by_matrix = vec_mat_mul(x, g);
      std::uint64_t by_relation = 0;
      for (auto [i, j] : g.edge_list())
        if (test_bit(x, i)) by_relation |= bit(j);
      std::vector<std::set<unsigned>> tokens(n);
      for_each_bit(x, [&](unsigned i) { tokens[i].insert(i); });
      const auto slid = token_sliding_eval(g, tokens);
      std::uint64_t by_tokens = 0;
      for (unsigned i = 0; i < n; ++i)
        if (!slid[i].empty()) by_tokens |= bit(i);
      if (by_matrix != by_neighbourhood) via = "matrix";
      if (by_relation != by_neighbourhood) via = "relation";
      if (by_tokens != by_neighbourhood) via = "token";
      if (!via.empty()) {
        ok = false;
        bad_state = x;
      }
    }
    suite.check(ok, [&] {
      return brief(g) + ": " + via + " route disagrees at state " +
             std::to_string(bad_state);
    });
  }
  suite.stat("graphs", o.samples);
  suite.stat("max_n", nmax);
  return suite.finish();
}

// ---------------------------------------------------------------------------
// Characterisations
// ---------------------------------------------------------------------------

namespace {

VerifyResult characterisation_suite(
    const std::string& id, const VerifyOptions& o,
    const std::function<bool(const TruthTableNetwork&)>& predicate) {
  Suite suite(id);
  std::uint64_t disjunctive_seen = 0;
  const auto run = [&](const TruthTableNetwork& f) {
    const bool claimed = predicate(f);
    const bool actual = equals_disjunctive_on_interaction_graph(f);
    if (actual) ++disjunctive_seen;
    suite.check(claimed == actual, [&] {
      return brief(f) + ": predicate says " + (claimed ? "yes" : "no") +
             ", truth-table comparison says " + (actual ? "yes" : "no");
    });
  };

  // Every 2-dimensional Boolean network.
  for (std::uint64_t index = 0; index < 256; ++index) run(table_from_index(2, index));
  const std::uint64_t planted = disjunctive_seen;
  // There are exactly as many disjunctive networks as graphs: 2^(2*2) = 16.
  suite.check(planted == 16, [&] {
    return "expected 16 disjunctive networks among the 256 2-dimensional ones, found " +
           std::to_string(planted);
  });

  Rng rng(o.seed);
  const unsigned nmax = std::max(1u, sampled_dim_max(suite, o.n));
  for (std::uint64_t s = 0; s < o.samples; ++s)
    run(characterisation_sample(rng, rng.range(0, nmax)));

  suite.stat("exhaustive_2d", 256);
  suite.stat("samples", o.samples);
  suite.stat("disjunctive_seen", disjunctive_seen);
  return suite.finish();
}

}  // namespace

VerifyResult verify_char1(const VerifyOptions& o) {
  return characterisation_suite("char1", o, is_disjunctive_by_morphism);
}

VerifyResult verify_char2(const VerifyOptions& o) {
  return characterisation_suite("char2", o, [](const TruthTableNetwork& f) {
    return f.apply(0) == 0 && is_monotone(f) && is_submodular(f);
  });
}

VerifyResult verify_sandwich(const VerifyOptions& o) {
  Suite suite("sandwich");
  Rng rng(o.seed);
  const unsigned nmax = std::max(1u, sampled_dim_max(suite, o.n));
  for (std::uint64_t s = 0; s < o.samples; ++s) {
    const unsigned n = rng.range(1, nmax);
    TruthTableNetwork f = random_locally_idempotent_network(rng, n);
    if (rng.chance(1, 2)) {
      // Monotone locally idempotent sample: pinning the two constant states
      // keeps upward closure intact.
      std::vector<std::uint64_t> table = random_monotone_network(rng, n).table();
      table[0] = 0;
      table[table.size() - 1] = table.size() - 1;
      f = TruthTableNetwork(n, std::move(table));
    }
    suite.check(sandwich_check(f),
                [&] { return brief(f) + ": sandwich bound violated"; });
  }
  suite.stat("samples", o.samples);
  suite.stat("max_n", nmax);
  return suite.finish();
}

// ---------------------------------------------------------------------------
// Distance to the constant networks
// ---------------------------------------------------------------------------

VerifyResult verify_distance(const VerifyOptions& o) {
  Suite suite("distance");
  const unsigned exhaustive_max = std::min(o.n, 4u);
  for (unsigned n = 0; n <= exhaustive_max; ++n)
    for (std::uint64_t index = 0; index < graph_count(n); ++index) {
      const DirectedGraph g = graph_from_index(n, index);
      const std::uint64_t expected = closed_form_distance(g);
      const std::uint64_t via_or = distance_to_constant(to_truth_table(DisjunctiveNetwork{g}));
      const std::uint64_t via_and = distance_to_constant(conjunctive_truth_table(g));
      suite.check(via_or == expected && via_and == expected, [&] {
        return brief(g) + ": closed form " + std::to_string(expected) +
               ", disjunctive " + std::to_string(via_or) + ", conjunctive " +
               std::to_string(via_and);
      });
    }

  Rng rng(o.seed);
  const std::uint64_t per_graph = std::max<std::uint64_t>(1, o.samples / 5);
  const unsigned n = 3;
  for (std::uint64_t index = 0; index < graph_count(n); ++index) {
    const DirectedGraph g = graph_from_index(n, index);
    for (std::uint64_t s = 0; s < per_graph; ++s) {
      const TruthTableNetwork f = random_network_on_graph(rng, g);
      const std::uint64_t lower = closed_form_distance(interaction_graph(f));
      const std::uint64_t actual = distance_to_constant(f);
      suite.check(actual >= lower, [&] {
        return brief(f) + ": distance " + std::to_string(actual) +
               " undercuts the bound " + std::to_string(lower);
      });
    }
  }
  suite.stat("exhaustive_max_n", exhaustive_max);
  suite.stat("samples_per_graph_n3", per_graph);
  return suite.finish();
}

// ---------------------------------------------------------------------------
// Image points
// ---------------------------------------------------------------------------

VerifyResult verify_image_test(const VerifyOptions& o) {
  Suite suite("image-test");
  const unsigned exhaustive_max = std::min(o.n, 4u);
  std::uint64_t graphs = 0;
  for (unsigned n = 0; n <= exhaustive_max; ++n)
    for (std::uint64_t index = 0; index < graph_count(n); ++index, ++graphs) {
      const DirectedGraph g = graph_from_index(n, index);
      const DisjunctiveNetwork f{g};
      const std::uint64_t states = std::uint64_t{1} << n;
      std::vector<std::uint64_t> preimage_union(states, 0);
      std::vector<bool> in_image(states, false);
      for (std::uint64_t y = 0; y < states; ++y) {
        const std::uint64_t x = eval_disjunctive_bits(g, y);
        in_image[x] = true;
        preimage_union[x] |= y;
      }
      bool ok = true;
      std::uint64_t bad = 0;
      std::string why;
      for (std::uint64_t x = 0; ok && x < states; ++x) {
        if (is_image_point(f, Config(x, n)) != in_image[x]) {
          ok = false;
          bad = x;
          why = "membership test disagrees with the oracle";
        } else if (in_image[x] &&
                   maximal_preimage(f, Config(x, n)).bits() != preimage_union[x]) {
          ok = false;
          bad = x;
          why = "maximal preimage differs from the union of all preimages";
        }
      }
      suite.check(ok, [&] {
        return brief(g) + " at state " + std::to_string(bad) + ": " + why;
      });
    }
  suite.stat("graphs", graphs);
  return suite.finish();
}

// ---------------------------------------------------------------------------
// Periodic points
// ---------------------------------------------------------------------------

namespace {

void check_periodic_structure(Suite& suite, const DirectedGraph& g) {
  const DisjunctiveNetwork f{g};
  const unsigned l = loop_number(g);
  const PeriodicStructure ps = periodic_structure(f);
  const TruthTableNetwork tt = to_truth_table(f);
  const std::vector<std::uint64_t> oracle = oracle_periodic_set(tt);

  bool ok = true;
  std::string why;
  if (ps.method != Method::structural) {
    ok = false;
    why = "expected the structural route on a strong graph";
  } else if (ps.counts_only) {
    // Too many points to materialise: the count is still checkable.
    if (ps.periodic_count != oracle.size()) {
      ok = false;
      why = "periodic count differs from the oracle cycle-state count";
    } else if (ps.periodic_count != (std::uint64_t{1} << l)) {
      ok = false;
      why = "periodic count is not 2^" + std::to_string(l);
    }
    suite.check(ok, [&] { return brief(g) + ": " + why; });
    return;
  } else if (ps.points != oracle) {
    ok = false;
    why = "periodic set differs from the oracle cycle states";
  } else if (ps.periodic_count != (std::uint64_t{1} << l)) {
    ok = false;
    why = "periodic count is not 2^" + std::to_string(l);
  }

  // The partition classes must rotate: the out-neighbourhood of each class is
  // exactly the next one around the ring.
  if (ok) {
    for (unsigned i = 0; ok && i < l; ++i)
      if (g.out_neighbourhood(ps.classes[i]) != ps.classes[(i + 1) % l]) {
        ok = false;
        why = "class " + std::to_string(i) + " does not map onto the next class";
      }
  }

  if (ok) {
    std::set<std::uint64_t> seen_periods;
    for (const std::uint64_t point : ps.points) {
      const std::uint64_t period = ps.periods.at(point);
      seen_periods.insert(period);
      if (l % period != 0) {
        ok = false;
        why = "period " + std::to_string(period) + " of point " +
              std::to_string(point) + " does not divide " + std::to_string(l);
        break;
      }
      if (period_of_point(f, Config(point, g.size())) != period) {
        ok = false;
        why = "orbit walk disagrees on the period of point " + std::to_string(point);
        break;
      }
    }
    if (ok) {
      const auto divisors = divisors_of(l);
      if (seen_periods != std::set<std::uint64_t>(divisors.begin(), divisors.end())) {
        ok = false;
        why = "not every divisor of " + std::to_string(l) + " appears as a period";
      }
    }
  }
  suite.check(ok, [&] { return brief(g) + ": " + why; });
}

}  // namespace

VerifyResult verify_dpartite(const VerifyOptions& o) {
  Suite suite("dpartite");
  const unsigned exhaustive_max = std::min(o.n, 4u);
  std::uint64_t exhaustive_strong = 0;
  for (unsigned n = 1; n <= exhaustive_max; ++n)
    for (std::uint64_t index = 0; index < graph_count(n); ++index) {
      const DirectedGraph g = graph_from_index(n, index);
      if (!is_strong(g) || loop_number(g) == 0) continue;
      ++exhaustive_strong;
      check_periodic_structure(suite, g);
    }

  Rng rng(o.seed);
  const unsigned nmax = std::max(1u, sampled_dim_max(suite, o.n));
  const std::uint64_t sampled = std::min<std::uint64_t>(o.samples, 200);
  for (std::uint64_t s = 0; s < sampled; ++s)
    check_periodic_structure(suite, random_strong_graph(rng, rng.range(1, nmax)));

  suite.stat("exhaustive_strong_graphs", exhaustive_strong);
  suite.stat("sampled_strong_graphs", sampled);
  return suite.finish();
}

// ---------------------------------------------------------------------------
// Fixed points and finite topologies
// ---------------------------------------------------------------------------

VerifyResult verify_topology(const VerifyOptions& o) {
  Suite suite("topology");
  const unsigned exhaustive_max = std::min(o.n, 4u);

  // Independent count of all topologies on an n-point set, by filtering every
  // family of subsets. Feasible through n = 4 (2^16 families).
  std::vector<std::uint64_t> all_topologies(exhaustive_max + 1, 0);
  for (unsigned n = 0; n <= exhaustive_max; ++n) {
    const std::uint64_t subsets = std::uint64_t{1} << n;
    const std::uint64_t families = std::uint64_t{1} << subsets;
    for (std::uint64_t fam = 0; fam < families; ++fam) {
      std::vector<std::uint64_t> sets;
      for (std::uint64_t s = 0; s < subsets; ++s)
        if (test_bit(fam, static_cast<unsigned>(s))) sets.push_back(s);
      if (is_topology(sets, n)) ++all_topologies[n];
    }
  }

  std::vector<std::set<std::vector<std::uint64_t>>> found(exhaustive_max + 1);
  std::uint64_t nontrivial_graphs = 0;
  for (unsigned n = 0; n <= exhaustive_max; ++n)
    for (std::uint64_t index = 0; index < graph_count(n); ++index) {
      const DirectedGraph g = graph_from_index(n, index);
      if (!is_nontrivial(g)) continue;
      ++nontrivial_graphs;
      const DisjunctiveNetwork f{g};
      const FixedPointSet fp = fixed_points(f);
      const TruthTableNetwork tt = to_truth_table(f);
      bool ok = true;
      std::string why;
      if (fp.method != Method::structural) {
        ok = false;
        why = "expected the structural route on a nontrivial graph";
      } else if (!is_topology(fp.topology)) {
        ok = false;
        why = "fixed-point family is not a topology";
      } else if (fp.topology.opens != oracle_fixed_set(tt)) {
        ok = false;
        why = "fixed points differ from the oracle";
      }
      if (ok) found[n].insert(fp.topology.opens);
      suite.check(ok, [&] { return brief(g) + ": " + why; });
    }

  // Every topology on n points must have appeared: its preorder graph is
  // nontrivial (reflexive) and realises it, so the counts must match the
  // independent enumeration. Each found topology must also round-trip.
  for (unsigned n = 0; n <= exhaustive_max; ++n) {
    suite.check(found[n].size() == all_topologies[n], [&] {
      return "n=" + std::to_string(n) + ": found " + std::to_string(found[n].size()) +
             " distinct fixed-point topologies, expected " +
             std::to_string(all_topologies[n]);
    });
    for (const auto& opens : found[n]) {
      Topology t{n, opens};
      const DirectedGraph g = graph_from_topology(t);
      const FixedPointSet fp = fixed_points(DisjunctiveNetwork{g});
      suite.check(fp.topology.opens == opens, [&] {
        return "n=" + std::to_string(n) +
               ": topology does not survive the graph round trip (" +
               std::to_string(opens.size()) + " opens)";
      });
    }
    suite.stat("topologies_n" + std::to_string(n), all_topologies[n]);
  }
  suite.stat("nontrivial_graphs", nontrivial_graphs);
  return suite.finish();
}

// ---------------------------------------------------------------------------
// Bijective monotone networks
// ---------------------------------------------------------------------------

VerifyResult verify_permutation(const VerifyOptions& o) {
  Suite suite("permutation");
  const unsigned exhaustive_max = std::min(o.n, 3u);
  for (unsigned n = 0; n <= exhaustive_max; ++n) {
    const std::uint64_t states = std::uint64_t{1} << n;
    // All monotone local functions, each a subset of states closed upward.
    std::vector<std::uint64_t> monotone_functions;
    for (std::uint64_t fun = 0; fun < (std::uint64_t{1} << states); ++fun) {
      bool monotone = true;
      for (std::uint64_t s = 0; monotone && s < states; ++s)
        for (unsigned i = 0; monotone && i < n; ++i)
          if (!test_bit(s, i) && test_bit(fun, static_cast<unsigned>(s)) &&
              !test_bit(fun, static_cast<unsigned>(s | bit(i))))
            monotone = false;
      if (monotone) monotone_functions.push_back(fun);
    }

    std::uint64_t networks = 1;
    for (unsigned i = 0; i < n; ++i) networks *= monotone_functions.size();
    std::uint64_t bijective_count = 0;
    for (std::uint64_t code = 0; code < networks; ++code) {
      std::uint64_t rest = code;
      std::vector<std::uint64_t> locals(n);
      for (unsigned i = 0; i < n; ++i) {
        locals[i] = monotone_functions[rest % monotone_functions.size()];
        rest /= monotone_functions.size();
      }
      std::vector<std::uint64_t> table(states, 0);
      for (std::uint64_t s = 0; s < states; ++s)
        for (unsigned i = 0; i < n; ++i)
          if (test_bit(locals[i], static_cast<unsigned>(s))) table[s] |= bit(i);
      const TruthTableNetwork f(n, std::move(table));
      const bool bij = is_bijective(f);
      if (bij) ++bijective_count;
      const VariablePermutation vp = is_permutation_of_variables(f);
      suite.check(bij == vp.flag, [&] {
        return brief(f) + ": bijective=" + (bij ? "yes" : "no") +
               " but permutation-of-variables=" + (vp.flag ? "yes" : "no");
      });
    }

    // The bijective monotone networks are exactly the n! variable permutations.
    std::uint64_t factorial = 1;
    for (unsigned i = 2; i <= n; ++i) factorial *= i;
    suite.check(bijective_count == factorial, [&] {
      return "n=" + std::to_string(n) + ": " + std::to_string(bijective_count) +
             " bijective monotone networks, expected " + std::to_string(factorial);
    });
    suite.stat("monotone_functions_n" + std::to_string(n), monotone_functions.size());
    suite.stat("networks_n" + std::to_string(n), networks);
  }
  return suite.finish();
}

// ---------------------------------------------------------------------------
// Extremal scans
// ---------------------------------------------------------------------------

namespace {

VerifyResult extremal_suite(const std::string& id, const VerifyOptions& o,
                            ExtremalScan (*scan)(unsigned, unsigned)) {
  Suite suite(id);
  const unsigned top = std::min(o.n, o.enum_cap);
  if (o.n > o.enum_cap) suite.stat("capped_at", top);
  for (unsigned n = 2; n <= top; ++n) {
    const ExtremalScan s = scan(n, o.enum_cap);
    suite.check(s.matches_theorem, [&] {
      std::string why = "n=" + std::to_string(n) + ": max " +
                        std::to_string(s.max_rank) + " vs predicted " +
                        std::to_string(s.expected_max);
      for (const std::string& m : s.mismatches) why += "; " + m;
      return why;
    });
    const std::string tag = "n" + std::to_string(n);
    suite.stat(tag + "_max_rank", s.max_rank);
    suite.stat(tag + "_achievers", s.achievers.size());
    suite.stat(tag + "_singular", s.singular_count);
    std::string shapes;
    for (const auto& [shape, count] : s.achiever_shapes)
      shapes += (shapes.empty() ? "" : ", ") + shape + " x" + std::to_string(count);
    if (!shapes.empty()) suite.stat(tag + "_shapes", shapes);
  }
  return suite.finish();
}

}  // namespace

VerifyResult verify_near_bijective(const VerifyOptions& o) {
  return extremal_suite("near-bijective", o, verify_singular_max);
}

VerifyResult verify_periodic_max(const VerifyOptions& o) {
  return extremal_suite("periodic-max", o, verify_singular_periodic_max);
}

VerifyResult verify_fixed_max(const VerifyOptions& o) {
  return extremal_suite("fixed-max", o, verify_singular_fixed_max);
}

// ---------------------------------------------------------------------------
// Low-rank constructions
// ---------------------------------------------------------------------------

VerifyResult verify_low_rank(const VerifyOptions& o) {
  Suite suite("low-rank");
  const unsigned top = sampled_dim_max(suite, o.n);
  for (unsigned n = 0; n <= top; ++n) {
    const unsigned p = smallest_prime_greater_than(n + 1);
    for (unsigned r = 1; r < p; ++r) {
      const DirectedGraph g = construct_disjunctive_with_rank(n, r);
      const DisjunctiveNetwork f{g};
      const TruthTableNetwork tt = to_truth_table(f, 32);
      bool ok = true;
      std::string why;
      if (g.size() != n) {
        ok = false;
        why = "construction has " + std::to_string(g.size()) + " vertices";
      } else if (!is_idempotent(tt)) {
        ok = false;
        why = "construction is not idempotent";
      } else {
        const std::uint64_t image = oracle_image_set(tt, 32).size();
        const std::uint64_t periodic = oracle_periodic_set(tt, 32).size();
        const std::uint64_t fixed = oracle_fixed_set(tt, 32).size();
        if (image != r || periodic != r || fixed != r) {
          ok = false;
          why = "oracle ranks (" + std::to_string(image) + ", " +
                std::to_string(periodic) + ", " + std::to_string(fixed) +
                ") differ from the target " + std::to_string(r);
        } else if (ranks(f, 32) != RankTriple{r, r, r}) {
          ok = false;
          why = "rank computation disagrees with the oracle";
        }
      }
      suite.check(ok, [&] {
        return "n=" + std::to_string(n) + " r=" + std::to_string(r) + ": " + why;
      });
    }
    // The first out-of-range rank must be rejected with the prime named.
    bool rejected = false;
    try {
      construct_disjunctive_with_rank(n, p);
    } catch (const InputError& e) {
      rejected = std::string(e.what()).find("p = " + std::to_string(p)) !=
                 std::string::npos;
    }
    suite.check(rejected, [&] {
      return "n=" + std::to_string(n) + ": rank " + std::to_string(p) +
             " must be rejected with p named";
    });
    suite.stat("p_n" + std::to_string(n), p);
  }
  return suite.finish();
}

// ---------------------------------------------------------------------------
// Rank-triple invariants
// ---------------------------------------------------------------------------

VerifyResult verify_rank_invariants(const VerifyOptions& o) {
  Suite suite("rank-invariants");
  Rng rng(o.seed);
  const unsigned nmax = std::max(1u, sampled_dim_max(suite, o.n));
  for (std::uint64_t s = 0; s < o.samples; ++s) {
    const unsigned n = rng.range(1, nmax);
    const unsigned kind = rng.range(0, 2);
    const DirectedGraph g = kind == 0   ? random_graph(rng, n)
                            : kind == 1 ? random_strong_graph(rng, n)
                                        : random_nontrivial_graph(rng, n);
    const DisjunctiveNetwork f{g};
    const TruthTableNetwork tt = to_truth_table(f, 32);
    const RankTriple t = ranks(f, 32);
    bool ok = true;
    std::string why;
    if (!(t.fixed_rank <= t.periodic_rank && t.periodic_rank <= t.image_rank)) {
      ok = false;
      why = "rank chain violated: (" + std::to_string(t.image_rank) + ", " +
            std::to_string(t.periodic_rank) + ", " + std::to_string(t.fixed_rank) + ")";
    } else if (is_idempotent(tt) !=
               (t.fixed_rank == t.periodic_rank && t.periodic_rank == t.image_rank)) {
      ok = false;
      why = "idempotence does not match rank equality";
    } else {
      // Periodic rank = image rank of f^(2^n), along two independent routes:
      // matrix powering of the graph and repeated squaring of the successor
      // array.
      const std::uint64_t states = std::uint64_t{1} << n;
      const DirectedGraph powered = mat_power(g, states);
      const std::uint64_t by_matrix =
          image_set(DisjunctiveNetwork{powered}, 32).size();
      std::vector<std::uint64_t> succ = tt.table();
      for (unsigned step = 0; step < n; ++step) {
        std::vector<std::uint64_t> next(succ.size());
        for (std::uint64_t x = 0; x < succ.size(); ++x) next[x] = succ[succ[x]];
        succ = std::move(next);
      }
      std::sort(succ.begin(), succ.end());
      succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
      const std::uint64_t by_squaring = succ.size();
      if (by_matrix != t.periodic_rank || by_squaring != t.periodic_rank) {
        ok = false;
        why = "image rank of the 2^n-th iterate (" + std::to_string(by_matrix) +
              " by matrix, " + std::to_string(by_squaring) +
              " by squaring) differs from the periodic rank " +
              std::to_string(t.periodic_rank);
      }
    }
    suite.check(ok, [&] { return brief(g) + ": " + why; });
  }
  suite.stat("samples", o.samples);
  suite.stat("max_n", nmax);
  return suite.finish();
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

const std::vector<std::string>& verify_ids() {
  static const std::vector<std::string> ids = {
      "char1",       "char2",      "sandwich",       "distance",
      "image-test",  "dpartite",   "topology",       "permutation",
      "near-bijective", "periodic-max", "fixed-max", "low-rank"};
  return ids;
}

VerifyResult verify_theorem(const std::string& id, const VerifyOptions& o) {
  if (id == "char1") return verify_char1(o);
  if (id == "char2") return verify_char2(o);
  if (id == "sandwich") return verify_sandwich(o);
  if (id == "distance") return verify_distance(o);
  if (id == "image-test") return verify_image_test(o);
  if (id == "dpartite") return verify_dpartite(o);
  if (id == "topology") return verify_topology(o);
  if (id == "permutation") return verify_permutation(o);
  if (id == "near-bijective") return verify_near_bijective(o);
  if (id == "periodic-max") return verify_periodic_max(o);
  if (id == "fixed-max") return verify_fixed_max(o);
  if (id == "low-rank") return verify_low_rank(o);
  std::string choices;
  for (const std::string& known : verify_ids())
    choices += (choices.empty() ? "" : ", ") + known;
  throw InputError("unknown theorem id '" + id + "' (choose one of: " + choices + ")");
}

}  // namespace disjnet
