#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "disjnet/errors.hpp"
#include "disjnet/graph.hpp"
#include "disjnet/random.hpp"
#include "support.hpp"

using namespace disjnet;
using testsupport::digraph;
using testsupport::throws_containing;

TEST_CASE("construction and basic accessors") {
  const auto g = digraph(3, {{0, 1}, {1, 2}, {2, 0}, {0, 0}});
  CHECK(g.size() == 3);
  CHECK(g.arc_count() == 4);
  CHECK(g.has_arc(0, 1));
  CHECK(g.has_arc(0, 0));
  CHECK_FALSE(g.has_arc(1, 0));
  CHECK(g.out_degree(0) == 2);
  CHECK(g.in_degree(0) == 2);  // from 2 and the loop
  CHECK(g.out_row(0) == 0b011);
  CHECK(g.in_row(0) == 0b101);
  CHECK(g.vertex_mask() == 0b111);

  // Neighbourhood of a vertex set is the union of the member rows.
  CHECK(g.out_neighbourhood(0b101) == (g.out_row(0) | g.out_row(2)));
  CHECK(g.in_neighbourhood(0b010) == g.in_row(1));
  CHECK(g.out_neighbourhood(0) == 0);

  // edge_list is sorted by source then target and round-trips.
  const auto arcs = g.edge_list();
  const std::vector<std::pair<unsigned, unsigned>> want = {
      {0, 0}, {0, 1}, {1, 2}, {2, 0}};
  CHECK(arcs == want);
  CHECK(DirectedGraph::from_edge_list(3, arcs) == g);
}

TEST_CASE("from_out_rows adopts rows and derives the transpose") {
  const auto g = DirectedGraph::from_out_rows({0b10, 0b01});
  CHECK(g == cycle_graph(2));
  CHECK(throws_containing<InputError>(
      [] { DirectedGraph::from_out_rows({0b100, 0b01}); }, "row"));
}

TEST_CASE("vertex count limits") {
  CHECK(DirectedGraph(64).size() == 64);
  CHECK_THROWS_AS(DirectedGraph(65), InputError);
  CHECK(throws_containing<InputError>(
      [] { DirectedGraph::from_edge_list(2, {{0, 2}}); }, "(0, 2)"));
  CHECK_THROWS_AS(DirectedGraph::from_edge_list(2, {{5, 0}}), InputError);
  const auto big = DirectedGraph(64);
  CHECK(big.vertex_mask() == ~std::uint64_t{0});
}

TEST_CASE("named families") {
  CHECK(cycle_graph(1) == digraph(1, {{0, 0}}));
  CHECK(cycle_graph(3) == digraph(3, {{0, 1}, {1, 2}, {2, 0}}));
  CHECK_THROWS_AS(cycle_graph(0), InputError);

  CHECK(chorded_cycle(3, 2) == digraph(3, {{0, 1}, {1, 2}, {2, 0}, {0, 2}}));
  CHECK(chorded_cycle(4, 0) ==
        digraph(4, {{0, 0}, {0, 1}, {1, 2}, {2, 3}, {3, 0}}));
  CHECK(chorded_cycle(3, 1) == cycle_graph(3));  // chord duplicates a cycle arc
  CHECK_THROWS_AS(chorded_cycle(3, 3), InputError);

  CHECK(link_of_cycles(1, 1) == digraph(2, {{0, 0}, {0, 1}, {1, 1}}));
  CHECK(link_of_cycles(2, 1) ==
        digraph(3, {{0, 1}, {1, 0}, {2, 2}, {0, 2}}));
  CHECK_THROWS_AS(link_of_cycles(0, 1), InputError);

  CHECK(g_graph(2) == link_of_cycles(1, 1));
  CHECK(g_graph(4) ==
        digraph(4, {{0, 0}, {0, 1}, {1, 1}, {2, 2}, {3, 3}}));
  CHECK_THROWS_AS(g_graph(1), InputError);

  CHECK(transitive_tournament(2) == g_graph(2));
  CHECK(transitive_tournament(3) ==
        digraph(3, {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}}));
  CHECK(transitive_tournament(0) == DirectedGraph(0));

  CHECK(empty_graph(3).arc_count() == 0);
  CHECK(empty_graph(0).size() == 0);

  const auto u = disjoint_union(cycle_graph(2), g_graph(2));
  CHECK(u == digraph(4, {{0, 1}, {1, 0}, {2, 2}, {2, 3}, {3, 3}}));
}

TEST_CASE("make_graph dispatch validates parameter counts") {
  CHECK(make_graph(Family::cycle, {3}) == cycle_graph(3));
  CHECK(make_graph(Family::chorded_cycle, {6, 2}) == chorded_cycle(6, 2));
  CHECK(make_graph(Family::link_of_cycles, {1, 2}) == link_of_cycles(1, 2));
  CHECK(make_graph(Family::g_n, {4}) == g_graph(4));
  CHECK(make_graph(Family::transitive_tournament, {2}) == transitive_tournament(2));
  CHECK(make_graph(Family::empty, {5}) == empty_graph(5));
  CHECK_THROWS_AS(make_graph(Family::cycle, {}), InputError);
  CHECK_THROWS_AS(make_graph(Family::cycle, {1, 2}), InputError);
  CHECK_THROWS_AS(make_graph(Family::g_n, {1}), InputError);
}

TEST_CASE("strongly connected components") {
  const auto g = digraph(4, {{0, 1}, {1, 2}, {2, 0}, {3, 1}});
  const auto d = scc(g);
  REQUIRE(d.components.size() == 2);
  CHECK(d.components[0] == bit(3));       // topological order: the feeder first
  CHECK(d.components[1] == 0b0111);
  CHECK(d.component_of == std::vector<unsigned>{1, 1, 1, 0});
  CHECK(d.condensation.size() == 2);
  CHECK(d.condensation.edge_list() ==
        std::vector<std::pair<unsigned, unsigned>>{{0, 1}});
  CHECK(d.topo_order == std::vector<unsigned>{0, 1});
}

TEST_CASE("scc invariants on random graphs") {
  Rng rng(7);
  for (int t = 0; t < 60; ++t) {
    const auto g = random_graph(rng, rng.range(0, 8));
    const auto d = scc(g);
    std::uint64_t all = 0;
    for (auto c : d.components) {
      CHECK((all & c) == 0);  // disjoint
      all |= c;
    }
    CHECK(all == g.vertex_mask());
    for (const auto& [i, j] : d.condensation.edge_list())
      CHECK(i < j);  // condensation arcs respect the topological order
    for (const auto& [u, v] : g.edge_list()) {
      const unsigned cu = d.component_of[u], cv = d.component_of[v];
      if (cu != cv) CHECK(d.condensation.has_arc(cu, cv));
    }
  }
}

TEST_CASE("strongness, loop number, cycle covers vs. brute force") {
  // Exhaustive over every digraph on 3 vertices.
  for (std::uint64_t idx = 0; idx < 512; ++idx) {
    const auto g = testsupport::graph_from_index(3, idx);
    CHECK(is_strong(g) == testsupport::brute_is_strong(g));
    CHECK(loop_number(g) == testsupport::brute_loop_number(g));
    const auto cover = coverable_by_cycles(g);
    CHECK(cover.flag == testsupport::brute_cycle_cover(g));
    if (cover.flag) {
      REQUIRE(cover.permutation.has_value());
      const auto& p = *cover.permutation;
      std::vector<bool> hit(3, false);
      for (unsigned v = 0; v < 3; ++v) {
        CHECK(g.has_arc(v, p[v]));
        hit[p[v]] = true;
      }
      CHECK(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
    }
  }
  // Sampled at a larger size.
  Rng rng(11);
  for (int t = 0; t < 40; ++t) {
    const auto g = random_graph(rng, 6);
    CHECK(is_strong(g) == testsupport::brute_is_strong(g));
    CHECK(loop_number(g) == testsupport::brute_loop_number(g));
    CHECK(coverable_by_cycles(g).flag == testsupport::brute_cycle_cover(g));
  }
}

TEST_CASE("loop number on named graphs") {
  CHECK(loop_number(cycle_graph(3)) == 3);
  CHECK(loop_number(cycle_graph(1)) == 1);
  CHECK(loop_number(digraph(2, {{0, 1}})) == 0);  // acyclic
  CHECK(loop_number(DirectedGraph(0)) == 0);
  CHECK(loop_number(disjoint_union(cycle_graph(2), cycle_graph(3))) == 1);
  CHECK(loop_number(disjoint_union(cycle_graph(2), cycle_graph(4))) == 2);
  CHECK(loop_number(chorded_cycle(6, 3)) == 2);  // cycles of lengths 6 and 4
  CHECK(loop_number(chorded_cycle(3, 2)) == 1);
  CHECK(loop_number(g_graph(4)) == 1);
}

TEST_CASE("primitivity") {
  CHECK_FALSE(is_primitive(cycle_graph(3)));     // loop number 3
  CHECK(is_primitive(chorded_cycle(3, 2)));
  CHECK(is_primitive(cycle_graph(1)));
  CHECK_FALSE(is_primitive(digraph(2, {{0, 1}})));  // not strong
}

TEST_CASE("partition classes of a strong graph") {
  const auto c4 = partition_classes(cycle_graph(4));
  CHECK(c4 == std::vector<std::uint64_t>{bit(0), bit(1), bit(2), bit(3)});

  // Loop number 1 collapses to a single class.
  CHECK(partition_classes(chorded_cycle(3, 2)) ==
        std::vector<std::uint64_t>{0b111});

  // A blown-up 2-cycle: classes {0, 2} and {1, 3}.
  const auto b = digraph(4, {{0, 1}, {0, 3}, {2, 1}, {2, 3},
                             {1, 0}, {1, 2}, {3, 0}, {3, 2}});
  const auto classes = partition_classes(b);
  REQUIRE(classes.size() == 2);
  CHECK(classes[0] == 0b0101);  // the class of vertex 0
  CHECK(classes[1] == 0b1010);
  for (unsigned i = 0; i < classes.size(); ++i)
    CHECK(b.out_neighbourhood(classes[i]) == classes[(i + 1) % classes.size()]);

  CHECK_THROWS_AS(partition_classes(digraph(2, {{0, 1}})), PreconditionError);
  CHECK_THROWS_AS(partition_classes(DirectedGraph(1)), PreconditionError);
}

TEST_CASE("structural predicates") {
  const auto g = digraph(3, {{0, 1}, {1, 1}});
  const auto s = structural_predicates(g);
  CHECK_FALSE(s.is_strong);
  CHECK_FALSE(s.is_nontrivial);
  CHECK_FALSE(s.is_reflexive);
  CHECK(s.sources == 0b101);  // vertices 0 and 2 have no in-arcs
  CHECK(s.sinks == 0b100);    // vertex 2 has no out-arcs
  CHECK(s.in_degrees == std::vector<unsigned>{0, 2, 0});

  const auto t = structural_predicates(transitive_tournament(3));
  CHECK(t.is_reflexive);
  CHECK(t.is_nontrivial);
  CHECK_FALSE(t.is_strong);

  CHECK(structural_predicates(cycle_graph(2)).is_strong);
  CHECK(structural_predicates(cycle_graph(2)).is_nontrivial);
}

TEST_CASE("nontriviality means every vertex lies on a cycle") {
  CHECK(is_nontrivial(cycle_graph(4)));
  CHECK(is_nontrivial(g_graph(3)));
  CHECK_FALSE(is_nontrivial(digraph(2, {{0, 1}})));
  CHECK_FALSE(is_nontrivial(disjoint_union(cycle_graph(2), empty_graph(1))));
  CHECK(is_nontrivial(DirectedGraph(0)));
}

TEST_CASE("weak components") {
  const auto g = disjoint_union(disjoint_union(cycle_graph(2), empty_graph(1)),
                                g_graph(2));
  CHECK(weak_components(g) ==
        std::vector<std::uint64_t>{0b00011, 0b00100, 0b11000});
  // Opposite arcs join components.
  CHECK(weak_components(digraph(2, {{1, 0}})).size() == 1);
}

TEST_CASE("component shape recognition") {
  auto shape_of = [](const DirectedGraph& g) {
    return classify_component(g, g.vertex_mask());
  };

  auto s = shape_of(cycle_graph(5));
  CHECK(s.shape == ComponentShape::cycle);
  CHECK(s.a == 5);

  s = shape_of(chorded_cycle(6, 2));
  CHECK(s.shape == ComponentShape::chorded_cycle);
  CHECK(s.a == 6);
  CHECK(s.b == 2);

  s = shape_of(chorded_cycle(2, 0));
  CHECK(s.shape == ComponentShape::chorded_cycle);
  CHECK(s.a == 2);
  CHECK(s.b == 0);

  s = shape_of(link_of_cycles(2, 3));
  CHECK(s.shape == ComponentShape::link_of_cycles);
  CHECK(s.a == 2);
  CHECK(s.b == 3);

  s = shape_of(link_of_cycles(1, 1));
  CHECK(s.shape == ComponentShape::link_of_cycles);
  CHECK(s.a == 1);
  CHECK(s.b == 1);

  // Relabelled copies classify identically: cycle 2 -> 0 -> 3 -> 1 -> 2 with
  // the chord (2, 3) jumping two steps ahead.
  const auto relabelled = digraph(4, {{2, 0}, {0, 3}, {3, 1}, {1, 2}, {2, 3}});
  s = shape_of(relabelled);
  CHECK(s.shape == ComponentShape::chorded_cycle);
  CHECK(s.a == 4);
  CHECK(s.b == 2);

  // Two cycles sharing a single vertex have the same arc count as a chorded
  // cycle but no spanning cycle.
  const auto shared = digraph(4, {{3, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 3}});
  CHECK(shape_of(shared).shape == ComponentShape::other);

  const auto permuted_link = digraph(4, {{2, 2}, {0, 1}, {1, 3}, {3, 0}, {2, 0}});
  s = shape_of(permuted_link);  // B_{1,3} with scrambled labels
  CHECK(s.shape == ComponentShape::link_of_cycles);
  CHECK(s.a == 1);
  CHECK(s.b == 3);

  // A figure-eight (two triangles sharing a vertex) has the right arc count
  // for a chorded cycle but the wrong degree profile.
  const auto eight = digraph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
  CHECK(shape_of(eight).shape == ComponentShape::other);

  CHECK(shape_of(digraph(2, {{0, 1}})).shape == ComponentShape::other);
  CHECK(shape_of(transitive_tournament(3)).shape == ComponentShape::other);

  // Per-component classification inside a union.
  const auto u = disjoint_union(cycle_graph(2), link_of_cycles(1, 1));
  const auto comps = weak_components(u);
  REQUIRE(comps.size() == 2);
  CHECK(classify_component(u, comps[0]).shape == ComponentShape::cycle);
  CHECK(classify_component(u, comps[1]).shape == ComponentShape::link_of_cycles);
}

TEST_CASE("near-cyclic recognition") {
  CHECK_FALSE(is_near_cyclic(cycle_graph(3)).flag);  // no core component
  CHECK_FALSE(is_near_cyclic(empty_graph(2)).flag);

  auto r = is_near_cyclic(link_of_cycles(1, 1));
  REQUIRE(r.flag);
  CHECK(r.witness->describe() == "link_of_cycles:1,1");

  r = is_near_cyclic(disjoint_union(link_of_cycles(1, 1), cycle_graph(2)));
  REQUIRE(r.flag);
  CHECK(r.witness->describe() == "link_of_cycles:1,1+cycle:2");

  r = is_near_cyclic(chorded_cycle(6, 2));
  REQUIRE(r.flag);
  CHECK(r.witness->core == ComponentShape::chorded_cycle);
  CHECK(r.witness->a == 6);
  CHECK(r.witness->b == 2);

  r = is_near_cyclic(g_graph(4));
  REQUIRE(r.flag);
  CHECK(r.witness->describe() == "link_of_cycles:1,1+cycle:1+cycle:1");

  // Two cores, or a core plus a non-cycle component, do not qualify.
  CHECK_FALSE(
      is_near_cyclic(disjoint_union(link_of_cycles(1, 1), link_of_cycles(1, 1)))
          .flag);
  CHECK_FALSE(
      is_near_cyclic(disjoint_union(chorded_cycle(3, 2), digraph(2, {{0, 1}})))
          .flag);
}

TEST_CASE("cycle covers of named graphs") {
  CHECK(coverable_by_cycles(cycle_graph(4)).flag);
  CHECK(coverable_by_cycles(DirectedGraph(0)).flag);  // empty cover
  CHECK_FALSE(coverable_by_cycles(digraph(2, {{0, 1}})).flag);
  CHECK(coverable_by_cycles(link_of_cycles(1, 1)).flag);  // the loops cover
}
