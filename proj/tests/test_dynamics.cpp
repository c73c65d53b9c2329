#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "disjnet/dynamics.hpp"
#include "disjnet/errors.hpp"
#include "disjnet/graph.hpp"
#include "disjnet/oracle.hpp"
#include "disjnet/random.hpp"
#include "support.hpp"

using namespace disjnet;
using testsupport::digraph;
using testsupport::throws_containing;

TEST_CASE("maximal preimages and the image membership test") {
  const DisjunctiveNetwork f(g_graph(2));

  // State 1 (vertex 0 alone) is not an image point: its maximal candidate
  // preimage is empty and maps to 0 instead.
  CHECK(maximal_preimage(f, Config(1, 2)) == Config(0, 2));
  CHECK_FALSE(is_image_point(f, Config(1, 2)));
  CHECK(is_image_point(f, Config(0, 2)));
  CHECK(is_image_point(f, Config(2, 2)));
  CHECK(is_image_point(f, Config(3, 2)));
  CHECK(image_set(f) == std::vector<std::uint64_t>{0, 2, 3});

  // For an image point the maximal preimage is the union of all preimages,
  // checked directly on every graph with 3 vertices.
  for (std::uint64_t idx = 0; idx < 512; ++idx) {
    const auto g = testsupport::graph_from_index(3, idx);
    const DisjunctiveNetwork net(g);
    for (std::uint64_t x = 0; x < 8; ++x) {
      std::uint64_t preimage_union = 0;
      bool in_image = false;
      for (std::uint64_t y = 0; y < 8; ++y)
        if (eval_disjunctive_bits(g, y) == x) {
          in_image = true;
          preimage_union |= y;
        }
      CHECK(is_image_point(net, Config(x, 3)) == in_image);
      if (in_image)
        CHECK(maximal_preimage(net, Config(x, 3)).bits() == preimage_union);
    }
    const auto img = image_set(net);
    CHECK(img == oracle_image_set(to_truth_table(net)));
    CHECK(std::is_sorted(img.begin(), img.end()));
  }
}

TEST_CASE("orbit transients and periods") {
  const DisjunctiveNetwork a32(chorded_cycle(3, 2));
  // {0} -> {1,2} -> {0,2} -> {0,1,2} which is fixed: transient 3.
  CHECK(transient_length(a32, Config(1, 3)) == 3);
  CHECK(transient_length(a32, Config(0b111, 3)) == 0);
  CHECK(period_of_point(a32, Config(0b111, 3)) == 1);
  CHECK(throws_containing<PreconditionError>(
      [&] { period_of_point(a32, Config(1, 3)); }, "not periodic"));

  const DisjunctiveNetwork c4(cycle_graph(4));
  CHECK(period_of_point(c4, Config(0b0001, 4)) == 4);
  CHECK(period_of_point(c4, Config(0b0101, 4)) == 2);
  CHECK(period_of_point(c4, Config(0, 4)) == 1);
  CHECK(period_of_point(c4, Config(0b1111, 4)) == 1);
  CHECK(transient_length(c4, Config(0b0011, 4)) == 0);

  // The iteration is memory-light, so it runs far beyond the scan cap.
  const DisjunctiveNetwork c30(cycle_graph(30));
  CHECK(period_of_point(c30, Config(1, 30)) == 30);
}

TEST_CASE("periodic structure of a strong graph") {
  const auto p = periodic_structure(DisjunctiveNetwork(cycle_graph(4)));
  CHECK(p.method == Method::structural);
  CHECK(p.loop_number == 4);
  CHECK(p.counts_only == false);
  CHECK(p.classes ==
        std::vector<std::uint64_t>{bit(0), bit(1), bit(2), bit(3)});
  CHECK(p.periodic_count == 16);
  REQUIRE(p.points.size() == 16);
  for (std::uint64_t s = 0; s < 16; ++s) CHECK(p.points[s] == s);
  CHECK(p.periods.at(0) == 1);
  CHECK(p.periods.at(0b1111) == 1);
  CHECK(p.periods.at(0b0001) == 4);
  CHECK(p.periods.at(0b0101) == 2);
  CHECK(p.periods.at(0b0011) == 4);

  // Every divisor of the loop number occurs as a period.
  std::vector<std::uint64_t> seen;
  for (const auto& [point, period] : p.periods) seen.push_back(period);
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  CHECK(seen == std::vector<std::uint64_t>{1, 2, 4});
}

TEST_CASE("periodic structure falls back to a scan off the strong case") {
  const auto g = digraph(3, {{0, 1}, {1, 0}, {2, 0}});
  const auto p = periodic_structure(DisjunctiveNetwork(g));
  CHECK(p.method == Method::brute_force);
  CHECK(p.loop_number == 2);
  CHECK(p.points == std::vector<std::uint64_t>{0, 1, 2, 3});
  CHECK(p.periods.at(0) == 1);
  CHECK(p.periods.at(1) == 2);
  CHECK(p.periods.at(2) == 2);
  CHECK(p.periods.at(3) == 1);

  CHECK_THROWS_AS(periodic_structure(DisjunctiveNetwork(digraph(2, {{0, 1}}))),
                  PreconditionError);
}

TEST_CASE("periodic structure beyond the materialisation caps") {
  // Counts-only mode when the structural point count exceeds the limit.
  const auto capped =
      periodic_structure(DisjunctiveNetwork(cycle_graph(10)), 20, 100);
  CHECK(capped.counts_only);
  CHECK(capped.periodic_count == 1024);
  CHECK(capped.classes.size() == 10);
  CHECK(capped.points.empty());
  CHECK(capped.periods.empty());

  // The structural route never scans the state space, so it works far beyond
  // the brute-force cap.
  const auto big = periodic_structure(DisjunctiveNetwork(cycle_graph(30)));
  CHECK(big.counts_only);
  CHECK(big.periodic_count == std::uint64_t{1} << 30);

  CHECK_THROWS_AS(periodic_structure(DisjunctiveNetwork(cycle_graph(64))),
                  ResourceError);
}

TEST_CASE("periodic structure agrees with the oracle on strong samples") {
  Rng rng(21);
  for (int t = 0; t < 25; ++t) {
    const auto g = random_strong_graph(rng, rng.range(1, 7));
    const DisjunctiveNetwork f(g);
    const auto p = periodic_structure(f);
    REQUIRE(p.method == Method::structural);
    CHECK(p.points == oracle_periodic_set(to_truth_table(f)));
    CHECK(p.periodic_count == std::uint64_t{1} << p.loop_number);
    for (const auto& [point, period] : p.periods) {
      CHECK(p.loop_number % period == 0);
      CHECK(period_of_point(f, Config(point, g.size())) == period);
    }
  }
}

TEST_CASE("reachability up-sets") {
  const auto path = digraph(3, {{0, 1}, {1, 2}});
  CHECK(upset_closure(path, bit(0)) == 0b111);
  CHECK(upset_closure(path, bit(2)) == 0b100);
  CHECK(upset_closure(path, 0) == 0);
  CHECK(upset_closure(cycle_graph(3), bit(1)) == 0b111);
}

TEST_CASE("finite topology axioms") {
  CHECK(is_topology({0b00, 0b01, 0b11}, 2));
  CHECK(is_topology({0b00, 0b01, 0b10, 0b11}, 2));  // the discrete topology
  CHECK(is_topology({0, 0b111}, 3));
  CHECK_FALSE(is_topology({0b00, 0b01}, 2));           // full set missing
  CHECK_FALSE(is_topology({0b01, 0b11}, 2));           // empty set missing
  CHECK_FALSE(is_topology({0, 0b001, 0b010, 0b111}, 3));  // union missing
  CHECK_FALSE(is_topology({0, 0b011, 0b101, 0b111}, 3));  // intersection missing
  CHECK(is_topology({0}, 0));
  CHECK_THROWS_AS(is_topology({0b100, 0, 0b11}, 2), InputError);

  Topology t;
  t.n = 2;
  t.opens = {0b00, 0b01, 0b11};
  CHECK(is_topology(t));
}

TEST_CASE("fixed points of nontrivial graphs form a topology") {
  const auto fp = fixed_points(DisjunctiveNetwork(transitive_tournament(2)));
  CHECK(fp.method == Method::structural);
  CHECK(fp.topology.n == 2);
  CHECK(fp.topology.opens == std::vector<std::uint64_t>{0, 0b10, 0b11});
  CHECK(is_topology(fp.topology));

  const auto c4 = fixed_points(DisjunctiveNetwork(cycle_graph(4)));
  CHECK(c4.method == Method::structural);
  CHECK(c4.topology.opens == std::vector<std::uint64_t>{0, 0b1111});

  const auto t3 = fixed_points(DisjunctiveNetwork(transitive_tournament(3)));
  CHECK(t3.topology.opens ==
        std::vector<std::uint64_t>{0, 0b100, 0b110, 0b111});

  const auto empty_dim = fixed_points(DisjunctiveNetwork(DirectedGraph(0)));
  CHECK(empty_dim.topology.opens == std::vector<std::uint64_t>{0});

  // A graph with a vertex off every cycle takes the scan route, and its fixed
  // points need not form a topology.
  const auto arrow = fixed_points(DisjunctiveNetwork(digraph(2, {{0, 1}})));
  CHECK(arrow.method == Method::brute_force);
  CHECK(arrow.topology.opens == std::vector<std::uint64_t>{0});
  CHECK_FALSE(is_topology(arrow.topology));

  // The enumeration refuses to materialise more sets than allowed.
  CHECK_THROWS_AS(fixed_points(DisjunctiveNetwork(identity_matrix(5)), 20, 10),
                  ResourceError);
  CHECK(fixed_points(DisjunctiveNetwork(identity_matrix(5))).topology.opens.size() ==
        32);
}

TEST_CASE("fixed points match the oracle on samples") {
  Rng rng(23);
  for (int t = 0; t < 40; ++t) {
    const auto g = random_nontrivial_graph(rng, rng.range(0, 7));
    const DisjunctiveNetwork f(g);
    const auto fp = fixed_points(f);
    CHECK(fp.method == Method::structural);
    CHECK(fp.topology.opens == oracle_fixed_set(to_truth_table(f)));
    CHECK(is_topology(fp.topology));
  }
}

TEST_CASE("recovering a graph from its fixed-point topology") {
  Topology t;
  t.n = 2;
  t.opens = {0, 0b10, 0b11};
  CHECK(graph_from_topology(t) == transitive_tournament(2));

  Topology bad;
  bad.n = 2;
  bad.opens = {0, 0b01};
  CHECK_THROWS_AS(graph_from_topology(bad), InputError);

  // Round trip: the recovered graph has exactly the prescribed fixed points.
  Rng rng(29);
  for (int t2 = 0; t2 < 30; ++t2) {
    const auto g = random_nontrivial_graph(rng, rng.range(0, 6));
    const auto fp = fixed_points(DisjunctiveNetwork(g));
    const auto h = graph_from_topology(fp.topology);
    CHECK(fixed_points(DisjunctiveNetwork(h)).topology == fp.topology);
  }
}
