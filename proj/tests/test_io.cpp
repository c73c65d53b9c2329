#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "disjnet/dynamics.hpp"
#include "disjnet/errors.hpp"
#include "disjnet/graph.hpp"
#include "disjnet/io.hpp"
#include "disjnet/network.hpp"
#include "disjnet/ranks.hpp"
#include "disjnet/serialize.hpp"
#include "support.hpp"

using namespace disjnet;
using testsupport::digraph;
using testsupport::throws_containing;

TEST_CASE("edge list parsing") {
  std::istringstream in(
      "# a comment line\n"
      "3\n"
      "\n"
      "0 1  # trailing comment\n"
      "1 2\n"
      "2 0\n");
  const auto g = read_edge_list(in);
  CHECK(g == cycle_graph(3));
}

TEST_CASE("edge list parse errors carry line numbers") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
  };
  CHECK(throws_containing<InputError>([&] { parse(""); }, "vertex count"));
  CHECK(throws_containing<InputError>([&] { parse("x\n"); }, "line 1"));
  CHECK(throws_containing<InputError>([&] { parse("2\n0\n"); }, "line 2"));
  CHECK(throws_containing<InputError>([&] { parse("2\n0 1 junk\n"); }, "line 2"));
  CHECK(throws_containing<InputError>([&] { parse("# c\n2\n0 1\n0 5\n"); },
                                      "(0, 5)"));  // endpoint out of range
}

TEST_CASE("edge list writing round-trips") {
  const auto g = digraph(4, {{0, 0}, {0, 1}, {2, 3}});
  std::ostringstream out;
  write_edge_list(out, g);
  std::istringstream in(out.str());
  CHECK(read_edge_list(in) == g);
  CHECK(to_edge_list(g) == out.str());

  std::istringstream empty_in(to_edge_list(DirectedGraph(0)));
  CHECK(read_edge_list(empty_in) == DirectedGraph(0));
}

TEST_CASE("missing files are reported") {
  CHECK(throws_containing<InputError>(
      [] { read_edge_list_file("/nonexistent/graph.txt"); }, "cannot open"));
}

TEST_CASE("dot export") {
  const auto g = digraph(3, {{0, 1}});
  const auto dot = to_dot(g);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("0 -> 1") != std::string::npos);
  // Isolated vertices survive as bare node statements.
  CHECK(dot.find("2;") != std::string::npos);
}

TEST_CASE("family grammar") {
  CHECK(parse_family_spec("g_n:4") == g_graph(4));
  CHECK(parse_family_spec("cycle:3") == cycle_graph(3));
  CHECK(parse_family_spec("c:3") == cycle_graph(3));
  CHECK(parse_family_spec("chorded_cycle:6,2") == chorded_cycle(6, 2));
  CHECK(parse_family_spec("a:6,2") == chorded_cycle(6, 2));
  CHECK(parse_family_spec("link_of_cycles:1,2") == link_of_cycles(1, 2));
  CHECK(parse_family_spec("b:1,1+cycle:2") ==
        disjoint_union(link_of_cycles(1, 1), cycle_graph(2)));
  CHECK(parse_family_spec("t:2") == transitive_tournament(2));
  CHECK(parse_family_spec("e:3") == empty_graph(3));
  CHECK(parse_family_spec("g:5") == g_graph(5));
  CHECK(parse_family_spec("c:1+c:1+c:1") ==
        disjoint_union(disjoint_union(cycle_graph(1), cycle_graph(1)),
                       cycle_graph(1)));

  CHECK(throws_containing<InputError>([] { parse_family_spec("ring:4"); },
                                      "cycle"));  // the error lists valid names
  CHECK_THROWS_AS(parse_family_spec(""), InputError);
  CHECK_THROWS_AS(parse_family_spec("cycle"), InputError);
  CHECK_THROWS_AS(parse_family_spec("cycle:"), InputError);
  CHECK_THROWS_AS(parse_family_spec("cycle:3,4"), InputError);
  CHECK_THROWS_AS(parse_family_spec("cycle:x"), InputError);
  CHECK_THROWS_AS(parse_family_spec("cycle:3+"), InputError);
  CHECK_THROWS_AS(parse_family_spec("b:1"), InputError);
}

TEST_CASE("json round trips for core value types") {
  const auto g = digraph(3, {{0, 1}, {2, 2}});
  nlohmann::json jg = g;
  CHECK(jg.at("n") == 3);
  CHECK(jg.dump().find("arcs") != std::string::npos);
  CHECK(jg.get<DirectedGraph>() == g);

  const auto f = to_truth_table(DisjunctiveNetwork(g_graph(2)));
  nlohmann::json jf = f;
  CHECK(jf.at("table") == std::vector<std::uint64_t>{0, 3, 2, 3});
  CHECK(jf.get<TruthTableNetwork>() == f);

  Topology t;
  t.n = 2;
  t.opens = {0, 0b10, 0b11};
  nlohmann::json jt = t;
  // Opens are written as sorted vertex arrays.
  CHECK(jt == nlohmann::json::parse("[[], [1], [0, 1]]"));
  CHECK(jt.get<Topology>() == t);

  const RankTriple r{6, 2, 2};
  nlohmann::json jr = r;
  CHECK(jr.at("image") == 6);
  CHECK(jr.get<RankTriple>() == r);
}
