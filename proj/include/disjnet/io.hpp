#pragma once

#include <iosfwd>
#include <string>

#include "disjnet/graph.hpp"

namespace disjnet {

/// Edge-list text format: first meaningful line is the vertex count, then one
/// "i j" arc per line, 0-based. '#' starts a comment (whole line or trailing);
/// blank lines are skipped. Parse errors carry the 1-based line number.
DirectedGraph read_edge_list(std::istream& in);
DirectedGraph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const DirectedGraph& g);
std::string to_edge_list(const DirectedGraph& g);

/// DOT export with plain integer node names; isolated vertices appear as bare
/// node statements so the vertex count survives the round trip.
std::string to_dot(const DirectedGraph& g);

/// Family mini-grammar: "name:params" terms joined with '+' for disjoint
/// union, e.g. "g_n:4", "b:1,1+cycle:2", "chorded_cycle:6,2". Accepted names:
/// cycle/c, chorded_cycle/a, link_of_cycles/b, g_n/g, transitive_tournament/t,
/// empty/e.
DirectedGraph parse_family_spec(const std::string& spec);

}  // namespace disjnet
