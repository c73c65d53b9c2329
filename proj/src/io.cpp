#include "disjnet/io.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <sstream>

#include "disjnet/errors.hpp"

namespace disjnet {

namespace {

std::string strip_comment(const std::string& line) {
  const auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

}  // namespace

DirectedGraph read_edge_list(std::istream& in) {
  std::optional<unsigned> n;
  std::vector<std::pair<unsigned, unsigned>> arcs;
  std::string line;
  unsigned line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = strip_comment(line);
    if (blank(body)) continue;
    std::istringstream fields(body);
    if (!n) {
      unsigned count = 0;
      if (!(fields >> count))
        throw InputError("line " + std::to_string(line_no) +
                         ": expected the vertex count");
      std::string extra;
      if (fields >> extra)
        throw InputError("line " + std::to_string(line_no) +
                         ": unexpected text after the vertex count: '" + extra + "'");
      n = count;
      continue;
    }
    unsigned i = 0, j = 0;
    if (!(fields >> i >> j))
      throw InputError("line " + std::to_string(line_no) +
                       ": expected an arc as two integers");
    std::string extra;
    if (fields >> extra)
      throw InputError("line " + std::to_string(line_no) +
                       ": unexpected text after the arc: '" + extra + "'");
    arcs.emplace_back(i, j);
  }
  if (!n) throw InputError("edge-list input is empty: the vertex count is missing");
  return DirectedGraph::from_edge_list(*n, arcs);
}

DirectedGraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const DirectedGraph& g) {
  out << g.size() << "\n";
  for (auto [i, j] : g.edge_list()) out << i << " " << j << "\n";
}

std::string to_edge_list(const DirectedGraph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

std::string to_dot(const DirectedGraph& g) {
  std::ostringstream out;
  out << "digraph {\n";
  std::uint64_t isolated = g.vertex_mask();
  for (auto [i, j] : g.edge_list()) {
    out << "  " << i << " -> " << j << ";\n";
    isolated &= ~(bit(i) | bit(j));
  }
  for_each_bit(isolated, [&](unsigned v) { out << "  " << v << ";\n"; });
  out << "}\n";
  return out.str();
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string::size_type start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) return parts;
    start = pos + 1;
  }
}

unsigned parse_unsigned(const std::string& text, const std::string& term) {
  try {
    std::size_t used = 0;
    const unsigned long value = std::stoul(text, &used);
    if (used != text.size() || value > 0xfffffffful) throw std::invalid_argument("");
    return static_cast<unsigned>(value);
  } catch (const std::exception&) {
    throw InputError("family term '" + term + "': bad parameter '" + text + "'");
  }
}

DirectedGraph parse_family_term(const std::string& term) {
  const auto colon = term.find(':');
  const std::string name = term.substr(0, colon);
  std::vector<unsigned> params;
  if (colon != std::string::npos)
    for (const std::string& piece : split(term.substr(colon + 1), ','))
      params.push_back(parse_unsigned(piece, term));

  Family family;
  std::size_t arity;
  if (name == "cycle" || name == "c") {
    family = Family::cycle;
    arity = 1;
  } else if (name == "chorded_cycle" || name == "a") {
    family = Family::chorded_cycle;
    arity = 2;
  } else if (name == "link_of_cycles" || name == "b") {
    family = Family::link_of_cycles;
    arity = 2;
  } else if (name == "g_n" || name == "g") {
    family = Family::g_n;
    arity = 1;
  } else if (name == "transitive_tournament" || name == "t") {
    family = Family::transitive_tournament;
    arity = 1;
  } else if (name == "empty" || name == "e") {
    family = Family::empty;
    arity = 1;
  } else {
    throw InputError("unknown family name '" + name +
                     "' (expected cycle, chorded_cycle, link_of_cycles, g_n, "
                     "transitive_tournament, or empty)");
  }
  if (params.size() != arity)
    throw InputError("family term '" + term + "' needs " + std::to_string(arity) +
                     (arity == 1 ? " parameter" : " parameters") + ", got " +
                     std::to_string(params.size()));
  return make_graph(family, params);
}

}  // namespace

DirectedGraph parse_family_spec(const std::string& spec) {
  if (blank(spec)) throw InputError("family spec is empty");
  std::optional<DirectedGraph> acc;
  for (const std::string& term : split(spec, '+')) {
    DirectedGraph g = parse_family_term(term);
    acc = acc ? disjoint_union(*acc, g) : std::move(g);
  }
  return *acc;
}

}  // namespace disjnet
