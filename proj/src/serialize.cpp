#include "disjnet/serialize.hpp"

#include <algorithm>

#include "disjnet/errors.hpp"
#include "disjnet/io.hpp"

namespace disjnet {

using nlohmann::json;

namespace {

template <typename T>
void put_opt(json& j, const char* key, const std::optional<T>& v) {
  if (v)
    j[key] = *v;
  else
    j[key] = nullptr;
}

template <typename T>
void get_opt(const json& j, const char* key, std::optional<T>& v) {
  if (j.contains(key) && !j.at(key).is_null())
    v = j.at(key).get<T>();
  else
    v = std::nullopt;
}

std::vector<unsigned> mask_to_vertices(std::uint64_t mask) {
  std::vector<unsigned> vs;
  for_each_bit(mask, [&](unsigned v) { vs.push_back(v); });
  return vs;
}

std::uint64_t vertices_to_mask(const std::vector<unsigned>& vs) {
  std::uint64_t mask = 0;
  for (unsigned v : vs) {
    if (v >= 64) throw InputError("vertex " + std::to_string(v) + " is over the limit");
    mask |= bit(v);
  }
  return mask;
}

}  // namespace

void to_json(json& j, const TruthTableNetwork& f) {
  j = json{{"n", f.dim()}, {"table", f.table()}};
}

void from_json(const json& j, TruthTableNetwork& f) {
  f = TruthTableNetwork(j.at("n").get<unsigned>(),
                        j.at("table").get<std::vector<std::uint64_t>>());
}

void to_json(json& j, const Topology& t) {
  j = json::array();
  std::vector<std::uint64_t> opens = t.opens;
  std::sort(opens.begin(), opens.end());
  for (std::uint64_t open : opens) j.push_back(mask_to_vertices(open));
}

void from_json(const json& j, Topology& t) {
  t.opens.clear();
  unsigned max_vertex_plus_1 = 0;
  for (const auto& item : j) {
    const auto vs = item.get<std::vector<unsigned>>();
    for (unsigned v : vs) max_vertex_plus_1 = std::max(max_vertex_plus_1, v + 1);
    t.opens.push_back(vertices_to_mask(vs));
  }
  t.n = max_vertex_plus_1;
  std::sort(t.opens.begin(), t.opens.end());
}

void to_json(json& j, const DirectedGraph& g) {
  j = json{{"n", g.size()}, {"arcs", g.edge_list()}};
}

void from_json(const json& j, DirectedGraph& g) {
  g = DirectedGraph::from_edge_list(
      j.at("n").get<unsigned>(),
      j.at("arcs").get<std::vector<std::pair<unsigned, unsigned>>>());
}

void to_json(json& j, const RankTriple& r) {
  j = json{{"image", r.image_rank}, {"periodic", r.periodic_rank}, {"fixed", r.fixed_rank}};
}

void from_json(const json& j, RankTriple& r) {
  j.at("image").get_to(r.image_rank);
  j.at("periodic").get_to(r.periodic_rank);
  j.at("fixed").get_to(r.fixed_rank);
}

void to_json(json& j, const ExtremalScan& s) {
  const char* kind = s.kind == RankKind::image      ? "image"
                     : s.kind == RankKind::periodic ? "periodic"
                                                    : "fixed";
  json shapes = json::object();
  for (const auto& [shape, count] : s.achiever_shapes) shapes[shape] = count;
  j = json{{"n", s.n},
           {"kind", kind},
           {"graphs_scanned", s.graphs_scanned},
           {"singular_count", s.singular_count},
           {"max_rank", s.max_rank},
           {"expected_max", s.expected_max},
           {"achiever_count", s.achievers.size()},
           {"achievers", s.achievers},
           {"achiever_shapes", shapes},
           {"matches_theorem", s.matches_theorem},
           {"mismatches", s.mismatches}};
}

void to_json(json& j, const PointSetSummary& s) {
  j = json{{"available", s.available},
           {"size", s.size},
           {"points", s.points},
           {"truncated", s.truncated}};
}

void from_json(const json& j, PointSetSummary& s) {
  j.at("available").get_to(s.available);
  j.at("size").get_to(s.size);
  j.at("points").get_to(s.points);
  j.at("truncated").get_to(s.truncated);
}

void to_json(json& j, const StructuralSummary& s) {
  j = json{{"strong", s.is_strong},
           {"nontrivial", s.is_nontrivial},
           {"reflexive", s.is_reflexive},
           {"sources", mask_to_vertices(s.sources)},
           {"sinks", mask_to_vertices(s.sinks)},
           {"in_degrees", s.in_degrees}};
}

void from_json(const json& j, StructuralSummary& s) {
  j.at("strong").get_to(s.is_strong);
  j.at("nontrivial").get_to(s.is_nontrivial);
  j.at("reflexive").get_to(s.is_reflexive);
  s.sources = vertices_to_mask(j.at("sources").get<std::vector<unsigned>>());
  s.sinks = vertices_to_mask(j.at("sinks").get<std::vector<unsigned>>());
  j.at("in_degrees").get_to(s.in_degrees);
}

void to_json(json& j, const AnalysisReport& r) {
  j = json{{"schema", r.schema},
           {"n", r.n},
           {"arcs", r.arcs},
           {"structure", r.structure},
           {"components", r.components},
           {"loop_number", r.loop_number},
           {"primitive", r.primitive},
           {"near_cyclic", r.near_cyclic},
           {"periodic_method", r.periodic_method},
           {"fixed_method", r.fixed_method},
           {"image_points", r.image_points},
           {"periodic_points", r.periodic_points},
           {"fixed_points", r.fixed_points},
           {"oracle_ran", r.oracle_ran},
           {"seed", r.seed},
           {"oracle_cap", r.oracle_cap},
           {"print_cap", r.print_cap},
           {"full_sets", r.full_sets}};
  put_opt(j, "near_cyclic_witness", r.near_cyclic_witness);
  put_opt(j, "idempotent", r.idempotent);
  put_opt(j, "bijective", r.bijective);
  put_opt(j, "permutation_of_variables", r.permutation_of_variables);
  put_opt(j, "variable_permutation", r.variable_permutation);
  put_opt(j, "ranks", r.ranks);
  put_opt(j, "image_agrees", r.image_agrees);
  put_opt(j, "periodic_agrees", r.periodic_agrees);
  put_opt(j, "fixed_agrees", r.fixed_agrees);
}

void from_json(const json& j, AnalysisReport& r) {
  const int schema = j.at("schema").get<int>();
  if (schema != 1)
    throw InputError("unsupported report schema version " + std::to_string(schema));
  r.schema = schema;
  j.at("n").get_to(r.n);
  j.at("arcs").get_to(r.arcs);
  j.at("structure").get_to(r.structure);
  j.at("components").get_to(r.components);
  j.at("loop_number").get_to(r.loop_number);
  j.at("primitive").get_to(r.primitive);
  j.at("near_cyclic").get_to(r.near_cyclic);
  j.at("periodic_method").get_to(r.periodic_method);
  j.at("fixed_method").get_to(r.fixed_method);
  j.at("image_points").get_to(r.image_points);
  j.at("periodic_points").get_to(r.periodic_points);
  j.at("fixed_points").get_to(r.fixed_points);
  j.at("oracle_ran").get_to(r.oracle_ran);
  j.at("seed").get_to(r.seed);
  j.at("oracle_cap").get_to(r.oracle_cap);
  j.at("print_cap").get_to(r.print_cap);
  j.at("full_sets").get_to(r.full_sets);
  get_opt(j, "near_cyclic_witness", r.near_cyclic_witness);
  get_opt(j, "idempotent", r.idempotent);
  get_opt(j, "bijective", r.bijective);
  get_opt(j, "permutation_of_variables", r.permutation_of_variables);
  get_opt(j, "variable_permutation", r.variable_permutation);
  get_opt(j, "ranks", r.ranks);
  get_opt(j, "image_agrees", r.image_agrees);
  get_opt(j, "periodic_agrees", r.periodic_agrees);
  get_opt(j, "fixed_agrees", r.fixed_agrees);
}

void to_json(json& j, const VerifyResult& r) {
  json stats = json::object();
  for (const auto& [key, value] : r.stats) stats[key] = value;
  j = json{{"id", r.id},
           {"pass", r.pass},
           {"cases", r.cases},
           {"failures", r.failures},
           {"failure_count", r.failure_count},
           {"stats", stats},
           {"seconds", r.seconds}};
}

}  // namespace disjnet
