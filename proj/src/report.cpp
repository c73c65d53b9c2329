#include "disjnet/report.hpp"

#include <sstream>

#include "disjnet/errors.hpp"
#include "disjnet/oracle.hpp"

namespace disjnet {

namespace {

PointSetSummary summarise(const std::vector<std::uint64_t>& points,
                          const AnalysisOptions& opts) {
  PointSetSummary s;
  s.available = true;
  s.size = points.size();
  if (!opts.full_sets && points.size() > opts.print_cap) {
    s.points.assign(points.begin(),
                    points.begin() + static_cast<std::ptrdiff_t>(opts.print_cap));
    s.truncated = true;
  } else {
    s.points = points;
  }
  return s;
}

PointSetSummary count_only(std::uint64_t size) {
  PointSetSummary s;
  s.available = true;
  s.size = size;
  s.truncated = size > 0;
  return s;
}

}  // namespace

AnalysisReport analyze(const DirectedGraph& g, const AnalysisOptions& opts) {
  AnalysisReport r;
  r.n = g.size();
  r.arcs = g.edge_list();
  r.structure = structural_predicates(g);
  const SccDecomposition dec = scc(g);
  for (const std::uint64_t comp : dec.components) {
    std::vector<unsigned> vs;
    for_each_bit(comp, [&](unsigned v) { vs.push_back(v); });
    r.components.push_back(std::move(vs));
  }
  r.loop_number = disjnet::loop_number(g);
  r.primitive = is_primitive(g);
  const NearCyclicResult nc = is_near_cyclic(g);
  r.near_cyclic = nc.flag;
  if (nc.flag) r.near_cyclic_witness = nc.witness->describe();
  r.seed = opts.seed;
  r.oracle_cap = opts.oracle_cap;
  r.print_cap = opts.print_cap;
  r.full_sets = opts.full_sets;

  if (r.n > opts.oracle_cap) {
    if (opts.run_oracle)
      throw ResourceError("dimension " + std::to_string(r.n) +
                          " exceeds the oracle cap " + std::to_string(opts.oracle_cap));
    // Structural facts that need no enumeration are still worth reporting.
    if (r.loop_number == 0) {
      r.periodic_points = summarise({0}, opts);
      r.periodic_method = "structural";
    } else if (r.structure.is_strong && r.loop_number < 64) {
      r.periodic_points = count_only(std::uint64_t{1} << r.loop_number);
      r.periodic_method = "structural";
    }
    return r;
  }

  const DisjunctiveNetwork f{g};
  const TruthTableNetwork tt = to_truth_table(f, opts.oracle_cap);
  r.idempotent = is_idempotent(tt);
  r.bijective = is_bijective(tt);
  const VariablePermutation vp = is_permutation_of_variables(tt);
  r.permutation_of_variables = vp.flag;
  if (vp.flag) r.variable_permutation = vp.permutation;
  r.ranks = ranks(f, opts.oracle_cap);

  const std::vector<std::uint64_t> image = image_set(f, opts.oracle_cap);
  r.image_points = summarise(image, opts);

  std::vector<std::uint64_t> periodic;
  bool have_periodic_list = true;
  if (r.loop_number == 0) {
    periodic = {0};
    r.periodic_method = "structural";
  } else {
    const PeriodicStructure ps = periodic_structure(f, opts.oracle_cap);
    r.periodic_method = ps.method == Method::structural ? "structural" : "brute-force";
    if (ps.counts_only) {
      have_periodic_list = false;
      r.periodic_points = count_only(ps.periodic_count);
    } else {
      periodic = ps.points;
    }
  }
  if (have_periodic_list) r.periodic_points = summarise(periodic, opts);

  std::vector<std::uint64_t> fixed;
  bool have_fixed_list = true;
  try {
    const FixedPointSet fp = disjnet::fixed_points(f, opts.oracle_cap);
    r.fixed_method = fp.method == Method::structural ? "structural" : "brute-force";
    fixed = fp.topology.opens;
    r.fixed_points = summarise(fixed, opts);
  } catch (const ResourceError&) {
    have_fixed_list = false;
    r.fixed_method.clear();
  }

  if (opts.run_oracle) {
    r.oracle_ran = true;
    r.image_agrees = oracle_image_set(tt, opts.oracle_cap) == image;
    const std::vector<std::uint64_t> op = oracle_periodic_set(tt, opts.oracle_cap);
    r.periodic_agrees = have_periodic_list ? op == periodic
                                           : op.size() == r.periodic_points.size;
    if (have_fixed_list)
      r.fixed_agrees = oracle_fixed_set(tt, opts.oracle_cap) == fixed;
  }
  return r;
}

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string vertex_set(const std::vector<unsigned>& vs) {
  if (vs.empty()) return "none";
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i)
    out += (i ? ", " : "") + std::to_string(vs[i]);
  return out + "}";
}

std::string vertex_set(std::uint64_t mask) {
  std::vector<unsigned> vs;
  for_each_bit(mask, [&](unsigned v) { vs.push_back(v); });
  return vertex_set(vs);
}

void points_block(std::ostream& out, const std::string& label,
                  const PointSetSummary& s, const std::string& method, unsigned n) {
  out << label;
  for (std::size_t i = label.size(); i < 22; ++i) out << ' ';
  if (!s.available) {
    out << ": (not computed at this cap)\n";
    return;
  }
  out << ": " << s.size;
  if (!method.empty()) out << "  [" << method << "]";
  out << "\n";
  if (s.points.empty() && s.size > 0) {
    out << "    (count only)\n";
    return;
  }
  for (std::size_t i = 0; i < s.points.size(); i += 8) {
    out << "   ";
    for (std::size_t j = i; j < s.points.size() && j < i + 8; ++j)
      out << " " << Config(s.points[j], n).to_string();
    out << "\n";
  }
  if (s.truncated)
    out << "    (showing the first " << s.points.size() << " of " << s.size << ")\n";
}

}  // namespace

std::string render_text(const AnalysisReport& r) {
  std::ostringstream out;
  const auto line = [&](const std::string& label, const std::string& value) {
    out << label;
    for (std::size_t i = label.size(); i < 22; ++i) out << ' ';
    out << ": " << value << "\n";
  };

  line("vertices", std::to_string(r.n));
  {
    std::string arcs = std::to_string(r.arcs.size());
    if (!r.arcs.empty() && r.arcs.size() <= 24) {
      arcs += "  ";
      for (std::size_t i = 0; i < r.arcs.size(); ++i)
        arcs += (i ? " " : "") + ("(" + std::to_string(r.arcs[i].first) + "," +
                                  std::to_string(r.arcs[i].second) + ")");
    }
    line("arcs", arcs);
  }
  line("strong", yes_no(r.structure.is_strong));
  line("nontrivial", yes_no(r.structure.is_nontrivial));
  line("reflexive", yes_no(r.structure.is_reflexive));
  line("sources", vertex_set(r.structure.sources));
  line("sinks", vertex_set(r.structure.sinks));
  {
    std::string comps;
    for (std::size_t i = 0; i < r.components.size(); ++i)
      comps += (i ? " " : "") + vertex_set(r.components[i]);
    line("strong components", comps.empty() ? "none" : comps);
  }
  line("loop number", std::to_string(r.loop_number));
  line("primitive", yes_no(r.primitive));
  line("near-cyclic",
       r.near_cyclic ? "yes  (" + r.near_cyclic_witness.value_or("") + ")" : "no");
  if (r.idempotent) line("idempotent", yes_no(*r.idempotent));
  if (r.bijective) line("bijective", yes_no(*r.bijective));
  if (r.permutation_of_variables && *r.permutation_of_variables) {
    std::string perm;
    for (std::size_t i = 0; i < r.variable_permutation->size(); ++i)
      perm += (i ? " " : "") + std::to_string((*r.variable_permutation)[i]);
    line("variable permutation", perm.empty() ? "()" : perm);
  }

  if (r.ranks) {
    line("image rank", std::to_string(r.ranks->image_rank));
    line("periodic rank", std::to_string(r.ranks->periodic_rank));
    line("fixed rank", std::to_string(r.ranks->fixed_rank));
  } else {
    line("ranks", "(not computed: " + std::to_string(r.n) +
                      " vertices exceed the oracle cap " + std::to_string(r.oracle_cap) +
                      ")");
  }
  points_block(out, "image points", r.image_points, "", r.n);
  points_block(out, "periodic points", r.periodic_points, r.periodic_method, r.n);
  points_block(out, "fixed points", r.fixed_points, r.fixed_method, r.n);

  if (r.oracle_ran) {
    std::string verdict = "ran";
    const auto add = [&](const char* what, const std::optional<bool>& agrees) {
      if (agrees) verdict += std::string(", ") + what + (*agrees ? " agrees" : " MISMATCH");
    };
    add("image", r.image_agrees);
    add("periodic", r.periodic_agrees);
    add("fixed", r.fixed_agrees);
    line("oracle", verdict);
  }
  line("seed", std::to_string(r.seed));
  return out.str();
}

}  // namespace disjnet
