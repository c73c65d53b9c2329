#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "disjnet/dynamics.hpp"
#include "disjnet/graph.hpp"
#include "disjnet/random.hpp"
#include "disjnet/ranks.hpp"

namespace disjnet {

inline constexpr std::uint64_t kDefaultPrintCap = 4096;

struct AnalysisOptions {
  bool run_oracle = false;  // force the brute-force cross-check
  bool full_sets = false;   // never truncate point sets
  std::uint64_t print_cap = kDefaultPrintCap;
  unsigned oracle_cap = kDefaultBruteForceCap;
  std::uint64_t seed = kDefaultSeed;
};

/// A point set as reported: the exact size plus the points themselves,
/// truncated to the print cap unless full sets were requested. available is
/// false when the set could not be computed under the current caps.
struct PointSetSummary {
  bool available = false;
  std::uint64_t size = 0;
  std::vector<std::uint64_t> points;
  bool truncated = false;

  friend bool operator==(const PointSetSummary&, const PointSetSummary&) = default;
};

/// Everything the analyze command knows about one graph. Serialises to JSON
/// losslessly (schema version 1).
struct AnalysisReport {
  int schema = 1;

  unsigned n = 0;
  std::vector<std::pair<unsigned, unsigned>> arcs;
  StructuralSummary structure;
  std::vector<std::vector<unsigned>> components;  // SCC vertex lists, topological order
  unsigned loop_number = 0;

  bool primitive = false;
  bool near_cyclic = false;
  std::optional<std::string> near_cyclic_witness;
  std::optional<bool> idempotent;
  std::optional<bool> bijective;
  std::optional<bool> permutation_of_variables;
  std::optional<std::vector<unsigned>> variable_permutation;

  std::optional<RankTriple> ranks;
  std::string periodic_method;  // "structural", "brute-force", or "" when skipped
  std::string fixed_method;
  PointSetSummary image_points;
  PointSetSummary periodic_points;
  PointSetSummary fixed_points;

  bool oracle_ran = false;
  std::optional<bool> image_agrees;
  std::optional<bool> periodic_agrees;
  std::optional<bool> fixed_agrees;

  std::uint64_t seed = kDefaultSeed;
  unsigned oracle_cap = kDefaultBruteForceCap;
  std::uint64_t print_cap = kDefaultPrintCap;
  bool full_sets = false;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

/// Runs the full analysis under the given options. Structural facts are always
/// present; ranks and point sets degrade gracefully (available = false) when
/// n exceeds the oracle cap, except that run_oracle then throws ResourceError.
AnalysisReport analyze(const DirectedGraph& g, const AnalysisOptions& opts = {});

/// Human-readable rendering of a report.
std::string render_text(const AnalysisReport& r);

}  // namespace disjnet
