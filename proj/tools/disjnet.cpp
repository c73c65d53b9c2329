#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "disjnet/errors.hpp"
#include "disjnet/io.hpp"
#include "disjnet/ranks.hpp"
#include "disjnet/report.hpp"
#include "disjnet/serialize.hpp"
#include "disjnet/verify.hpp"

namespace {

using namespace disjnet;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw InputError("cannot write file: " + out_path);
  out << text;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact analysis of disjunctive Boolean networks: structure, "
               "image/periodic/fixed points, ranks, and extremal families"};
  app.require_subcommand(1);

  // ----- analyze -----
  CLI::App* analyze_cmd = app.add_subcommand(
      "analyze", "Analyse the disjunctive network of a graph");
  std::string file;
  std::string family;
  bool as_json = false, run_oracle = false, full_sets = false;
  AnalysisOptions aopts;
  analyze_cmd->add_option("file", file, "Edge-list file, or '-' for stdin");
  analyze_cmd->add_option("--family", family,
                          "Build the graph from a family spec instead, e.g. "
                          "g_n:4, chorded_cycle:6,2, b:1,1+cycle:2");
  analyze_cmd->add_flag("--json", as_json, "Emit the report as JSON");
  analyze_cmd->add_flag("--oracle", run_oracle,
                        "Cross-check every point set against the brute-force oracle");
  analyze_cmd->add_flag("--full", full_sets, "Never truncate printed point sets");
  analyze_cmd->add_option("--print-cap", aopts.print_cap,
                          "Largest point set printed untruncated");
  analyze_cmd->add_option("--oracle-cap", aopts.oracle_cap,
                          "Largest dimension for 2^n-state computations");
  analyze_cmd->add_option("--seed", aopts.seed, "Seed recorded in the report");

  // ----- verify -----
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run one of the theorem verification suites");
  std::string id;
  bool verify_json = false;
  VerifyOptions vopts;
  {
    std::string choices;
    for (const std::string& known : verify_ids())
      choices += (choices.empty() ? "" : ", ") + known;
    verify_cmd->add_option("id", id, "Suite id: " + choices)->required();
  }
  verify_cmd->add_option("--n", vopts.n, "Largest dimension exercised");
  verify_cmd->add_option("--samples", vopts.samples, "Randomised sample count");
  verify_cmd->add_option("--seed", vopts.seed, "Random seed");
  verify_cmd->add_option("--enum-cap", vopts.enum_cap,
                         "Largest n for exhaustive 2^(n^2) digraph scans");
  verify_cmd->add_flag("--json", verify_json, "Emit the result as JSON");

  // ----- construct -----
  CLI::App* construct_cmd =
      app.add_subcommand("construct", "Emit a graph from a family or a rank target");
  std::string cfamily, out_path;
  bool as_dot = false;
  unsigned rank = 0, rank_n = 0;
  CLI::Option* family_opt =
      construct_cmd->add_option("--family", cfamily, "Family spec to build");
  CLI::Option* rank_opt = construct_cmd->add_option(
      "--rank", rank, "Target image/periodic/fixed rank for the construction");
  CLI::Option* rank_n_opt =
      construct_cmd->add_option("--n", rank_n, "Vertex count for --rank");
  construct_cmd->add_flag("--dot", as_dot, "Emit DOT instead of an edge list");
  construct_cmd->add_option("-o,--output", out_path, "Write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (analyze_cmd->parsed()) {
    if (file.empty() == family.empty())
      throw InputError("analyze needs exactly one input: an edge-list file or --family");
    const DirectedGraph g = !family.empty() ? parse_family_spec(family)
                            : file == "-"   ? read_edge_list(std::cin)
                                            : read_edge_list_file(file);
    aopts.run_oracle = run_oracle;
    aopts.full_sets = full_sets;
    const AnalysisReport report = analyze(g, aopts);
    if (as_json) {
      const nlohmann::json j = report;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << render_text(report);
    }
    const bool mismatch = (report.image_agrees && !*report.image_agrees) ||
                          (report.periodic_agrees && !*report.periodic_agrees) ||
                          (report.fixed_agrees && !*report.fixed_agrees);
    return mismatch ? 1 : 0;
  }

  if (verify_cmd->parsed()) {
    const VerifyResult result = verify_theorem(id, vopts);
    if (verify_json) {
      const nlohmann::json j = result;
      std::cout << j.dump(2) << "\n";
    } else {
      std::ostringstream head;
      head.setf(std::ios::fixed);
      head.precision(3);
      head << (result.pass ? "PASS" : "FAIL") << " " << result.id << "  (cases "
           << result.cases << ", failures " << result.failure_count << ", "
           << result.seconds << " s)";
      std::cout << head.str() << "\n";
      for (const auto& [key, value] : result.stats)
        std::cout << "    " << key << " = " << value << "\n";
      for (const std::string& failure : result.failures)
        std::cout << "    counterexample: " << failure << "\n";
      if (result.failure_count > result.failures.size())
        std::cout << "    (" << (result.failure_count - result.failures.size())
                  << " further failures not listed)\n";
    }
    return result.pass ? 0 : 1;
  }

  // construct
  const bool have_family = family_opt->count() > 0;
  const bool have_rank = rank_opt->count() > 0;
  if (have_family == have_rank)
    throw InputError("construct needs exactly one target: --family, or --rank with --n");
  DirectedGraph g;
  if (have_family) {
    g = parse_family_spec(cfamily);
  } else {
    if (rank_n_opt->count() == 0) throw InputError("--rank needs --n as well");
    g = construct_disjunctive_with_rank(rank_n, rank);
  }
  emit(as_dot ? to_dot(g) : to_edge_list(g), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what()
              << " (--oracle-cap and --enum-cap raise the execution limits)\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
