#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "benchmark.hpp"
#include "strongcolor/decomposition.hpp"
#include "strongcolor/errors.hpp"
#include "strongcolor/graph.hpp"
#include "strongcolor/induced_matching.hpp"
#include "strongcolor/oracle.hpp"
#include "strongcolor/permutation.hpp"
#include "strongcolor/random.hpp"
#include "strongcolor/strong_chromatic.hpp"

namespace strongcolor {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw InputError("cannot open " + path);
    buffer << file.rdbuf();
  }
  return buffer.str();
}

Json coloring_json(const Graph& g, const StrongEdgeColoring& coloring) {
  Json list = Json::array();
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    list.push_back({{"edge", {g.edge(e).u, g.edge(e).v}}, {"color", coloring.color(e)}});
  }
  return list;
}

Json edges_json(const std::vector<Edge>& edges) {
  Json list = Json::array();
  for (const Edge& e : edges) list.push_back({e.u, e.v});
  return list;
}

int cmd_sci(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  const DecompositionTree tree = parse_decomposition(read_input(config.input, in));
  const std::uint64_t value = sci(tree).value;
  Json report;
  report["sci"] = value;
  bool verified = true;
  if (config.color || config.verify) {
    const StrongEdgeColoring coloring = strong_coloring(tree);
    const Graph g = realize(tree);
    if (config.color) report["coloring"] = coloring_json(g, coloring);
    if (config.verify) {
      verified = is_strong_edge_coloring(g, coloring) && coloring.palette_size() == value;
      report["verified"] = verified;
    }
  }
  if (config.json) {
    out << report.dump() << '\n';
  } else {
    out << "strong chromatic index: " << value << '\n';
    if (config.verify) out << "verified: " << (verified ? "yes" : "NO") << '\n';
    if (config.color) out << report["coloring"].dump() << '\n';
  }
  if (!verified) {
    err << "verification failed: coloring is not a strong edge coloring with " << value << " colors\n";
    return kExitDisagreement;
  }
  return kExitOk;
}

int cmd_im(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  const DecompositionTree tree = parse_decomposition(read_input(config.input, in));
  const InducedMatchingResult result = im(tree);
  bool verified = true;
  if (config.verify) {
    verified = result.witness.size() == result.value && is_induced_matching(realize(tree), result.witness);
  }
  if (config.json) {
    Json report;
    report["im"] = result.value;
    report["witness"] = edges_json(result.witness);
    if (config.verify) report["verified"] = verified;
    out << report.dump() << '\n';
  } else {
    out << "maximum induced matching: " << result.value << '\n';
    out << "witness: " << edges_json(result.witness).dump() << '\n';
    if (config.verify) out << "verified: " << (verified ? "yes" : "NO") << '\n';
  }
  if (!verified) {
    err << "verification failed: witness is not an induced matching of size " << result.value << '\n';
    return kExitDisagreement;
  }
  return kExitOk;
}

int cmd_perm(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  const PermutationDiagram diagram = parse_permutation(read_input(config.input, in));
  const Graph g = permutation_graph(diagram);
  const StrongEdgeColoring coloring = strong_color_permutation(diagram);
  bool verified = true;
  if (config.verify) verified = is_strong_edge_coloring(g, coloring);
  Json report;
  report["palette"] = coloring.palette_size();
  report["coloring"] = coloring_json(g, coloring);
  if (config.verify) report["verified"] = verified;
  if (config.json) {
    out << report.dump() << '\n';
  } else {
    out << "palette: " << coloring.palette_size() << '\n';
    if (config.verify) out << "verified: " << (verified ? "yes" : "NO") << '\n';
    out << report["coloring"].dump() << '\n';
  }
  if (!verified) {
    err << "verification failed: permutation coloring is not a strong edge coloring\n";
    return kExitDisagreement;
  }
  return kExitOk;
}

template <typename F>
OracleReport timed_report(const std::string& instance, const std::string& property, std::uint64_t fast,
                          F&& oracle) {
  const auto start = Clock::now();
  const std::uint64_t truth = oracle();
  return make_report(instance, property, fast, truth,
                     std::chrono::duration<double>(Clock::now() - start).count());
}

int cmd_oracle(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  const std::string text = read_input(config.input, in);
  const SearchBudget budget{config.budget};
  std::vector<OracleReport> reports;
  const auto first = text.find_first_not_of(" \t\r\n");
  try {
    if (first != std::string::npos && text[first] == '{') {
      const DecompositionTree tree = parse_decomposition(text);
      const std::string instance = "decomposition(n=" + std::to_string(tree.vertex_count()) +
                                   ",m=" + std::to_string(tree.edge_count()) + ")";
      const std::uint64_t index = sci(tree).value;
      const Graph square = square_of_linegraph(realize(tree)).graph();
      reports.push_back(timed_report(instance, "sci = chromatic number of L(G)^2", index,
                                     [&] { return exact_chromatic_number(square, budget); }));
      reports.push_back(timed_report(instance, "sci = clique number of L(G)^2", index,
                                     [&] { return exact_max_clique(square, budget); }));
      reports.push_back(timed_report(instance, "im = independence number of L(G)^2", im_value(tree),
                                     [&] { return exact_max_independent_set(square, budget); }));
    } else {
      const PermutationDiagram diagram = parse_permutation(text);
      const std::string instance = "permutation(n=" + std::to_string(diagram.size()) + ")";
      const Graph square = square_of_linegraph(permutation_graph(diagram)).graph();
      reports.push_back(timed_report(instance, "palette = chromatic number of L(G)^2",
                                     strong_color_permutation(diagram).palette_size(),
                                     [&] { return exact_chromatic_number(square, budget); }));
    }
  } catch (const BudgetExceeded& e) {
    err << "inconclusive: " << e.what() << '\n';
    return kExitInconclusive;
  }

  bool all_agree = true;
  Json list = Json::array();
  for (const OracleReport& r : reports) {
    const bool agree = r.verdict == Verdict::agree;
    all_agree = all_agree && agree;
    list.push_back({{"instance", r.instance},
                    {"property", r.property},
                    {"fast", r.fast_value},
                    {"oracle", r.oracle_value},
                    {"verdict", agree ? "agree" : "disagree"},
                    {"elapsed_seconds", r.elapsed_seconds}});
    if (!config.json) {
      out << (agree ? "agree    " : "DISAGREE ") << r.property << ": fast " << r.fast_value << ", oracle "
          << r.oracle_value << " [" << r.instance << "]\n";
    }
  }
  if (config.json) out << list.dump() << '\n';
  return all_agree ? kExitOk : kExitDisagreement;
}

int cmd_gen(const RunConfig& config, std::ostream& out) {
  Rng seeds(config.seed);
  for (std::uint64_t i = 0; i < config.count; ++i) {
    out << serialize_decomposition(random_tree_cograph(seeds.below(UINT64_MAX), config.depth, config.leaf_size))
        << '\n';
  }
  return kExitOk;
}

int cmd_bench(const RunConfig& config, std::ostream& out) {
  const ScalingReport report = run_scaling_benchmark(config.seed, config.min_exponent, config.max_exponent);
  Json points = Json::array();
  for (const ScalingPoint& p : report.points) {
    points.push_back({{"vertices", p.vertices},
                      {"decomposition_nodes", p.nodes},
                      {"sci", p.sci_value},
                      {"im", p.im_value},
                      {"generate_seconds", p.generate_seconds},
                      {"sci_seconds", p.sci_seconds},
                      {"im_seconds", p.im_seconds},
                      {"repetitions", p.repetitions}});
  }
  Json doc;
  doc["seed"] = config.seed;
  doc["points"] = std::move(points);
  doc["sci_ratios"] = report.sci_ratios;
  doc["im_ratios"] = report.im_ratios;
  doc["total_ratios"] = report.total_ratios;
  out << doc.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int run_command(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == "sci") return cmd_sci(config, in, out, err);
    if (config.command == "im") return cmd_im(config, in, out, err);
    if (config.command == "perm") return cmd_perm(config, in, out, err);
    if (config.command == "oracle") return cmd_oracle(config, in, out, err);
    if (config.command == "gen") return cmd_gen(config, out);
    if (config.command == "bench") return cmd_bench(config, out);
    err << "unknown command '" << config.command << "'\n";
    return kExitInputError;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.what() << '\n';
    return kExitDisagreement;
  }
}

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Strong edge colorings and induced matchings of tree-cographs and permutation graphs"};
  app.require_subcommand(1);

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", config.input, "Input file, or - for standard input")->capture_default_str();
    sub->add_flag("--json", config.json, "Print a JSON report");
  };

  auto* sci_cmd = app.add_subcommand("sci", "Strong chromatic index of a decomposition tree");
  add_input(sci_cmd);
  sci_cmd->add_flag("--color", config.color, "Also print an optimal strong edge coloring");
  sci_cmd->add_flag("--verify", config.verify, "Check the coloring and its palette size");

  auto* im_cmd = app.add_subcommand("im", "Maximum induced matching of a decomposition tree");
  add_input(im_cmd);
  im_cmd->add_flag("--verify", config.verify, "Check the witness against the realized graph");

  auto* perm_cmd = app.add_subcommand("perm", "Strong edge coloring of a permutation graph");
  add_input(perm_cmd);
  perm_cmd->add_flag("--verify", config.verify, "Check the coloring against the permutation graph");

  auto* oracle_cmd = app.add_subcommand("oracle", "Compare fast results with exact search");
  add_input(oracle_cmd);
  oracle_cmd->add_option("--budget", config.budget, "Node budget per exact search")->capture_default_str();

  auto* gen_cmd = app.add_subcommand("gen", "Emit random decomposition trees, one JSON document per line");
  gen_cmd->add_option("--seed", config.seed)->capture_default_str();
  gen_cmd->add_option("--depth", config.depth)->capture_default_str()->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--leaf-size", config.leaf_size)->capture_default_str()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--count", config.count)->capture_default_str();

  auto* bench_cmd = app.add_subcommand("bench", "Time the value-only folds at growing sizes");
  bench_cmd->add_option("--seed", config.seed)->capture_default_str();
  bench_cmd->add_option("--min-exponent", config.min_exponent)->capture_default_str();
  bench_cmd->add_option("--max-exponent", config.max_exponent, "Largest size is 10^max")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Error& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }
  config.command = app.get_subcommands().front()->get_name();
  return run_command(config, in, out, err);
}

}  // namespace strongcolor
