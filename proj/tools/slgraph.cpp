#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "slgraph/closed_form.hpp"
#include "slgraph/energy.hpp"
#include "slgraph/graph.hpp"
#include "slgraph/spectral.hpp"
#include "slgraph/theorems.hpp"

namespace {

using nlohmann::json;
using namespace slgraph;

enum class SourceKind { Complete, Bipartite, Path, Cycle, Empty, File };

struct GraphInput {
  SourceKind kind = SourceKind::File;
  int gen_a = 0;  // generator sizes
  int gen_b = 0;
  LoopGraph lg{Graph(1), {}};
};

int parse_count(const std::string& token, const std::string& kind) {
  if (token.empty()) {
    throw std::invalid_argument("missing size for graph kind '" + kind + "'");
  }
  try {
    std::size_t pos = 0;
    int value = std::stoi(token, &pos);
    if (pos != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad size token '" + token + "' for graph kind '" +
                                kind + "'");
  }
}

// Loop selection: --sigma k puts loops on the first k vertices (for the
// bipartite generator that fills the left part first), --loops takes an
// explicit comma list or all/none.
struct LoopSpec {
  std::optional<int> sigma;
  std::string loops;  // empty = unset
};

std::vector<int> resolve_loops(const LoopSpec& spec, const LoopGraph& parsed) {
  if (spec.sigma) {
    if (*spec.sigma < 0 || *spec.sigma > parsed.order()) {
      throw std::invalid_argument("--sigma must be in [0, order]");
    }
    std::vector<int> loops(*spec.sigma);
    for (int v = 0; v < *spec.sigma; ++v) loops[v] = v;
    return loops;
  }
  if (!spec.loops.empty()) {
    if (spec.loops == "none") return {};
    if (spec.loops == "all") {
      std::vector<int> loops(parsed.order());
      for (int v = 0; v < parsed.order(); ++v) loops[v] = v;
      return loops;
    }
    std::vector<int> loops;
    std::stringstream stream(spec.loops);
    std::string token;
    while (std::getline(stream, token, ',')) {
      try {
        std::size_t pos = 0;
        loops.push_back(std::stoi(token, &pos));
        if (pos != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad loop vertex token '" + token + "'");
      }
    }
    return loops;
  }
  return parsed.loops();  // file loops, or empty
}

GraphInput resolve_graph(const std::string& spec, const LoopSpec& loop_spec) {
  GraphInput input;
  const auto colon = spec.find(':');
  const std::string kind =
      colon == std::string::npos ? spec : spec.substr(0, colon);
  const std::string args =
      colon == std::string::npos ? "" : spec.substr(colon + 1);

  LoopGraph parsed{Graph(1), {}};
  if (kind == "file") {
    if (args.empty()) throw std::invalid_argument("missing path after 'file:'");
    input.kind = SourceKind::File;
    parsed = read_loop_graph(args);
  } else if (kind == "complete" || kind == "path" || kind == "cycle" ||
             kind == "empty") {
    const int n = parse_count(args, kind);
    Graph g = kind == "complete" ? complete_graph(n)
              : kind == "path"   ? path_graph(n)
              : kind == "cycle"  ? cycle_graph(n)
                                 : empty_graph(n);
    input.kind = kind == "complete" ? SourceKind::Complete
                 : kind == "path"   ? SourceKind::Path
                 : kind == "cycle"  ? SourceKind::Cycle
                                    : SourceKind::Empty;
    input.gen_a = n;
    parsed = LoopGraph(std::move(g), {});
  } else if (kind == "bipartite") {
    const auto comma = args.find(',');
    if (comma == std::string::npos) {
      throw std::invalid_argument(
          "bipartite needs two sizes, e.g. bipartite:3,3; got '" + args + "'");
    }
    const int m = parse_count(args.substr(0, comma), kind);
    const int n = parse_count(args.substr(comma + 1), kind);
    input.kind = SourceKind::Bipartite;
    input.gen_a = m;
    input.gen_b = n;
    parsed = LoopGraph(complete_bipartite_graph(m, n), {});
  } else {
    throw std::invalid_argument("unknown graph kind '" + kind + "'");
  }

  auto loops = resolve_loops(loop_spec, parsed);
  input.lg = LoopGraph(parsed.base(), std::move(loops));
  return input;
}

std::string fixed4(double x) {
  if (std::abs(x) < 1e-12) x = 0.0;  // avoid "-0.0000"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

json spectrum_json(const Spectrum& spec) {
  json rows = json::array();
  for (const auto& [value, mult] : spec.pairs) rows.push_back({value, mult});
  return rows;
}

void print_spectrum(const Spectrum& spec) {
  for (const auto& [value, mult] : spec.pairs) {
    std::printf("%10s  x%d\n", fixed4(value).c_str(), mult);
  }
}

// Closed forms exist for the complete generator (any placement; only the
// loop count matters) and the bipartite generator with loops filling the
// left part first.
Spectrum closed_form_spectrum(const GraphInput& input) {
  const int sigma = input.lg.loop_count();
  if (input.kind == SourceKind::Complete) {
    return complete_spectrum(input.gen_a, sigma);
  }
  if (input.kind == SourceKind::Bipartite) {
    int in_left = 0;
    for (int v : input.lg.loops())
      if (v < input.gen_a) ++in_left;
    if (in_left != std::min(sigma, input.gen_a)) {
      throw std::invalid_argument(
          "closed form needs loops placed left part first (use --sigma)");
    }
    return complete_bipartite_spectrum(input.gen_a, input.gen_b, sigma);
  }
  throw std::invalid_argument(
      "closed-form spectrum is only available for complete:n and bipartite:m,n");
}

// Max |value difference| between two spectra with identical multiplicity
// patterns; nullopt when the patterns differ.
std::optional<double> spectrum_discrepancy(const Spectrum& a, const Spectrum& b) {
  if (a.pairs.size() != b.pairs.size()) return std::nullopt;
  double max_diff = 0.0;
  for (std::size_t i = 0; i < a.pairs.size(); ++i) {
    if (a.pairs[i].second != b.pairs[i].second) return std::nullopt;
    max_diff = std::max(max_diff, std::abs(a.pairs[i].first - b.pairs[i].first));
  }
  return max_diff;
}

int run_spectrum(const GraphInput& input, const std::string& method,
                 bool as_json) {
  if (method == "numeric" || method == "closed-form") {
    const Spectrum spec = method == "numeric" ? spectrum(input.lg)
                                              : closed_form_spectrum(input);
    if (as_json) {
      std::cout << spectrum_json(spec).dump() << "\n";
    } else {
      print_spectrum(spec);
    }
    return 0;
  }
  if (method != "both") {
    throw std::invalid_argument("unknown method '" + method + "'");
  }
  const Spectrum numeric = spectrum(input.lg);
  const Spectrum closed = closed_form_spectrum(input);
  const auto discrepancy = spectrum_discrepancy(numeric, closed);
  if (as_json) {
    json doc = {{"numeric", spectrum_json(numeric)},
                {"closed_form", spectrum_json(closed)}};
    doc["max_discrepancy"] =
        discrepancy ? json(*discrepancy) : json("multiplicity mismatch");
    std::cout << doc.dump() << "\n";
  } else {
    std::printf("numeric:\n");
    print_spectrum(numeric);
    std::printf("closed form:\n");
    print_spectrum(closed);
    if (discrepancy) {
      std::printf("max discrepancy: %.3e\n", *discrepancy);
    } else {
      std::printf("max discrepancy: multiplicity mismatch\n");
    }
  }
  return discrepancy ? 0 : 1;
}

json energy_json(const EnergyReport& report) {
  return {{"order", report.order},
          {"size", report.size},
          {"sigma", report.loop_count},
          {"energy", report.energy},
          {"sigma_over_n", report.loop_ratio},
          {"upper_bound", report.upper_bound},
          {"lambda1", report.lambda1},
          {"lambda1_lower", report.lambda1_lower},
          {"lambda1_upper", report.lambda1_upper},
          {"equality",
           {{"upper_bound", report.upper_bound_attained},
            {"lambda1_lower", report.lambda1_lower_attained},
            {"lambda1_upper", report.lambda1_upper_attained}}},
          {"base_connected", report.base_connected}};
}

int run_energy(const GraphInput& input, bool as_json) {
  const EnergyReport report = energy_report(input.lg);
  if (as_json) {
    std::cout << energy_json(report).dump() << "\n";
    return 0;
  }
  std::printf("order           %d\n", report.order);
  std::printf("size            %d\n", report.size);
  std::printf("loops           %d\n", report.loop_count);
  std::printf("energy          %s\n", fixed4(report.energy).c_str());
  std::printf("sigma/n         %s\n", fixed4(report.loop_ratio).c_str());
  std::printf("energy bound    %s  attained: %s\n",
              fixed4(report.upper_bound).c_str(),
              report.upper_bound_attained ? "yes" : "no");
  std::printf("lambda1         %s\n", fixed4(report.lambda1).c_str());
  std::printf("lambda1 lower   %s  attained: %s\n",
              fixed4(report.lambda1_lower).c_str(),
              report.lambda1_lower_attained ? "yes" : "no");
  std::printf("lambda1 upper   %s  attained: %s\n",
              fixed4(report.lambda1_upper).c_str(),
              report.lambda1_upper_attained ? "yes" : "no");
  std::printf("base connected  %s\n", report.base_connected ? "yes" : "no");
  return 0;
}

int run_verify(const std::string& theorem, int max_n, int max_part, int threads,
               const std::string& out_path) {
  SweepOptions opts;
  opts.threads = threads;
  VerificationOutcome outcome;
  if (theorem == "traces") {
    outcome = verify_trace_identities(max_n, max_part, opts);
  } else if (theorem == "reflection") {
    outcome = verify_reflection(max_n, opts);
  } else if (theorem == "energy-equality") {
    outcome = verify_energy_equality(max_n, opts);
  } else if (theorem == "energy-dominance") {
    outcome = verify_energy_dominance(max_n, opts);
  } else if (theorem == "bounds") {
    outcome = verify_bounds(max_n, opts);
  } else if (theorem == "signs") {
    outcome = verify_sign_characterizations(max_n, opts);
  } else if (theorem == "distinct-counts") {
    outcome = verify_distinct_counts(max_n, opts);
  } else {
    throw std::invalid_argument(
        "unknown theorem id '" + theorem +
        "'; expected one of traces, reflection, energy-equality, "
        "energy-dominance, signs, distinct-counts, bounds");
  }
  const std::string report = to_json_string(outcome, 2);
  if (out_path.empty()) {
    std::cout << report << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write report to " + out_path);
    out << report << "\n";
    std::printf("%s: %llu instances, %zu failures (%lld ms)\n",
                outcome.theorem_id.c_str(),
                static_cast<unsigned long long>(outcome.instances_checked),
                outcome.failures.size(),
                static_cast<long long>(outcome.elapsed_ms));
  }
  return outcome.passed() ? 0 : 1;
}

int run_table_k33(bool as_json) {
  const Graph g = complete_bipartite_graph(3, 3);
  json rows = json::array();
  if (!as_json) std::printf("sigma  energy\n");
  for (int sigma = 0; sigma <= 6; ++sigma) {
    std::vector<int> loops(sigma);
    for (int v = 0; v < sigma; ++v) loops[v] = v;
    const double e = energy(LoopGraph(g, loops));
    if (as_json) {
      rows.push_back({sigma, e});
    } else {
      std::printf("%5d  %s\n", sigma, fixed4(e).c_str());
    }
  }
  if (as_json) std::cout << rows.dump() << "\n";
  return 0;
}

int run_explore(const GraphInput& input, bool as_json) {
  const auto result = explore_conjecture(input.lg.base());
  const bool boundary = input.lg.order() == 1;
  if (as_json) {
    json doc = {{"best_loops", result.best_loops},
                {"base_energy", result.base_energy},
                {"best_energy", result.best_energy},
                {"gain", result.gain}};
    if (boundary) doc["note"] = "order-1 boundary: strict gain unattainable";
    std::cout << doc.dump() << "\n";
    return 0;
  }
  std::printf("base energy  %s\n", fixed4(result.base_energy).c_str());
  std::printf("best loops  ");
  for (int v : result.best_loops) std::printf(" %d", v);
  std::printf("\n");
  std::printf("best energy  %s\n", fixed4(result.best_energy).c_str());
  std::printf("gain         %s\n", fixed4(result.gain).c_str());
  if (boundary) {
    std::printf("note: order-1 boundary, strict gain unattainable\n");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectra, energies, and bounds of graphs with self-loops"};
  app.require_subcommand(1);

  std::string graph_spec;
  LoopSpec loop_spec;
  std::string method = "numeric";
  std::string theorem;
  std::string out_path;
  int max_n = 6;
  int max_part = 6;
  int threads = 0;
  bool as_json = false;

  auto add_graph_flags = [&](CLI::App* cmd) {
    cmd->add_option("-g,--graph", graph_spec,
                    "graph source: complete:n, bipartite:m,n, path:n, cycle:n, "
                    "empty:n, or file:PATH")
        ->required();
    auto* sigma_opt = cmd->add_option("--sigma", loop_spec.sigma,
                                      "loops on the first <k> vertices");
    cmd->add_option("--loops", loop_spec.loops,
                    "loop vertices: comma list, 'all', or 'none'")
        ->excludes(sigma_opt);
  };

  auto* spectrum_cmd =
      app.add_subcommand("spectrum", "eigenvalues with multiplicities");
  add_graph_flags(spectrum_cmd);
  spectrum_cmd
      ->add_option("--method", method, "numeric, closed-form, or both")
      ->check(CLI::IsMember({"numeric", "closed-form", "both"}));
  spectrum_cmd->add_flag("--json", as_json, "JSON output");

  auto* energy_cmd =
      app.add_subcommand("energy", "energy, bounds, and equality flags");
  add_graph_flags(energy_cmd);
  energy_cmd->add_flag("--json", as_json, "JSON output");

  auto* verify_cmd = app.add_subcommand(
      "verify", "exhaustive verification sweep for one theorem");
  verify_cmd
      ->add_option("theorem", theorem,
                   "traces, reflection, energy-equality, energy-dominance, "
                   "signs, distinct-counts, or bounds")
      ->required();
  verify_cmd->add_option("--max-n", max_n, "largest graph order to sweep");
  verify_cmd->add_option("--max-part", max_part,
                         "largest bipartite part size for the cubic trace check");
  verify_cmd->add_option("--threads", threads, "worker threads (0 = auto)");
  verify_cmd->add_option("--out", out_path, "write the JSON report here");

  auto* table_cmd = app.add_subcommand(
      "table-k33", "loop energies of the 3,3 complete bipartite graph");
  table_cmd->add_flag("--json", as_json, "JSON output");

  auto* explore_cmd = app.add_subcommand(
      "explore", "loop subset maximizing the energy gain");
  add_graph_flags(explore_cmd);
  explore_cmd->add_flag("--json", as_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify_cmd->parsed()) {
      return run_verify(theorem, max_n, max_part, threads, out_path);
    }
    if (table_cmd->parsed()) {
      return run_table_k33(as_json);
    }
    const GraphInput input = resolve_graph(graph_spec, loop_spec);
    if (spectrum_cmd->parsed()) return run_spectrum(input, method, as_json);
    if (energy_cmd->parsed()) return run_energy(input, as_json);
    if (explore_cmd->parsed()) return run_explore(input, as_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
