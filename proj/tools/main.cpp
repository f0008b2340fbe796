// Command-line front end: graph generation, statistics, witness checking,
// exact solving, the randomized construction, bound calculators, and the
// Monte Carlo experiment harness.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "krdom/bounds.hpp"
#include "krdom/construction.hpp"
#include "krdom/domination.hpp"
#include "krdom/experiment.hpp"
#include "krdom/fixtures.hpp"
#include "krdom/graph.hpp"
#include "krdom/random_graph.hpp"
#include "krdom/serialize.hpp"

namespace {

using krdom::Graph;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitDomainError = 1;
constexpr int kExitUsageError = 2;

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  out << text;
}

std::vector<int> parse_id_list(const std::string& text) {
  std::vector<int> ids;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) continue;
    ids.push_back(std::stoi(item));
  }
  return ids;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

struct GenOptions {
  int n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  std::string out;
};

int run_gen(const GenOptions& opt) {
  const Graph g = krdom::sample_gnp({opt.n, opt.p, opt.seed});
  write_output(krdom::to_edge_list_string(g), opt.out);
  return kExitOk;
}

struct StatsOptions {
  std::string graph;
  std::string format = "text";
};

int run_stats(const StatsOptions& opt) {
  const Graph g = krdom::load_graph_or_fixture(opt.graph);
  const auto girth = krdom::girth(g);
  const auto diam = krdom::diameter(g);
  int max_degree = 0;
  for (int v = 0; v < g.vertex_count(); ++v) max_degree = std::max(max_degree, g.degree(v));
  if (opt.format == "json") {
    ordered_json j;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["min_degree"] = krdom::min_degree(g);
    j["max_degree"] = max_degree;
    j["girth"] = girth ? ordered_json(*girth) : ordered_json(nullptr);
    j["diameter"] = diam ? ordered_json(*diam) : ordered_json(nullptr);
    j["connected"] = diam.has_value();
    std::cout << dump(j);
  } else {
    std::cout << "n " << g.vertex_count() << "\n"
              << "m " << g.edge_count() << "\n"
              << "min_degree " << krdom::min_degree(g) << "\n"
              << "max_degree " << max_degree << "\n"
              << "girth " << (girth ? std::to_string(*girth) : "inf") << "\n"
              << "diameter " << (diam ? std::to_string(*diam) : "inf") << "\n";
  }
  return kExitOk;
}

struct CheckOptions {
  std::string graph;
  int k = 1;
  int r = 1;
  std::string set;
  std::string format = "json";
};

int run_check(const CheckOptions& opt) {
  const Graph g = krdom::load_graph_or_fixture(opt.graph);
  const std::vector<int> candidate = parse_id_list(opt.set);
  const krdom::DominationResult result =
      krdom::is_total_kr_dominating({g, opt.k, opt.r}, candidate);
  if (opt.format == "json") {
    std::cout << dump(krdom::to_json(result));
  } else {
    std::cout << (result.valid ? "valid" : "invalid") << "\n";
  }
  return kExitOk;
}

struct SolveOptions {
  std::string graph;
  int k = 1;
  int r = 1;
  std::optional<int> cap;
  std::string format = "text";
};

int run_solve(const SolveOptions& opt) {
  const Graph g = krdom::load_graph_or_fixture(opt.graph);
  const krdom::SolveOutcome outcome = krdom::exact_gamma({g, opt.k, opt.r}, opt.cap);
  if (outcome.status == krdom::SolveStatus::kInfeasible) {
    std::cerr << "infeasible: no total (" << opt.k << ", " << opt.r << ")-dominating set exists\n";
    return kExitDomainError;
  }
  if (outcome.status == krdom::SolveStatus::kCapExceeded) {
    std::cerr << "cap exceeded: no witness of size <= " << *opt.cap << " found\n";
    return kExitDomainError;
  }
  if (opt.format == "json") {
    ordered_json j = krdom::to_json(*outcome.result);
    std::cout << dump(j);
  } else {
    std::cout << outcome.result->size << "\n";
    for (size_t i = 0; i < outcome.result->witness.size(); ++i) {
      std::cout << outcome.result->witness[i]
                << (i + 1 == outcome.result->witness.size() ? "\n" : " ");
    }
  }
  return kExitOk;
}

struct ConstructOptions {
  std::string graph;
  int k = 1;
  int r = 1;
  std::uint64_t seed = 0;
  std::string mode = "literal";
  std::optional<int> degree_override;
  std::string format = "json";
};

int run_construct(const ConstructOptions& opt) {
  const Graph g = krdom::load_graph_or_fixture(opt.graph);
  const auto mode = opt.mode == "economical" ? krdom::AugmentationMode::kEconomical
                                             : krdom::AugmentationMode::kLiteral;
  const krdom::ConstructionTrace trace =
      krdom::construct(g, opt.k, opt.r, opt.seed, mode, opt.degree_override);
  if (opt.format == "csv") {
    std::cout << "mode,p_used,sampled,bad,augmentation,final\n"
              << krdom::to_csv_row(trace) << "\n";
  } else {
    std::cout << dump(krdom::to_json(trace));
  }
  return kExitOk;
}

struct BoundsOptions {
  long long n = 0;
  int k = 3;
  long long r = 1;
  std::optional<double> p;
  std::optional<int> d;
  std::optional<double> m;
  std::optional<double> c;
  std::optional<double> eps;
  double c2 = 1.01;
  std::vector<long long> grid_n;
  std::string format = "json";
  std::string out;
};

ordered_json bounds_for(long long n, const BoundsOptions& opt) {
  const krdom::Threshold threshold = krdom::threshold_p(n, opt.k, opt.c2);
  const double p = opt.p.value_or(threshold.p);
  const krdom::JansonDiagnostics diag = krdom::janson_diagnostics(n, opt.k, opt.r, p);

  ordered_json j;
  j["n"] = n;
  j["k"] = opt.k;
  j["r"] = opt.r;
  j["p"] = p;
  j["threshold"] = {{"p", threshold.p}, {"raw", threshold.raw}, {"clamped", threshold.clamped}};
  j["janson"] = {{"mu_exact", diag.mu_exact},
                 {"mu_floor", diag.mu_floor},
                 {"delta", diag.delta_explicit},
                 {"bound_raw", diag.janson_bound_raw},
                 {"bound_exceeds_one", diag.janson_bound_exceeds_one}};
  j["failure_bound"] = {{"value", diag.failure_bound_value},
                        {"conclusive", diag.failure_bound_conclusive}};
  j["p_below_threshold"] = diag.p_below_threshold;
  if (opt.d) {
    j["large_girth_bound"] =
        krdom::large_girth_bound(static_cast<int>(n), *opt.d, opt.k, static_cast<int>(opt.r));
    const double m = opt.m.value_or(std::pow(*opt.d - 1, opt.k));
    const auto tail = krdom::chernoff_tail(p, m, static_cast<double>(opt.r));
    j["chernoff_tail"] = tail ? ordered_json(*tail) : ordered_json(nullptr);
  }
  if (opt.c) {
    const krdom::DiameterThreshold dt = krdom::bollobas_p(n, *opt.c, opt.d.value_or(opt.k));
    j["bollobas"] = {{"p", dt.p}, {"diameter_probability", dt.diameter_probability}};
    if (opt.eps) {
      const krdom::ThresholdComparison cmp =
          krdom::compare_thresholds(n, opt.d.value_or(opt.k), *opt.c, *opt.eps);
      j["comparison"] = {{"weakened_p", cmp.weakened_p},
                         {"diameter_p", cmp.diameter_p},
                         {"weakened_below_diameter", cmp.weakened_below_diameter},
                         {"small_d_regime", cmp.small_d_regime}};
    }
  }
  return j;
}

int run_bounds(const BoundsOptions& opt) {
  std::vector<long long> grid = opt.grid_n;
  if (grid.empty()) grid.push_back(opt.n);
  if (opt.format == "csv") {
    std::ostringstream out;
    out << "n,k,r,p,threshold_raw,threshold_clamped,mu_exact,mu_floor,delta,"
           "janson_bound_raw,failure_bound,failure_conclusive\n";
    for (long long n : grid) {
      const ordered_json j = bounds_for(n, opt);
      out << n << ',' << opt.k << ',' << opt.r << ',' << j["p"].get<double>() << ','
          << j["threshold"]["raw"].get<double>() << ','
          << (j["threshold"]["clamped"].get<bool>() ? 1 : 0) << ','
          << j["janson"]["mu_exact"].get<double>() << ','
          << j["janson"]["mu_floor"].get<double>() << ','
          << j["janson"]["delta"].get<double>() << ',' << j["janson"]["bound_raw"].get<double>()
          << ',' << j["failure_bound"]["value"].get<double>() << ','
          << (j["failure_bound"]["conclusive"].get<bool>() ? 1 : 0) << "\n";
    }
    write_output(out.str(), opt.out);
  } else if (grid.size() == 1) {
    write_output(dump(bounds_for(grid.front(), opt)), opt.out);
  } else {
    ordered_json array = ordered_json::array();
    for (long long n : grid) array.push_back(bounds_for(n, opt));
    write_output(dump(array), opt.out);
  }
  return kExitOk;
}

struct ExperimentOptions {
  std::string which;  // threshold | bad-vertex | construction
  int n = 0;
  int k = 3;
  int r = 1;
  int trials = 100;
  double multiplier = 1.0;
  std::uint64_t seed = 0;
  double c2 = 1.01;
  long long enum_cap = 1'000'000;
  long long exact_cap = 1'000'000;
  int threads = 1;
  std::string graph;
  std::optional<int> degree_override;
  std::string format = "json";
  std::string out;
  bool runtime = false;
};

int run_experiment(const ExperimentOptions& opt) {
  krdom::ExperimentReport report;
  if (opt.which == "threshold") {
    report = krdom::run_threshold_experiment({opt.n, opt.k, opt.r, opt.trials, opt.multiplier,
                                              opt.seed, opt.c2, opt.enum_cap, opt.threads});
  } else if (opt.which == "bad-vertex") {
    report = krdom::run_bad_vertex_experiment(
        {opt.n, opt.k, opt.r, opt.trials, opt.multiplier, opt.seed, opt.c2, opt.threads});
  } else {
    const Graph g = krdom::load_graph_or_fixture(opt.graph);
    report = krdom::run_construction_sweep(
        g, {opt.k, opt.r, opt.trials, opt.seed, opt.degree_override, opt.exact_cap, opt.threads},
        opt.graph);
  }
  if (opt.runtime) std::cerr << "runtime_ms " << report.runtime_ms << "\n";
  if (opt.format == "csv") {
    write_output(krdom::to_csv(report), opt.out);
  } else {
    write_output(dump(krdom::to_json(report)), opt.out);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"total (k,r)-domination toolkit"};
  app.require_subcommand(1);

  GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "sample a G(n,p) graph to an edge-list file");
  gen_cmd->add_option("--n", gen.n, "vertex count")->required();
  gen_cmd->add_option("--p", gen.p, "edge probability")->required();
  gen_cmd->add_option("--seed", gen.seed, "sampling seed")->required();
  gen_cmd->add_option("--out", gen.out, "output path (default stdout)");

  StatsOptions stats;
  CLI::App* stats_cmd = app.add_subcommand("stats", "degrees, girth, diameter of a graph");
  stats_cmd->add_option("graph", stats.graph, "edge-list file or named fixture")->required();
  stats_cmd->add_option("--format", stats.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  CheckOptions check;
  CLI::App* check_cmd = app.add_subcommand("check", "validate a candidate dominating set");
  check_cmd->add_option("--graph", check.graph, "edge-list file or named fixture")->required();
  check_cmd->add_option("--k", check.k, "distance radius")->required();
  check_cmd->add_option("--r", check.r, "multiplicity")->required();
  check_cmd->add_option("--set", check.set, "comma-separated vertex ids")->required();
  check_cmd->add_option("--format", check.format, "json|text")
      ->check(CLI::IsMember({"text", "json"}));

  SolveOptions solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "exact minimum total (k,r)-dominating set");
  solve_cmd->add_option("--graph", solve.graph, "edge-list file or named fixture")->required();
  solve_cmd->add_option("--k", solve.k, "distance radius")->required();
  solve_cmd->add_option("--r", solve.r, "multiplicity")->required();
  solve_cmd->add_option("--cap", solve.cap, "give up beyond this witness size");
  solve_cmd->add_option("--format", solve.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  ConstructOptions construct;
  CLI::App* construct_cmd = app.add_subcommand("construct", "randomized witness construction");
  construct_cmd->add_option("--graph", construct.graph, "edge-list file or named fixture")
      ->required();
  construct_cmd->add_option("--k", construct.k, "distance radius")->required();
  construct_cmd->add_option("--r", construct.r, "multiplicity")->required();
  construct_cmd->add_option("--seed", construct.seed, "sampling seed")->required();
  construct_cmd->add_option("--mode", construct.mode, "literal|economical")
      ->check(CLI::IsMember({"literal", "economical"}));
  construct_cmd->add_option("--min-degree", construct.degree_override,
                            "override the degree parameter");
  construct_cmd->add_option("--format", construct.format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  BoundsOptions bounds;
  CLI::App* bounds_cmd = app.add_subcommand("bounds", "closed-form bound calculators");
  bounds_cmd->add_option("--n", bounds.n, "vertex count");
  bounds_cmd->add_option("--k", bounds.k, "distance radius")->required();
  bounds_cmd->add_option("--r", bounds.r, "multiplicity");
  bounds_cmd->add_option("--p", bounds.p, "edge probability (default: threshold)");
  bounds_cmd->add_option("--d", bounds.d, "degree parameter for the size bound");
  bounds_cmd->add_option("--m", bounds.m, "neighborhood size for the tail bound");
  bounds_cmd->add_option("--c", bounds.c, "diameter-law constant");
  bounds_cmd->add_option("--eps", bounds.eps, "regime exponent for the comparison");
  bounds_cmd->add_option("--c2", bounds.c2, "k = 2 threshold constant (> 1)");
  bounds_cmd->add_option("--grid-n", bounds.grid_n, "evaluate over these n instead of --n")
      ->delimiter(',');
  bounds_cmd->add_option("--format", bounds.format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  bounds_cmd->add_option("--out", bounds.out, "output path (default stdout)");

  ExperimentOptions experiment;
  CLI::App* exp_cmd = app.add_subcommand("experiment", "Monte Carlo experiment harness");
  exp_cmd->add_option("which", experiment.which, "threshold|bad-vertex|construction")
      ->required()
      ->check(CLI::IsMember({"threshold", "bad-vertex", "construction"}));
  exp_cmd->add_option("--n", experiment.n, "vertex count (threshold, bad-vertex)");
  exp_cmd->add_option("--k", experiment.k, "distance radius");
  exp_cmd->add_option("--r", experiment.r, "multiplicity");
  exp_cmd->add_option("--trials,--seeds", experiment.trials, "trial count");
  exp_cmd->add_option("--multiplier", experiment.multiplier, "scales the threshold probability");
  exp_cmd->add_option("--seed", experiment.seed, "master seed")->required();
  exp_cmd->add_option("--c2", experiment.c2, "k = 2 threshold constant (> 1)");
  exp_cmd->add_option("--enum-cap", experiment.enum_cap, "max enumerated r-subsets per trial");
  exp_cmd->add_option("--exact-cap", experiment.exact_cap,
                      "max search space for the exact solve in sweeps");
  exp_cmd->add_option("--threads", experiment.threads, "trial parallelism");
  exp_cmd->add_option("--graph", experiment.graph, "fixture or file (construction)");
  exp_cmd->add_option("--min-degree", experiment.degree_override,
                      "override the degree parameter (construction)");
  exp_cmd->add_option("--format", experiment.format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  exp_cmd->add_option("--out", experiment.out, "output path (default stdout)");
  exp_cmd->add_flag("--runtime", experiment.runtime, "print runtime to stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsageError;
  }

  // Cross-field requirements CLI11 cannot express directly.
  if (bounds_cmd->parsed() && bounds.n <= 0 && bounds.grid_n.empty()) {
    std::cerr << "bounds: provide --n or --grid-n\n";
    return kExitUsageError;
  }
  if (exp_cmd->parsed()) {
    if (experiment.which == "construction" && experiment.graph.empty()) {
      std::cerr << "experiment construction: --graph is required\n";
      return kExitUsageError;
    }
    if (experiment.which != "construction" && experiment.n <= 0) {
      std::cerr << "experiment " << experiment.which << ": --n is required\n";
      return kExitUsageError;
    }
  }

  try {
    if (gen_cmd->parsed()) return run_gen(gen);
    if (stats_cmd->parsed()) return run_stats(stats);
    if (check_cmd->parsed()) return run_check(check);
    if (solve_cmd->parsed()) return run_solve(solve);
    if (construct_cmd->parsed()) return run_construct(construct);
    if (bounds_cmd->parsed()) return run_bounds(bounds);
    if (exp_cmd->parsed()) return run_experiment(experiment);
  } catch (const krdom::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
  return kExitUsageError;
}
