#include "krdom/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "krdom/bounds.hpp"
#include "krdom/construction.hpp"
#include "krdom/domination.hpp"
#include "krdom/random_graph.hpp"
#include "krdom/rng.hpp"

namespace krdom {

WilsonInterval wilson_interval(long long successes, long long trials, double z) {
  if (trials <= 0) return {0.0, 1.0};
  const double t = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / t;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / t;
  const double center = (phat + z2 / (2.0 * t)) / denom;
  const double half = z * std::sqrt(phat * (1.0 - phat) / t + z2 / (4.0 * t * t)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

namespace {

// Runs fn(i) for i in [0, count) with deterministic slot assignment; the
// schedule cannot affect the result vector.
template <typename Fn>
std::vector<TrialRecord> run_trials(int count, int threads, Fn&& fn) {
  std::vector<TrialRecord> records(count);
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) records[i] = fn(i);
    return records;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&records, &fn, t, threads, count] {
      for (int i = t; i < count; i += threads) records[i] = fn(i);
    });
  }
  for (auto& worker : pool) worker.join();
  return records;
}

// C(n, r) capped: avoids overflow, only cares whether the cap is exceeded.
long long binomial_capped(int n, int r, long long cap) {
  if (r < 0 || r > n) return 0;
  long long value = 1;
  for (int i = 1; i <= r; ++i) {
    value = value * (n - r + i) / i;
    if (value > cap) return cap + 1;
  }
  return value;
}

// Lexicographic size-r subsets of {0..n-1}; stops when visit returns true.
template <typename Visit>
void for_each_subset(int n, int r, Visit&& visit) {
  std::vector<int> subset(r);
  std::iota(subset.begin(), subset.end(), 0);
  if (r > n) return;
  while (true) {
    if (visit(subset)) return;
    int i = r - 1;
    while (i >= 0 && subset[i] == n - r + i) --i;
    if (i < 0) return;
    ++subset[i];
    for (int j = i + 1; j < r; ++j) subset[j] = subset[j - 1] + 1;
  }
}

std::vector<int> fixed_dominating_candidate(int r) {
  std::vector<int> d(r + 1);
  std::iota(d.begin(), d.end(), 0);
  return d;
}

// Dominator counts for the candidate set D, one bounded BFS per member.
std::vector<int> counts_for(const Graph& g, int k, const std::vector<int>& members) {
  std::vector<int> counts(g.vertex_count(), 0);
  for (int u : members) {
    const DistanceVector d = bfs_distances_bounded(g, u, k);
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (d.reachable(v) && d.dist[v] >= 1) ++counts[v];
    }
  }
  return counts;
}

double clamp01(double p) { return std::min(1.0, std::max(0.0, p)); }

}  // namespace

ExperimentReport run_threshold_experiment(const ThresholdExperimentParams& params) {
  if (params.n < params.r + 2) {
    throw std::invalid_argument("threshold experiment: need n >= r + 2");
  }
  if (params.trials < 1) throw std::invalid_argument("threshold experiment: trials must be >= 1");
  const auto start = std::chrono::steady_clock::now();

  ExperimentReport report;
  report.kind = "threshold";
  report.n = params.n;
  report.k = params.k;
  report.r = params.r;
  report.trials = params.trials;
  report.p_multiplier = params.p_multiplier;
  report.master_seed = params.master_seed;
  report.threshold = threshold_p(params.n, params.k, params.c2).p;
  report.p = clamp01(params.p_multiplier * report.threshold);
  report.theoretical_failure_bound = failure_bound(params.n, params.k, params.r).value;
  report.enumeration_enabled =
      binomial_capped(params.n, params.r, params.enumeration_cap) <= params.enumeration_cap;

  const std::vector<int> fixed_set = fixed_dominating_candidate(params.r);
  report.trial_records = run_trials(params.trials, params.threads, [&](int i) {
    TrialRecord record;
    record.trial_index = i;
    record.derived_seed = rng::derive_seed(params.master_seed, i);
    const Graph g = sample_gnp({params.n, report.p, record.derived_seed});
    record.n = g.vertex_count();
    record.edge_count = g.edge_count();

    const std::vector<int> counts = counts_for(g, params.k, fixed_set);
    record.fixed_set_valid = true;
    record.bad_vertex_count = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (counts[v] < params.r) {
        record.fixed_set_valid = false;
        ++record.bad_vertex_count;
      }
    }

    if (report.enumeration_enabled) {
      LazyCover cover(g, params.k);
      bool any_valid = false;
      for_each_subset(params.n, params.r, [&](const std::vector<int>& subset) {
        any_valid = subset_dominates(cover, subset, params.r);
        return any_valid;
      });
      record.no_smaller_set = !any_valid;
      if (record.fixed_set_valid && !any_valid) record.gamma_exact = params.r + 1;
    }
    return record;
  });

  for (const TrialRecord& record : report.trial_records) {
    if (record.fixed_set_valid) ++report.success_count;
    if (record.gamma_exact) ++report.gamma_confirmed_count;
  }
  report.success_frequency = static_cast<double>(report.success_count) / params.trials;
  report.wilson = wilson_interval(report.success_count, params.trials);
  report.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

ExperimentReport run_bad_vertex_experiment(const BadVertexExperimentParams& params) {
  if (params.n < params.r + 2) {
    throw std::invalid_argument("bad-vertex experiment: need n >= r + 2");
  }
  if (params.trials < 1) throw std::invalid_argument("bad-vertex experiment: trials must be >= 1");
  const auto start = std::chrono::steady_clock::now();

  ExperimentReport report;
  report.kind = "bad-vertex";
  report.n = params.n;
  report.k = params.k;
  report.r = params.r;
  report.trials = params.trials;
  report.p_multiplier = params.p_multiplier;
  report.master_seed = params.master_seed;
  report.threshold = threshold_p(params.n, params.k, params.c2).p;
  report.p = clamp01(params.p_multiplier * report.threshold);
  // Per-vertex form r * n^(-9k/20) of the failure bound.
  report.theoretical_failure_bound =
      failure_bound(params.n, params.k, params.r).value / params.n;

  const std::vector<int> fixed_set = fixed_dominating_candidate(params.r);
  report.trial_records = run_trials(params.trials, params.threads, [&](int i) {
    TrialRecord record;
    record.trial_index = i;
    record.derived_seed = rng::derive_seed(params.master_seed, i);
    const Graph g = sample_gnp({params.n, report.p, record.derived_seed});
    record.n = g.vertex_count();
    record.edge_count = g.edge_count();
    const std::vector<int> counts = counts_for(g, params.k, fixed_set);
    record.bad_vertex_count = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (counts[v] < params.r) ++record.bad_vertex_count;
    }
    // Success for this experiment means "vertex 0 is bad".
    record.fixed_set_valid = counts[0] < params.r;
    return record;
  });

  for (const TrialRecord& record : report.trial_records) {
    if (record.fixed_set_valid) ++report.success_count;
  }
  report.success_frequency = static_cast<double>(report.success_count) / params.trials;
  report.wilson = wilson_interval(report.success_count, params.trials);
  report.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

ExperimentReport run_construction_sweep(const Graph& g, const ConstructionSweepParams& params,
                                        const std::string& fixture_name) {
  if (params.seeds < 1) throw std::invalid_argument("construction sweep: seeds must be >= 1");
  const DominationInstance inst{g, params.k, params.r};
  const Feasibility feasible = feasibility(inst);
  if (!feasible.feasible) {
    throw std::invalid_argument("construction sweep: infeasible instance, vertex " +
                                std::to_string(*feasible.first_violator) +
                                " has fewer than r vertices within distance k");
  }
  const auto start = std::chrono::steady_clock::now();

  ExperimentReport report;
  report.kind = "construction";
  report.n = g.vertex_count();
  report.k = params.k;
  report.r = params.r;
  report.trials = params.seeds;
  report.master_seed = params.master_seed;
  report.fixture = fixture_name;

  report.trial_records = run_trials(params.seeds, params.threads, [&](int i) {
    TrialRecord record;
    record.trial_index = i;
    record.derived_seed = rng::derive_seed(params.master_seed, i);
    record.n = g.vertex_count();
    record.edge_count = g.edge_count();
    const ConstructionTrace literal = construct(g, params.k, params.r, record.derived_seed,
                                                AugmentationMode::kLiteral, params.degree_override);
    const ConstructionTrace economical =
        construct(g, params.k, params.r, record.derived_seed, AugmentationMode::kEconomical,
                  params.degree_override);
    record.literal_size = static_cast<int>(literal.final_set.size());
    record.economical_size = static_cast<int>(economical.final_set.size());
    record.bad_vertex_count = static_cast<int>(literal.bad_vertices.size());
    record.fixed_set_valid = is_total_kr_dominating(inst, literal.final_set).valid &&
                             is_total_kr_dominating(inst, economical.final_set).valid;
    return record;
  });

  ConstructionAggregate aggregate;
  aggregate.min_degree = params.degree_override.value_or(min_degree(g));
  aggregate.girth = girth(g);
  aggregate.hypotheses_hold =
      aggregate.min_degree >= 2 &&
      (!aggregate.girth.has_value() || *aggregate.girth >= 2 * params.k + 1);
  aggregate.size_bound =
      large_girth_bound(g.vertex_count(), aggregate.min_degree, params.k, params.r);
  aggregate.literal_min = aggregate.economical_min = g.vertex_count();
  aggregate.all_valid = true;
  double literal_total = 0.0, economical_total = 0.0;
  for (const TrialRecord& record : report.trial_records) {
    if (record.fixed_set_valid) ++report.success_count;
    aggregate.all_valid = aggregate.all_valid && record.fixed_set_valid;
    aggregate.literal_min = std::min(aggregate.literal_min, *record.literal_size);
    aggregate.literal_max = std::max(aggregate.literal_max, *record.literal_size);
    aggregate.economical_min = std::min(aggregate.economical_min, *record.economical_size);
    aggregate.economical_max = std::max(aggregate.economical_max, *record.economical_size);
    literal_total += *record.literal_size;
    economical_total += *record.economical_size;
  }
  aggregate.literal_mean = literal_total / params.seeds;
  aggregate.economical_mean = economical_total / params.seeds;

  if (binomial_capped(g.vertex_count(), params.r + 1, params.exact_cap) <= params.exact_cap) {
    const SolveOutcome exact = exact_gamma(inst);
    if (exact.status == SolveStatus::kFound) aggregate.gamma_exact = exact.result->size;
  }
  report.construction = aggregate;
  report.success_frequency = static_cast<double>(report.success_count) / params.seeds;
  report.wilson = wilson_interval(report.success_count, params.seeds);
  report.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace krdom
