#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "krdom/graph.hpp"

namespace krdom {

struct TrialRecord {
  int trial_index = 0;
  std::uint64_t derived_seed = 0;
  int n = 0;
  long long edge_count = 0;
  bool fixed_set_valid = false;
  std::optional<bool> no_smaller_set;   // r-subset enumeration, when enabled
  std::optional<int> gamma_exact;       // certified exactly when present
  int bad_vertex_count = 0;
  std::optional<int> literal_size;      // construction sweeps only
  std::optional<int> economical_size;
};

struct WilsonInterval {
  double lo = 0.0;
  double hi = 1.0;
};

// 95% score interval by default; well behaved near frequencies of 0 and 1.
WilsonInterval wilson_interval(long long successes, long long trials, double z = 1.96);

struct ConstructionAggregate {
  int literal_min = 0;
  double literal_mean = 0.0;
  int literal_max = 0;
  int economical_min = 0;
  double economical_mean = 0.0;
  int economical_max = 0;
  double size_bound = 0.0;  // large_girth_bound at the graph's parameters
  int min_degree = 0;
  std::optional<int> girth;
  bool hypotheses_hold = false;  // girth >= 2k+1 and min degree >= 2
  std::optional<int> gamma_exact;
  bool all_valid = false;
};

struct ExperimentReport {
  std::string kind;  // "threshold", "bad-vertex", "construction"
  // Parameters.
  int n = 0;
  int k = 0;
  int r = 0;
  long long trials = 0;
  double p = 0.0;
  double p_multiplier = 1.0;
  double threshold = 0.0;  // threshold_p for (n, k) before the multiplier
  std::uint64_t master_seed = 0;
  std::string fixture;  // construction sweeps only
  // Aggregates.
  long long success_count = 0;
  double success_frequency = 0.0;
  WilsonInterval wilson;
  double theoretical_failure_bound = 0.0;
  bool enumeration_enabled = false;
  long long gamma_confirmed_count = 0;
  std::optional<ConstructionAggregate> construction;
  std::vector<TrialRecord> trial_records;
  double runtime_ms = 0.0;
};

struct ThresholdExperimentParams {
  int n = 0;
  int k = 3;
  int r = 1;
  int trials = 0;
  double p_multiplier = 1.0;
  std::uint64_t master_seed = 0;
  double c2 = 1.01;                          // k = 2 threshold constant
  long long enumeration_cap = 1'000'000;     // max candidate r-subsets per trial
  int threads = 1;
};

// Samples G(n, p) at p = multiplier * threshold and tests whether the fixed
// set D = {0, ..., r} dominates; when C(n, r) fits under the cap, also
// certifies by enumeration that no r-subset works, pinning gamma to r+1.
// Success = the fixed set is a valid witness.
ExperimentReport run_threshold_experiment(const ThresholdExperimentParams& params);

struct BadVertexExperimentParams {
  int n = 0;
  int k = 3;
  int r = 1;
  int trials = 0;
  double p_multiplier = 1.0;
  std::uint64_t master_seed = 0;
  double c2 = 1.01;
  int threads = 1;
};

// Estimates P[vertex 0 has fewer than r of D within distance k] at the
// threshold edge probability; reported against r * n^(-9k/20).
ExperimentReport run_bad_vertex_experiment(const BadVertexExperimentParams& params);

struct ConstructionSweepParams {
  int k = 1;
  int r = 1;
  int seeds = 0;
  std::uint64_t master_seed = 0;
  std::optional<int> degree_override;
  long long exact_cap = 1'000'000;  // skip exact gamma when the search space is larger
  int threads = 1;
};

// Runs the randomized construction in both augmentation modes over many
// seeds; reports size statistics, the closed-form size bound, and the exact
// minimum when the instance is small enough.
ExperimentReport run_construction_sweep(const Graph& g, const ConstructionSweepParams& params,
                                        const std::string& fixture_name = "");

}  // namespace krdom
