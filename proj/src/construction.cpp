#include "krdom/construction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "krdom/domination.hpp"
#include "krdom/rng.hpp"

namespace krdom {

ConstructionTrace construct(const Graph& g, int k, int r, std::uint64_t seed,
                            AugmentationMode mode, std::optional<int> degree_override) {
  const DominationInstance inst{g, k, r};
  const Feasibility feasible = feasibility(inst);
  if (!feasible.feasible) {
    throw std::invalid_argument("construct: infeasible instance, vertex " +
                                std::to_string(*feasible.first_violator) +
                                " has fewer than r vertices within distance k");
  }
  const int d = degree_override.value_or(min_degree(g));
  if (d < 2) throw std::invalid_argument("construct: minimum degree must be >= 2");

  const int n = g.vertex_count();
  ConstructionTrace trace;
  trace.mode = mode;
  trace.min_degree_used = d;
  trace.p_raw = 2.0 * r / std::pow(d - 1, k);
  trace.p_clamped = trace.p_raw > 1.0;
  trace.p_used = trace.p_clamped ? 1.0 : trace.p_raw;

  std::vector<char> in_sample(n, 0);
  for (int v = 0; v < n; ++v) {
    if (rng::unit(rng::at(seed, v)) < trace.p_used) {
      in_sample[v] = 1;
      trace.sampled.push_back(v);
    }
  }

  // Neighborhood lists double as sorted repair candidates.
  std::vector<std::vector<int>> cover(n);
  std::vector<int> counts(n, 0);
  for (int v = 0; v < n; ++v) cover[v] = k_neighborhood(g, v, k);
  for (int u : trace.sampled) {
    for (int v : cover[u]) ++counts[v];
  }
  for (int v = 0; v < n; ++v) {
    if (counts[v] <= r - 1) trace.bad_vertices.push_back(v);
  }

  std::vector<char> in_final = in_sample;
  std::vector<char> in_augmentation(n, 0);
  const auto add_to_final = [&](int w) {
    if (!in_augmentation[w]) {
      in_augmentation[w] = 1;
      trace.augmentation.push_back(w);
    }
    if (!in_final[w]) {
      in_final[w] = 1;
      for (int x : cover[w]) ++counts[x];
    }
  };

  for (int v : trace.bad_vertices) {
    if (mode == AugmentationMode::kLiteral) {
      for (int i = 0; i < r; ++i) add_to_final(cover[v][i]);
    } else {
      for (int w : cover[v]) {
        if (counts[v] >= r) break;
        if (!in_final[w]) add_to_final(w);
      }
    }
  }

  std::sort(trace.augmentation.begin(), trace.augmentation.end());
  for (int v = 0; v < n; ++v) {
    if (in_final[v]) trace.final_set.push_back(v);
  }
  return trace;
}

double large_girth_bound(int n, int d, int k, int r) {
  if (d < 2) throw std::invalid_argument("large_girth_bound: d must be >= 2");
  if (n < 0 || k < 1 || r < 1) throw std::invalid_argument("large_girth_bound: bad parameters");
  const double nr = static_cast<double>(n) * r;
  return 2.0 * nr / std::pow(d - 1, k) + nr * std::exp(-r / 4.0);
}

std::optional<double> chernoff_tail(double p, double m, double r) {
  const double mean = p * m;
  if (!(mean > r)) return std::nullopt;
  const double eps = 1.0 - r / mean;
  return std::exp(-eps * eps * mean / 2.0);
}

}  // namespace krdom
