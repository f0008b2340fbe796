#include "krdom/random_graph.hpp"

#include <cmath>
#include <stdexcept>

#include "krdom/rng.hpp"

namespace krdom {

Graph sample_gnp(const GnpSpec& spec) {
  if (spec.n < 0) throw std::invalid_argument("gnp: n must be non-negative");
  if (!(spec.p >= 0.0 && spec.p <= 1.0)) {
    throw std::invalid_argument("gnp: p must lie in [0, 1]");
  }
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < spec.n; ++u) {
    for (int v = u + 1; v < spec.n; ++v) {
      if (rng::unit(rng::at2(spec.seed, u, v)) < spec.p) edges.emplace_back(u, v);
    }
  }
  return Graph::build(spec.n, edges);
}

Threshold threshold_p(long long n, int k, double c2) {
  if (k < 2) throw std::invalid_argument("threshold_p: k must be >= 2");
  if (n < 2) throw std::invalid_argument("threshold_p: need ln n > 0, so n >= 2");
  const double log_n = std::log(static_cast<double>(n));
  double raw = 0.0;
  if (k == 2) {
    if (!(c2 > 1.0)) throw std::invalid_argument("threshold_p: k = 2 requires c2 > 1");
    raw = c2 * std::sqrt(log_n / static_cast<double>(n));
  } else {
    raw = k * std::pow(log_n / std::pow(static_cast<double>(n), k - 1), 1.0 / k);
  }
  Threshold out;
  out.raw = raw;
  out.clamped = raw > 1.0;
  out.p = out.clamped ? 1.0 : raw;
  return out;
}

DiameterThreshold bollobas_p(long long n, double c, int d) {
  if (n < 2) throw std::invalid_argument("bollobas_p: n must be >= 2");
  if (!(c > 0.0)) throw std::invalid_argument("bollobas_p: c must be positive");
  if (d < 2) throw std::invalid_argument("bollobas_p: d must be >= 2");
  const double log_arg = 2.0 * std::log(static_cast<double>(n)) - std::log(c);
  if (!(log_arg > 0.0)) throw std::invalid_argument("bollobas_p: ln(n^2/c) must be positive");
  DiameterThreshold out;
  out.p = std::pow(log_arg / std::pow(static_cast<double>(n), d - 1), 1.0 / d);
  out.diameter_probability = std::exp(-c / 2.0);
  return out;
}

ThresholdComparison compare_thresholds(long long n, int d, double c, double eps) {
  if (n < 2) throw std::invalid_argument("compare_thresholds: n must be >= 2");
  if (d < 2) throw std::invalid_argument("compare_thresholds: d must be >= 2");
  if (!(c > 0.0)) throw std::invalid_argument("compare_thresholds: c must be positive");
  const double log_n = std::log(static_cast<double>(n));
  const double log_arg = 2.0 * log_n - std::log(c);
  if (!(log_arg > 0.0)) {
    throw std::invalid_argument("compare_thresholds: ln(n^2/c) must be positive");
  }
  ThresholdComparison out;
  out.weakened_p = d * std::pow(log_n / std::pow(static_cast<double>(n), d - 1), 1.0 / d);
  out.diameter_p = std::pow(log_arg / std::pow(static_cast<double>(n), d - 2), 1.0 / (d - 1));
  out.weakened_below_diameter = out.weakened_p < out.diameter_p;
  out.small_d_regime = static_cast<double>(d) <= std::pow(log_n, eps);
  return out;
}

}  // namespace krdom
