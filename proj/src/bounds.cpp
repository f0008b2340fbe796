#include "krdom/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "krdom/random_graph.hpp"

namespace krdom {

double log_binomial(long long n, long long k) {
  if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
  return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

double binomial(long long n, long long k) { return std::exp(log_binomial(n, k)); }

namespace {

void validate_mu_delta_args(long long n, int k, double p) {
  if (k < 2) throw std::invalid_argument("janson: k must be >= 2");
  if (n < k + 1) throw std::invalid_argument("janson: n must be >= k + 1");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("janson: p must lie in [0, 1]");
}

}  // namespace

JansonMu janson_mu(long long n, int k, double p) {
  validate_mu_delta_args(n, k, p);
  JansonMu out;
  out.floor = 0.9 * k * std::log(static_cast<double>(n));
  out.exact = p == 0.0 ? 0.0 : std::exp(log_binomial(n - 2, k - 1) + k * std::log(p));
  return out;
}

double janson_delta(long long n, int k, double p) {
  validate_mu_delta_args(n, k, p);
  if (p == 0.0) return 0.0;
  const double log_p = std::log(p);
  const double lead = log_binomial(n - 2, k - 1);
  double sum = 0.0;
  for (int t = 1; t <= k - 1; ++t) {
    const double term =
        log_binomial(k, t) + log_binomial(n - 2, k - 1 - t) + (2 * k - t) * log_p;
    if (std::isfinite(term)) sum += std::exp(lead + term);
  }
  return sum;
}

JansonBound janson_probability_bound(double mu, double delta) {
  if (mu < 0.0 || delta < 0.0) {
    throw std::invalid_argument("janson_probability_bound: mu and delta must be non-negative");
  }
  JansonBound out;
  out.raw = std::exp(-mu + delta / 2.0);
  out.simplified = std::exp(-mu / 2.0);
  out.simplified_applicable = delta < mu;
  return out;
}

FailureBound failure_bound(long long n, int k, long long r) {
  if (n < 1 || k < 2 || r < 1) throw std::invalid_argument("failure_bound: bad parameters");
  const double exponent = 1.0 - 0.45 * k;
  FailureBound out;
  out.value = static_cast<double>(r) * std::pow(static_cast<double>(n), exponent);
  out.conclusive = exponent < 0.0;
  return out;
}

JansonDiagnostics janson_diagnostics(long long n, int k, long long r, double p) {
  JansonDiagnostics out;
  out.n = n;
  out.k = k;
  out.r = r;
  out.p = p;
  const JansonMu mu = janson_mu(n, k, p);
  out.mu_exact = mu.exact;
  out.mu_floor = mu.floor;
  out.delta_explicit = janson_delta(n, k, p);
  out.janson_bound_raw = janson_probability_bound(mu.exact, out.delta_explicit).raw;
  out.janson_bound_exceeds_one = out.janson_bound_raw > 1.0;
  const FailureBound failure = failure_bound(n, k, r);
  out.failure_bound_value = failure.value;
  out.failure_bound_conclusive = failure.conclusive;
  out.p_below_threshold = p < threshold_p(n, k).raw;
  return out;
}

}  // namespace krdom
