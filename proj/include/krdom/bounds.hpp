#pragma once

namespace krdom {

// ln C(n, k); -inf when k < 0 or k > n. Log-gamma based so that counts at
// n ~ 10^6 stay in range; relative error budget 1e-9.
double log_binomial(long long n, long long k);
double binomial(long long n, long long k);

struct JansonMu {
  double exact = 0.0;  // C(n-2, k-1) * p^k
  double floor = 0.0;  // 0.9 * k * ln n
};

// Expected number of u-v connecting paths of length k in G(n, p), plus the
// closed-form lower estimate it is compared against.
JansonMu janson_mu(long long n, int k, double p);

// Pairwise dependency mass between path events sharing edges:
// C(n-2, k-1) * sum_{t=1}^{k-1} C(k, t) * C(n-2, k-1-t) * p^(2k-t).
double janson_delta(long long n, int k, double p);

struct JansonBound {
  double raw = 0.0;         // e^{-mu + delta/2}
  double simplified = 0.0;  // e^{-mu/2}
  bool simplified_applicable = false;  // delta < mu
};

JansonBound janson_probability_bound(double mu, double delta);

struct FailureBound {
  double value = 0.0;      // r * n^(1 - 9k/20)
  bool conclusive = false;  // exponent negative, i.e. bound shrinks with n
};

// Bound on the probability that some vertex has fewer than r dominators at
// the threshold edge probability.
FailureBound failure_bound(long long n, int k, long long r);

// All calculators evaluated on one parameter tuple.
struct JansonDiagnostics {
  long long n = 0;
  int k = 0;
  long long r = 0;
  double p = 0.0;
  double mu_exact = 0.0;
  double mu_floor = 0.0;
  double delta_explicit = 0.0;
  double janson_bound_raw = 0.0;
  bool janson_bound_exceeds_one = false;
  double failure_bound_value = 0.0;
  bool failure_bound_conclusive = false;
  bool p_below_threshold = false;
};

JansonDiagnostics janson_diagnostics(long long n, int k, long long r, double p);

}  // namespace krdom
