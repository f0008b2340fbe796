#pragma once

#include <cstdint>

#include "krdom/graph.hpp"

namespace krdom {

// G(n, p): each of the C(n, 2) unordered pairs present independently with
// probability p. Sampling is keyed per pair on (seed, u, v), so identical
// specs give identical graphs and raising p with the same seed only ever
// adds edges.
struct GnpSpec {
  int n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
};

Graph sample_gnp(const GnpSpec& spec);

struct Threshold {
  double p = 0.0;     // raw clamped to 1
  double raw = 0.0;   // formula value, possibly > 1
  bool clamped = false;
};

// Edge probability above which gamma^t_(k,r)(G(n,p)) concentrates at r+1:
// k*(ln n / n^(k-1))^(1/k) for k >= 3, and c2*sqrt(ln n / n) for k = 2
// (c2 > 1). Natural logarithms throughout.
Threshold threshold_p(long long n, int k, double c2 = 1.01);

struct DiameterThreshold {
  double p = 0.0;
  double diameter_probability = 0.0;  // limit of P[diam = d], equals e^{-c/2}
};

// Solves p^d * n^(d-1) = ln(n^2 / c) for p; requires ln(n^2 / c) > 0.
DiameterThreshold bollobas_p(long long n, double c, int d);

struct ThresholdComparison {
  double weakened_p = 0.0;   // d*(ln n / n^(d-1))^(1/d)
  double diameter_p = 0.0;   // (ln(n^2/c) / n^(d-2))^(1/(d-1))
  bool weakened_below_diameter = false;
  bool small_d_regime = false;  // d <= (ln n)^eps
};

ThresholdComparison compare_thresholds(long long n, int d, double c, double eps);

}  // namespace krdom
