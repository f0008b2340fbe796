#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "krdom/bounds.hpp"
#include "krdom/random_graph.hpp"

TEST_CASE("log-gamma binomials match exact values") {
  CHECK(krdom::binomial(8, 2) == doctest::Approx(28.0).epsilon(1e-9));
  CHECK(krdom::binomial(50, 25) == doctest::Approx(126410606437752.0).epsilon(1e-9));
  CHECK(krdom::binomial(5, 0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(krdom::binomial(5, 6) == 0.0);
  CHECK(krdom::binomial(5, -1) == 0.0);
  const double huge = krdom::log_binomial(1'000'000, 2);
  CHECK(huge == doctest::Approx(std::log(999999.0 * 1000000.0 / 2.0)).epsilon(1e-9));
}

TEST_CASE("path-count expectation") {
  const krdom::JansonMu mu = krdom::janson_mu(10, 3, 0.5);
  CHECK(mu.exact == doctest::Approx(3.5).epsilon(1e-9));
  CHECK(mu.floor == doctest::Approx(0.9 * 3 * std::log(10.0)).epsilon(1e-12));

  CHECK(krdom::janson_mu(10, 3, 0.0).exact == 0.0);

  // At the threshold probability the exact expectation dominates the
  // closed-form lower estimate.
  const double p = krdom::threshold_p(10'000, 3).p;
  const krdom::JansonMu at_threshold = krdom::janson_mu(10'000, 3, p);
  CHECK(at_threshold.floor == doctest::Approx(24.8679).epsilon(1e-4));
  CHECK(at_threshold.exact >= at_threshold.floor);

  CHECK_THROWS_AS(krdom::janson_mu(3, 3, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(krdom::janson_mu(10, 1, 0.5), std::invalid_argument);
}

TEST_CASE("pairwise dependency mass") {
  // k=2 has the single t=1 term C(3,1)*C(2,1)*C(3,0)*p^3.
  CHECK(krdom::janson_delta(5, 2, 0.5) == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(krdom::janson_delta(5, 2, 0.0) == 0.0);

  // Strictly decreasing along the threshold curve.
  const std::vector<long long> grid = {1'000,     10'000,     100'000,    1'000'000,
                                       10'000'000, 100'000'000};
  double previous = std::numeric_limits<double>::infinity();
  for (long long n : grid) {
    const double delta = krdom::janson_delta(n, 3, krdom::threshold_p(n, 3).p);
    CHECK(delta < previous);
    previous = delta;
  }
}

TEST_CASE("probability bound") {
  const krdom::JansonBound unit = krdom::janson_probability_bound(0.0, 0.0);
  CHECK(unit.raw == 1.0);
  CHECK(unit.simplified == 1.0);
  CHECK_FALSE(unit.simplified_applicable);

  const krdom::JansonBound mid = krdom::janson_probability_bound(2.0, 1.0);
  CHECK(mid.raw == doctest::Approx(std::exp(-1.5)).epsilon(1e-12));
  CHECK(mid.simplified_applicable);

  const double mu = 0.9 * 3 * std::log(100.0);
  CHECK(krdom::janson_probability_bound(mu, 0.0).simplified ==
        doctest::Approx(0.001995262314968878).epsilon(1e-12));

  CHECK_THROWS_AS(krdom::janson_probability_bound(-1.0, 0.0), std::invalid_argument);
}

TEST_CASE("failure bound") {
  const krdom::FailureBound fb = krdom::failure_bound(100, 3, 2);
  CHECK(fb.value == doctest::Approx(0.3990524629937758).epsilon(1e-12));
  CHECK(fb.conclusive);

  // Monotone decreasing in n for k >= 3, and decreasing in k.
  double previous = std::numeric_limits<double>::infinity();
  for (long long n : {10LL, 100LL, 1000LL, 10000LL, 100000LL}) {
    const double value = krdom::failure_bound(n, 3, 1).value;
    CHECK(value < previous);
    previous = value;
  }
  for (long long n : {100LL, 1000LL}) {
    double by_k = std::numeric_limits<double>::infinity();
    for (int k = 3; k <= 6; ++k) {
      const double value = krdom::failure_bound(n, k, 2).value;
      CHECK(value < by_k);
      by_k = value;
    }
  }

  // k=2 leaves a positive exponent: the bound grows with n and proves
  // nothing.
  const krdom::FailureBound k2 = krdom::failure_bound(100, 2, 1);
  CHECK_FALSE(k2.conclusive);
  CHECK(krdom::failure_bound(1000, 2, 1).value > k2.value);
}

TEST_CASE("calculators are pure") {
  for (int i = 0; i < 3; ++i) {
    CHECK(krdom::janson_mu(5000, 3, 0.01).exact == krdom::janson_mu(5000, 3, 0.01).exact);
    CHECK(krdom::janson_delta(5000, 3, 0.01) == krdom::janson_delta(5000, 3, 0.01));
    CHECK(krdom::failure_bound(5000, 3, 2).value == krdom::failure_bound(5000, 3, 2).value);
  }
}

TEST_CASE("expectation dominates its closed-form floor from small n onward") {
  // In the clamped-threshold regime (tiny n) the floor can win; report the
  // first grid point from which mu_exact >= 0.9*k*ln n holds for good.
  const std::vector<long long> grid = {4,     6,      10,      100,      1'000,
                                       10'000, 100'000, 1'000'000};
  long long first_ok = -1;
  for (long long n : grid) {
    const krdom::JansonMu mu = krdom::janson_mu(n, 3, krdom::threshold_p(n, 3).p);
    if (mu.exact >= mu.floor) {
      if (first_ok < 0) first_ok = n;
    } else {
      first_ok = -1;
    }
  }
  INFO("mu_exact >= 0.9k ln n holds from n = ", first_ok, " onward on this grid");
  CHECK(first_ok > 0);
  CHECK(first_ok <= 10);
}

TEST_CASE("dependency mass falls below the expectation only for very large n") {
  // Along the threshold curve the crossover happens between 2e6 and 5e6;
  // report the first grid point from which delta < mu holds.
  const std::vector<long long> grid = {1'000,     10'000,     100'000,   1'000'000,
                                       2'000'000, 5'000'000, 10'000'000, 100'000'000};
  long long first_ok = -1;
  for (long long n : grid) {
    const double p = krdom::threshold_p(n, 3).p;
    const double mu = krdom::janson_mu(n, 3, p).exact;
    const double delta = krdom::janson_delta(n, 3, p);
    if (delta < mu && first_ok < 0) first_ok = n;
    if (first_ok >= 0) CHECK(delta < mu);
  }
  INFO("delta < mu holds from n = ", first_ok, " onward on this grid");
  CHECK(first_ok == 5'000'000);
}

TEST_CASE("diagnostics bundle") {
  const double p = krdom::threshold_p(1000, 3).p;
  const krdom::JansonDiagnostics diag = krdom::janson_diagnostics(1000, 3, 2, p);
  CHECK(diag.mu_exact == doctest::Approx(krdom::janson_mu(1000, 3, p).exact));
  CHECK(diag.delta_explicit == doctest::Approx(krdom::janson_delta(1000, 3, p)));
  CHECK(diag.failure_bound_value == doctest::Approx(krdom::failure_bound(1000, 3, 2).value));
  CHECK_FALSE(diag.p_below_threshold);
  // At desk scale the dependency mass exceeds the expectation, so the raw
  // probability bound is vacuous and must carry the flag rather than be
  // silently clamped.
  CHECK(diag.delta_explicit > diag.mu_exact);
  CHECK(diag.janson_bound_raw > 1.0);
  CHECK(diag.janson_bound_exceeds_one);

  const krdom::JansonDiagnostics below = krdom::janson_diagnostics(1000, 3, 2, p / 2);
  CHECK(below.p_below_threshold);
}
