#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>
#include <vector>

#include "krdom/domination.hpp"
#include "krdom/fixtures.hpp"
#include "krdom/random_graph.hpp"
#include "krdom/rng.hpp"
#include "oracles.hpp"

using krdom::DominationInstance;
using krdom::DominationResult;
using krdom::Graph;
using krdom::SolveStatus;

namespace {

Graph small_random(int trial) {
  const int n = 3 + static_cast<int>(krdom::rng::at(17, trial) % 10);  // 3..12
  const double p_choices[] = {0.2, 0.5, 0.8};
  const double p = p_choices[trial % 3];
  return krdom::sample_gnp({n, p, 6000 + static_cast<std::uint64_t>(trial)});
}

}  // namespace

TEST_CASE("dominator counts never include the vertex itself") {
  const Graph k4 = krdom::complete_graph(4);
  const std::vector<int> s01 = {0, 1};
  CHECK(krdom::dominator_count({k4, 1, 1}, s01, 0) == 1);
  CHECK(krdom::dominator_count({k4, 1, 1}, s01, 2) == 2);

  const Graph c6 = krdom::cycle_graph(6);
  const std::vector<int> s03 = {0, 3};
  CHECK(krdom::dominator_count({c6, 2, 1}, s03, 0) == 0);  // antipode at distance 3
  CHECK(krdom::dominator_count({c6, 2, 1}, s03, 1) == 2);

  CHECK_THROWS_AS(krdom::dominator_count({c6, 2, 1}, s03, 6), std::invalid_argument);
  CHECK_THROWS_AS(krdom::dominator_count({c6, 0, 1}, s03, 0), std::invalid_argument);
}

TEST_CASE("validity checks") {
  const Graph k4 = krdom::complete_graph(4);
  CHECK(krdom::is_total_kr_dominating({k4, 1, 1}, std::vector<int>{0, 1}).valid);

  const DominationResult two_needed =
      krdom::is_total_kr_dominating({k4, 1, 2}, std::vector<int>{0, 1});
  CHECK_FALSE(two_needed.valid);
  // Members 0 and 1 see only each other.
  CHECK(two_needed.deficiency == std::vector<int>{1, 1, 0, 0});
}

TEST_CASE("mcgee pair checks agree with distance brute force") {
  const Graph g = krdom::mcgee();
  const auto dist = oracles::floyd_warshall(g);
  for (int trial = 0; trial < 30; ++trial) {
    const int a = static_cast<int>(krdom::rng::at2(7, trial, 0) % 24);
    int b = static_cast<int>(krdom::rng::at2(7, trial, 1) % 24);
    if (b == a) b = (b + 1) % 24;
    const std::vector<int> pair = {std::min(a, b), std::max(a, b)};
    bool expected = true;
    for (int v = 0; v < 24; ++v) {
      int count = 0;
      for (int u : pair) {
        if (u != v && dist[u][v] <= 3) ++count;
      }
      expected = expected && count >= 1;
    }
    CHECK(krdom::is_total_kr_dominating({g, 3, 1}, pair).valid == expected);
  }
}

TEST_CASE("feasibility") {
  const Graph p2 = krdom::path_graph(2);
  const krdom::Feasibility infeasible = krdom::feasibility({p2, 1, 2});
  CHECK_FALSE(infeasible.feasible);
  CHECK(infeasible.first_violator == 0);

  CHECK(krdom::feasibility({krdom::complete_graph(4), 1, 3}).feasible);

  const Graph with_isolated = Graph::build(3, {{0, 1}});
  CHECK_FALSE(krdom::feasibility({with_isolated, 4, 1}).feasible);
  CHECK(krdom::feasibility({with_isolated, 4, 1}).first_violator == 2);
}

TEST_CASE("exact solver on fixed instances") {
  const auto k6 = krdom::complete_graph(6);
  const auto r2 = krdom::exact_gamma({k6, 1, 2});
  REQUIRE(r2.status == SolveStatus::kFound);
  CHECK(r2.result->size == 3);
  CHECK(r2.result->witness == std::vector<int>{0, 1, 2});

  const Graph c6 = krdom::cycle_graph(6);
  const auto total = krdom::exact_gamma({c6, 1, 1});
  REQUIRE(total.status == SolveStatus::kFound);
  CHECK(total.result->size == 4);

  const auto distance2 = krdom::exact_gamma({c6, 2, 1});
  REQUIRE(distance2.status == SolveStatus::kFound);
  CHECK(distance2.result->size == 2);
  CHECK(distance2.result->witness == std::vector<int>{0, 1});
  CHECK(krdom::is_total_kr_dominating({c6, 2, 1}, distance2.result->witness).valid);

  CHECK(krdom::exact_gamma({krdom::path_graph(2), 1, 2}).status == SolveStatus::kInfeasible);
  CHECK(krdom::exact_gamma({c6, 1, 1}, 3).status == SolveStatus::kCapExceeded);
}

TEST_CASE("exact solver equals full enumeration on small random graphs") {
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = small_random(trial);
    for (int k = 1; k <= 3; ++k) {
      for (int r = 1; r <= 2; ++r) {
        const auto expected = oracles::brute_force_gamma(g, k, r);
        const auto got = krdom::exact_gamma({g, k, r});
        if (!expected) {
          CHECK(got.status == SolveStatus::kInfeasible);
          continue;
        }
        REQUIRE(got.status == SolveStatus::kFound);
        CHECK(got.result->size == expected->size);
        CHECK(got.result->witness == expected->witness);
        CHECK(krdom::is_total_kr_dominating({g, k, r}, got.result->witness).valid);
      }
    }
  }
}

TEST_CASE("universal lower bound and monotonicity") {
  for (int trial = 0; trial < 25; ++trial) {
    const Graph g = small_random(trial + 100);
    for (int r = 1; r <= 2; ++r) {
      std::optional<int> previous_k;
      for (int k = 1; k <= 3; ++k) {
        const auto outcome = krdom::exact_gamma({g, k, r});
        if (outcome.status != SolveStatus::kFound) continue;
        CHECK(outcome.result->size >= r + 1);
        // Larger k never increases the optimum.
        if (previous_k) CHECK(outcome.result->size <= *previous_k);
        previous_k = outcome.result->size;
      }
    }
    for (int k = 1; k <= 3; ++k) {
      const auto r1 = krdom::exact_gamma({g, k, 1});
      const auto r2 = krdom::exact_gamma({g, k, 2});
      if (r1.status == SolveStatus::kFound && r2.status == SolveStatus::kFound) {
        CHECK(r1.result->size <= r2.result->size);
      }
    }
  }
}

TEST_CASE("greedy heuristic") {
  const auto k4 = krdom::complete_graph(4);
  const auto greedy_k4 = krdom::greedy_heuristic({k4, 1, 1});
  REQUIRE(greedy_k4.status == SolveStatus::kFound);
  CHECK(greedy_k4.result->size == 2);

  const Graph c6 = krdom::cycle_graph(6);
  const auto greedy_c6 = krdom::greedy_heuristic({c6, 1, 1});
  REQUIRE(greedy_c6.status == SolveStatus::kFound);
  CHECK(greedy_c6.result->valid);
  CHECK(greedy_c6.result->size >= 4);

  CHECK(krdom::greedy_heuristic({krdom::path_graph(2), 1, 2}).status == SolveStatus::kInfeasible);

  for (int trial = 0; trial < 25; ++trial) {
    const Graph g = small_random(trial + 200);
    for (int k = 1; k <= 2; ++k) {
      for (int r = 1; r <= 2; ++r) {
        const auto greedy = krdom::greedy_heuristic({g, k, r});
        const auto exact = krdom::exact_gamma({g, k, r});
        CHECK(greedy.status == exact.status);
        if (greedy.status != SolveStatus::kFound) continue;
        CHECK(krdom::is_total_kr_dominating({g, k, r}, greedy.result->witness).valid);
        CHECK(greedy.result->size >= exact.result->size);
      }
    }
  }
}

TEST_CASE("lazy cover subset checks match the full validity check") {
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = small_random(trial + 300);
    const int n = g.vertex_count();
    for (int k = 1; k <= 2; ++k) {
      krdom::LazyCover cover(g, k);
      for (int r = 1; r <= 2; ++r) {
        for (int pick = 0; pick < 12; ++pick) {
          std::vector<int> subset;
          for (int v = 0; v < n; ++v) {
            if (krdom::rng::at2(400 + trial, pick, v) % 3 == 0) subset.push_back(v);
          }
          CHECK(krdom::subset_dominates(cover, subset, r) ==
                krdom::is_total_kr_dominating({g, k, r}, subset).valid);
        }
      }
    }
  }
}
