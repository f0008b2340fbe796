#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "krdom/graph.hpp"

namespace krdom {

enum class AugmentationMode {
  kLiteral,     // every bad vertex contributes r repair vertices
  kEconomical,  // only top up the residual deficit
};

struct ConstructionTrace {
  double p_used = 0.0;  // min(1, 2r/(d-1)^k)
  double p_raw = 0.0;
  bool p_clamped = false;
  int min_degree_used = 0;
  AugmentationMode mode = AugmentationMode::kLiteral;
  std::vector<int> sampled;       // S, each vertex kept with probability p
  std::vector<int> bad_vertices;  // fewer than r sampled dominators in N_k
  std::vector<int> augmentation;  // A, repair vertices
  std::vector<int> final_set;     // S ∪ A, always a valid witness
};

// Randomized witness: sample each vertex with p = min(1, 2r/(d-1)^k) where
// d is the minimum degree (or `degree_override`), then repair every bad
// vertex from the smallest ids of its k-neighborhood. Bad vertices are
// judged against the sample only and processed in ascending id; in
// economical mode earlier repairs count toward later deficits. Requires a
// feasible instance and d >= 2.
ConstructionTrace construct(const Graph& g, int k, int r, std::uint64_t seed,
                            AugmentationMode mode = AugmentationMode::kLiteral,
                            std::optional<int> degree_override = {});

// 2nr/(d-1)^k + n*r*e^{-r/4}: expected witness size of the construction on
// graphs with minimum degree d and girth at least 2k+1.
double large_girth_bound(int n, int d, int k, int r);

// Lower-tail bound e^{-eps^2*p*m/2} with eps = 1 - r/(pm) for a binomial
// count of m trials at rate p staying below r; nullopt when pm <= r.
std::optional<double> chernoff_tail(double p, double m, double r);

}  // namespace krdom
