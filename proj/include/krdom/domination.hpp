#pragma once

#include <optional>
#include <span>
#include <vector>

#include "krdom/bitset.hpp"
#include "krdom/graph.hpp"

namespace krdom {

// A total (k, r)-domination problem: every vertex must have at least r
// members of the chosen set within distance k, never counting itself.
struct DominationInstance {
  const Graph& graph;
  int k = 1;
  int r = 1;
};

struct DominationResult {
  std::vector<int> witness;     // sorted vertex ids
  int size = 0;                 // |witness|
  bool valid = false;           // all deficiencies zero
  std::vector<int> deficiency;  // per vertex, max(0, r - |N_k(v) ∩ S|)
};

// |N_k(v) ∩ S|; v itself never counts even when v is in S.
int dominator_count(const DominationInstance& inst, std::span<const int> candidate_set, int v);

// Full validity check with the per-vertex deficiency map.
DominationResult is_total_kr_dominating(const DominationInstance& inst,
                                        std::span<const int> candidate_set);

struct Feasibility {
  bool feasible = false;
  std::optional<int> first_violator;  // smallest id with |N_k(v)| < r
};

// A total (k, r)-dominating set exists iff |N_k(v)| >= r for every v
// (the full vertex set then works).
Feasibility feasibility(const DominationInstance& inst);

enum class SolveStatus { kFound, kInfeasible, kCapExceeded };

struct SolveOutcome {
  SolveStatus status = SolveStatus::kInfeasible;
  std::optional<DominationResult> result;  // present iff status == kFound
};

// Minimum-size witness by iterative deepening over sizes r+1, r+2, ...;
// the witness is the lexicographically least set of minimum size. Search
// stops with kCapExceeded once the size would exceed `size_cap`
// (default: n, at which the full vertex set settles feasible instances).
SolveOutcome exact_gamma(const DominationInstance& inst, std::optional<int> size_cap = {});

// Repeatedly adds the vertex covering the most residual deficiency
// (ties to the smallest id); valid on every feasible instance.
SolveOutcome greedy_heuristic(const DominationInstance& inst);

// N_k rows materialized on first use; shared across many subset checks.
class LazyCover {
 public:
  LazyCover(const Graph& g, int k);
  const DynBitset& row(int v);
  int vertex_count() const { return graph_.vertex_count(); }

 private:
  const Graph& graph_;
  int k_;
  std::vector<DynBitset> rows_;
  std::vector<char> ready_;
};

// Validity of `candidate_set` checked vertex by vertex (members first, so
// doomed sets fail fast) using only the members' neighborhood rows.
bool subset_dominates(LazyCover& cover, std::span<const int> candidate_set, int r);

}  // namespace krdom
