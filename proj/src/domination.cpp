#include "krdom/domination.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace krdom {

namespace {

void validate_instance(const DominationInstance& inst) {
  if (inst.k < 1) throw std::invalid_argument("domination: k must be >= 1");
  if (inst.r < 1) throw std::invalid_argument("domination: r must be >= 1");
}

// Sorted, deduplicated, range-checked copy of a candidate set.
std::vector<int> normalize_set(const Graph& g, std::span<const int> candidate_set) {
  std::vector<int> out(candidate_set.begin(), candidate_set.end());
  for (int v : out) {
    if (v < 0 || v >= g.vertex_count()) {
      throw std::invalid_argument("candidate set contains vertex " + std::to_string(v) +
                                  " out of range [0, " + std::to_string(g.vertex_count()) + ")");
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// counts[v] = |N_k(v) ∩ S|, accumulated by one bounded BFS per member.
std::vector<int> dominator_counts(const DominationInstance& inst, const std::vector<int>& members) {
  std::vector<int> counts(inst.graph.vertex_count(), 0);
  for (int u : members) {
    const DistanceVector d = bfs_distances_bounded(inst.graph, u, inst.k);
    for (int v = 0; v < inst.graph.vertex_count(); ++v) {
      if (d.reachable(v) && d.dist[v] >= 1 && d.dist[v] <= inst.k) ++counts[v];
    }
  }
  return counts;
}

}  // namespace

int dominator_count(const DominationInstance& inst, std::span<const int> candidate_set, int v) {
  validate_instance(inst);
  if (v < 0 || v >= inst.graph.vertex_count()) {
    throw std::invalid_argument("dominator_count: vertex " + std::to_string(v) + " out of range");
  }
  const std::vector<int> members = normalize_set(inst.graph, candidate_set);
  const DistanceVector d = bfs_distances_bounded(inst.graph, v, inst.k);
  int count = 0;
  for (int u : members) {
    if (u != v && d.reachable(u) && d.dist[u] <= inst.k) ++count;
  }
  return count;
}

DominationResult is_total_kr_dominating(const DominationInstance& inst,
                                        std::span<const int> candidate_set) {
  validate_instance(inst);
  DominationResult out;
  out.witness = normalize_set(inst.graph, candidate_set);
  out.size = static_cast<int>(out.witness.size());
  const std::vector<int> counts = dominator_counts(inst, out.witness);
  out.deficiency.resize(inst.graph.vertex_count());
  out.valid = true;
  for (int v = 0; v < inst.graph.vertex_count(); ++v) {
    out.deficiency[v] = std::max(0, inst.r - counts[v]);
    if (out.deficiency[v] > 0) out.valid = false;
  }
  return out;
}

Feasibility feasibility(const DominationInstance& inst) {
  validate_instance(inst);
  for (int v = 0; v < inst.graph.vertex_count(); ++v) {
    const int neighborhood = static_cast<int>(k_neighborhood(inst.graph, v, inst.k).size());
    if (neighborhood < inst.r) return {false, v};
  }
  return {true, std::nullopt};
}

namespace {

class DeepeningSearch {
 public:
  DeepeningSearch(const DominationInstance& inst)
      : n_(inst.graph.vertex_count()),
        r_(inst.r),
        cover_(n_),
        counts_(n_, 0),
        total_deficiency_(static_cast<long long>(n_) * inst.r) {
    for (int v = 0; v < n_; ++v) {
      cover_[v] = k_neighborhood(inst.graph, v, inst.k);
      max_cover_ = std::max(max_cover_, static_cast<int>(cover_[v].size()));
    }
  }

  std::optional<std::vector<int>> find_of_size(int target) {
    target_ = target;
    found_ = false;
    chosen_.clear();
    descend(0);
    if (found_) return witness_;
    return std::nullopt;
  }

 private:
  void add(int u) {
    for (int v : cover_[u]) {
      if (counts_[v] < r_) --total_deficiency_;
      ++counts_[v];
    }
    chosen_.push_back(u);
  }

  void remove(int u) {
    chosen_.pop_back();
    for (int v : cover_[u]) {
      --counts_[v];
      if (counts_[v] < r_) ++total_deficiency_;
    }
  }

  // Lexicographic DFS over index-increasing subsets of size target_;
  // the first witness found is the lexicographically least.
  void descend(int start) {
    if (total_deficiency_ == 0) {
      witness_ = chosen_;
      found_ = true;
      return;
    }
    const int remaining = target_ - static_cast<int>(chosen_.size());
    if (remaining == 0) return;
    // Each added vertex reduces the total deficiency by at most max_cover_.
    if (static_cast<long long>(remaining) * max_cover_ < total_deficiency_) return;
    for (int u = start; u <= n_ - remaining; ++u) {
      add(u);
      descend(u + 1);
      remove(u);
      if (found_) return;
    }
  }

  int n_;
  int r_;
  std::vector<std::vector<int>> cover_;
  std::vector<int> counts_;
  long long total_deficiency_;
  int max_cover_ = 0;
  int target_ = 0;
  bool found_ = false;
  std::vector<int> chosen_;
  std::vector<int> witness_;
};

DominationResult valid_result(const DominationInstance& inst, std::vector<int> witness) {
  DominationResult out;
  out.witness = std::move(witness);
  out.size = static_cast<int>(out.witness.size());
  out.valid = true;
  out.deficiency.assign(inst.graph.vertex_count(), 0);
  return out;
}

}  // namespace

SolveOutcome exact_gamma(const DominationInstance& inst, std::optional<int> size_cap) {
  validate_instance(inst);
  if (inst.graph.vertex_count() == 0) return {SolveStatus::kFound, valid_result(inst, {})};
  if (!feasibility(inst).feasible) return {SolveStatus::kInfeasible, std::nullopt};
  const int cap = size_cap.value_or(inst.graph.vertex_count());
  DeepeningSearch search(inst);
  for (int size = inst.r + 1; size <= cap; ++size) {
    if (auto witness = search.find_of_size(size)) {
      return {SolveStatus::kFound, valid_result(inst, *std::move(witness))};
    }
  }
  return {SolveStatus::kCapExceeded, std::nullopt};
}

SolveOutcome greedy_heuristic(const DominationInstance& inst) {
  validate_instance(inst);
  if (!feasibility(inst).feasible) return {SolveStatus::kInfeasible, std::nullopt};
  const int n = inst.graph.vertex_count();
  std::vector<std::vector<int>> cover(n);
  for (int v = 0; v < n; ++v) cover[v] = k_neighborhood(inst.graph, v, inst.k);

  std::vector<int> counts(n, 0);
  std::vector<char> in_set(n, 0);
  std::vector<int> witness;
  long long total_deficiency = static_cast<long long>(n) * inst.r;

  while (total_deficiency > 0) {
    int best = -1;
    long long best_gain = 0;
    for (int u = 0; u < n; ++u) {
      if (in_set[u]) continue;
      long long gain = 0;
      for (int v : cover[u]) {
        if (counts[v] < inst.r) ++gain;
      }
      if (gain > best_gain) {
        best_gain = gain;
        best = u;
      }
    }
    if (best < 0) return {SolveStatus::kInfeasible, std::nullopt};  // cannot happen when feasible
    in_set[best] = 1;
    witness.push_back(best);
    for (int v : cover[best]) {
      if (counts[v] < inst.r) --total_deficiency;
      ++counts[v];
    }
  }
  std::sort(witness.begin(), witness.end());
  return {SolveStatus::kFound, valid_result(inst, std::move(witness))};
}

LazyCover::LazyCover(const Graph& g, int k)
    : graph_(g), k_(k), rows_(g.vertex_count()), ready_(g.vertex_count(), 0) {}

const DynBitset& LazyCover::row(int v) {
  if (!ready_[v]) {
    DynBitset row(graph_.vertex_count());
    const DistanceVector d = bfs_distances_bounded(graph_, v, k_);
    for (int u = 0; u < graph_.vertex_count(); ++u) {
      if (u != v && d.reachable(u) && d.dist[u] <= k_) row.set(u);
    }
    rows_[v] = std::move(row);
    ready_[v] = 1;
  }
  return rows_[v];
}

bool subset_dominates(LazyCover& cover, std::span<const int> candidate_set, int r) {
  const int n = cover.vertex_count();
  const auto count_at = [&](int v) {
    int count = 0;
    for (int u : candidate_set) {
      if (u != v && cover.row(u).test(v) && ++count >= r) break;
    }
    return count;
  };
  for (int v : candidate_set) {
    if (count_at(v) < r) return false;
  }
  std::vector<char> member(n, 0);
  for (int u : candidate_set) member[u] = 1;
  for (int v = 0; v < n; ++v) {
    if (!member[v] && count_at(v) < r) return false;
  }
  return true;
}

}  // namespace krdom
