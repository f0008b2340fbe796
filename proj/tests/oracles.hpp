#pragma once

// Test-only reference implementations, kept independent of the library's
// algorithm choices: Floyd-Warshall distances, boolean matrix powers for
// reachability, girth by edge removal, and full-subset-enumeration
// domination. Intentionally brute force.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <optional>
#include <utility>
#include <vector>

#include "krdom/graph.hpp"

namespace oracles {

inline constexpr int kInf = 1 << 28;

// All-pairs distances by Floyd-Warshall; kInf marks unreachable pairs.
inline std::vector<std::vector<int>> floyd_warshall(const krdom::Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, kInf));
  for (int v = 0; v < n; ++v) dist[v][v] = 0;
  for (const auto& [u, v] : g.edges()) dist[u][v] = dist[v][u] = 1;
  for (int mid = 0; mid < n; ++mid) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        dist[a][b] = std::min(dist[a][b], dist[a][mid] + dist[mid][b]);
      }
    }
  }
  return dist;
}

// reach[t][v] = bitmask of vertices reachable from v in at most t steps,
// built by repeated boolean matrix multiplication. Needs n <= 64.
inline std::vector<std::vector<std::uint64_t>> reach_within(const krdom::Graph& g, int steps) {
  const int n = g.vertex_count();
  std::vector<std::uint64_t> adjacency(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adjacency[u] |= std::uint64_t{1} << v;
    adjacency[v] |= std::uint64_t{1} << u;
  }
  std::vector<std::vector<std::uint64_t>> reach(steps + 1,
                                                std::vector<std::uint64_t>(n, 0));
  for (int v = 0; v < n; ++v) reach[0][v] = std::uint64_t{1} << v;
  for (int t = 1; t <= steps; ++t) {
    for (int v = 0; v < n; ++v) {
      std::uint64_t row = reach[t - 1][v];
      for (int u = 0; u < n; ++u) {
        if (reach[t - 1][v] >> u & 1) row |= adjacency[u];
      }
      reach[t][v] = row;
    }
  }
  return reach;
}

// Shortest cycle through each edge: drop the edge, connect its endpoints.
inline std::optional<int> girth_by_edge_removal(const krdom::Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> adjacency(n);
  for (const auto& [u, v] : g.edges()) {
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }
  int best = kInf;
  for (const auto& [eu, ev] : g.edges()) {
    std::vector<int> dist(n, -1);
    dist[eu] = 0;
    std::deque<int> queue{eu};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int w : adjacency[u]) {
        if ((u == eu && w == ev) || (u == ev && w == eu)) continue;
        if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
    if (dist[ev] >= 0) best = std::min(best, dist[ev] + 1);
  }
  if (best == kInf) return std::nullopt;
  return best;
}

struct BruteForceResult {
  int size = 0;
  std::vector<int> witness;
};

// Minimum total (k, r)-dominating set by sweeping all 2^n subsets; ties
// broken to the lexicographically least witness. Needs n <= ~20.
inline std::optional<BruteForceResult> brute_force_gamma(const krdom::Graph& g, int k, int r) {
  const int n = g.vertex_count();
  const auto dist = floyd_warshall(g);
  std::vector<std::uint64_t> cover(n, 0);
  for (int v = 0; v < n; ++v) {
    for (int u = 0; u < n; ++u) {
      if (u != v && dist[v][u] <= k) cover[v] |= std::uint64_t{1} << u;
    }
  }
  std::optional<BruteForceResult> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool valid = true;
    for (int v = 0; v < n && valid; ++v) {
      valid = std::popcount(cover[v] & mask) >= r;
    }
    if (!valid) continue;
    BruteForceResult candidate;
    candidate.size = std::popcount(mask);
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1) candidate.witness.push_back(v);
    }
    if (!best || candidate.size < best->size ||
        (candidate.size == best->size && candidate.witness < best->witness)) {
      best = std::move(candidate);
    }
  }
  return best;
}

}  // namespace oracles
