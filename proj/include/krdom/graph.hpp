#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace krdom {

// Raised when a graph file cannot be parsed; the message names the line.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Immutable undirected simple graph on vertices 0..n-1 with sorted
// adjacency lists. Safe for concurrent read-only use.
class Graph {
 public:
  // Validates and builds: endpoints must lie in [0, n) and self-loops are
  // rejected; duplicate pairs are collapsed and flagged.
  static Graph build(int n, const std::vector<std::pair<int, int>>& edge_list);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const;

  // Canonical edge list: each pair (u, v) with u < v, sorted lexicographically.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  // True when build() collapsed duplicate input pairs.
  bool duplicates_collapsed() const { return duplicates_collapsed_; }

 private:
  Graph() = default;

  int n_ = 0;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::pair<int, int>> edges_;
  bool duplicates_collapsed_ = false;
};

// Unweighted shortest-path distances from a single source.
struct DistanceVector {
  static constexpr int kUnreachable = -1;

  int source = 0;
  std::vector<int> dist;

  bool reachable(int v) const { return dist[v] != kUnreachable; }
};

DistanceVector bfs_distances(const Graph& g, int source);

// As above but only explores up to `limit` hops; farther vertices keep the
// unreachable sentinel.
DistanceVector bfs_distances_bounded(const Graph& g, int source, int limit);

// Open k-neighborhood {u != v : d(u, v) <= k}, ascending. Rejects k < 1.
std::vector<int> k_neighborhood(const Graph& g, int v, int k);

// Length of a shortest cycle, or nullopt for forests.
std::optional<int> girth(const Graph& g);

int min_degree(const Graph& g);

// Max eccentricity; nullopt when the graph is disconnected or empty.
std::optional<int> diameter(const Graph& g);

// Cubic Hamiltonian graph from an LCF jump sequence repeated `repeats`
// times: cycle 0..n-1 plus chord i -> (i + jumps[i mod L]) mod n. Rejects
// chords that collide with cycle edges and sequences that fail to produce
// a 3-regular graph.
Graph lcf_graph(const std::vector<int>& jumps, int repeats);

// Edge-list text format: first contentful line "n m", then m lines "u v".
// Lines starting with '#' are comments. Canonical output is byte-stable.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);
std::string to_edge_list_string(const Graph& g);

}  // namespace krdom
