#include "krdom/graph.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <queue>
#include <set>
#include <sstream>

namespace krdom {

namespace {

void check_vertex(const Graph& g, int v, const char* what) {
  if (v < 0 || v >= g.vertex_count()) {
    throw std::invalid_argument(std::string(what) + " " + std::to_string(v) +
                                " out of range [0, " + std::to_string(g.vertex_count()) + ")");
  }
}

}  // namespace

Graph Graph::build(int n, const std::vector<std::pair<int, int>>& edge_list) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");

  std::set<std::pair<int, int>> canonical;
  bool duplicates = false;
  for (const auto& [u, v] : edge_list) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ") has endpoint out of range [0, " + std::to_string(n) + ")");
    }
    if (u == v) {
      throw std::invalid_argument("self-loop (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ") rejected");
    }
    if (!canonical.insert({std::min(u, v), std::max(u, v)}).second) duplicates = true;
  }

  Graph g;
  g.n_ = n;
  g.duplicates_collapsed_ = duplicates;
  g.edges_.assign(canonical.begin(), canonical.end());
  g.adjacency_.resize(n);
  for (const auto& [u, v] : g.edges_) {
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(*this, v, "vertex");
  return adjacency_[v];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

DistanceVector bfs_distances(const Graph& g, int source) {
  return bfs_distances_bounded(g, source, std::numeric_limits<int>::max());
}

DistanceVector bfs_distances_bounded(const Graph& g, int source, int limit) {
  check_vertex(g, source, "source");
  DistanceVector out;
  out.source = source;
  out.dist.assign(g.vertex_count(), DistanceVector::kUnreachable);
  out.dist[source] = 0;
  std::queue<int> queue;
  queue.push(source);
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    if (out.dist[u] == limit) continue;
    for (int w : g.neighbors(u)) {
      if (out.dist[w] == DistanceVector::kUnreachable) {
        out.dist[w] = out.dist[u] + 1;
        queue.push(w);
      }
    }
  }
  return out;
}

std::vector<int> k_neighborhood(const Graph& g, int v, int k) {
  if (k < 1) throw std::invalid_argument("neighborhood radius k must be >= 1");
  const DistanceVector d = bfs_distances_bounded(g, v, k);
  std::vector<int> out;
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (u != v && d.reachable(u) && d.dist[u] <= k) out.push_back(u);
  }
  return out;
}

std::optional<int> girth(const Graph& g) {
  const int n = g.vertex_count();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(n), parent(n);
  std::queue<int> queue;
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    queue.push(root);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      // Any cycle candidate through u has length >= 2*dist[u].
      if (2 * dist[u] >= best) continue;
      for (int w : g.neighbors(u)) {
        if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push(w);
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

int min_degree(const Graph& g) {
  int out = std::numeric_limits<int>::max();
  for (int v = 0; v < g.vertex_count(); ++v) out = std::min(out, g.degree(v));
  return g.vertex_count() == 0 ? 0 : out;
}

std::optional<int> diameter(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return std::nullopt;
  int out = 0;
  for (int v = 0; v < n; ++v) {
    const DistanceVector d = bfs_distances(g, v);
    for (int u = 0; u < n; ++u) {
      if (!d.reachable(u)) return std::nullopt;
      out = std::max(out, d.dist[u]);
    }
  }
  return out;
}

Graph lcf_graph(const std::vector<int>& jumps, int repeats) {
  const int period = static_cast<int>(jumps.size());
  if (period < 1 || repeats < 1) throw std::invalid_argument("lcf: empty jump list or repeats < 1");
  const long long n_ll = static_cast<long long>(period) * repeats;
  if (n_ll < 3) throw std::invalid_argument("lcf: need at least 3 vertices");
  const int n = static_cast<int>(n_ll);

  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);

  std::set<std::pair<int, int>> chords;
  for (int i = 0; i < n; ++i) {
    const long long jump = jumps[i % period];
    const int j = static_cast<int>((((i + jump) % n) + n) % n);
    if (j == i) throw std::invalid_argument("lcf: jump " + std::to_string(jump) + " is zero mod n");
    if (j == (i + 1) % n || j == (i + n - 1) % n) {
      throw std::invalid_argument("lcf: chord (" + std::to_string(i) + ", " + std::to_string(j) +
                                  ") collides with a cycle edge");
    }
    chords.insert({std::min(i, j), std::max(i, j)});
  }
  edges.insert(edges.end(), chords.begin(), chords.end());

  Graph g = Graph::build(n, edges);
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) != 3) {
      throw std::invalid_argument("lcf: inconsistent sequence, vertex " + std::to_string(v) +
                                  " has degree " + std::to_string(g.degree(v)));
    }
  }
  return g;
}

namespace {

// Strips comments and surrounding whitespace; empty result means skip.
std::string content_of(const std::string& line) {
  std::string s = line.substr(0, line.find('#'));
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  long long n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;

  while (std::getline(in, line)) {
    ++line_no;
    const std::string content = content_of(line);
    if (content.empty()) continue;
    std::istringstream fields(content);
    if (n < 0) {
      if (!(fields >> n >> m) || n < 0 || m < 0) {
        throw ParseError("line " + std::to_string(line_no) + ": expected header 'n m'");
      }
    } else if (static_cast<long long>(edges.size()) < m) {
      long long u, v;
      if (!(fields >> u >> v)) {
        throw ParseError("line " + std::to_string(line_no) + ": expected edge 'u v'");
      }
      if (u < 0 || u >= n || v < 0 || v >= n) {
        throw ParseError("line " + std::to_string(line_no) + ": endpoint out of range [0, " +
                         std::to_string(n) + ")");
      }
      if (u == v) {
        throw ParseError("line " + std::to_string(line_no) + ": self-loop " + std::to_string(u));
      }
      edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unexpected trailing content");
    }
    std::string extra;
    if (fields >> extra) {
      throw ParseError("line " + std::to_string(line_no) + ": unexpected token '" + extra + "'");
    }
  }
  if (n < 0) throw ParseError("line " + std::to_string(line_no + 1) + ": missing header 'n m'");
  if (static_cast<long long>(edges.size()) < m) {
    throw ParseError("line " + std::to_string(line_no + 1) + ": expected " + std::to_string(m) +
                     " edges, got " + std::to_string(edges.size()));
  }
  return Graph::build(static_cast<int>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string to_edge_list_string(const Graph& g) {
  std::ostringstream out;
  write_edge_list(g, out);
  return out.str();
}

}  // namespace krdom
