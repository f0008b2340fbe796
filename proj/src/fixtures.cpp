#include "krdom/fixtures.hpp"

#include <charconv>
#include <vector>

namespace krdom {

Graph petersen() {
  // Outer 5-cycle, spokes, inner pentagram.
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::build(10, edges);
}

Graph heawood() { return lcf_graph({5, -5}, 7); }

Graph mcgee() { return lcf_graph({12, 7, -7}, 8); }

Graph tutte_coxeter() { return lcf_graph({-13, -9, 7, -7, 9, 13}, 5); }

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::build(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle graph needs n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::build(n, edges);
}

Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path graph needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::build(n, edges);
}

namespace {

std::optional<int> parse_suffix_int(std::string_view s) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace

std::optional<Graph> named_fixture(std::string_view name) {
  if (name == "petersen") return petersen();
  if (name == "heawood") return heawood();
  if (name == "mcgee") return mcgee();
  if (name == "tutte-coxeter") return tutte_coxeter();
  if (name.size() >= 2) {
    const auto n = parse_suffix_int(name.substr(1));
    if (n) {
      if (name[0] == 'k') return complete_graph(*n);
      if (name[0] == 'c') return cycle_graph(*n);
      if (name[0] == 'p') return path_graph(*n);
    }
  }
  return std::nullopt;
}

Graph load_graph_or_fixture(const std::string& source) {
  if (auto g = named_fixture(source)) return *std::move(g);
  return read_edge_list_file(source);
}

}  // namespace krdom
