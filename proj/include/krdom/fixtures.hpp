#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "krdom/graph.hpp"

namespace krdom {

// Cubic cage fixtures; small graphs with prescribed girth.
Graph petersen();       // n=10, girth 5
Graph heawood();        // n=14, girth 6
Graph mcgee();          // n=24, girth 7
Graph tutte_coxeter();  // n=30, girth 8

Graph complete_graph(int n);
Graph cycle_graph(int n);  // n >= 3
Graph path_graph(int n);

// Resolves "petersen", "heawood", "mcgee", "tutte-coxeter", "k<n>", "c<n>",
// "p<n>"; nullopt when the name is not a fixture.
std::optional<Graph> named_fixture(std::string_view name);

// Fixture name if it matches, otherwise treated as an edge-list file path.
Graph load_graph_or_fixture(const std::string& source);

}  // namespace krdom
