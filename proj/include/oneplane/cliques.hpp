#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oneplane/drawing.hpp"

namespace oneplane {

// Simple undirected graph without any drawing attached.
struct abstract_graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;     // u < v, sorted, unique
    std::vector<std::vector<int>> adj;          // sorted neighbor lists

    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
};

abstract_graph make_graph(int n, std::vector<std::pair<int, int>> edges);
abstract_graph abstract_of(const drawing& d);

// edge-list text: first line "n m", then one "u v" pair per line
abstract_graph parse_edge_list(const std::string& text);
std::string serialize_edge_list(const abstract_graph& g);

// lexicographically least k-clique, if any
std::optional<std::vector<int>> clique_witness(const abstract_graph& g, int k);
bool has_clique(const abstract_graph& g, int k);
bool has_clique(const drawing& d, int k);

bool is_bipartite(const abstract_graph& g);
bool is_connected(const abstract_graph& g);

// complete (k-1)-partite graph on n vertices with near-equal parts,
// the r = n mod (k-1) larger parts first
abstract_graph turan_graph(int n, int k);
long long turan_size(int n, int k);

}   // namespace oneplane
