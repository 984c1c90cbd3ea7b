#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sepsys/rational.hpp"
#include "sepsys/state_word.hpp"

namespace sepsys {

struct Edge {
    int u = 0, v = 0; // 0-based node indices
};

// Multigraph: parallel edges permitted, self-loops rejected. The edge order
// is the component order of the induced all-terminal binary system.
struct UndirectedGraph {
    int node_count = 0;
    std::vector<Edge> edges;
    std::vector<Rational> edge_weights; // empty or one per edge
    std::vector<Rational> edge_probs;   // empty or one per edge

    int edge_count() const { return static_cast<int>(edges.size()); }

    void validate() const; // throws DomainError on self-loops / bad indices
};

// Connectivity of the spanning subgraph keeping exactly the edges whose bit
// is set in `edge_mask` (bit conventions of StateWord over m components).
bool spanning_connected(const UndirectedGraph& g, std::uint64_t edge_mask);
int component_count(const UndirectedGraph& g);

std::vector<int> node_degrees(const UndirectedGraph& g);

// m - n + (#components); equals the number of independent cycles.
int corank(const UndirectedGraph& g);

// --- named constructors (edge order documented per function) ---

UndirectedGraph complete_graph(int n);
// cycle edges (0,1),(1,2),...,(n-1,0); n >= 2, C_2 is a parallel pair
UndirectedGraph cycle_graph(int n);
UndirectedGraph path_graph(int n); // n nodes, n-1 edges
UndirectedGraph star_graph(int n); // center node 0, n-1 spokes
// two hubs u=0, v=1 joined by three internally disjoint paths with l1, l2,
// l3 edges; edges listed path by path, each path from u towards v
UndirectedGraph monma_graph(int l1, int l2, int l3);
// two cycles of a and b edges sharing node 0; edges of the first cycle,
// then the second
UndirectedGraph kissing_cycles(int a, int b);
UndirectedGraph butterfly_graph(); // kissing_cycles(3,3)
// cycles C_a and C_b joined by an elementary path of k edges; edge order:
// first cycle, second cycle, path
UndirectedGraph two_cycles_with_path(int a, int b, int k);
UndirectedGraph glasses_graph(); // two_cycles_with_path(3,3,1)

// --- subgraph helpers ---

UndirectedGraph delete_edge(const UndirectedGraph& g, int edge_index);
UndirectedGraph delete_node(const UndirectedGraph& g, int node_index);

} // namespace sepsys
