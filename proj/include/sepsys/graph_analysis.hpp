#pragma once

#include <vector>

#include "sepsys/graph.hpp"
#include "sepsys/rational.hpp"

namespace sepsys {

enum class GraphCategory {
    Disconnected,
    Tree,
    ElementaryCycle,
    CycleWithArborescences,
    Nonseparable,
};

const char* category_name(GraphCategory c);

struct GraphClass {
    GraphCategory category;
    int corank; // m - n + #components
};

// Structural classifier: a connected graph is separable iff its corank
// is 0 or 1. Runs in O(n + m).
GraphClass classify(const UndirectedGraph& g);

// Kruskal. Throws ConnectivityError when g is disconnected.
Rational mst_cost(const UndirectedGraph& g, const std::vector<Rational>& weights);

struct GlobalMincut {
    Rational weight;
    std::vector<int> edge_indices; // edges crossing the best cut
};

// Deterministic Stoer-Wagner minimum-weight cut; exact rational weights.
GlobalMincut global_mincut(const UndirectedGraph& g,
                           const std::vector<Rational>& weights);

// Unit-weight global mincut; 0 for disconnected graphs.
int edge_connectivity(const UndirectedGraph& g);

struct UtilityDifficulty {
    int utility;    // lambda - corank
    int difficulty; // corank - lambda - 1
};

UtilityDifficulty utility_and_difficulty(const UndirectedGraph& g);

// Kirchhoff matrix-tree count via fraction-free integer elimination.
Integer spanning_tree_count(const UndirectedGraph& g);

// Closed-form all-terminal reliability for separable graphs only.
// Throws ClassError for a Nonseparable classification.
Rational reliability_closed_form(const UndirectedGraph& g,
                                 const std::vector<Rational>& edge_probs);

struct ReliabilityPolynomial {
    int n = 0, m = 0;
    int edge_conn = 0; // lambda(G)
    int corank = 0;    // c(G)
    // counts[i] = number of connected spanning subgraphs with m-i edges,
    // for i = 0 .. corank; counts[corank] is the tree number tau(G)
    std::vector<Integer> counts;

    Integer tree_number() const { return counts.back(); }
    Rational evaluate(const Rational& r) const;
};

ReliabilityPolynomial reliability_polynomial(const UndirectedGraph& g,
                                             int max_edges = 20);

// Constructive separability witness per graph class: unit weights on tree
// and cycle edges, weight 3 on arborescence edges. Throws ClassError for
// Disconnected/Nonseparable inputs.
std::vector<Rational> find_feasible_assignment(const UndirectedGraph& g);

// Edge indices of the unique cycle of a unicyclic connected graph.
std::vector<int> unicycle_edges(const UndirectedGraph& g);

bool has_bridge(const UndirectedGraph& g);

} // namespace sepsys
