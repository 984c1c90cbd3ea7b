#include "sepsys/graph.hpp"

#include <numeric>

namespace sepsys {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    // returns true when the roots were distinct
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

} // namespace

void UndirectedGraph::validate() const {
    if (node_count < 1)
        throw DomainError("graph needs at least one node");
    for (const auto& e : edges) {
        if (e.u == e.v)
            throw DomainError("self-loops are not allowed");
        if (e.u < 0 || e.v < 0 || e.u >= node_count || e.v >= node_count)
            throw DomainError("edge endpoint out of range");
    }
    if (!edge_weights.empty() && edge_weights.size() != edges.size())
        throw DomainError("edge weight count mismatch");
    if (!edge_probs.empty() && edge_probs.size() != edges.size())
        throw DomainError("edge probability count mismatch");
}

bool spanning_connected(const UndirectedGraph& g, std::uint64_t edge_mask) {
    if (g.node_count <= 1) return true;
    UnionFind uf(g.node_count);
    int merges = 0;
    const int m = g.edge_count();
    for (int i = 0; i < m; ++i) {
        if ((edge_mask >> (m - 1 - i)) & 1u)
            if (uf.unite(g.edges[i].u, g.edges[i].v)) ++merges;
    }
    return merges == g.node_count - 1;
}

int component_count(const UndirectedGraph& g) {
    UnionFind uf(g.node_count);
    int merges = 0;
    for (const auto& e : g.edges)
        if (uf.unite(e.u, e.v)) ++merges;
    return g.node_count - merges;
}

std::vector<int> node_degrees(const UndirectedGraph& g) {
    std::vector<int> deg(g.node_count, 0);
    for (const auto& e : g.edges) {
        ++deg[e.u];
        ++deg[e.v];
    }
    return deg;
}

int corank(const UndirectedGraph& g) {
    return g.edge_count() - g.node_count + component_count(g);
}

UndirectedGraph complete_graph(int n) {
    if (n < 1) throw DomainError("complete graph needs n >= 1");
    UndirectedGraph g;
    g.node_count = n;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.edges.push_back({u, v});
    return g;
}

UndirectedGraph cycle_graph(int n) {
    if (n < 2) throw DomainError("cycle needs n >= 2");
    UndirectedGraph g;
    g.node_count = n;
    for (int u = 0; u < n; ++u)
        g.edges.push_back({u, (u + 1) % n});
    return g;
}

UndirectedGraph path_graph(int n) {
    if (n < 1) throw DomainError("path needs n >= 1");
    UndirectedGraph g;
    g.node_count = n;
    for (int u = 0; u + 1 < n; ++u)
        g.edges.push_back({u, u + 1});
    return g;
}

UndirectedGraph star_graph(int n) {
    if (n < 1) throw DomainError("star needs n >= 1");
    UndirectedGraph g;
    g.node_count = n;
    for (int v = 1; v < n; ++v)
        g.edges.push_back({0, v});
    return g;
}

UndirectedGraph monma_graph(int l1, int l2, int l3) {
    if (l1 < 1 || l2 < 1 || l3 < 1)
        throw DomainError("monma path lengths must be >= 1");
    UndirectedGraph g;
    g.node_count = 2 + (l1 - 1) + (l2 - 1) + (l3 - 1);
    int next = 2;
    for (int len : {l1, l2, l3}) {
        int prev = 0; // hub u
        for (int i = 1; i < len; ++i) {
            g.edges.push_back({prev, next});
            prev = next++;
        }
        g.edges.push_back({prev, 1}); // hub v
    }
    return g;
}

UndirectedGraph kissing_cycles(int a, int b) {
    if (a < 2 || b < 2) throw DomainError("kissing cycles need lengths >= 2");
    UndirectedGraph g;
    g.node_count = a + b - 1;
    int prev = 0;
    for (int i = 1; i < a; ++i) {
        g.edges.push_back({prev, i});
        prev = i;
    }
    g.edges.push_back({prev, 0});
    prev = 0;
    for (int i = a; i < a + b - 1; ++i) {
        g.edges.push_back({prev, i});
        prev = i;
    }
    g.edges.push_back({prev, 0});
    return g;
}

UndirectedGraph butterfly_graph() { return kissing_cycles(3, 3); }

UndirectedGraph two_cycles_with_path(int a, int b, int k) {
    if (a < 2 || b < 2) throw DomainError("cycle lengths must be >= 2");
    if (k < 1) throw DomainError("path length must be >= 1");
    UndirectedGraph g;
    g.node_count = a + b + k - 1;
    int prev = 0;
    for (int i = 1; i < a; ++i) {
        g.edges.push_back({prev, i});
        prev = i;
    }
    g.edges.push_back({prev, 0});
    int second = a; // first node of the second cycle
    prev = second;
    for (int i = a + 1; i < a + b; ++i) {
        g.edges.push_back({prev, i});
        prev = i;
    }
    g.edges.push_back({prev, second});
    // elementary path from node 0 to node `second`
    prev = 0;
    for (int i = 1; i < k; ++i) {
        int mid = a + b + i - 1;
        g.edges.push_back({prev, mid});
        prev = mid;
    }
    g.edges.push_back({prev, second});
    return g;
}

UndirectedGraph glasses_graph() { return two_cycles_with_path(3, 3, 1); }

UndirectedGraph delete_edge(const UndirectedGraph& g, int edge_index) {
    if (edge_index < 0 || edge_index >= g.edge_count())
        throw DomainError("edge index out of range");
    UndirectedGraph h;
    h.node_count = g.node_count;
    for (int i = 0; i < g.edge_count(); ++i) {
        if (i == edge_index) continue;
        h.edges.push_back(g.edges[i]);
        if (!g.edge_weights.empty()) h.edge_weights.push_back(g.edge_weights[i]);
        if (!g.edge_probs.empty()) h.edge_probs.push_back(g.edge_probs[i]);
    }
    return h;
}

UndirectedGraph delete_node(const UndirectedGraph& g, int node_index) {
    if (node_index < 0 || node_index >= g.node_count)
        throw DomainError("node index out of range");
    if (g.node_count == 1)
        throw DomainError("cannot delete the last node");
    UndirectedGraph h;
    h.node_count = g.node_count - 1;
    auto remap = [&](int v) { return v < node_index ? v : v - 1; };
    for (int i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edges[i];
        if (e.u == node_index || e.v == node_index) continue;
        h.edges.push_back({remap(e.u), remap(e.v)});
        if (!g.edge_weights.empty()) h.edge_weights.push_back(g.edge_weights[i]);
        if (!g.edge_probs.empty()) h.edge_probs.push_back(g.edge_probs[i]);
    }
    return h;
}

} // namespace sepsys
