#include "sepsys/graph_analysis.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

namespace sepsys {

const char* category_name(GraphCategory c) {
    switch (c) {
        case GraphCategory::Disconnected: return "DISCONNECTED";
        case GraphCategory::Tree: return "TREE";
        case GraphCategory::ElementaryCycle: return "CYCLE";
        case GraphCategory::CycleWithArborescences: return "CYCLE_WITH_ARBORESCENCES";
        case GraphCategory::Nonseparable: return "NONSEPARABLE";
    }
    return "?";
}

GraphClass classify(const UndirectedGraph& g) {
    g.validate();
    const int n = g.node_count, m = g.edge_count();
    const int comps = component_count(g);
    GraphClass result{GraphCategory::Nonseparable, m - n + comps};
    if (comps > 1) {
        result.category = GraphCategory::Disconnected;
    } else if (m == n - 1) {
        result.category = GraphCategory::Tree;
    } else if (m == n) {
        auto deg = node_degrees(g);
        bool all_two = std::all_of(deg.begin(), deg.end(),
                                   [](int d) { return d == 2; });
        result.category = all_two ? GraphCategory::ElementaryCycle
                                  : GraphCategory::CycleWithArborescences;
    }
    return result;
}

Rational mst_cost(const UndirectedGraph& g, const std::vector<Rational>& weights) {
    g.validate();
    if (weights.size() != g.edges.size())
        throw DomainError("weight count mismatch");
    if (component_count(g) != 1)
        throw ConnectivityError("graph is disconnected");
    std::vector<int> order(g.edges.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return weights[a] < weights[b]; });
    std::vector<int> parent(g.node_count);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    Rational total = 0;
    int taken = 0;
    for (int i : order) {
        int a = find(g.edges[i].u), b = find(g.edges[i].v);
        if (a == b) continue;
        parent[a] = b;
        total += weights[i];
        if (++taken == g.node_count - 1) break;
    }
    return total;
}

GlobalMincut global_mincut(const UndirectedGraph& g,
                           const std::vector<Rational>& weights) {
    g.validate();
    if (g.node_count < 2)
        throw DomainError("mincut needs at least two nodes");
    if (weights.size() != g.edges.size())
        throw DomainError("weight count mismatch");
    if (component_count(g) != 1)
        return {Rational(0), {}};

    const int n = g.node_count;
    std::vector<std::vector<Rational>> w(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        w[g.edges[i].u][g.edges[i].v] += weights[i];
        w[g.edges[i].v][g.edges[i].u] += weights[i];
    }
    // groups[v]: original nodes merged into v
    std::vector<std::vector<int>> groups(n);
    for (int v = 0; v < n; ++v) groups[v] = {v};
    std::vector<bool> merged(n, false);

    bool have_best = false;
    Rational best_weight = 0;
    std::vector<int> best_side;

    for (int phase = 0; phase < n - 1; ++phase) {
        std::vector<Rational> conn(n, 0);
        std::vector<bool> added(n, false);
        int prev = -1, last = -1;
        for (int step = 0; step < n - phase; ++step) {
            int pick = -1;
            for (int v = 0; v < n; ++v) {
                if (merged[v] || added[v]) continue;
                if (pick == -1 || conn[v] > conn[pick]) pick = v;
            }
            added[pick] = true;
            prev = last;
            last = pick;
            for (int v = 0; v < n; ++v)
                if (!merged[v] && !added[v]) conn[v] += w[pick][v];
        }
        // cut-of-the-phase: `last` alone against the rest
        if (!have_best || conn[last] < best_weight) {
            have_best = true;
            best_weight = conn[last];
            best_side = groups[last];
        }
        // merge `last` into `prev`
        merged[last] = true;
        groups[prev].insert(groups[prev].end(), groups[last].begin(),
                            groups[last].end());
        for (int v = 0; v < n; ++v) {
            w[prev][v] += w[last][v];
            w[v][prev] = w[prev][v];
        }
    }

    std::vector<bool> in_side(n, false);
    for (int v : best_side) in_side[v] = true;
    GlobalMincut result{best_weight, {}};
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        if (in_side[g.edges[i].u] != in_side[g.edges[i].v])
            result.edge_indices.push_back(static_cast<int>(i));
    return result;
}

int edge_connectivity(const UndirectedGraph& g) {
    g.validate();
    if (g.node_count < 2) return 0;
    if (component_count(g) != 1) return 0;
    std::vector<Rational> unit(g.edges.size(), Rational(1));
    Rational w = global_mincut(g, unit).weight;
    return static_cast<int>(w.get_num().get_si());
}

UtilityDifficulty utility_and_difficulty(const UndirectedGraph& g) {
    if (component_count(g) != 1)
        throw DomainError("utility is defined for connected graphs");
    const int lambda = edge_connectivity(g);
    const int c = corank(g);
    return {lambda - c, c - lambda - 1};
}

Integer spanning_tree_count(const UndirectedGraph& g) {
    g.validate();
    const int n = g.node_count;
    if (n == 1) return 1;
    // Laplacian minor (drop last row/column), fraction-free Bareiss.
    std::vector<std::vector<Integer>> a(n - 1, std::vector<Integer>(n - 1, 0));
    for (const auto& e : g.edges) {
        if (e.u < n - 1) a[e.u][e.u] += 1;
        if (e.v < n - 1) a[e.v][e.v] += 1;
        if (e.u < n - 1 && e.v < n - 1) {
            a[e.u][e.v] -= 1;
            a[e.v][e.u] -= 1;
        }
    }
    const int d = n - 1;
    Integer prev = 1;
    int sign = 1;
    for (int k = 0; k < d - 1; ++k) {
        if (a[k][k] == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < d; ++r)
                if (a[r][k] != 0) { swap_row = r; break; }
            if (swap_row == -1) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < d; ++i)
            for (int j = k + 1; j < d; ++j) {
                Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a[k][k];
    }
    Integer det = a[d - 1][d - 1];
    return sign == 1 ? det : Integer(-det);
}

std::vector<int> unicycle_edges(const UndirectedGraph& g) {
    if (component_count(g) != 1 || corank(g) != 1)
        throw DomainError("graph is not connected unicyclic");
    auto deg = node_degrees(g);
    std::vector<bool> edge_alive(g.edges.size(), true);
    std::vector<bool> node_alive(g.node_count, true);
    std::queue<int> leaves;
    for (int v = 0; v < g.node_count; ++v)
        if (deg[v] == 1) leaves.push(v);
    while (!leaves.empty()) {
        int v = leaves.front();
        leaves.pop();
        node_alive[v] = false;
        for (std::size_t i = 0; i < g.edges.size(); ++i) {
            if (!edge_alive[i]) continue;
            const auto& e = g.edges[i];
            if (e.u != v && e.v != v) continue;
            edge_alive[i] = false;
            int other = (e.u == v) ? e.v : e.u;
            if (--deg[other] == 1 && node_alive[other]) leaves.push(other);
        }
    }
    std::vector<int> cycle;
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        if (edge_alive[i]) cycle.push_back(static_cast<int>(i));
    return cycle;
}

namespace {

// Exact cycle reliability via prefix/suffix products: all edges up, or
// exactly one edge down.
Rational cycle_reliability(const std::vector<Rational>& p) {
    const std::size_t k = p.size();
    std::vector<Rational> prefix(k + 1, Rational(1)), suffix(k + 1, Rational(1));
    for (std::size_t i = 0; i < k; ++i) prefix[i + 1] = prefix[i] * p[i];
    for (std::size_t i = k; i > 0; --i) suffix[i - 1] = suffix[i] * p[i - 1];
    Rational r = prefix[k];
    for (std::size_t i = 0; i < k; ++i)
        r += (1 - p[i]) * prefix[i] * suffix[i + 1];
    return r;
}

} // namespace

Rational reliability_closed_form(const UndirectedGraph& g,
                                 const std::vector<Rational>& edge_probs) {
    g.validate();
    if (edge_probs.size() != g.edges.size())
        throw DomainError("edge probability count mismatch");
    auto cls = classify(g);
    switch (cls.category) {
        case GraphCategory::Disconnected:
            return 0;
        case GraphCategory::Tree: {
            Rational r = 1;
            for (const auto& p : edge_probs) r *= p;
            return r;
        }
        case GraphCategory::ElementaryCycle:
            return cycle_reliability(edge_probs);
        case GraphCategory::CycleWithArborescences: {
            auto cycle = unicycle_edges(g);
            std::vector<bool> on_cycle(g.edges.size(), false);
            std::vector<Rational> cycle_p;
            for (int i : cycle) {
                on_cycle[i] = true;
                cycle_p.push_back(edge_probs[i]);
            }
            Rational r = cycle_reliability(cycle_p);
            for (std::size_t i = 0; i < edge_probs.size(); ++i)
                if (!on_cycle[i]) r *= edge_probs[i];
            return r;
        }
        case GraphCategory::Nonseparable:
            throw ClassError("no closed form for nonseparable graphs; "
                             "use brute-force reliability");
    }
    throw ClassError("unreachable");
}

Rational ReliabilityPolynomial::evaluate(const Rational& r) const {
    Rational total = 0;
    // direct powers; sizes are desk-scale
    for (int i = 0; i <= corank; ++i) {
        if (counts[i] == 0) continue;
        Rational term(counts[i]);
        for (int k = 0; k < m - i; ++k) term *= r;
        for (int k = 0; k < i; ++k) term *= (1 - r);
        total += term;
    }
    return total;
}

ReliabilityPolynomial reliability_polynomial(const UndirectedGraph& g,
                                             int max_edges) {
    g.validate();
    if (component_count(g) != 1)
        throw ConnectivityError("graph is disconnected");
    const int m = g.edge_count();
    if (m > max_edges)
        throw SizeError("edge count exceeds enumeration cap");
    ReliabilityPolynomial poly;
    poly.n = g.node_count;
    poly.m = m;
    poly.edge_conn = edge_connectivity(g);
    poly.corank = corank(g);
    poly.counts.assign(poly.corank + 1, 0);
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        int removed = m - __builtin_popcountll(mask);
        if (removed > poly.corank) continue;
        if (spanning_connected(g, mask)) poly.counts[removed] += 1;
    }
    if (g.node_count > 1 && poly.counts[poly.corank] != spanning_tree_count(g))
        throw Error("tree count disagrees with Kirchhoff determinant");
    return poly;
}

std::vector<Rational> find_feasible_assignment(const UndirectedGraph& g) {
    auto cls = classify(g);
    switch (cls.category) {
        case GraphCategory::Tree:
        case GraphCategory::ElementaryCycle:
            return std::vector<Rational>(g.edges.size(), Rational(1));
        case GraphCategory::CycleWithArborescences: {
            std::vector<Rational> w(g.edges.size(), Rational(3));
            for (int i : unicycle_edges(g)) w[i] = 1;
            return w;
        }
        default:
            throw ClassError(std::string("no feasible assignment: graph is ") +
                             category_name(cls.category));
    }
}

bool has_bridge(const UndirectedGraph& g) {
    const int comps = component_count(g);
    for (int i = 0; i < g.edge_count(); ++i)
        if (component_count(delete_edge(g, i)) > comps) return true;
    return false;
}

} // namespace sepsys
