#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "sepsys/errors.hpp"
#include "sepsys/graph_analysis.hpp"
#include "sepsys/separability.hpp"
#include "test_util.hpp"

using namespace sepsys;
using namespace sepsys::testutil;

namespace {

// Independent oracle: count connected spanning edge subsets of each size.
std::vector<Integer> subgraph_counts(const UndirectedGraph& g) {
    int m = g.edge_count();
    std::vector<Integer> by_size(m + 1, 0);
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask)
        if (spanning_connected(g, mask))
            by_size[__builtin_popcountll(mask)] += 1;
    return by_size;
}

Rational brute_reliability(const UndirectedGraph& g,
                           const std::vector<Rational>& probs) {
    int m = g.edge_count();
    Rational total = 0;
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        if (!spanning_connected(g, mask)) continue;
        Rational term = 1;
        StateWord s(m, mask);
        for (int i = 0; i < m; ++i)
            term *= s.bit(i) ? probs[i] : Rational(1) - probs[i];
        total += term;
    }
    return total;
}

} // namespace

TEST_CASE("named constructors have the documented shape") {
    UndirectedGraph k4 = complete_graph(4);
    CHECK(k4.node_count == 4);
    CHECK(k4.edge_count() == 6);

    UndirectedGraph c5 = cycle_graph(5);
    CHECK(c5.edge_count() == 5);
    for (int d : node_degrees(c5)) CHECK(d == 2);

    UndirectedGraph bf = butterfly_graph();
    CHECK(bf.node_count == 5);
    CHECK(bf.edge_count() == 6);
    auto deg = node_degrees(bf);
    CHECK(*std::max_element(deg.begin(), deg.end()) == 4); // shared node

    UndirectedGraph gl = glasses_graph();
    CHECK(gl.node_count == 6);
    CHECK(gl.edge_count() == 7);

    UndirectedGraph mm = monma_graph(2, 2, 1);
    CHECK(mm.node_count == 4);
    CHECK(mm.edge_count() == 5);
    // last edge is the direct hub-hub link
    CHECK(((mm.edges.back().u == 0 && mm.edges.back().v == 1) ||
           (mm.edges.back().u == 1 && mm.edges.back().v == 0)));

    CHECK_THROWS_AS(monma_graph(0, 2, 1), DomainError);
}

TEST_CASE("validation rejects self-loops") {
    UndirectedGraph g;
    g.node_count = 2;
    g.edges.push_back({1, 1});
    CHECK_THROWS_AS(g.validate(), DomainError);
}

TEST_CASE("classifier follows the corank rule") {
    auto t = classify(path_graph(5));
    CHECK(t.category == GraphCategory::Tree);
    CHECK(t.corank == 0);

    auto s = classify(star_graph(6));
    CHECK(s.category == GraphCategory::Tree);

    auto c = classify(cycle_graph(7));
    CHECK(c.category == GraphCategory::ElementaryCycle);
    CHECK(c.corank == 1);

    // triangle with a pendant node: corank 1 but not an elementary cycle
    UndirectedGraph tp = cycle_graph(3);
    tp.node_count = 4;
    tp.edges.push_back({0, 3});
    auto cw = classify(tp);
    CHECK(cw.category == GraphCategory::CycleWithArborescences);
    CHECK(cw.corank == 1);

    auto k = classify(complete_graph(4));
    CHECK(k.category == GraphCategory::Nonseparable);
    CHECK(k.corank == 3);

    auto b = classify(butterfly_graph());
    CHECK(b.category == GraphCategory::Nonseparable);
    CHECK(b.corank == 2);

    UndirectedGraph disc;
    disc.node_count = 4;
    disc.edges.push_back({0, 1});
    disc.edges.push_back({2, 3});
    CHECK(classify(disc).category == GraphCategory::Disconnected);

    CHECK(std::string(category_name(GraphCategory::ElementaryCycle)) == "CYCLE");
    CHECK(std::string(category_name(GraphCategory::Nonseparable)) ==
          "NONSEPARABLE");
}

TEST_CASE("classifier matches separability of the induced system") {
    // exhaustive over all labeled graphs on 4 nodes (simple, no isolated
    // restriction), comparing the structural classes against the LP decision
    int pairs = 6;
    std::vector<std::pair<int, int>> all_pairs = {{0, 1}, {0, 2}, {0, 3},
                                                  {1, 2}, {1, 3}, {2, 3}};
    for (std::uint64_t mask = 0; mask < (1u << pairs); ++mask) {
        UndirectedGraph g;
        g.node_count = 4;
        for (int i = 0; i < pairs; ++i)
            if ((mask >> i) & 1) g.edges.push_back({all_pairs[i].first,
                                                    all_pairs[i].second});
        if (component_count(g) != 1) continue;
        auto cls = classify(g);
        bool class_separable = cls.category != GraphCategory::Nonseparable;
        auto verdict = is_separable(BinarySystem::from_graph(g));
        CHECK(class_separable ==
              (verdict.outcome == SeparabilityOutcome::Separable));
    }
}

TEST_CASE("minimum spanning tree cost") {
    UndirectedGraph k4 = complete_graph(4);
    std::vector<Rational> w = {1, 2, 3, 4, 5, 6};
    // edges of K4 in order (0,1),(0,2),(0,3),(1,2),(1,3),(2,3)
    CHECK(mst_cost(k4, w) == 6); // 1+2+3

    std::vector<Rational> w2 = {Rational(5), Rational(1, 2), Rational(7, 2),
                                Rational(1, 3), Rational(9), Rational(2)};
    // oracle by enumerating all spanning trees
    Rational best = -1;
    for (std::uint64_t mask = 0; mask < 64; ++mask) {
        if (__builtin_popcountll(mask) != 3 || !spanning_connected(k4, mask))
            continue;
        Rational cost = 0;
        StateWord s(6, mask);
        for (int i = 0; i < 6; ++i)
            if (s.bit(i)) cost += w2[i];
        if (best < 0 || cost < best) best = cost;
    }
    CHECK(mst_cost(k4, w2) == best);

    UndirectedGraph disc;
    disc.node_count = 3;
    disc.edges.push_back({0, 1});
    CHECK_THROWS_AS(mst_cost(disc, {Rational(1)}), ConnectivityError);
}

TEST_CASE("global mincut and edge connectivity") {
    CHECK(edge_connectivity(path_graph(4)) == 1);
    CHECK(edge_connectivity(cycle_graph(6)) == 2);
    CHECK(edge_connectivity(complete_graph(4)) == 3);
    CHECK(edge_connectivity(complete_graph(5)) == 4);
    CHECK(edge_connectivity(butterfly_graph()) == 2);

    UndirectedGraph disc;
    disc.node_count = 2;
    CHECK(edge_connectivity(disc) == 0);

    // weighted: C_4 with one cheap opposite pair
    UndirectedGraph c4 = cycle_graph(4);
    std::vector<Rational> w = {Rational(1, 2), Rational(10), Rational(1, 3),
                               Rational(10)};
    auto cut = global_mincut(c4, w);
    CHECK(cut.weight == Rational(5, 6)); // edges 0 and 2 split {1,2} from rest
    Rational crossing = 0;
    for (int idx : cut.edge_indices) crossing += w[idx];
    CHECK(crossing == cut.weight);
    // removing the cut edges disconnects the graph
    std::uint64_t mask = StateWord::ones(4).mask;
    for (int idx : cut.edge_indices)
        mask = StateWord(4, mask).with_bit(idx, false).mask;
    CHECK(!spanning_connected(c4, mask));
}

TEST_CASE("mincut oracle on random graphs") {
    Rng rng(606);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 3 + static_cast<int>(rng() % 4);
        UndirectedGraph g = random_connected_graph(n, 0.5, rng);
        int m = g.edge_count();
        if (m > 16) continue;
        int lambda = edge_connectivity(g);
        // oracle: smallest edge set whose removal disconnects
        int best = m + 1;
        for (std::uint64_t mask = 0; mask < (1ull << m); ++mask)
            if (!spanning_connected(g, mask))
                best = std::min<int>(best, m - __builtin_popcountll(mask));
        CHECK(lambda == best);
    }
}

TEST_CASE("utility and difficulty") {
    auto tree = utility_and_difficulty(path_graph(6));
    CHECK(tree.utility == 1);
    CHECK(tree.difficulty == -2);

    auto cyc = utility_and_difficulty(cycle_graph(5));
    CHECK(cyc.utility == 1);
    CHECK(cyc.difficulty == -2);

    auto bf = utility_and_difficulty(butterfly_graph());
    CHECK(bf.utility == 0);
    CHECK(bf.difficulty == -1);

    auto k5 = utility_and_difficulty(complete_graph(5));
    CHECK(k5.utility == 4 - 6);
    CHECK(k5.difficulty == 6 - 4 - 1);

    UndirectedGraph disc;
    disc.node_count = 3;
    disc.edges.push_back({0, 1});
    CHECK_THROWS_AS(utility_and_difficulty(disc), DomainError);
}

TEST_CASE("spanning tree count via Kirchhoff") {
    CHECK(spanning_tree_count(cycle_graph(3)) == 3);
    CHECK(spanning_tree_count(complete_graph(4)) == 16);
    CHECK(spanning_tree_count(complete_graph(5)) == 125); // Cayley n^{n-2}
    CHECK(spanning_tree_count(path_graph(6)) == 1);
    CHECK(spanning_tree_count(butterfly_graph()) == 9);
    UndirectedGraph disc;
    disc.node_count = 3;
    disc.edges.push_back({0, 1});
    CHECK(spanning_tree_count(disc) == 0);

    // oracle: exhaustive subset count
    Rng rng(11);
    for (int trial = 0; trial < 15; ++trial) {
        UndirectedGraph g = random_connected_graph(5, 0.6, rng);
        auto by_size = subgraph_counts(g);
        CHECK(spanning_tree_count(g) == by_size[g.node_count - 1]);
    }
}

TEST_CASE("closed-form reliability per class") {
    // tree: product of edge probabilities
    UndirectedGraph p4 = path_graph(4);
    std::vector<Rational> tp = {Rational(1, 2), Rational(2, 3), Rational(3, 4)};
    CHECK(reliability_closed_form(p4, tp) == Rational(1, 4));

    // C_3 at p=1/2: prod + sum of single-failure terms = 1/8 + 3/8
    UndirectedGraph c3 = cycle_graph(3);
    std::vector<Rational> cp(3, Rational(1, 2));
    CHECK(reliability_closed_form(c3, cp) == Rational(1, 2));

    // disconnected: reliability 0
    UndirectedGraph disc;
    disc.node_count = 3;
    disc.edges.push_back({0, 1});
    CHECK(reliability_closed_form(disc, {Rational(1, 2)}) == 0);

    CHECK_THROWS_AS(
        reliability_closed_form(complete_graph(4), std::vector<Rational>(6, 1)),
        ClassError);

    // oracle: exhaustive Eq.(1) sum over random separable graphs
    Rng rng(8080);
    for (int trial = 0; trial < 40; ++trial) {
        UndirectedGraph g = random_separable_graph(7, rng);
        auto cls = classify(g);
        if (cls.category == GraphCategory::Nonseparable) continue;
        std::vector<Rational> probs;
        for (int i = 0; i < g.edge_count(); ++i) probs.push_back(random_prob(rng));
        CHECK(reliability_closed_form(g, probs) == brute_reliability(g, probs));
    }
}

TEST_CASE("reliability polynomial") {
    auto c3 = reliability_polynomial(cycle_graph(3));
    CHECK(c3.corank == 1);
    CHECK(c3.edge_conn == 2);
    REQUIRE(c3.counts.size() == 2);
    CHECK(c3.counts[0] == 1); // the full graph
    CHECK(c3.counts[1] == 3); // the three spanning trees
    CHECK(c3.tree_number() == 3);
    CHECK(c3.evaluate(Rational(1, 2)) == Rational(1, 2));
    CHECK(c3.evaluate(1) == 1);
    CHECK(c3.evaluate(0) == 0);

    auto tree = reliability_polynomial(path_graph(4));
    CHECK(tree.corank == 0);
    REQUIRE(tree.counts.size() == 1);
    CHECK(tree.counts[0] == 1);
    CHECK(tree.evaluate(Rational(1, 3)) == Rational(1, 27));

    auto k4 = reliability_polynomial(complete_graph(4));
    CHECK(k4.tree_number() == 16);
    CHECK(k4.evaluate(1) == 1);

    // oracle: per-size subset counts and pointwise evaluation
    Rng rng(1234);
    for (int trial = 0; trial < 12; ++trial) {
        UndirectedGraph g = random_connected_graph(5, 0.5, rng);
        auto poly = reliability_polynomial(g);
        auto by_size = subgraph_counts(g);
        int m = g.edge_count();
        for (int i = 0; i <= poly.corank; ++i)
            CHECK(poly.counts[i] == by_size[m - i]);
        for (int k = 0; k < 4; ++k) {
            Rational r = random_prob(rng);
            CHECK(poly.evaluate(r) ==
                  brute_reliability(g, std::vector<Rational>(m, r)));
        }
    }

    UndirectedGraph big = complete_graph(7); // 21 edges
    CHECK_THROWS_AS(reliability_polynomial(big), SizeError);
}

TEST_CASE("feasible assignments by class") {
    auto tree = find_feasible_assignment(path_graph(5));
    CHECK(tree == std::vector<Rational>(4, 1));

    auto cyc = find_feasible_assignment(cycle_graph(4));
    CHECK(cyc == std::vector<Rational>(4, 1));

    // triangle with pendant: cycle edges cost 1, arborescence edge cost 3
    UndirectedGraph tp = cycle_graph(3);
    tp.node_count = 4;
    tp.edges.push_back({0, 3});
    auto mixed = find_feasible_assignment(tp);
    REQUIRE(mixed.size() == 4);
    CHECK(mixed[3] == 3);
    CHECK(mixed[0] == 1);

    CHECK_THROWS_AS(find_feasible_assignment(complete_graph(4)), ClassError);
    UndirectedGraph disc;
    disc.node_count = 2;
    CHECK_THROWS_AS(find_feasible_assignment(disc), ClassError);
}

TEST_CASE("unicycle edge detection") {
    UndirectedGraph tp = cycle_graph(3);
    tp.node_count = 5;
    tp.edges.push_back({0, 3});
    tp.edges.push_back({3, 4});
    auto cyc = unicycle_edges(tp);
    std::sort(cyc.begin(), cyc.end());
    CHECK(cyc == std::vector<int>{0, 1, 2});
}

TEST_CASE("separability is hereditary under deletions") {
    Rng rng(90210);
    for (int trial = 0; trial < 60; ++trial) {
        UndirectedGraph g = random_separable_graph(7, rng);
        auto cls = classify(g);
        if (cls.category == GraphCategory::Nonseparable) continue;
        std::uniform_int_distribution<int> pick_edge(0, g.edge_count() - 1);
        UndirectedGraph ge = delete_edge(g, pick_edge(rng));
        CHECK(classify(ge).category != GraphCategory::Nonseparable);
        std::uniform_int_distribution<int> pick_node(0, g.node_count - 1);
        UndirectedGraph gn = delete_node(g, pick_node(rng));
        if (gn.node_count > 0)
            CHECK(classify(gn).category != GraphCategory::Nonseparable);
    }
}

TEST_CASE("bridges") {
    CHECK(has_bridge(path_graph(3)));
    CHECK(!has_bridge(cycle_graph(4)));
    CHECK(has_bridge(glasses_graph()));
    CHECK(!has_bridge(butterfly_graph()));
}
