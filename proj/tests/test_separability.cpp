#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>

#include "sepsys/errors.hpp"
#include "sepsys/graph_analysis.hpp"
#include "sepsys/separability.hpp"
#include "test_util.hpp"

using namespace sepsys;
using namespace sepsys::testutil;

namespace {

// The verdict hyperplane must reproduce phi exactly (strict convention).
void check_hyperplane_sound(const BinarySystem& sys,
                            const SeparabilityVerdict& v) {
    REQUIRE(v.hyperplane.has_value());
    CHECK(v.hyperplane->cmp == Comparison::Strict);
    Rational sum = 0;
    for (const auto& w : v.hyperplane->weights) {
        CHECK(w >= 0);
        sum += w;
    }
    CHECK(sum == 1);
    for (std::uint64_t mask = 0; mask < (1ull << sys.n); ++mask) {
        StateWord s(sys.n, mask);
        CHECK(eval_state(sys, s) == threshold_eval(*v.hyperplane, s));
    }
}

// The certificate point must be the stated convex combination of minpaths
// and of mincuts simultaneously.
void check_certificate_sound(const BinarySystem& sys,
                             const SeparabilityVerdict& v) {
    REQUIRE(v.certificate.has_value());
    const auto& cert = *v.certificate;
    Rational psum = 0, csum = 0;
    std::vector<Rational> ppoint(sys.n, 0), cpoint(sys.n, 0);
    for (const auto& [w, q] : cert.path_weights) {
        CHECK(q >= 0);
        CHECK(eval_state(sys, w));
        psum += q;
        for (int i = 0; i < sys.n; ++i)
            if (w.bit(i)) ppoint[i] += q;
    }
    for (const auto& [w, q] : cert.cut_weights) {
        CHECK(q >= 0);
        CHECK(!eval_state(sys, w));
        csum += q;
        for (int i = 0; i < sys.n; ++i)
            if (w.bit(i)) cpoint[i] += q;
    }
    CHECK(psum == 1);
    CHECK(csum == 1);
    CHECK(ppoint == cert.common_point);
    CHECK(cpoint == cert.common_point);
}

// Grid oracle: a monotone system on n <= 4 components is separable iff some
// small-integer weight vector strictly splits minpath scores from mincut
// scores. Integer weights up to 5 are complete at this size.
bool grid_separable(const BinarySystem& sys) {
    auto inv = enumerate_inventory(sys);
    if (inv.minpaths.empty() || inv.mincuts.empty()) return true;
    int n = sys.n;
    std::array<int, 4> w = {0, 0, 0, 0};
    int limit = 1;
    for (int i = 0; i < n; ++i) limit *= 6;
    for (int code = 0; code < limit; ++code) {
        int c = code;
        for (int i = 0; i < n; ++i) { w[i] = c % 6; c /= 6; }
        int min_path = 1 << 20, max_cut = -1;
        for (const auto& p : inv.minpaths) {
            int v = 0;
            for (int i = 0; i < n; ++i) v += p.bit(i) ? w[i] : 0;
            min_path = std::min(min_path, v);
        }
        for (const auto& q : inv.mincuts) {
            int v = 0;
            for (int i = 0; i < n; ++i) v += q.bit(i) ? w[i] : 0;
            max_cut = std::max(max_cut, v);
        }
        if (min_path > max_cut) return true;
    }
    return false;
}

} // namespace

TEST_CASE("series and parallel systems are separable") {
    auto series = is_separable(series_system(3));
    CHECK(series.outcome == SeparabilityOutcome::Separable);
    CHECK(series.margin > 0);
    check_hyperplane_sound(series_system(3), series);

    auto par = is_separable(parallel_system(3));
    CHECK(par.outcome == SeparabilityOutcome::Separable);
    check_hyperplane_sound(parallel_system(3), par);
}

TEST_CASE("trees and cycles are separable, margins exact") {
    for (int n = 2; n <= 6; ++n) {
        BinarySystem tree = BinarySystem::from_graph(path_graph(n));
        auto tv = is_separable(tree);
        CHECK(tv.outcome == SeparabilityOutcome::Separable);
        check_hyperplane_sound(tree, tv);
    }
    for (int n = 3; n <= 6; ++n) {
        BinarySystem cyc = BinarySystem::from_graph(cycle_graph(n));
        auto cv = is_separable(cyc);
        CHECK(cv.outcome == SeparabilityOutcome::Separable);
        check_hyperplane_sound(cyc, cv);
    }
    // series system on n components: best margin is 1/n (uniform weights
    // separate the single minpath 1..1 at n*(1/n)=1 from cuts at (n-1)/n)
    auto s3 = is_separable(series_system(3));
    CHECK(s3.margin == Rational(1, 3));
}

TEST_CASE("S_N family is nonseparable with the all-half common point") {
    for (int n = 4; n <= 8; ++n) {
        BinarySystem sn = build_sn_family(n);
        auto v = is_separable(sn);
        CHECK(v.outcome == SeparabilityOutcome::Nonseparable);
        CHECK(v.margin <= 0);
        check_certificate_sound(sn, v);
        if (n % 2 == 0) {
            // averaging the two complementary mincuts lands at (1/2,...,1/2),
            // which is also a convex combination of minpaths
            std::vector<Rational> half(n, Rational(1, 2));
            Rational csum = 0;
            for (const auto& [w, q] : v.certificate->cut_weights) csum += q;
            CHECK(csum == 1);
        }
    }
}

TEST_CASE("K_4 all-terminal is nonseparable") {
    BinarySystem k4 = BinarySystem::from_graph(complete_graph(4));
    auto v = is_separable(k4);
    CHECK(v.outcome == SeparabilityOutcome::Nonseparable);
    check_certificate_sound(k4, v);
}

TEST_CASE("butterfly, glasses and monma systems are nonseparable") {
    for (const UndirectedGraph& g :
         {butterfly_graph(), glasses_graph(), monma_graph(2, 2, 1)}) {
        BinarySystem sys = BinarySystem::from_graph(g);
        auto v = is_separable(sys);
        CHECK(v.outcome == SeparabilityOutcome::Nonseparable);
        check_certificate_sound(sys, v);
    }
}

TEST_CASE("degenerate structure functions") {
    CHECK_THROWS_AS(separability_margin({}, {}, 3), DegenerateError);

    // phi identically 1 (no mincuts at all is a model error at the margin
    // level, but is_separable handles the constant systems)
    BinarySystem one = BinarySystem::from_truth_table(2, {true, true, true, true});
    auto v1 = is_separable(one);
    CHECK(v1.outcome == SeparabilityOutcome::Separable);
    check_hyperplane_sound(one, v1);

    BinarySystem zero =
        BinarySystem::from_truth_table(2, {false, false, false, false});
    auto v0 = is_separable(zero);
    CHECK(v0.outcome == SeparabilityOutcome::Separable);
    check_hyperplane_sound(zero, v0);

    BinarySystem xorsys =
        BinarySystem::from_truth_table(2, {false, true, true, false});
    CHECK_THROWS_AS(is_separable(xorsys), ModelError);
}

TEST_CASE("every monotone system on up to 3 components is separable") {
    for (std::uint64_t table = 0; table < (1u << 8); ++table) {
        std::vector<bool> bits(8);
        for (int i = 0; i < 8; ++i) bits[i] = (table >> i) & 1;
        BinarySystem sys = BinarySystem::from_truth_table(3, bits);
        if (!is_monotone(sys).monotone) continue;
        auto v = is_separable(sys);
        CHECK(v.outcome == SeparabilityOutcome::Separable);
        check_hyperplane_sound(sys, v);
    }
}

TEST_CASE("LP verdict matches the grid oracle on random 4-component systems") {
    Rng rng(424242);
    for (int trial = 0; trial < 120; ++trial) {
        BinarySystem sys = random_monotone_system(4, rng);
        auto v = is_separable(sys);
        bool oracle = grid_separable(sys);
        CHECK((v.outcome == SeparabilityOutcome::Separable) == oracle);
        if (v.outcome == SeparabilityOutcome::Separable)
            check_hyperplane_sound(sys, v);
        else
            check_certificate_sound(sys, v);
    }
}

TEST_CASE("cost assignment criterion matches the LP") {
    Rng rng(1717);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        BinarySystem sys = random_monotone_system(n, rng);
        auto inv = enumerate_inventory(sys);
        if (inv.minpaths.empty() || inv.mincuts.empty()) continue;
        auto v = separability_margin(inv.minpaths, inv.mincuts, n);
        if (v.outcome == SeparabilityOutcome::Separable) {
            // LP weights interpreted as costs satisfy S < c(sigma)+c(omega)
            auto assign = make_cost_assignment(v.hyperplane->weights,
                                               inv.minpaths, inv.mincuts);
            CHECK(verify_assignment_criterion(assign));
            auto hp = assignment_to_hyperplane(assign);
            CHECK(hp.cmp == Comparison::NonStrict);
            for (const auto& p : inv.minpaths)
                CHECK(threshold_eval(hp, p));
            for (const auto& c : inv.mincuts)
                CHECK(!threshold_eval(hp, c));
        } else {
            // nonseparable: no scaling of any single cost vector may pass;
            // spot-check unit costs
            auto unit = make_cost_assignment(std::vector<Rational>(n, 1),
                                             inv.minpaths, inv.mincuts);
            CHECK(!verify_assignment_criterion(unit));
            CHECK_THROWS_AS(assignment_to_hyperplane(unit), WitnessError);
        }
    }
}

TEST_CASE("assignment criterion worked examples") {
    // path graph P_3 (two bridges), unit costs: S=2, c(sigma)=2, c(omega)=1
    BinarySystem p3 = BinarySystem::from_graph(path_graph(3));
    auto inv = enumerate_inventory(p3);
    auto a = make_cost_assignment({1, 1}, inv.minpaths, inv.mincuts);
    CHECK(a.total == 2);
    CHECK(a.min_path_cost == 2);
    CHECK(a.min_cut_cost == 1);
    CHECK(verify_assignment_criterion(a)); // 2 < 3

    // C_4, unit costs: S=4, c(sigma)=3 (any spanning tree), c(omega)=2
    BinarySystem c4 = BinarySystem::from_graph(cycle_graph(4));
    auto cinv = enumerate_inventory(c4);
    auto ca = make_cost_assignment({1, 1, 1, 1}, cinv.minpaths, cinv.mincuts);
    CHECK(ca.total == 4);
    CHECK(ca.min_path_cost == 3);
    CHECK(ca.min_cut_cost == 2);
    CHECK(verify_assignment_criterion(ca)); // 4 < 5

    // butterfly, unit costs fail: S=6, c(sigma)=4, c(omega)=2
    BinarySystem bf = BinarySystem::from_graph(butterfly_graph());
    auto binv = enumerate_inventory(bf);
    auto ba = make_cost_assignment(std::vector<Rational>(6, 1), binv.minpaths,
                                   binv.mincuts);
    CHECK(ba.total == 6);
    CHECK(ba.min_path_cost == 4);
    CHECK(ba.min_cut_cost == 2);
    CHECK(!verify_assignment_criterion(ba)); // 6 < 6 fails
}

TEST_CASE("criterion is invariant under positive scaling") {
    BinarySystem c5 = BinarySystem::from_graph(cycle_graph(5));
    auto inv = enumerate_inventory(c5);
    auto base = make_cost_assignment(std::vector<Rational>(5, 1), inv.minpaths,
                                     inv.mincuts);
    auto scaled = make_cost_assignment(std::vector<Rational>(5, Rational(7, 3)),
                                       inv.minpaths, inv.mincuts);
    CHECK(verify_assignment_criterion(base) ==
          verify_assignment_criterion(scaled));
}

TEST_CASE("feasible assignment from the classifier passes the criterion") {
    Rng rng(31337);
    for (int trial = 0; trial < 40; ++trial) {
        UndirectedGraph g = random_separable_graph(7, rng);
        if (component_count(g) != 1) continue;
        auto costs = find_feasible_assignment(g);
        BinarySystem sys = BinarySystem::from_graph(g);
        auto inv = enumerate_inventory(sys);
        if (inv.minpaths.empty() || inv.mincuts.empty()) continue;
        auto a = make_cost_assignment(costs, inv.minpaths, inv.mincuts);
        CHECK(verify_assignment_criterion(a));
    }
}
