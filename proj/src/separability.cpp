#include "sepsys/separability.hpp"

#include <algorithm>

namespace sepsys {

namespace {

// Degenerate positive verdict used when there is nothing to separate: no
// binary word reaches alpha0 = 2 under unit-1-norm weights.
SeparabilityVerdict unsatisfiable_verdict(int n) {
    SeparabilityVerdict v;
    v.outcome = SeparabilityOutcome::Separable;
    v.hyperplane = ThresholdDescription{
        std::vector<Rational>(n, Rational(1, n)), Rational(2), Comparison::Strict};
    v.margin = 1;
    return v;
}

// Hyperplane satisfied by every word: alpha0 = -1.
SeparabilityVerdict all_pass_verdict(int n) {
    SeparabilityVerdict v;
    v.outcome = SeparabilityOutcome::Separable;
    v.hyperplane = ThresholdDescription{
        std::vector<Rational>(n, Rational(1, n)), Rational(-1), Comparison::Strict};
    v.margin = 1;
    return v;
}

// Feasibility LP for a pair of convex combinations p (over minpaths) and
// c (over mincuts) with p_i <= c_i coordinate-wise. With `exact` the
// coordinate rows demand equality instead.
LpSolution hull_lp(const std::vector<StateWord>& minpaths,
                   const std::vector<StateWord>& mincuts, int n, bool exact) {
    const int np = static_cast<int>(minpaths.size());
    const int nc = static_cast<int>(mincuts.size());
    LinearProgram lp;
    lp.num_vars = np + nc;
    lp.objective.assign(lp.num_vars, Rational(0));
    std::vector<Rational> row(lp.num_vars, Rational(0));
    for (int j = 0; j < np; ++j) row[j] = 1;
    lp.add_row(row, Rel::Eq, 1);
    std::fill(row.begin(), row.end(), Rational(0));
    for (int k = 0; k < nc; ++k) row[np + k] = 1;
    lp.add_row(row, Rel::Eq, 1);
    for (int i = 0; i < n; ++i) {
        std::fill(row.begin(), row.end(), Rational(0));
        for (int j = 0; j < np; ++j)
            if (minpaths[j].bit(i)) row[j] = 1;
        for (int k = 0; k < nc; ++k)
            if (mincuts[k].bit(i)) row[np + k] = -1;
        lp.add_row(row, exact ? Rel::Eq : Rel::Le, 0);
    }
    return solve_lp(lp);
}

IntersectionCertificate hull_intersection(const std::vector<StateWord>& minpaths,
                                          const std::vector<StateWord>& mincuts,
                                          int n) {
    const int np = static_cast<int>(minpaths.size());
    // The minpath and mincut hulls themselves may be disjoint even for a
    // nonseparable system (every minpath combination can sit strictly below
    // every mincut combination). Prefer an exact meeting point when one
    // exists; otherwise take p <= c and lift the path combination onto
    // non-minimal pathsets so both combinations agree at c.
    auto sol = hull_lp(minpaths, mincuts, n, true);
    bool lifted = false;
    if (sol.status != LpStatus::Optimal) {
        sol = hull_lp(minpaths, mincuts, n, false);
        lifted = true;
    }
    if (sol.status != LpStatus::Optimal)
        throw Error("hull intersection LP unexpectedly infeasible");

    IntersectionCertificate cert;
    std::vector<Rational> ppoint(n, 0);
    cert.common_point.assign(n, Rational(0));
    for (int j = 0; j < np; ++j) {
        if (sol.x[j] == 0) continue;
        cert.path_weights.emplace_back(minpaths[j], sol.x[j]);
        for (int i = 0; i < n; ++i)
            if (minpaths[j].bit(i)) ppoint[i] += sol.x[j];
    }
    for (std::size_t k = np; k < sol.x.size(); ++k) {
        if (sol.x[k] == 0) continue;
        const StateWord& w = mincuts[k - np];
        cert.cut_weights.emplace_back(w, sol.x[k]);
        for (int i = 0; i < n; ++i)
            if (w.bit(i)) cert.common_point[i] += sol.x[k];
    }
    if (!lifted) {
        if (ppoint != cert.common_point)
            throw Error("hull intersection point mismatch");
        return cert;
    }
    // Raise coordinates of the path combination up to the cut point: moving
    // weight from word w to w|e_i increases coordinate i only, and any word
    // above a minpath is still a pathset. Enough liftable mass exists at
    // every coordinate because the target stays within the unit cube.
    for (int i = 0; i < n; ++i) {
        Rational need = cert.common_point[i] - ppoint[i];
        if (need < 0) throw Error("hull intersection point not dominated");
        for (std::size_t j = 0; j < cert.path_weights.size() && need > 0; ++j) {
            auto& [w, q] = cert.path_weights[j];
            if (w.bit(i) || q == 0) continue;
            Rational delta = std::min(need, q);
            q -= delta;
            need -= delta;
            cert.path_weights.emplace_back(w.with_bit(i, true), delta);
        }
        if (need != 0) throw Error("hull intersection lift ran out of mass");
    }
    // merge duplicates and drop zero-weight entries
    std::sort(cert.path_weights.begin(), cert.path_weights.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<StateWord, Rational>> merged;
    for (const auto& [w, q] : cert.path_weights) {
        if (q == 0) continue;
        if (!merged.empty() && merged.back().first == w)
            merged.back().second += q;
        else
            merged.emplace_back(w, q);
    }
    cert.path_weights = std::move(merged);
    return cert;
}

} // namespace

SeparabilityVerdict separability_margin(const std::vector<StateWord>& minpaths,
                                        const std::vector<StateWord>& mincuts,
                                        int n) {
    if (minpaths.empty() && mincuts.empty())
        throw DegenerateError("nothing to separate: both antichains empty");
    if (mincuts.empty())
        throw ModelError("empty mincut set: phi(0)=0 fails for a monotone system");
    if (!is_antichain(minpaths) || !is_antichain(mincuts))
        throw ModelError("separability input must consist of antichains");
    for (const auto& w : minpaths)
        if (w.n != n) throw DimensionError("minpath length mismatch");
    for (const auto& w : mincuts)
        if (w.n != n) throw DimensionError("mincut length mismatch");
    if (minpaths.empty())
        return unsatisfiable_verdict(n); // phi == 0: every state is a cutset

    // Decide via the dual first: the optimal margin equals
    //   min over hull combos p (minpaths), c (mincuts) of max_i (p_i - c_i),
    // an LP with only n + 2 rows however large the antichains are. Dense
    // systems (many minpaths) are typically nonseparable and never touch
    // the big primal tableau.
    {
        const int np = static_cast<int>(minpaths.size());
        const int nc = static_cast<int>(mincuts.size());
        LinearProgram dual;
        dual.num_vars = np + nc + 2; // y, z, t = tp - tm
        const int tp = np + nc, tm = np + nc + 1;
        dual.objective.assign(dual.num_vars, Rational(0));
        dual.objective[tp] = -1;
        dual.objective[tm] = 1;
        std::vector<Rational> drow(dual.num_vars, Rational(0));
        for (int j = 0; j < np; ++j) drow[j] = 1;
        dual.add_row(drow, Rel::Eq, 1);
        std::fill(drow.begin(), drow.end(), Rational(0));
        for (int k = 0; k < nc; ++k) drow[np + k] = 1;
        dual.add_row(drow, Rel::Eq, 1);
        for (int i = 0; i < n; ++i) {
            std::fill(drow.begin(), drow.end(), Rational(0));
            for (int j = 0; j < np; ++j)
                if (minpaths[j].bit(i)) drow[j] = 1;
            for (int k = 0; k < nc; ++k)
                if (mincuts[k].bit(i)) drow[np + k] = -1;
            drow[tp] = -1;
            drow[tm] = 1;
            dual.add_row(drow, Rel::Le, 0);
        }
        auto dsol = solve_lp(dual);
        if (dsol.status != LpStatus::Optimal)
            throw Error("margin dual LP did not reach an optimum");
        Rational margin = -dsol.objective; // min-max value
        if (margin <= 0) {
            SeparabilityVerdict verdict;
            verdict.outcome = SeparabilityOutcome::Nonseparable;
            verdict.margin = margin;
            verdict.certificate = hull_intersection(minpaths, mincuts, n);
            return verdict;
        }
    }

    // Separable: recover the hyperplane from the primal max-margin LP.
    // Variables: n_1..n_N, alpha0 = a+ - a-, eps = e+ - e-.
    LinearProgram lp;
    lp.num_vars = n + 4;
    const int ap = n, am = n + 1, ep = n + 2, em = n + 3;
    lp.objective.assign(lp.num_vars, Rational(0));
    lp.objective[ep] = 1;
    lp.objective[em] = -1;
    std::vector<Rational> row(lp.num_vars, Rational(0));
    for (const auto& sigma : minpaths) {
        std::fill(row.begin(), row.end(), Rational(0));
        for (int i = 0; i < n; ++i)
            if (sigma.bit(i)) row[i] = 1;
        row[ap] = -1;
        row[am] = 1;
        row[ep] = -1;
        row[em] = 1;
        lp.add_row(row, Rel::Ge, 0);
    }
    for (const auto& omega : mincuts) {
        std::fill(row.begin(), row.end(), Rational(0));
        for (int i = 0; i < n; ++i)
            if (omega.bit(i)) row[i] = 1;
        row[ap] = -1;
        row[am] = 1;
        lp.add_row(row, Rel::Le, 0);
    }
    std::fill(row.begin(), row.end(), Rational(0));
    for (int i = 0; i < n; ++i) row[i] = 1;
    lp.add_row(row, Rel::Eq, 1);

    auto sol = solve_lp(lp);
    if (sol.status != LpStatus::Optimal)
        throw Error("margin LP did not reach an optimum");

    SeparabilityVerdict verdict;
    verdict.margin = sol.objective;
    if (sol.objective <= 0)
        throw Error("primal margin LP disagrees with its dual");
    verdict.outcome = SeparabilityOutcome::Separable;
    ThresholdDescription h;
    h.weights.assign(sol.x.begin(), sol.x.begin() + n);
    h.alpha0 = sol.x[ap] - sol.x[am];
    h.cmp = Comparison::Strict;
    verdict.hyperplane = h;
    return verdict;
}

SeparabilityVerdict is_separable(const BinarySystem& sys, int cap) {
    auto check = is_monotone(sys, cap);
    if (!check.monotone) {
        auto phi = truth_table(sys, cap);
        bool any_one = false, any_zero = false;
        for (bool b : phi) (b ? any_one : any_zero) = true;
        if (!any_one) return unsatisfiable_verdict(sys.n); // phi == 0
        if (!any_zero) return all_pass_verdict(sys.n);     // phi == 1
        throw ModelError("separability is defined for monotone systems");
    }
    auto inv = enumerate_inventory(sys, cap);
    return separability_margin(inv.minpaths, inv.mincuts, sys.n);
}

CostAssignment make_cost_assignment(std::vector<Rational> costs,
                                    const std::vector<StateWord>& minpaths,
                                    const std::vector<StateWord>& mincuts) {
    if (minpaths.empty() || mincuts.empty())
        throw DegenerateError("cost assignment needs both antichains");
    for (const auto& c : costs)
        if (c < 0) throw DomainError("costs must be non-negative");
    CostAssignment a;
    a.total = 0;
    for (const auto& c : costs) a.total += c;
    bool first = true;
    for (const auto& sigma : minpaths) {
        Rational c = dot(costs, sigma);
        if (first || c < a.min_path_cost) a.min_path_cost = c;
        first = false;
    }
    first = true;
    for (const auto& omega : mincuts) {
        Rational c = dot(costs, omega.complement());
        if (first || c < a.min_cut_cost) a.min_cut_cost = c;
        first = false;
    }
    a.costs = std::move(costs);
    return a;
}

bool verify_assignment_criterion(const CostAssignment& assignment) {
    return assignment.total < assignment.min_path_cost + assignment.min_cut_cost;
}

ThresholdDescription assignment_to_hyperplane(const CostAssignment& assignment) {
    if (!verify_assignment_criterion(assignment))
        throw WitnessError("assignment does not satisfy S < c(sigma) + c(omega)");
    return {assignment.costs, assignment.min_path_cost, Comparison::NonStrict};
}

} // namespace sepsys
