#include "sepsys/simplex.hpp"

#include <cstddef>

namespace sepsys {

void LinearProgram::add_row(std::vector<Rational> coeffs, Rel rel, Rational b) {
    if (static_cast<int>(coeffs.size()) != num_vars)
        throw DimensionError("constraint width does not match variable count");
    rows.push_back(std::move(coeffs));
    rels.push_back(rel);
    rhs.push_back(std::move(b));
}

namespace {

struct Tableau {
    int m = 0, cols = 0;              // cols excludes the rhs column
    std::vector<std::vector<Rational>> t; // m rows, cols+1 wide
    std::vector<int> basis;
    std::vector<Rational> z;          // reduced-cost row, cols+1 wide (obj in back)
    std::vector<bool> banned;         // columns removed from pricing

    void pivot(int r, int col) {
        Rational p = t[r][col];
        for (auto& v : t[r]) v /= p;
        for (int i = 0; i < m; ++i) {
            if (i == r || t[i][col] == 0) continue;
            Rational f = t[i][col];
            for (int j = 0; j <= cols; ++j) t[i][j] -= f * t[r][j];
        }
        if (z[col] != 0) {
            Rational f = z[col];
            for (int j = 0; j <= cols; ++j) z[j] -= f * t[r][j];
        }
        basis[r] = col;
    }

    void load_costs(const std::vector<Rational>& c) {
        z.assign(cols + 1, Rational(0));
        for (int j = 0; j < cols; ++j) z[j] = c[j];
        for (int i = 0; i < m; ++i) {
            if (c[basis[i]] == 0) continue;
            Rational f = c[basis[i]];
            for (int j = 0; j <= cols; ++j) z[j] -= f * t[i][j];
        }
    }

    // Maximizes the loaded cost row. Returns false on unboundedness.
    bool optimize() {
        long iter = 0;
        const long bland_after = 2000 + 4L * (m + cols);
        while (true) {
            int col = -1;
            if (iter++ < bland_after) {
                for (int j = 0; j < cols; ++j) {
                    if (banned[j] || z[j] <= 0) continue;
                    if (col == -1 || z[j] > z[col]) col = j;
                }
            } else {
                for (int j = 0; j < cols; ++j)
                    if (!banned[j] && z[j] > 0) { col = j; break; }
            }
            if (col == -1) return true;
            int row = -1;
            for (int i = 0; i < m; ++i) {
                if (t[i][col] <= 0) continue;
                if (row == -1) { row = i; continue; }
                Rational cur = t[i][cols] / t[i][col];
                Rational best = t[row][cols] / t[row][col];
                if (cur < best || (cur == best && basis[i] < basis[row]))
                    row = i;
            }
            if (row == -1) return false;
            pivot(row, col);
        }
    }
};

} // namespace

LpSolution solve_lp(const LinearProgram& lp) {
    const int m = static_cast<int>(lp.rows.size());
    const int n = lp.num_vars;

    // Column layout: structural | slack/surplus | artificial.
    int num_slack = 0;
    for (auto rel : lp.rels)
        if (rel != Rel::Eq) ++num_slack;

    Tableau tab;
    tab.m = m;
    // Every row gets an artificial; rows whose slack can start basic skip it
    // below, so some artificial columns stay unused. Simple and uniform.
    tab.cols = n + num_slack + m;
    tab.t.assign(m, std::vector<Rational>(tab.cols + 1, Rational(0)));
    tab.basis.assign(m, -1);
    tab.banned.assign(tab.cols, false);

    int slack_at = n;
    std::vector<int> artificial_cols;
    for (int i = 0; i < m; ++i) {
        Rational sign = 1;
        Rel rel = lp.rels[i];
        if (lp.rhs[i] < 0) {
            sign = -1;
            if (rel == Rel::Le) rel = Rel::Ge;
            else if (rel == Rel::Ge) rel = Rel::Le;
        }
        for (int j = 0; j < n; ++j) tab.t[i][j] = sign * lp.rows[i][j];
        tab.t[i][tab.cols] = sign * lp.rhs[i];
        if (lp.rels[i] != Rel::Eq) {
            tab.t[i][slack_at] = (rel == Rel::Le) ? 1 : -1;
            if (rel == Rel::Le) tab.basis[i] = slack_at;
            ++slack_at;
        }
        if (tab.basis[i] == -1) {
            int art = n + num_slack + i;
            tab.t[i][art] = 1;
            tab.basis[i] = art;
            artificial_cols.push_back(art);
        }
    }
    for (int j = n + num_slack; j < tab.cols; ++j) {
        bool used = false;
        for (int art : artificial_cols) used = used || art == j;
        if (!used) tab.banned[j] = true;
    }

    LpSolution sol;

    if (!artificial_cols.empty()) {
        std::vector<Rational> phase1(tab.cols, Rational(0));
        for (int art : artificial_cols) phase1[art] = -1;
        tab.load_costs(phase1);
        tab.optimize(); // bounded by construction (objective <= 0)
        if (tab.z[tab.cols] != 0) { // optimum of -sum(artificials) below zero
            sol.status = LpStatus::Infeasible;
            return sol;
        }
        // Drive leftover artificials out of the basis.
        for (int i = 0; i < tab.m; ++i) {
            if (tab.basis[i] < n + num_slack) continue;
            int col = -1;
            for (int j = 0; j < n + num_slack; ++j)
                if (tab.t[i][j] != 0) { col = j; break; }
            if (col != -1) tab.pivot(i, col);
        }
        // Rows still pinned to an artificial are linearly dependent; drop them.
        for (int i = tab.m - 1; i >= 0; --i) {
            if (tab.basis[i] < n + num_slack) continue;
            tab.t.erase(tab.t.begin() + i);
            tab.basis.erase(tab.basis.begin() + i);
            --tab.m;
        }
        for (int art : artificial_cols) tab.banned[art] = true;
    }

    std::vector<Rational> phase2(tab.cols, Rational(0));
    for (int j = 0; j < n; ++j) phase2[j] = lp.objective[j];
    tab.load_costs(phase2);
    if (!tab.optimize()) {
        sol.status = LpStatus::Unbounded;
        return sol;
    }

    sol.status = LpStatus::Optimal;
    sol.x.assign(n, Rational(0));
    for (int i = 0; i < tab.m; ++i)
        if (tab.basis[i] < n) sol.x[tab.basis[i]] = tab.t[i][tab.cols];
    sol.objective = 0;
    for (int j = 0; j < n; ++j) sol.objective += lp.objective[j] * sol.x[j];
    return sol;
}

} // namespace sepsys
