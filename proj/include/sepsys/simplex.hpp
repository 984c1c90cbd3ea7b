#pragma once

#include <vector>

#include "sepsys/rational.hpp"

namespace sepsys {

enum class Rel { Le, Ge, Eq };

// maximize c'x  subject to  A_i x (<=|>=|=) b_i,  x >= 0
struct LinearProgram {
    int num_vars = 0;
    std::vector<std::vector<Rational>> rows;
    std::vector<Rel> rels;
    std::vector<Rational> rhs;
    std::vector<Rational> objective;

    void add_row(std::vector<Rational> coeffs, Rel rel, Rational b);
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    Rational objective;
    std::vector<Rational> x;
};

// Dense two-phase tableau simplex over exact rationals. Pivots by largest
// reduced cost, falling back to Bland's rule after a fixed iteration budget
// to guarantee termination.
LpSolution solve_lp(const LinearProgram& lp);

} // namespace sepsys
