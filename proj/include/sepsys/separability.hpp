#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sepsys/binary_system.hpp"
#include "sepsys/rational.hpp"
#include "sepsys/simplex.hpp"
#include "sepsys/state_word.hpp"
#include "sepsys/threshold.hpp"

namespace sepsys {

enum class SeparabilityOutcome { Separable, Nonseparable };

// Two convex combinations, one over minpaths and one over mincuts, that
// meet at a common point: a witness that the convex hulls intersect.
struct IntersectionCertificate {
    std::vector<std::pair<StateWord, Rational>> path_weights;
    std::vector<std::pair<StateWord, Rational>> cut_weights;
    std::vector<Rational> common_point;
};

struct SeparabilityVerdict {
    SeparabilityOutcome outcome;
    std::optional<ThresholdDescription> hyperplane; // strict, weights sum to 1
    Rational margin;                                // optimal eps; > 0 iff separable
    std::optional<IntersectionCertificate> certificate;
};

// Max-margin LP over the antichains of a monotone system:
//   maximize eps  s.t.  n.sigma >= alpha0 + eps  (minpaths)
//                       n.omega <= alpha0        (mincuts)
//                       n >= 0, sum n_i = 1
// Separable iff the optimum eps is positive; otherwise the hulls intersect
// and an explicit common point is extracted by a feasibility LP.
SeparabilityVerdict separability_margin(const std::vector<StateWord>& minpaths,
                                        const std::vector<StateWord>& mincuts,
                                        int n);

SeparabilityVerdict is_separable(const BinarySystem& sys,
                                 int cap = kDefaultEvalCap);

struct CostAssignment {
    std::vector<Rational> costs;
    Rational total;         // S
    Rational min_path_cost; // c(sigma), over set components
    Rational min_cut_cost;  // c(omega), over failed components
};

// Computes S, c(sigma), c(omega) for a cost vector against the system's
// antichains.
CostAssignment make_cost_assignment(std::vector<Rational> costs,
                                    const std::vector<StateWord>& minpaths,
                                    const std::vector<StateWord>& mincuts);

// The S < c(sigma) + c(omega) test; exact comparison.
bool verify_assignment_criterion(const CostAssignment& assignment);

// Converts a feasible assignment into a separating hyperplane with
// alpha0 = c(sigma), non-strict on pathsets. Throws WitnessError when the
// assignment fails the criterion.
ThresholdDescription assignment_to_hyperplane(const CostAssignment& assignment);

} // namespace sepsys
