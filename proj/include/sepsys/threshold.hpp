#pragma once

#include <vector>

#include "sepsys/rational.hpp"
#include "sepsys/state_word.hpp"

namespace sepsys {

enum class Comparison { Strict, NonStrict };

// A separating hyperplane: pathset iff sum(n_i * x_i) > alpha0 (Strict)
// or >= alpha0 (NonStrict). All weights non-negative.
struct ThresholdDescription {
    std::vector<Rational> weights;
    Rational alpha0;
    Comparison cmp = Comparison::Strict;

    int size() const { return static_cast<int>(weights.size()); }
};

Rational dot(const std::vector<Rational>& weights, const StateWord& w);

bool threshold_eval(const ThresholdDescription& desc, const StateWord& state);

// Scales weights to unit 1-norm (and alpha0 by the same factor); the
// induced structure function is unchanged.
ThresholdDescription normalize_hyperplane(const ThresholdDescription& desc);

} // namespace sepsys
