#include "sepsys/threshold.hpp"

namespace sepsys {

Rational dot(const std::vector<Rational>& weights, const StateWord& w) {
    Rational sum = 0;
    for (int i = 0; i < w.n; ++i)
        if (w.bit(i)) sum += weights[i];
    return sum;
}

bool threshold_eval(const ThresholdDescription& desc, const StateWord& state) {
    if (desc.size() != state.n)
        throw DimensionError("state length does not match weight count");
    Rational s = dot(desc.weights, state);
    return desc.cmp == Comparison::Strict ? s > desc.alpha0 : s >= desc.alpha0;
}

ThresholdDescription normalize_hyperplane(const ThresholdDescription& desc) {
    Rational total = 0;
    for (const auto& w : desc.weights) {
        if (w < 0) throw DomainError("negative hyperplane weight");
        total += w;
    }
    if (total == 0)
        throw DegenerateError("all-zero hyperplane weights");
    ThresholdDescription out = desc;
    for (auto& w : out.weights) w /= total;
    out.alpha0 /= total;
    return out;
}

} // namespace sepsys
