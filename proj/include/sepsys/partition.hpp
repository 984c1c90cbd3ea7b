#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sepsys/binary_system.hpp"

namespace sepsys {

struct PartitionInstance {
    std::vector<std::int64_t> values; // positive integers a_1..a_N
    std::int64_t total = 0;           // s = sum a_i

    static PartitionInstance from_values(std::vector<std::int64_t> values);
};

// The hardness reduction: two threshold systems over n_i = a_i/s with all
// component probabilities 1/2 and non-strict comparison. The first system's
// threshold is 1/2 + n_min/2, the second's is 1/2; their reliabilities at
// p = 1/2 differ by (number of half-sum words) / 2^N.
std::pair<BinarySystem, BinarySystem> partition_reduction(
    const PartitionInstance& instance);

struct PartitionDecision {
    bool yes = false;
    std::vector<int> witness;  // 1-based indices with sum s/2, when yes
    Rational reliability_diff; // exactly (half-sum count) / 2^N
};

// Decides PARTITION by exact counting of half-sum subsets.
PartitionDecision partition_decide(const PartitionInstance& instance,
                                   int cap = kDefaultEvalCap);

} // namespace sepsys
