#include "sepsys/partition.hpp"

#include <algorithm>

namespace sepsys {

PartitionInstance PartitionInstance::from_values(std::vector<std::int64_t> values) {
    if (values.empty())
        throw DomainError("partition instance needs at least one value");
    PartitionInstance inst;
    inst.total = 0;
    for (auto v : values) {
        if (v < 1) throw DomainError("partition values must be positive");
        inst.total += v;
    }
    inst.values = std::move(values);
    return inst;
}

std::pair<BinarySystem, BinarySystem> partition_reduction(
    const PartitionInstance& instance) {
    const int n = static_cast<int>(instance.values.size());
    std::vector<Rational> weights;
    Rational n_min;
    for (int i = 0; i < n; ++i) {
        Rational w(instance.values[i], instance.total);
        w.canonicalize();
        if (i == 0 || w < n_min) n_min = w;
        weights.push_back(std::move(w));
    }
    ThresholdDescription first{weights, Rational(1, 2) + n_min / 2,
                               Comparison::NonStrict};
    ThresholdDescription second{weights, Rational(1, 2), Comparison::NonStrict};
    return {BinarySystem::from_threshold(std::move(first)),
            BinarySystem::from_threshold(std::move(second))};
}

PartitionDecision partition_decide(const PartitionInstance& instance, int cap) {
    const int n = static_cast<int>(instance.values.size());
    if (n > cap)
        throw SizeError("partition_decide: instance size exceeds cap");
    PartitionDecision result;
    if (instance.total % 2 != 0) {
        result.reliability_diff = 0;
        return result;
    }
    const std::int64_t half = instance.total / 2;
    std::int64_t count = 0;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        std::int64_t sum = 0;
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1u) sum += instance.values[i];
        if (sum != half) continue;
        ++count;
        if (result.witness.empty()) {
            result.yes = true;
            for (int i = 0; i < n; ++i)
                if ((mask >> i) & 1u) result.witness.push_back(i + 1);
        }
    }
    result.reliability_diff = Rational(Integer(count), Integer(1) << n);
    result.reliability_diff.canonicalize();
    return result;
}

} // namespace sepsys
