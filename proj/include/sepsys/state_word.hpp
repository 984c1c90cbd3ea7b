#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sepsys/errors.hpp"

namespace sepsys {

// A binary word over N components, a vertex of the unit hypercube.
// Component 1 is the leftmost character of the text form and the most
// significant bit of the truth-table index; internally component i
// (0-based) lives at bit position n-1-i of `mask`, so `mask` doubles as
// the truth-table index of the word.
struct StateWord {
    int n = 0;
    std::uint64_t mask = 0;

    StateWord() = default;
    StateWord(int n_, std::uint64_t mask_) : n(n_), mask(mask_) {}

    static StateWord zeros(int n) { return {n, 0}; }
    static StateWord ones(int n) {
        return {n, n == 64 ? ~0ull : ((1ull << n) - 1)};
    }
    static StateWord from_index(int n, std::uint64_t index) { return {n, index}; }
    static StateWord parse(const std::string& text);

    bool bit(int i) const { return (mask >> (n - 1 - i)) & 1u; }
    StateWord with_bit(int i, bool value) const {
        std::uint64_t b = 1ull << (n - 1 - i);
        return {n, value ? (mask | b) : (mask & ~b)};
    }

    int popcount() const { return __builtin_popcountll(mask); }
    std::uint64_t index() const { return mask; }

    // Component-wise partial order: this <= other.
    bool leq(const StateWord& other) const { return (mask & ~other.mask) == 0; }
    bool comparable(const StateWord& other) const {
        return leq(other) || other.leq(*this);
    }

    StateWord complement() const { return {n, ones(n).mask & ~mask}; }

    std::string str() const;

    bool operator==(const StateWord& other) const {
        return n == other.n && mask == other.mask;
    }
    bool operator<(const StateWord& other) const { return mask < other.mask; }
};

// True iff no element is <= another (distinct) element.
bool is_antichain(const std::vector<StateWord>& words);

} // namespace sepsys
