#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sepsys/graph.hpp"
#include "sepsys/rational.hpp"
#include "sepsys/state_word.hpp"
#include "sepsys/threshold.hpp"

namespace sepsys {

// Default enumeration caps (configurable per call).
inline constexpr int kDefaultEvalCap = 24;
inline constexpr int kDefaultReliabilityCap = 20;

enum class Representation { TruthTable, MincutList, Threshold, GraphAllTerminal };

// A stochastic binary system: N components with independent operation
// probabilities and a structure function phi in one of four representations.
// Immutable after construction.
struct BinarySystem {
    int n = 0;
    Representation repr = Representation::TruthTable;
    std::vector<bool> truth;          // 2^n entries when TruthTable
    std::vector<StateWord> mincuts;   // antichain when MincutList
    ThresholdDescription threshold;
    UndirectedGraph graph;            // component order = edge order
    std::vector<Rational> probs;      // n entries in [0,1]

    static BinarySystem from_truth_table(int n, std::vector<bool> table);
    static BinarySystem from_threshold(ThresholdDescription desc);
    static BinarySystem from_graph(UndirectedGraph g); // all-terminal adapter
    void set_probs(std::vector<Rational> p);
};

// phi(state); dispatches on the representation.
bool eval_state(const BinarySystem& sys, const StateWord& state);

struct MonotoneCheck {
    bool monotone = false;
    // covering pair (lower, upper) with phi(lower)=1, phi(upper)=0, or an
    // endpoint violation reported as (w, w)
    std::optional<std::pair<StateWord, StateWord>> counterexample;
};

MonotoneCheck is_monotone(const BinarySystem& sys, int cap = kDefaultEvalCap);

// Exact antichains of minimal pathsets / maximal-failure states, sorted by
// truth-table index. Throw ModelError on non-monotone input.
std::vector<StateWord> enumerate_minpaths(const BinarySystem& sys,
                                          int cap = kDefaultEvalCap);
std::vector<StateWord> enumerate_mincuts(const BinarySystem& sys,
                                         int cap = kDefaultEvalCap);

struct PathCutInventory {
    std::vector<StateWord> minpaths;
    std::vector<StateWord> mincuts;
};

PathCutInventory enumerate_inventory(const BinarySystem& sys,
                                     int cap = kDefaultEvalCap);

// Exact brute-force reliability: the weighted sum over all pathsets under
// the independent-component product measure.
Rational reliability(const BinarySystem& sys, int cap = kDefaultReliabilityCap);

// System defined by phi(s)=0 iff s <= some listed mincut.
BinarySystem system_from_mincuts(int n, std::vector<StateWord> mincuts);

// The nonseparable family of two complementary mincuts: the first mincut is
// 1 on components 1..floor(N/2) and 0 elsewhere. Requires N >= 4.
BinarySystem build_sn_family(int n);

// Convenience: full truth table of phi (2^n entries), n <= cap.
std::vector<bool> truth_table(const BinarySystem& sys, int cap = kDefaultEvalCap);

} // namespace sepsys
