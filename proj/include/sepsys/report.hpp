#pragma once

#include <string>

#include "sepsys/binary_system.hpp"
#include "sepsys/dsep.hpp"
#include "sepsys/graph.hpp"

namespace sepsys {

struct AnalysisOptions {
    int eval_cap = kDefaultEvalCap;
    int reliability_cap = kDefaultReliabilityCap;
    int max_d = kDefaultLevelCap;
};

// Runs every analysis applicable to the input and renders one report; the
// text and JSON renderings carry identical content. All numbers are exact
// rationals in lowest terms; orderings are stable, so identical inputs
// produce byte-identical reports.
std::string report_for_graph(const UndirectedGraph& g,
                             const AnalysisOptions& options, bool as_json);
std::string report_for_system(const BinarySystem& sys,
                              const AnalysisOptions& options, bool as_json);

} // namespace sepsys
