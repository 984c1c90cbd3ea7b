#pragma once

#include <optional>
#include <vector>

#include "sepsys/binary_system.hpp"
#include "sepsys/separability.hpp"
#include "sepsys/threshold.hpp"

namespace sepsys {

enum class CertSide { PathsetSide, CutsetSide };

const char* side_name(CertSide side);

// d hyperplanes with non-negative weights, non-strict on the included side.
// Pathset-side: every pathset satisfies n.x >= alpha for ALL hyperplanes and
// every cutset has n.x < alpha for at least one. Cutset-side is the dual:
// cutsets satisfy n.x <= alpha for all, each pathset exceeds one.
struct HyperplaneCertificate {
    CertSide side = CertSide::PathsetSide;
    std::vector<ThresholdDescription> hyperplanes; // cmp field unused; side rules
};

struct CertificateCheck {
    bool valid = false;
    std::optional<StateWord> counterexample;
};

// Exhaustive verification over all 2^N states.
CertificateCheck verify_certificate(const BinarySystem& sys,
                                    const HyperplaneCertificate& cert,
                                    int cap = kDefaultEvalCap);

// One hyperplane per mincut: sum of the components failed in that mincut
// must be >= 1. Valid pathset-side certificate with d = number of mincuts.
HyperplaneCertificate mincut_certificate(const BinarySystem& sys,
                                         int cap = kDefaultEvalCap);

struct LevelResult {
    bool found = false; // false: exceeds max_d
    int level = 0;
    HyperplaneCertificate certificate;
};

inline constexpr int kDefaultLevelCap = 12;

// Exact minimal d: partitions of the excluded antichain into groups, each
// strictly LP-separable from the full included side; minimized over both
// side conventions.
LevelResult level_of_separability(const BinarySystem& sys, int max_d,
                                  int cap = kDefaultLevelCap);

} // namespace sepsys
