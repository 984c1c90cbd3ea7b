#include "sepsys/dsep.hpp"

#include <map>

namespace sepsys {

const char* side_name(CertSide side) {
    return side == CertSide::PathsetSide ? "pathset" : "cutset";
}

namespace {

void check_hyperplanes(const HyperplaneCertificate& cert, int n) {
    if (cert.hyperplanes.empty())
        throw DomainError("certificate needs at least one hyperplane");
    for (const auto& h : cert.hyperplanes) {
        if (h.size() != n)
            throw DimensionError("hyperplane width does not match component count");
        for (const auto& w : h.weights)
            if (w < 0) throw DomainError("certificate weights must be non-negative");
    }
}

} // namespace

CertificateCheck verify_certificate(const BinarySystem& sys,
                                    const HyperplaneCertificate& cert, int cap) {
    if (sys.n > cap)
        throw SizeError("verify_certificate: component count exceeds cap");
    check_hyperplanes(cert, sys.n);
    const bool path_side = cert.side == CertSide::PathsetSide;
    for (std::uint64_t idx = 0; idx < (1ull << sys.n); ++idx) {
        StateWord w(sys.n, idx);
        bool included = eval_state(sys, w) == path_side;
        bool all = true, any_violation = false;
        for (const auto& h : cert.hyperplanes) {
            Rational s = dot(h.weights, w);
            bool sat = path_side ? s >= h.alpha0 : s <= h.alpha0;
            all = all && sat;
            any_violation = any_violation || !sat;
        }
        if (included ? !all : !any_violation)
            return {false, w};
    }
    return {true, std::nullopt};
}

HyperplaneCertificate mincut_certificate(const BinarySystem& sys, int cap) {
    auto mincuts = enumerate_mincuts(sys, cap); // throws ModelError if non-monotone
    HyperplaneCertificate cert;
    cert.side = CertSide::PathsetSide;
    for (const auto& omega : mincuts) {
        ThresholdDescription h;
        h.weights.assign(sys.n, Rational(0));
        for (int i = 0; i < sys.n; ++i)
            if (!omega.bit(i)) h.weights[i] = 1;
        h.alpha0 = 1;
        h.cmp = Comparison::NonStrict;
        cert.hyperplanes.push_back(std::move(h));
    }
    auto check = verify_certificate(sys, cert, cap);
    if (!check.valid)
        throw Error("mincut certificate failed verification");
    return cert;
}

namespace {

ThresholdDescription integer_scaled(std::vector<Rational> weights, Rational alpha) {
    std::vector<Rational> all = weights;
    all.push_back(alpha);
    Integer l = common_denominator(all);
    for (auto& w : weights) {
        w *= l;
        w.canonicalize();
    }
    alpha *= l;
    alpha.canonicalize();
    return {std::move(weights), std::move(alpha), Comparison::NonStrict};
}

// Minimal partition of `excluded` into groups that are each strictly
// LP-separable from the full `included` antichain. Exponential by design;
// feasibility results are memoized per group mask.
struct PartitionSearch {
    const std::vector<StateWord>& included;
    const std::vector<StateWord>& excluded;
    int n;
    bool path_side; // true: included = minpaths, excluded = mincuts
    std::map<std::uint64_t, std::optional<SeparabilityVerdict>> feasible_memo;
    std::map<std::uint64_t, std::pair<int, std::uint64_t>> best_memo; // {d, chosen group}

    const std::optional<SeparabilityVerdict>& feasible(std::uint64_t mask) {
        auto it = feasible_memo.find(mask);
        if (it != feasible_memo.end()) return it->second;
        std::vector<StateWord> group;
        for (std::size_t k = 0; k < excluded.size(); ++k)
            if ((mask >> k) & 1u) group.push_back(excluded[k]);
        auto verdict = path_side ? separability_margin(included, group, n)
                                 : separability_margin(group, included, n);
        std::optional<SeparabilityVerdict> result;
        if (verdict.outcome == SeparabilityOutcome::Separable)
            result = std::move(verdict);
        return feasible_memo.emplace(mask, std::move(result)).first->second;
    }

    int best(std::uint64_t mask) {
        if (mask == 0) return 0;
        auto it = best_memo.find(mask);
        if (it != best_memo.end()) return it->second.first;
        if (feasible(mask)) {
            best_memo[mask] = {1, mask};
            return 1;
        }
        int low = __builtin_ctzll(mask);
        std::uint64_t rest = mask & (mask - 1);
        int best_d = __builtin_popcountll(mask); // singletons always work
        std::uint64_t best_group = 1ull << low;
        // all subsets of `rest`, each unioned with the lowest element
        std::uint64_t sub = rest;
        while (true) {
            std::uint64_t group = sub | (1ull << low);
            if (feasible(group)) {
                int d = 1 + best(mask & ~group);
                if (d < best_d) {
                    best_d = d;
                    best_group = group;
                }
            }
            if (sub == 0) break;
            sub = (sub - 1) & rest;
        }
        best_memo[mask] = {best_d, best_group};
        return best_d;
    }

    std::vector<ThresholdDescription> reconstruct(std::uint64_t mask) {
        std::vector<ThresholdDescription> planes;
        while (mask != 0) {
            std::uint64_t group = best_memo.at(mask).second;
            const auto& verdict = feasible(group);
            if (!verdict)
                throw Error("partition reconstruction hit an infeasible group");
            const auto& h = *verdict->hyperplane;
            // Pathset side: threshold alpha0+eps (paths at or above, group
            // cuts strictly below). Cutset side: threshold alpha0 (cuts at
            // or below, group paths strictly above).
            Rational alpha =
                path_side ? Rational(h.alpha0 + verdict->margin) : h.alpha0;
            planes.push_back(integer_scaled(h.weights, alpha));
            mask &= ~group;
        }
        return planes;
    }
};

} // namespace

LevelResult level_of_separability(const BinarySystem& sys, int max_d, int cap) {
    if (sys.n > cap)
        throw SizeError("level_of_separability: component count exceeds cap");
    if (max_d < 1)
        throw DomainError("max_d must be positive");
    auto inv = enumerate_inventory(sys, cap); // ModelError if non-monotone
    if (inv.mincuts.size() > 24 || inv.minpaths.size() > 24)
        throw SizeError("antichain too large for exact partition search");

    PartitionSearch path_search{inv.minpaths, inv.mincuts, sys.n, true, {}, {}};
    PartitionSearch cut_search{inv.mincuts, inv.minpaths, sys.n, false, {}, {}};

    std::uint64_t full_p = (1ull << inv.mincuts.size()) - 1;
    std::uint64_t full_c = (1ull << inv.minpaths.size()) - 1;
    int d_path = path_search.best(full_p);
    int d_cut = cut_search.best(full_c);

    LevelResult result;
    result.level = std::min(d_path, d_cut);
    if (result.level > max_d) {
        result.found = false;
        return result;
    }
    result.found = true;
    if (d_path <= d_cut) {
        result.certificate.side = CertSide::PathsetSide;
        result.certificate.hyperplanes = path_search.reconstruct(full_p);
    } else {
        result.certificate.side = CertSide::CutsetSide;
        result.certificate.hyperplanes = cut_search.reconstruct(full_c);
    }
    auto check = verify_certificate(sys, result.certificate,
                                    std::max(cap, sys.n));
    if (!check.valid)
        throw Error("level-of-separability certificate failed verification");
    return result;
}

} // namespace sepsys
