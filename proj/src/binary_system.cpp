#include "sepsys/binary_system.hpp"

namespace sepsys {

namespace {

void check_cap(int n, int cap, const char* what) {
    if (n > cap)
        throw SizeError(std::string(what) + ": component count exceeds cap");
    if (n < 1)
        throw DomainError("system needs at least one component");
}

std::vector<Rational> default_probs(int n) {
    return std::vector<Rational>(n, Rational(1, 2));
}

} // namespace

BinarySystem BinarySystem::from_truth_table(int n, std::vector<bool> table) {
    if (n < 1 || n > 62)
        throw DomainError("component count out of range");
    if (table.size() != (std::size_t{1} << n))
        throw ModelError("truth table must have exactly 2^N entries");
    BinarySystem sys;
    sys.n = n;
    sys.repr = Representation::TruthTable;
    sys.truth = std::move(table);
    sys.probs = default_probs(n);
    return sys;
}

BinarySystem BinarySystem::from_threshold(ThresholdDescription desc) {
    if (desc.size() < 1)
        throw DomainError("threshold needs at least one weight");
    for (const auto& w : desc.weights)
        if (w < 0) throw DomainError("negative threshold weight");
    BinarySystem sys;
    sys.n = desc.size();
    sys.repr = Representation::Threshold;
    sys.threshold = std::move(desc);
    sys.probs = default_probs(sys.n);
    return sys;
}

BinarySystem BinarySystem::from_graph(UndirectedGraph g) {
    g.validate();
    BinarySystem sys;
    sys.n = g.edge_count();
    if (sys.n < 1)
        throw DomainError("graph system needs at least one edge");
    sys.repr = Representation::GraphAllTerminal;
    sys.probs = g.edge_probs.empty() ? default_probs(sys.n) : g.edge_probs;
    sys.graph = std::move(g);
    return sys;
}

void BinarySystem::set_probs(std::vector<Rational> p) {
    if (static_cast<int>(p.size()) != n)
        throw DimensionError("probability count does not match component count");
    for (const auto& q : p)
        if (q < 0 || q > 1) throw DomainError("probability outside [0,1]");
    probs = std::move(p);
}

bool eval_state(const BinarySystem& sys, const StateWord& state) {
    if (state.n != sys.n)
        throw DimensionError("state length does not match component count");
    switch (sys.repr) {
        case Representation::TruthTable:
            return sys.truth[state.mask];
        case Representation::MincutList:
            for (const auto& cut : sys.mincuts)
                if (state.leq(cut)) return false;
            return true;
        case Representation::Threshold:
            return threshold_eval(sys.threshold, state);
        case Representation::GraphAllTerminal:
            return spanning_connected(sys.graph, state.mask);
    }
    return false;
}

std::vector<bool> truth_table(const BinarySystem& sys, int cap) {
    check_cap(sys.n, cap, "truth_table");
    if (sys.repr == Representation::TruthTable) return sys.truth;
    std::vector<bool> table(std::size_t{1} << sys.n);
    for (std::uint64_t idx = 0; idx < (1ull << sys.n); ++idx)
        table[idx] = eval_state(sys, StateWord::from_index(sys.n, idx));
    return table;
}

MonotoneCheck is_monotone(const BinarySystem& sys, int cap) {
    check_cap(sys.n, cap, "is_monotone");
    auto phi = truth_table(sys, cap);
    const auto zeros = StateWord::zeros(sys.n);
    const auto ones = StateWord::ones(sys.n);
    if (phi[zeros.mask])
        return {false, std::make_pair(zeros, zeros)};
    if (!phi[ones.mask])
        return {false, std::make_pair(ones, ones)};
    for (std::uint64_t idx = 0; idx < (1ull << sys.n); ++idx) {
        if (phi[idx]) continue;
        StateWord upper(sys.n, idx);
        for (int i = 0; i < sys.n; ++i) {
            if (!upper.bit(i)) continue;
            StateWord lower = upper.with_bit(i, false);
            if (phi[lower.mask])
                return {false, std::make_pair(lower, upper)};
        }
    }
    return {true, std::nullopt};
}

namespace {

PathCutInventory scan_inventory(const BinarySystem& sys, int cap) {
    check_cap(sys.n, cap, "enumerate");
    auto check = is_monotone(sys, cap);
    if (!check.monotone)
        throw ModelError("minpath/mincut enumeration requires a monotone system");
    auto phi = truth_table(sys, cap);
    PathCutInventory inv;
    for (std::uint64_t idx = 0; idx < (1ull << sys.n); ++idx) {
        StateWord w(sys.n, idx);
        if (phi[idx]) {
            bool minimal = true;
            for (int i = 0; i < sys.n && minimal; ++i)
                if (w.bit(i) && phi[w.with_bit(i, false).mask]) minimal = false;
            if (minimal) inv.minpaths.push_back(w);
        } else {
            bool maximal = true;
            for (int i = 0; i < sys.n && maximal; ++i)
                if (!w.bit(i) && !phi[w.with_bit(i, true).mask]) maximal = false;
            if (maximal) inv.mincuts.push_back(w);
        }
    }
    return inv;
}

} // namespace

PathCutInventory enumerate_inventory(const BinarySystem& sys, int cap) {
    return scan_inventory(sys, cap);
}

std::vector<StateWord> enumerate_minpaths(const BinarySystem& sys, int cap) {
    return scan_inventory(sys, cap).minpaths;
}

std::vector<StateWord> enumerate_mincuts(const BinarySystem& sys, int cap) {
    return scan_inventory(sys, cap).mincuts;
}

namespace {

// Depth-first accumulation of integer numerators over a fixed common
// denominator; one multiplication per lattice edge instead of N per state.
struct ReliabilityScan {
    const BinarySystem& sys;
    std::vector<Integer> up_num, down_num; // per-component numerators over den
    Integer acc = 0;
    StateWord word;

    explicit ReliabilityScan(const BinarySystem& s)
        : sys(s), word(StateWord::zeros(s.n)) {}

    void run(int i, const Integer& product) {
        if (product == 0) return;
        if (i == sys.n) {
            if (eval_state(sys, word)) acc += product;
            return;
        }
        word = word.with_bit(i, true);
        run(i + 1, Integer(product * up_num[i]));
        word = word.with_bit(i, false);
        run(i + 1, Integer(product * down_num[i]));
    }
};

} // namespace

Rational reliability(const BinarySystem& sys, int cap) {
    check_cap(sys.n, cap, "reliability");
    if (static_cast<int>(sys.probs.size()) != sys.n)
        throw DimensionError("probability count does not match component count");
    Integer den = 1;
    ReliabilityScan scan(sys);
    for (const auto& p : sys.probs) {
        Rational q = p;
        q.canonicalize();
        scan.up_num.push_back(q.get_num());
        scan.down_num.push_back(Integer(q.get_den() - q.get_num()));
        den *= q.get_den();
    }
    scan.run(0, 1);
    Rational r(scan.acc, den);
    r.canonicalize();
    return r;
}

BinarySystem system_from_mincuts(int n, std::vector<StateWord> mincuts) {
    if (n < 1 || n > 62)
        throw DomainError("component count out of range");
    for (const auto& w : mincuts) {
        if (w.n != n)
            throw DimensionError("mincut length does not match component count");
        if (w.mask == StateWord::ones(n).mask)
            throw ModelError("all-ones state cannot be a mincut");
    }
    if (!is_antichain(mincuts))
        throw ModelError("mincut list contains a comparable pair");
    // phi(0)=0 is forced for a monotone system; with no listed mincut the
    // all-zeros state is the unique mincut.
    if (mincuts.empty())
        mincuts.push_back(StateWord::zeros(n));
    BinarySystem sys;
    sys.n = n;
    sys.repr = Representation::MincutList;
    sys.mincuts = std::move(mincuts);
    sys.probs = default_probs(n);
    return sys;
}

BinarySystem build_sn_family(int n) {
    if (n < 4)
        throw DomainError("the S_N family requires N >= 4");
    StateWord first = StateWord::zeros(n);
    for (int i = 0; i < n / 2; ++i) first = first.with_bit(i, true);
    return system_from_mincuts(n, {first, first.complement()});
}

} // namespace sepsys
