#include "sepsys/formats.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace sepsys {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        std::istringstream ls(raw);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (tokens.empty() || tokens[0][0] == '#') continue;
        lines.push_back({number, std::move(tokens)});
    }
    return lines;
}

[[noreturn]] void fail(int line, const std::string& message) {
    throw ParseError("line " + std::to_string(line) + ": " + message);
}

long parse_int(const Line& line, const std::string& tok) {
    try {
        std::size_t pos = 0;
        long v = std::stol(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        fail(line.number, "expected an integer, got '" + tok + "'");
    }
}

Rational parse_rat(const Line& line, const std::string& tok) {
    try {
        return parse_rational(tok);
    } catch (const ParseError& e) {
        fail(line.number, e.what());
    }
}

} // namespace

UndirectedGraph parse_graph(const std::string& text) {
    auto lines = tokenize(text);
    if (lines.empty())
        throw ParseError("empty graph file");
    std::size_t at = 0;
    const Line& head = lines[at++];
    if (head.tokens[0] != "graph" || head.tokens.size() != 3)
        fail(head.number, "expected 'graph <n> <m>'");
    UndirectedGraph g;
    g.node_count = static_cast<int>(parse_int(head, head.tokens[1]));
    long m = parse_int(head, head.tokens[2]);
    if (g.node_count < 1) fail(head.number, "node count must be positive");
    if (m < 0 || m > 62) fail(head.number, "edge count out of range");
    bool any_weight = false, any_prob = false;
    for (long i = 0; i < m; ++i) {
        if (at >= lines.size())
            throw ParseError("expected " + std::to_string(m) + " edge lines");
        const Line& line = lines[at++];
        if (line.tokens[0] != "e" || line.tokens.size() < 3)
            fail(line.number, "expected 'e <u> <v> [weight a/b] [prob a/b]'");
        long u = parse_int(line, line.tokens[1]);
        long v = parse_int(line, line.tokens[2]);
        if (u < 1 || v < 1 || u > g.node_count || v > g.node_count)
            fail(line.number, "node index out of range");
        if (u == v) fail(line.number, "self-loops are not allowed");
        g.edges.push_back({static_cast<int>(u - 1), static_cast<int>(v - 1)});
        g.edge_weights.emplace_back(1);
        g.edge_probs.emplace_back(1, 2);
        std::size_t k = 3;
        while (k < line.tokens.size()) {
            if (line.tokens[k] == "weight" && k + 1 < line.tokens.size()) {
                g.edge_weights.back() = parse_rat(line, line.tokens[k + 1]);
                any_weight = true;
            } else if (line.tokens[k] == "prob" && k + 1 < line.tokens.size()) {
                g.edge_probs.back() = parse_rat(line, line.tokens[k + 1]);
                any_prob = true;
            } else {
                fail(line.number, "unexpected token '" + line.tokens[k] + "'");
            }
            k += 2;
        }
    }
    if (at != lines.size())
        fail(lines[at].number, "unexpected trailing content");
    if (!any_weight) g.edge_weights.clear();
    if (!any_prob) g.edge_probs.clear();
    g.validate();
    return g;
}

std::string render_graph(const UndirectedGraph& g) {
    std::ostringstream out;
    out << "graph " << g.node_count << " " << g.edge_count() << "\n";
    for (int i = 0; i < g.edge_count(); ++i) {
        out << "e " << g.edges[i].u + 1 << " " << g.edges[i].v + 1;
        if (!g.edge_weights.empty())
            out << " weight " << rat_str(g.edge_weights[i]);
        if (!g.edge_probs.empty())
            out << " prob " << rat_str(g.edge_probs[i]);
        out << "\n";
    }
    return out.str();
}

BinarySystem parse_system(const std::string& text, const std::string& base_dir) {
    auto lines = tokenize(text);
    if (lines.size() < 3)
        throw ParseError("system file needs sbs/probs/repr lines");
    std::size_t at = 0;
    const Line& head = lines[at++];
    if (head.tokens[0] != "sbs" || head.tokens.size() != 2)
        fail(head.number, "expected 'sbs <N>'");
    const int n = static_cast<int>(parse_int(head, head.tokens[1]));
    if (n < 1 || n > 62) fail(head.number, "component count out of range");

    const Line& probs_line = lines[at++];
    if (probs_line.tokens[0] != "probs" ||
        probs_line.tokens.size() != static_cast<std::size_t>(n) + 1)
        fail(probs_line.number, "expected 'probs <p_1> ... <p_N>'");
    std::vector<Rational> probs;
    for (int i = 0; i < n; ++i)
        probs.push_back(parse_rat(probs_line, probs_line.tokens[i + 1]));

    const Line& repr = lines[at++];
    if (repr.tokens[0] != "repr" || repr.tokens.size() < 2)
        fail(repr.number, "expected 'repr <kind> ...'");
    const std::string& kind = repr.tokens[1];

    BinarySystem sys;
    if (kind == "truthtable") {
        if (repr.tokens.size() != 3)
            fail(repr.number, "expected 'repr truthtable <bits>'");
        const std::string& bits = repr.tokens[2];
        if (bits.size() != (std::size_t{1} << n))
            fail(repr.number, "truth table must have exactly 2^N bits");
        std::vector<bool> table(bits.size());
        for (std::size_t i = 0; i < bits.size(); ++i) {
            if (bits[i] != '0' && bits[i] != '1')
                fail(repr.number, "truth table must be binary");
            table[i] = bits[i] == '1';
        }
        sys = BinarySystem::from_truth_table(n, std::move(table));
    } else if (kind == "mincuts") {
        if (repr.tokens.size() != 3)
            fail(repr.number, "expected 'repr mincuts <k>'");
        long k = parse_int(repr, repr.tokens[2]);
        std::vector<StateWord> cuts;
        for (long i = 0; i < k; ++i) {
            if (at >= lines.size())
                throw ParseError("expected " + std::to_string(k) + " mincut lines");
            const Line& line = lines[at++];
            if (line.tokens.size() != 1)
                fail(line.number, "expected one N-bit word");
            StateWord w;
            try {
                w = StateWord::parse(line.tokens[0]);
            } catch (const ParseError& e) {
                fail(line.number, e.what());
            }
            if (w.n != n) fail(line.number, "word length does not match N");
            cuts.push_back(w);
        }
        sys = system_from_mincuts(n, std::move(cuts));
    } else if (kind == "threshold") {
        ThresholdDescription desc;
        desc.cmp = Comparison::Strict;
        bool have_weights = false, have_alpha = false;
        while (at < lines.size()) {
            const Line& line = lines[at++];
            if (line.tokens[0] == "weights") {
                if (line.tokens.size() != static_cast<std::size_t>(n) + 1)
                    fail(line.number, "expected N weights");
                for (int i = 0; i < n; ++i)
                    desc.weights.push_back(parse_rat(line, line.tokens[i + 1]));
                have_weights = true;
            } else if (line.tokens[0] == "alpha0" && line.tokens.size() == 2) {
                desc.alpha0 = parse_rat(line, line.tokens[1]);
                have_alpha = true;
            } else if (line.tokens[0] == "cmp" && line.tokens.size() == 2) {
                if (line.tokens[1] == "strict")
                    desc.cmp = Comparison::Strict;
                else if (line.tokens[1] == "nonstrict")
                    desc.cmp = Comparison::NonStrict;
                else
                    fail(line.number, "cmp must be strict or nonstrict");
            } else {
                fail(line.number, "unexpected line in threshold block");
            }
        }
        if (!have_weights || !have_alpha)
            throw ParseError("threshold block needs weights and alpha0");
        sys = BinarySystem::from_threshold(std::move(desc));
    } else if (kind == "graph") {
        if (repr.tokens.size() != 3)
            fail(repr.number, "expected 'repr graph <path>'");
        std::filesystem::path p(repr.tokens[2]);
        if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
        auto g = parse_graph(read_file(p.string()));
        if (g.edge_count() != n)
            fail(repr.number, "graph edge count does not match N");
        sys = BinarySystem::from_graph(std::move(g));
    } else {
        fail(repr.number, "unknown representation '" + kind + "'");
    }
    if (at != lines.size())
        fail(lines[at].number, "unexpected trailing content");
    sys.set_probs(std::move(probs));
    return sys;
}

HyperplaneCertificate parse_certificate(const std::string& text, int n) {
    auto lines = tokenize(text);
    if (lines.empty()) throw ParseError("empty certificate file");
    std::size_t at = 0;
    const Line& head = lines[at++];
    if (head.tokens[0] != "dsep" || head.tokens.size() != 3)
        fail(head.number, "expected 'dsep <side> <d>'");
    HyperplaneCertificate cert;
    if (head.tokens[1] == "pathset")
        cert.side = CertSide::PathsetSide;
    else if (head.tokens[1] == "cutset")
        cert.side = CertSide::CutsetSide;
    else
        fail(head.number, "side must be pathset or cutset");
    long d = parse_int(head, head.tokens[2]);
    if (d < 1) fail(head.number, "d must be positive");
    for (long i = 0; i < d; ++i) {
        if (at >= lines.size())
            throw ParseError("expected " + std::to_string(d) + " hyperplane lines");
        const Line& line = lines[at++];
        if (line.tokens[0] != "h" ||
            line.tokens.size() != static_cast<std::size_t>(n) + 3 ||
            line.tokens[n + 1] != ">=")
            fail(line.number, "expected 'h <w_1> ... <w_N> >= <alpha>'");
        ThresholdDescription h;
        for (int j = 0; j < n; ++j)
            h.weights.push_back(parse_rat(line, line.tokens[j + 1]));
        h.alpha0 = parse_rat(line, line.tokens[n + 2]);
        h.cmp = Comparison::NonStrict;
        cert.hyperplanes.push_back(std::move(h));
    }
    if (at != lines.size())
        fail(lines[at].number, "unexpected trailing content");
    return cert;
}

std::string render_certificate(const HyperplaneCertificate& cert) {
    std::ostringstream out;
    out << "dsep " << side_name(cert.side) << " " << cert.hyperplanes.size()
        << "\n";
    for (const auto& h : cert.hyperplanes) {
        out << "h";
        for (const auto& w : h.weights) out << " " << rat_str(w);
        out << " >= " << rat_str(h.alpha0) << "\n";
    }
    return out.str();
}

PartitionInstance parse_partition(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::int64_t> values;
    std::string tok;
    while (in >> tok) {
        if (tok[0] == '#') {
            std::string rest;
            std::getline(in, rest);
            continue;
        }
        try {
            std::size_t pos = 0;
            long long v = std::stoll(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            values.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("expected an integer, got '" + tok + "'");
        }
    }
    if (values.empty()) throw ParseError("empty partition instance");
    try {
        return PartitionInstance::from_values(std::move(values));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

UndirectedGraph load_graph_file(const std::string& path) {
    return parse_graph(read_file(path));
}

BinarySystem load_system_file(const std::string& path) {
    auto dir = std::filesystem::path(path).parent_path().string();
    if (dir.empty()) dir = ".";
    return parse_system(read_file(path), dir);
}

} // namespace sepsys
