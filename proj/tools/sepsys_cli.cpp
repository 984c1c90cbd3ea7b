// sepsys: batch analysis of stochastic binary systems and all-terminal
// graph reliability. Subcommands: classify, reliability, separable,
// partition, assign, dsep (verify|bound|min), report.
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sepsys/formats.hpp"
#include "sepsys/graph_analysis.hpp"
#include "sepsys/partition.hpp"
#include "sepsys/report.hpp"
#include "sepsys/separability.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

struct Options {
    bool as_json = false;
    int max_n = sepsys::kDefaultEvalCap;
    int max_d = sepsys::kDefaultLevelCap;
};

void emit(const json& j, const std::string& text, bool as_json) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

std::string hyperplane_line(const sepsys::ThresholdDescription& h) {
    std::string s = "weights";
    for (const auto& w : h.weights) s += " " + sepsys::rat_str(w);
    s += "  alpha0 " + sepsys::rat_str(h.alpha0);
    s += h.cmp == sepsys::Comparison::Strict ? "  cmp strict" : "  cmp nonstrict";
    return s;
}

json hyperplane_json(const sepsys::ThresholdDescription& h) {
    json j;
    j["weights"] = json::array();
    for (const auto& w : h.weights) j["weights"].push_back(sepsys::rat_str(w));
    j["alpha0"] = sepsys::rat_str(h.alpha0);
    j["cmp"] = h.cmp == sepsys::Comparison::Strict ? "strict" : "nonstrict";
    return j;
}

int cmd_classify(const std::string& path, const Options& opt) {
    auto g = sepsys::load_graph_file(path);
    auto cls = sepsys::classify(g);
    json j{{"category", sepsys::category_name(cls.category)},
           {"corank", cls.corank}};
    emit(j,
         std::string(sepsys::category_name(cls.category)) +
             " corank=" + std::to_string(cls.corank) + "\n",
         opt.as_json);
    return kExitOk;
}

int cmd_reliability(const std::string& path, bool polynomial, const Options& opt) {
    auto g = sepsys::load_graph_file(path);
    json j;
    std::string text;
    auto cls = sepsys::classify(g);
    if (cls.category != sepsys::GraphCategory::Nonseparable) {
        std::vector<sepsys::Rational> probs =
            g.edge_probs.empty()
                ? std::vector<sepsys::Rational>(g.edges.size(),
                                                sepsys::Rational(1, 2))
                : g.edge_probs;
        auto r = sepsys::reliability_closed_form(g, probs);
        j["reliability"] = sepsys::rat_str(r);
        text = "R = " + sepsys::rat_str(r) + "\n";
    } else {
        auto sys = sepsys::BinarySystem::from_graph(g);
        auto r = sepsys::reliability(sys, opt.max_n);
        j["reliability"] = sepsys::rat_str(r);
        text = "R = " + sepsys::rat_str(r) + "\n";
    }
    if (polynomial) {
        auto poly = sepsys::reliability_polynomial(g);
        j["polynomial"] = json::object();
        j["polynomial"]["edge_connectivity"] = poly.edge_conn;
        j["polynomial"]["corank"] = poly.corank;
        j["polynomial"]["counts"] = json::array();
        for (const auto& c : poly.counts)
            j["polynomial"]["counts"].push_back(sepsys::int_str(c));
        j["polynomial"]["tree_number"] = sepsys::int_str(poly.tree_number());
        text += "lambda = " + std::to_string(poly.edge_conn) + "\n";
        text += "corank = " + std::to_string(poly.corank) + "\n";
        for (int i = 0; i <= poly.corank; ++i)
            text += "n_" + std::to_string(i) + " = " +
                    sepsys::int_str(poly.counts[i]) + "\n";
        text += "tau = " + sepsys::int_str(poly.tree_number()) + "\n";
    }
    emit(j, text, opt.as_json);
    return kExitOk;
}

int cmd_separable(const std::string& path, const Options& opt) {
    auto sys = sepsys::load_system_file(path);
    auto verdict = sepsys::is_separable(sys, opt.max_n);
    json j;
    std::string text;
    if (verdict.outcome == sepsys::SeparabilityOutcome::Separable) {
        j["outcome"] = "separable";
        j["margin"] = sepsys::rat_str(verdict.margin);
        j["hyperplane"] = hyperplane_json(*verdict.hyperplane);
        text = "SEPARABLE margin=" + sepsys::rat_str(verdict.margin) + "\n" +
               hyperplane_line(*verdict.hyperplane) + "\n";
    } else {
        j["outcome"] = "nonseparable";
        const auto& cert = *verdict.certificate;
        json paths = json::array(), cuts = json::array(), point = json::array();
        text = "NONSEPARABLE\n";
        text += "minpath combination:\n";
        for (const auto& [w, q] : cert.path_weights) {
            paths.push_back({{"state", w.str()}, {"weight", sepsys::rat_str(q)}});
            text += "  " + w.str() + " * " + sepsys::rat_str(q) + "\n";
        }
        text += "mincut combination:\n";
        for (const auto& [w, q] : cert.cut_weights) {
            cuts.push_back({{"state", w.str()}, {"weight", sepsys::rat_str(q)}});
            text += "  " + w.str() + " * " + sepsys::rat_str(q) + "\n";
        }
        text += "common point:";
        for (const auto& q : cert.common_point) {
            point.push_back(sepsys::rat_str(q));
            text += " " + sepsys::rat_str(q);
        }
        text += "\n";
        j["minpath_weights"] = paths;
        j["mincut_weights"] = cuts;
        j["common_point"] = point;
    }
    emit(j, text, opt.as_json);
    return kExitOk;
}

int cmd_partition(const std::string& path, const Options& opt) {
    auto inst = sepsys::parse_partition(sepsys::read_file(path));
    auto decision = sepsys::partition_decide(inst, opt.max_n);
    json j;
    std::string text;
    if (decision.yes) {
        j["answer"] = "YES";
        j["witness"] = decision.witness;
        text = "YES";
        for (int i : decision.witness) text += " " + std::to_string(i);
        text += "\n";
    } else {
        j["answer"] = "NO";
        text = "NO\n";
    }
    j["reliability_diff"] = sepsys::rat_str(decision.reliability_diff);
    text += "reliability difference = " +
            sepsys::rat_str(decision.reliability_diff) + "\n";
    emit(j, text, opt.as_json);
    return kExitOk;
}

int cmd_assign(const std::string& path, const Options& opt) {
    auto g = sepsys::load_graph_file(path);
    auto cls = sepsys::classify(g);
    json j;
    std::string text;
    try {
        auto costs = sepsys::find_feasible_assignment(g);
        json a = json::array();
        text = "ASSIGNMENT";
        for (const auto& c : costs) {
            a.push_back(sepsys::rat_str(c));
            text += " " + sepsys::rat_str(c);
        }
        text += "\n";
        j["assignment"] = a;
    } catch (const sepsys::ClassError&) {
        j["assignment"] = nullptr;
        j["category"] = sepsys::category_name(cls.category);
        text = std::string("NONE ") + sepsys::category_name(cls.category) + "\n";
    }
    emit(j, text, opt.as_json);
    return kExitOk;
}

int cmd_dsep_verify(const std::string& sys_path, const std::string& cert_path,
                    const Options& opt) {
    auto sys = sepsys::load_system_file(sys_path);
    auto cert = sepsys::parse_certificate(sepsys::read_file(cert_path), sys.n);
    auto check = sepsys::verify_certificate(sys, cert, opt.max_n);
    json j{{"valid", check.valid}};
    std::string text;
    if (check.valid) {
        text = "VALID\n";
    } else {
        j["counterexample"] = check.counterexample->str();
        text = "INVALID counterexample=" + check.counterexample->str() + "\n";
    }
    emit(j, text, opt.as_json);
    return kExitOk;
}

int cmd_dsep_bound(const std::string& sys_path, const Options& opt) {
    auto sys = sepsys::load_system_file(sys_path);
    auto cert = sepsys::mincut_certificate(sys, opt.max_n);
    json j{{"d", cert.hyperplanes.size()},
           {"certificate", sepsys::render_certificate(cert)}};
    emit(j, sepsys::render_certificate(cert), opt.as_json);
    return kExitOk;
}

int cmd_dsep_min(const std::string& sys_path, int max_d, const Options& opt) {
    auto sys = sepsys::load_system_file(sys_path);
    auto result = sepsys::level_of_separability(sys, max_d);
    json j;
    std::string text;
    if (!result.found) {
        j["result"] = "exceeds_max_d";
        j["max_d"] = max_d;
        text = "EXCEEDS max-d=" + std::to_string(max_d) + "\n";
    } else {
        j["d"] = result.level;
        j["side"] = sepsys::side_name(result.certificate.side);
        j["certificate"] = sepsys::render_certificate(result.certificate);
        text = "d=" + std::to_string(result.level) + " side=" +
               sepsys::side_name(result.certificate.side) + "\n" +
               sepsys::render_certificate(result.certificate);
    }
    emit(j, text, opt.as_json);
    return kExitOk;
}

int cmd_report(const std::string& path, const Options& opt) {
    auto text = sepsys::read_file(path);
    sepsys::AnalysisOptions analysis;
    analysis.eval_cap = opt.max_n;
    analysis.max_d = opt.max_d;
    // Sniff the input kind from the first token of the first non-comment line.
    std::istringstream in(text);
    std::string line, first;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        if (ls >> first && first[0] != '#') break;
        first.clear();
    }
    if (first == "graph")
        std::cout << sepsys::report_for_graph(sepsys::parse_graph(text),
                                              analysis, opt.as_json);
    else
        std::cout << sepsys::report_for_system(
            sepsys::parse_system(text, "."), analysis, opt.as_json);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact separability and reliability analysis of stochastic "
                 "binary systems"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.as_json, "machine-readable JSON output");
    app.add_option("--max-n", opt.max_n, "enumeration cap on components");
    app.add_option("--max-d", opt.max_d, "cap for d-separability search");

    std::string graph_file, system_file, cert_file, list_file, input_file;
    bool polynomial = false;
    int max_d_search = 0;

    auto* classify = app.add_subcommand("classify", "classify a graph");
    classify->add_option("graph", graph_file)->required();

    auto* reliability =
        app.add_subcommand("reliability", "all-terminal reliability of a graph");
    reliability->add_option("graph", graph_file)->required();
    reliability->add_flag("--polynomial", polynomial,
                          "also print the reliability polynomial");

    auto* separable =
        app.add_subcommand("separable", "decide separability of a system");
    separable->add_option("system", system_file)->required();

    auto* partition =
        app.add_subcommand("partition", "decide PARTITION for an integer list");
    partition->add_option("list", list_file)->required();

    auto* assign =
        app.add_subcommand("assign", "feasible cost assignment for a graph");
    assign->add_option("graph", graph_file)->required();

    auto* dsep = app.add_subcommand("dsep", "d-separability certificates");
    dsep->require_subcommand(1);
    auto* dsep_verify = dsep->add_subcommand("verify", "check a certificate");
    dsep_verify->add_option("system", system_file)->required();
    dsep_verify->add_option("certificate", cert_file)->required();
    auto* dsep_bound =
        dsep->add_subcommand("bound", "mincut-based certificate (d = #mincuts)");
    dsep_bound->add_option("system", system_file)->required();
    auto* dsep_min = dsep->add_subcommand("min", "exact minimal d");
    dsep_min->add_option("system", system_file)->required();
    dsep_min->add_option("--max-d", max_d_search, "search cap")->required();

    auto* report = app.add_subcommand("report", "full analysis report");
    report->add_option("input", input_file)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (classify->parsed()) return cmd_classify(graph_file, opt);
        if (reliability->parsed())
            return cmd_reliability(graph_file, polynomial, opt);
        if (separable->parsed()) return cmd_separable(system_file, opt);
        if (partition->parsed()) return cmd_partition(list_file, opt);
        if (assign->parsed()) return cmd_assign(graph_file, opt);
        if (dsep->parsed()) {
            if (dsep_verify->parsed())
                return cmd_dsep_verify(system_file, cert_file, opt);
            if (dsep_bound->parsed()) return cmd_dsep_bound(system_file, opt);
            if (dsep_min->parsed())
                return cmd_dsep_min(system_file, max_d_search, opt);
        }
        if (report->parsed()) return cmd_report(input_file, opt);
    } catch (const sepsys::SizeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const sepsys::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitUsage;
}
