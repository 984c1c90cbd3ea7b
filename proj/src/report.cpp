#include "sepsys/report.hpp"

#include <sstream>

#include <json.hpp>

#include "sepsys/graph_analysis.hpp"
#include "sepsys/separability.hpp"

namespace sepsys {

namespace {

using json = nlohmann::ordered_json;

json hyperplane_json(const ThresholdDescription& h) {
    json j;
    j["weights"] = json::array();
    for (const auto& w : h.weights) j["weights"].push_back(rat_str(w));
    j["alpha0"] = rat_str(h.alpha0);
    j["cmp"] = h.cmp == Comparison::Strict ? "strict" : "nonstrict";
    return j;
}

json verdict_json(const SeparabilityVerdict& v) {
    json j;
    j["outcome"] = v.outcome == SeparabilityOutcome::Separable ? "separable"
                                                               : "nonseparable";
    j["margin"] = rat_str(v.margin);
    if (v.hyperplane) j["hyperplane"] = hyperplane_json(*v.hyperplane);
    if (v.certificate) {
        json c;
        c["minpath_weights"] = json::array();
        for (const auto& [w, q] : v.certificate->path_weights)
            c["minpath_weights"].push_back({{"state", w.str()}, {"weight", rat_str(q)}});
        c["mincut_weights"] = json::array();
        for (const auto& [w, q] : v.certificate->cut_weights)
            c["mincut_weights"].push_back({{"state", w.str()}, {"weight", rat_str(q)}});
        c["common_point"] = json::array();
        for (const auto& q : v.certificate->common_point)
            c["common_point"].push_back(rat_str(q));
        j["certificate"] = c;
    }
    return j;
}

json level_json(const LevelResult& r) {
    json j;
    if (!r.found) {
        j["result"] = "exceeds_max_d";
        return j;
    }
    j["d"] = r.level;
    j["side"] = side_name(r.certificate.side);
    j["hyperplanes"] = json::array();
    for (const auto& h : r.certificate.hyperplanes) {
        json line;
        line["weights"] = json::array();
        for (const auto& w : h.weights) line["weights"].push_back(rat_str(w));
        line["alpha"] = rat_str(h.alpha0);
        j["hyperplanes"].push_back(line);
    }
    return j;
}

void analyze_system_into(json& report, const BinarySystem& sys,
                         const AnalysisOptions& options) {
    auto check = is_monotone(sys, options.eval_cap);
    report["monotone"] = check.monotone;
    if (!check.monotone) {
        report["monotone_counterexample"] = {
            {"lower", check.counterexample->first.str()},
            {"upper", check.counterexample->second.str()}};
    } else {
        auto inv = enumerate_inventory(sys, options.eval_cap);
        json paths = json::array(), cuts = json::array();
        for (const auto& w : inv.minpaths) paths.push_back(w.str());
        for (const auto& w : inv.mincuts) cuts.push_back(w.str());
        report["minpaths"] = paths;
        report["mincuts"] = cuts;
        report["separability"] =
            verdict_json(separability_margin(inv.minpaths, inv.mincuts, sys.n));
        if (sys.n <= kDefaultLevelCap && inv.mincuts.size() <= 24 &&
            inv.minpaths.size() <= 24) {
            report["d_separability"] = level_json(level_of_separability(
                sys, std::min<int>(options.max_d,
                                   static_cast<int>(inv.mincuts.size()))));
        }
    }
    if (sys.n <= options.reliability_cap)
        report["reliability"] = rat_str(reliability(sys, options.reliability_cap));
}

void render_text(std::ostringstream& out, const std::string& path, const json& j) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items())
            render_text(out, path.empty() ? key : path + "." + key, value);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i)
            render_text(out, path + "[" + std::to_string(i) + "]", j[i]);
    } else if (j.is_string()) {
        out << path << " = " << j.get<std::string>() << "\n";
    } else {
        out << path << " = " << j.dump() << "\n";
    }
}

std::string render(const json& report, bool as_json) {
    if (as_json) return report.dump(2) + "\n";
    std::ostringstream out;
    render_text(out, "", report);
    return out.str();
}

} // namespace

std::string report_for_graph(const UndirectedGraph& g,
                             const AnalysisOptions& options, bool as_json) {
    json report;
    report["input"] = {{"kind", "graph"},
                       {"nodes", g.node_count},
                       {"edges", g.edge_count()}};
    auto cls = classify(g);
    report["classification"] = {{"category", category_name(cls.category)},
                                {"corank", cls.corank}};
    if (component_count(g) == 1) {
        auto ud = utility_and_difficulty(g);
        report["utility"] = ud.utility;
        report["difficulty"] = ud.difficulty;
        report["spanning_trees"] = int_str(spanning_tree_count(g));
    }
    if (cls.category != GraphCategory::Nonseparable &&
        cls.category != GraphCategory::Disconnected) {
        auto costs = find_feasible_assignment(g);
        json a = json::array();
        for (const auto& c : costs) a.push_back(rat_str(c));
        report["feasible_assignment"] = a;
    }
    if (cls.category != GraphCategory::Nonseparable) {
        std::vector<Rational> probs =
            g.edge_probs.empty()
                ? std::vector<Rational>(g.edges.size(), Rational(1, 2))
                : g.edge_probs;
        report["reliability"] = rat_str(reliability_closed_form(g, probs));
    }
    if (g.edge_count() >= 1 && g.edge_count() <= options.eval_cap) {
        json sys_section;
        analyze_system_into(sys_section, BinarySystem::from_graph(g), options);
        report["system"] = sys_section;
    }
    return render(report, as_json);
}

std::string report_for_system(const BinarySystem& sys,
                              const AnalysisOptions& options, bool as_json) {
    json report;
    report["input"] = {{"kind", "system"}, {"components", sys.n}};
    analyze_system_into(report, sys, options);
    return render(report, as_json);
}

} // namespace sepsys
