#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sepsys/binary_system.hpp"
#include "sepsys/dsep.hpp"
#include "sepsys/formats.hpp"
#include "sepsys/graph_analysis.hpp"
#include "sepsys/partition.hpp"
#include "sepsys/separability.hpp"

namespace py = pybind11;
using namespace sepsys;

namespace {

// Rationals cross the boundary as exact "a/b" strings.
std::vector<Rational> to_rationals(const std::vector<std::string>& text) {
    std::vector<Rational> out;
    for (const auto& t : text) out.push_back(parse_rational(t));
    return out;
}

std::vector<std::string> from_rationals(const std::vector<Rational>& values) {
    std::vector<std::string> out;
    for (const auto& v : values) out.push_back(rat_str(v));
    return out;
}

py::dict verdict_dict(const SeparabilityVerdict& v) {
    py::dict d;
    d["outcome"] = v.outcome == SeparabilityOutcome::Separable ? "separable"
                                                               : "nonseparable";
    d["margin"] = rat_str(v.margin);
    if (v.hyperplane) {
        py::dict h;
        h["weights"] = from_rationals(v.hyperplane->weights);
        h["alpha0"] = rat_str(v.hyperplane->alpha0);
        d["hyperplane"] = h;
    }
    if (v.certificate) {
        py::list paths, cuts;
        for (const auto& [w, q] : v.certificate->path_weights)
            paths.append(py::make_tuple(w.str(), rat_str(q)));
        for (const auto& [w, q] : v.certificate->cut_weights)
            cuts.append(py::make_tuple(w.str(), rat_str(q)));
        d["minpath_weights"] = paths;
        d["mincut_weights"] = cuts;
        d["common_point"] = from_rationals(v.certificate->common_point);
    }
    return d;
}

BinarySystem system_from_text(const std::string& text) {
    return parse_system(text, ".");
}

} // namespace

PYBIND11_MODULE(sepsys, m) {
    m.doc() = "exact separability and all-terminal reliability analysis";

    // translators run newest-first: the base class must come first so the
    // specific exceptions are not swallowed by it
    py::register_exception<Error>(m, "SepsysError");
    py::register_exception<SizeError>(m, "SizeError");
    py::register_exception<ParseError>(m, "ParseError");

    py::class_<UndirectedGraph>(m, "Graph")
        .def(py::init([](int nodes, std::vector<std::pair<int, int>> edges) {
                 UndirectedGraph g;
                 g.node_count = nodes;
                 for (auto [u, v] : edges) g.edges.push_back({u, v});
                 g.validate();
                 return g;
             }),
             py::arg("nodes"), py::arg("edges"))
        .def_property_readonly("node_count",
                               [](const UndirectedGraph& g) { return g.node_count; })
        .def_property_readonly("edges",
                               [](const UndirectedGraph& g) {
                                   std::vector<std::pair<int, int>> out;
                                   for (const auto& e : g.edges)
                                       out.emplace_back(e.u, e.v);
                                   return out;
                               })
        .def("set_probs",
             [](UndirectedGraph& g, const std::vector<std::string>& probs) {
                 g.edge_probs = to_rationals(probs);
                 g.validate();
             });

    py::class_<BinarySystem>(m, "BinarySystem")
        .def_property_readonly("n", [](const BinarySystem& s) { return s.n; });

    m.def("parse_graph", &parse_graph);
    m.def("render_graph", &render_graph);
    m.def("parse_system", &system_from_text);

    m.def("complete_graph", &complete_graph);
    m.def("cycle_graph", &cycle_graph);
    m.def("path_graph", &path_graph);
    m.def("star_graph", &star_graph);
    m.def("butterfly_graph", &butterfly_graph);
    m.def("glasses_graph", &glasses_graph);
    m.def("monma_graph", &monma_graph);
    m.def("kissing_cycles", &kissing_cycles);
    m.def("two_cycles_with_path", &two_cycles_with_path);

    m.def("classify", [](const UndirectedGraph& g) {
        auto cls = classify(g);
        return py::make_tuple(category_name(cls.category), cls.corank);
    });
    m.def("spanning_tree_count",
          [](const UndirectedGraph& g) { return int_str(spanning_tree_count(g)); });
    m.def("edge_connectivity", &edge_connectivity);
    m.def("reliability_closed_form",
          [](const UndirectedGraph& g, const std::vector<std::string>& probs) {
              return rat_str(reliability_closed_form(g, to_rationals(probs)));
          });

    m.def("graph_system", [](const UndirectedGraph& g) {
        return BinarySystem::from_graph(g);
    });
    m.def("system_from_mincuts", [](int n, const std::vector<std::string>& cuts) {
        std::vector<StateWord> words;
        for (const auto& c : cuts) words.push_back(StateWord::parse(c));
        return system_from_mincuts(n, std::move(words));
    });
    m.def("sn_family", &build_sn_family);

    m.def("eval_state", [](const BinarySystem& sys, const std::string& word) {
        return eval_state(sys, StateWord::parse(word));
    });
    m.def("minpaths", [](const BinarySystem& sys) {
        std::vector<std::string> out;
        for (const auto& w : enumerate_minpaths(sys)) out.push_back(w.str());
        return out;
    });
    m.def("mincuts", [](const BinarySystem& sys) {
        std::vector<std::string> out;
        for (const auto& w : enumerate_mincuts(sys)) out.push_back(w.str());
        return out;
    });
    m.def("reliability",
          [](const BinarySystem& sys) { return rat_str(reliability(sys)); });
    m.def("is_separable",
          [](const BinarySystem& sys) { return verdict_dict(is_separable(sys)); });

    m.def("partition_decide", [](const std::vector<std::int64_t>& values) {
        auto d = partition_decide(PartitionInstance::from_values(values));
        py::dict out;
        out["yes"] = d.yes;
        out["witness"] = d.witness;
        out["reliability_diff"] = rat_str(d.reliability_diff);
        return out;
    });

    m.def("level_of_separability", [](const BinarySystem& sys, int max_d) {
        auto r = level_of_separability(sys, max_d);
        py::dict out;
        out["found"] = r.found;
        if (r.found) {
            out["d"] = r.level;
            out["side"] = side_name(r.certificate.side);
            out["certificate"] = render_certificate(r.certificate);
        }
        return out;
    });
    m.def("verify_certificate",
          [](const BinarySystem& sys, const std::string& cert_text) {
              auto cert = parse_certificate(cert_text, sys.n);
              auto check = verify_certificate(sys, cert);
              py::dict out;
              out["valid"] = check.valid;
              if (check.counterexample)
                  out["counterexample"] = check.counterexample->str();
              return out;
          });
    m.def("mincut_certificate", [](const BinarySystem& sys) {
        return render_certificate(mincut_certificate(sys));
    });
}
