#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "copex/canonical.hpp"
#include "copex/constructions.hpp"
#include "copex/extremal.hpp"
#include "copex/family.hpp"
#include "copex/flags.hpp"
#include "copex/io.hpp"
#include "copex/morphism.hpp"
#include "copex/pattern.hpp"
#include "copex/rgraph.hpp"

namespace py = pybind11;
using namespace copex;

namespace {

py::object to_fraction(const Rat& x) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(rat_str(x));
}

Rat from_py(const py::object& x) {
    return rat_parse(py::str(x).cast<std::string>());
}

ForbiddenSpec spec_from(const std::vector<RGraph>& forbid, bool induced, int r) {
    ForbiddenSpec spec;
    spec.family = Family(r);
    spec.mode = induced ? ForbidMode::Induced : ForbidMode::Subgraph;
    for (const auto& g : forbid) spec.family.add(g);
    return spec;
}

}  // namespace

PYBIND11_MODULE(_copex, m) {
    m.doc() = "exact minimum positive co-degree computations for small hypergraphs";

    py::class_<RGraph>(m, "Graph")
        .def(py::init<int, int, std::vector<Edge>>(), py::arg("r"), py::arg("n"),
             py::arg("edges"))
        .def_property_readonly("r", &RGraph::uniformity)
        .def_property_readonly("n", &RGraph::vertex_count)
        .def_property_readonly("edges", &RGraph::edges)
        .def("__eq__", [](const RGraph& a, const RGraph& b) { return a == b; })
        .def("__hash__", [](const RGraph& g) { return py::hash(py::str(g.key())); })
        .def("__repr__", [](const RGraph& g) {
            std::ostringstream os;
            os << "Graph(r=" << g.uniformity() << ", n=" << g.vertex_count() << ", m="
               << g.edge_count() << ")";
            return os.str();
        })
        .def("to_text", [](const RGraph& g) { return graph_to_text(g); });

    m.def("construct", &named_construction, py::arg("name"));
    m.def("construction_names", &named_construction_catalog);
    m.def("from_text", &graph_from_text, py::arg("text"));

    m.def("codegree", &codegree, py::arg("graph"), py::arg("vertices"));
    m.def("min_pos_codegree", &min_pos_codegree, py::arg("graph"));
    m.def("link_graph", &link_graph, py::arg("graph"), py::arg("vertex"));
    m.def("suspension", &suspension, py::arg("graph"));
    m.def("induced_subgraph", &induced_subgraph, py::arg("graph"), py::arg("vertices"));
    m.def("canonical_form", &canonical_form, py::arg("graph"));
    m.def("is_isomorphic", &is_isomorphic, py::arg("g"), py::arg("h"));

    m.def(
        "exists_embedding",
        [](const RGraph& f, const RGraph& h, bool induced) -> py::object {
            auto map = exists_embedding(f, h, induced);
            if (!map) return py::none();
            return py::cast(*map);
        },
        py::arg("f"), py::arg("h"), py::arg("induced") = false);
    m.def(
        "exists_homomorphism",
        [](const RGraph& f, const RGraph& h) -> py::object {
            auto map = exists_homomorphism(f, h);
            if (!map) return py::none();
            return py::cast(*map);
        },
        py::arg("f"), py::arg("h"));
    m.def("induced_density",
          [](const RGraph& g, const RGraph& h) { return to_fraction(induced_density(g, h)); });
    m.def("noninduced_density", [](const RGraph& g, const RGraph& h) {
        return to_fraction(noninduced_density(g, h));
    });
    m.def("classify_gamma_region", [](const RGraph& f) {
        return std::string(gamma_region_name(classify_gamma_region(f)));
    });

    m.def(
        "enumerate_graphs",
        [](int n, int r, const std::vector<RGraph>& forbid, bool induced) {
            return enumerate_up_to_iso(n, r, spec_from(forbid, induced, r)).members();
        },
        py::arg("n"), py::arg("r") = 3, py::arg("forbid") = std::vector<RGraph>{},
        py::arg("induced") = false);
    m.def(
        "induced_family_of_blowup",
        [](const RGraph& base, int k) { return induced_family_of_blowup(base, k).members(); },
        py::arg("base"), py::arg("k"));

    m.def("instantiate_blowup", &instantiate_blowup, py::arg("base"), py::arg("sizes"));
    m.def(
        "blowup_mpcd_fraction",
        [](const RGraph& base, const std::vector<py::object>& weights) {
            std::vector<Rat> w;
            for (const auto& x : weights) w.push_back(from_py(x));
            return to_fraction(blowup_mpcd_fraction(WeightedBlowup(base, w)));
        },
        py::arg("base"), py::arg("weights"));
    m.def(
        "optimize_blowup_weights",
        [](const RGraph& base) {
            auto res = optimize_blowup_weights(base);
            py::list weights;
            for (const auto& w : res.weights) weights.append(to_fraction(w));
            return py::make_tuple(to_fraction(res.value), weights, res.optimal_face_dim);
        },
        py::arg("base"));
    m.def(
        "integer_class_sizes",
        [](const RGraph& base, const std::vector<py::object>& weights, int n) {
            std::vector<Rat> w;
            for (const auto& x : weights) w.push_back(from_py(x));
            return integer_class_sizes(WeightedBlowup(base, w), n);
        },
        py::arg("base"), py::arg("weights"), py::arg("n"));

    m.def(
        "co_plus_ex",
        [](int n, int r, const std::vector<RGraph>& forbid, bool naive) {
            auto res = naive ? naive_oracle(n, r, spec_from(forbid, false, r))
                             : co_plus_ex_exact(n, r, spec_from(forbid, false, r));
            py::dict out;
            out["n"] = res.n;
            out["value"] = res.value;
            out["witness_classes"] = res.witness_classes;
            out["witnesses"] = res.witnesses;
            return out;
        },
        py::arg("n"), py::arg("r") = 3, py::arg("forbid") = std::vector<RGraph>{},
        py::arg("naive") = false);

    m.def(
        "pattern_embeddings",
        [](const RGraph& host, int m_vertices, const std::vector<Edge>& required,
           const std::vector<Edge>& forbidden) {
            int r = host.uniformity();
            Pattern p(m_vertices, r, required, forbidden);
            return find_pattern_embeddings(host, p);
        },
        py::arg("host"), py::arg("m"), py::arg("required"),
        py::arg("forbidden") = std::vector<Edge>{});

    m.def(
        "per_pair_codegree_value",
        [](const RGraph& host, int a, int b, int num, int den) {
            return to_fraction(per_pair_codegree_value(host, a, b, num, den));
        },
        py::arg("host"), py::arg("a"), py::arg("b"), py::arg("num"), py::arg("den"));
}
