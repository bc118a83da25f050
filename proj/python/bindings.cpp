#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <vector>

#include "gotcent/centrality.hpp"
#include "gotcent/experiment.hpp"
#include "gotcent/generators.hpp"
#include "gotcent/got.hpp"
#include "gotcent/graph.hpp"
#include "gotcent/graph_io.hpp"
#include "gotcent/stats.hpp"

namespace py = pybind11;
using namespace gotcent;

namespace {

std::vector<double> scores_of(const CentralityVector& v) { return v.scores; }

GotConfig make_config(std::uint32_t thieves, std::optional<std::uint64_t> vdiamonds,
                      std::optional<std::uint32_t> epochs, std::uint64_t seed) {
    GotConfig cfg;
    cfg.thieves_per_vertex = thieves;
    cfg.vdiamonds_per_vertex = vdiamonds;
    cfg.epochs = epochs;
    cfg.seed = seed;
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Game of Thieves centrality toolkit";

    py::class_<Graph>(m, "Graph")
        .def(py::init<std::size_t>(), py::arg("vertex_count"))
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("add_edge", &Graph::add_edge, py::arg("u"), py::arg("v"),
             py::arg("weight") = 1.0)
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("degree", &Graph::degree, py::arg("v"))
        .def(
            "adjacency",
            [](const Graph& g, VertexId v) {
                std::vector<std::pair<VertexId, double>> out;
                for (const Neighbor& nb : g.adjacency(v)) {
                    out.emplace_back(nb.vertex, nb.weight);
                }
                return out;
            },
            py::arg("v"), "Neighbors of v as (vertex, weight), ascending by vertex")
        .def("edges",
             [](const Graph& g) {
                 std::vector<std::tuple<VertexId, VertexId, double>> out;
                 for (const Edge& e : g.edges()) {
                     out.emplace_back(e.u, e.v, e.weight);
                 }
                 return out;
             })
        .def("label", &Graph::label, py::arg("v"))
        .def("set_label", &Graph::set_label, py::arg("v"), py::arg("label"))
        .def("binarized", &Graph::binarized);

    m.def("connected_components", &connected_components, py::arg("graph"));

    m.def(
        "parse_edge_list",
        [](const std::string& text) {
            std::istringstream in(text);
            return parse_edge_list(in);
        },
        py::arg("text"));
    m.def(
        "parse_gml",
        [](const std::string& text) {
            std::istringstream in(text);
            return parse_gml(in);
        },
        py::arg("text"));
    m.def(
        "load_graph", [](const std::string& path) { return load_graph(path); },
        py::arg("path"));
    m.def(
        "to_edge_list",
        [](const Graph& g) {
            std::ostringstream out;
            write_edge_list(g, out);
            return out.str();
        },
        py::arg("graph"));

    m.def("gen_er", &gen_er, py::arg("v"), py::arg("p"), py::arg("seed") = 0);
    m.def("gen_nws", &gen_nws, py::arg("v"), py::arg("k"), py::arg("p"), py::arg("seed") = 0);
    m.def("gen_ba_tf", &gen_ba_tf, py::arg("v"), py::arg("e"), py::arg("p"),
          py::arg("seed") = 0);

    m.def(
        "degree_centrality", [](const Graph& g) { return scores_of(degree_centrality(g)); },
        py::arg("graph"));
    m.def(
        "betweenness_centrality",
        [](const Graph& g) { return scores_of(betweenness_centrality(g)); }, py::arg("graph"));
    m.def(
        "closeness_centrality",
        [](const Graph& g) { return scores_of(closeness_centrality(g)); }, py::arg("graph"));
    m.def(
        "clustering_coefficient",
        [](const Graph& g) { return scores_of(clustering_coefficient(g)); }, py::arg("graph"));

    m.def("default_epochs", &default_epochs, py::arg("vertex_count"));
    m.def(
        "run_got",
        [](const Graph& g, std::uint32_t thieves, std::optional<std::uint64_t> vdiamonds,
           std::optional<std::uint32_t> epochs, std::uint64_t seed) {
            const GotResult r = run_got(g, make_config(thieves, vdiamonds, epochs, seed));
            std::vector<std::tuple<VertexId, VertexId, double>> edge_scores;
            const auto& edges = g.edges();
            for (std::size_t i = 0; i < edges.size(); ++i) {
                edge_scores.emplace_back(edges[i].u, edges[i].v, r.edge_scores[i]);
            }
            return py::make_tuple(r.vertex_scores.scores, edge_scores);
        },
        py::arg("graph"), py::arg("thieves_per_vertex") = 1,
        py::arg("vdiamonds_per_vertex") = py::none(), py::arg("epochs") = py::none(),
        py::arg("seed") = 0,
        "Runs the game; returns (phi_bar per vertex, [(u, v, psi_bar)] per edge). "
        "Low phi_bar means a central vertex, high psi_bar a central edge.");

    m.def(
        "rank", [](const std::vector<double>& v) { return stats::rank(v); }, py::arg("values"));
    m.def(
        "pearson",
        [](const std::vector<double>& a, const std::vector<double>& b) {
            return stats::pearson(a, b);
        },
        py::arg("a"), py::arg("b"));
    m.def(
        "spearman",
        [](const std::vector<double>& a, const std::vector<double>& b) {
            return stats::spearman(a, b);
        },
        py::arg("a"), py::arg("b"));
    m.def(
        "kendall",
        [](const std::vector<double>& a, const std::vector<double>& b,
           const std::string& variant) {
            if (variant == "tau_a") {
                return stats::kendall(a, b, stats::KendallVariant::tau_a);
            }
            if (variant == "tau_b") {
                return stats::kendall(a, b, stats::KendallVariant::tau_b);
            }
            throw std::invalid_argument("variant must be 'tau_a' or 'tau_b'");
        },
        py::arg("a"), py::arg("b"), py::arg("variant") = "tau_b");
}
