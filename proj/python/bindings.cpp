#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <bit>

#include "circalt/altitude.hpp"
#include "circalt/graph.hpp"
#include "circalt/homcore.hpp"
#include "circalt/monotonic.hpp"
#include "circalt/verify.hpp"

namespace py = pybind11;
using namespace circalt;

namespace {

std::vector<int> mask_to_list(std::uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

SearchOptions make_options(std::uint64_t budget, int threads) {
    SearchOptions opt;
    opt.node_budget = budget;
    opt.threads = threads;
    return opt;
}

py::dict result_dict(const AltitudeResult& r) {
    py::dict d;
    d["value"] = r.value;
    d["witness"] = r.witness.seq;
    d["method"] = method_name(r.method);
    d["exact"] = r.exact;
    d["lower_bound"] = r.lower_bound;
    py::list per_block;
    for (const auto& b : r.per_block) per_block.append(py::make_tuple(b.block_id, b.value));
    d["per_block"] = per_block;
    d["nodes"] = r.stats.nodes;
    d["orderings"] = r.stats.orderings;
    return d;
}

}  // namespace

PYBIND11_MODULE(circalt, m) {
    m.doc() = "Exact circular altitude of small graphs";

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def(py::init<int, const std::vector<std::pair<int, int>>&>(), py::arg("n"),
             py::arg("edges"))
        .def_property_readonly("n", &Graph::vertex_count)
        .def("edge_count", &Graph::edge_count)
        .def("edges", &Graph::edges)
        .def("adjacent", &Graph::adjacent)
        .def("degree", &Graph::degree)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(graph6=\"" + encode_graph6(g) + "\")";
        });

    m.def("parse_graph6", &parse_graph6);
    m.def("encode_graph6", &encode_graph6);
    m.def("parse_edge_list", &parse_edge_list);
    m.def("parse_dimacs", &parse_dimacs);

    m.def("complete", &complete);
    m.def("cycle", &cycle);
    m.def("path", &path);
    m.def("complete_bipartite", &complete_bipartite);
    m.def("circular_clique", &circular_clique);
    m.def("cartesian_product", &cartesian_product);

    m.def("components", [](const Graph& g) {
        std::vector<std::vector<int>> out;
        for (auto mask : components(g)) out.push_back(mask_to_list(mask));
        return out;
    });
    m.def("blocks", [](const Graph& g) {
        auto d = blocks(g);
        py::dict out;
        py::list bs;
        for (auto mask : d.blocks) bs.append(mask_to_list(mask));
        out["blocks"] = bs;
        out["block_edges"] = d.block_edges;
        out["cut_vertices"] = mask_to_list(d.cut_vertices);
        return out;
    });
    m.def("girth", [](const Graph& g) -> py::object {
        auto v = girth(g);
        return v ? py::cast(*v) : py::none();
    });

    m.def(
        "max_monotonic_cycle",
        [](const Graph& g, const std::vector<int>& seq) {
            auto w = max_monotonic_cycle(g, CircularOrdering::from_seq(seq));
            return py::make_tuple(w.length, w.vertices);
        },
        py::arg("g"), py::arg("ordering"));
    m.def("max_monotonic_length", [](const Graph& g, const std::vector<int>& seq) {
        return max_monotonic_length(g, seq);
    });
    m.def("enumerate_monotonic_cycles",
          [](const Graph& g, const std::vector<int>& seq, int min_len) {
              py::list out;
              for (const auto& w :
                   enumerate_monotonic_cycles(g, CircularOrdering::from_seq(seq), min_len))
                  out.append(py::make_tuple(w.length, w.vertices));
              return out;
          });

    m.def(
        "altitude",
        [](const Graph& g, std::uint64_t budget, int threads) {
            return result_dict(altitude(g, make_options(budget, threads)));
        },
        py::arg("g"), py::arg("budget") = 0, py::arg("threads") = 1);
    m.def("altitude_oracle", [](const Graph& g) { return result_dict(altitude_oracle(g)); });
    m.def(
        "altitude_bb",
        [](const Graph& g, std::uint64_t budget, int threads) {
            return result_dict(altitude_bb(g, {}, make_options(budget, threads)));
        },
        py::arg("g"), py::arg("budget") = 0, py::arg("threads") = 1);

    m.def("clique_number", &clique_number);
    m.def("hom_exists", [](const Graph& g, const Graph& h) -> py::object {
        auto f = hom_exists(g, h);
        return f ? py::cast(*f) : py::none();
    });
    m.def("core_of", [](const Graph& g) {
        auto c = core_of(g);
        return py::make_tuple(c.graph, c.vertices);
    });
    m.def("circular_chromatic", [](const Graph& g) {
        auto r = circular_chromatic(g);
        return py::make_tuple(r.p, r.q);
    });
    m.def("isomorphic", &isomorphic);

    m.def("graph_catalog", [](int n) { return graph_catalog(n); });
    m.def("random_graphs", &random_graphs, py::arg("n"), py::arg("p"), py::arg("count"),
          py::arg("seed"));
}
