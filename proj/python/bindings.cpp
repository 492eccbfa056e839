#include <chrono>
#include <optional>
#include <string>
#include <tuple>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "twoclub/cluster_distance.hpp"
#include "twoclub/errors.hpp"
#include "twoclub/graph_io.hpp"
#include "twoclub/harness.hpp"
#include "twoclub/reduction.hpp"
#include "twoclub/solvers.hpp"

namespace py = pybind11;
using namespace twoclub;

namespace {

std::optional<std::uint32_t> to_optional(Distance d) {
    return d.reachable() ? std::optional<std::uint32_t>(d.value()) : std::nullopt;
}

GraphFormat format_of(const std::string &name) { return parse_format_name(name); }

py::dict row_dict(const EquivalenceRow &r) {
    py::dict d;
    d["h_id"] = r.h_id;
    d["n"] = r.n;
    d["k"] = r.k;
    d["omega"] = r.omega;
    d["target"] = r.target;
    d["max_2club"] = r.max_2club;
    d["clique_yes"] = r.clique_yes;
    d["club_yes"] = r.club_yes;
    d["agree"] = r.agree;
    d["formula_max"] = r.formula_max;
    d["consistent"] = r.consistent;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact clique / s-club solvers and the CLIQUE to 2-CLUB gadget";

    auto error = py::register_exception<Error>(m, "Error");
    py::register_exception<InvalidVertex>(m, "InvalidVertex", error.ptr());
    py::register_exception<InvalidEdge>(m, "InvalidEdge", error.ptr());
    py::register_exception<EmptyGraph>(m, "EmptyGraph", error.ptr());
    py::register_exception<NotAClique>(m, "NotAClique", error.ptr());
    py::register_exception<InvalidK>(m, "InvalidK", error.ptr());
    py::register_exception<TooLarge>(m, "TooLarge", error.ptr());
    py::register_exception<ParseError>(m, "ParseError", error.ptr());

    py::class_<Graph>(m, "Graph")
        .def(py::init([](std::size_t n, const std::vector<Edge> &edges) { return Graph(n, edges); }),
             py::arg("n_vertices"), py::arg("edges") = std::vector<Edge>{})
        .def_property_readonly("num_vertices", &Graph::num_vertices)
        .def_property_readonly("num_edges", &Graph::num_edges)
        .def("edges", &Graph::edges)
        .def("neighbors", [](const Graph &g, Vertex v) { return to_list(g.neighbors(v)); })
        .def("adjacent", &Graph::adjacent)
        .def("degree", &Graph::degree)
        .def(py::self == py::self)
        .def("__repr__", [](const Graph &g) {
            return "Graph(n_vertices=" + std::to_string(g.num_vertices()) +
                   ", num_edges=" + std::to_string(g.num_edges()) + ")";
        });

    m.def("bfs_distances", [](const Graph &g, Vertex source) {
        std::vector<std::optional<std::uint32_t>> out;
        for (Distance d : bfs_distances(g, source)) {
            out.push_back(to_optional(d));
        }
        return out;
    });
    m.def("diameter", [](const Graph &g) { return to_optional(diameter(g)); },
          "Diameter, or None when the graph is disconnected.");
    m.def("induced_subgraph", [](const Graph &g, const VertexList &vertices) {
        InducedSubgraph sub = induced_subgraph(g, vertices);
        return std::make_tuple(sub.graph, sub.to_original);
    });
    m.def("is_s_club",
          [](const Graph &g, const VertexList &vertices, std::uint32_t s) { return is_s_club(g, vertices, s); },
          py::arg("g"), py::arg("vertices"), py::arg("s"));
    m.def("connected_components", py::overload_cast<const Graph &>(&connected_components));
    m.def("is_clique", [](const Graph &g, const VertexList &vertices) { return is_clique(g, vertices); });

    m.def("parse_graph", [](const std::string &text, const std::string &format) {
        return parse_graph(text, format_of(format));
    }, py::arg("text"), py::arg("format") = "dimacs");
    m.def("emit_graph", [](const Graph &g, const std::string &format) { return emit_graph(g, format_of(format)); },
          py::arg("g"), py::arg("format") = "dimacs");

    py::class_<ReducedInstance>(m, "ReducedInstance")
        .def_readonly("graph", &ReducedInstance::graph)
        .def_readonly("n", &ReducedInstance::n)
        .def_property_readonly("special_a", [](const ReducedInstance &r) { return r.layout.special_a(); })
        .def_property_readonly("special_b", [](const ReducedInstance &r) { return r.layout.special_b(); })
        .def_property_readonly("special_u", [](const ReducedInstance &r) { return r.layout.special_u(); })
        .def("role_of", [](const ReducedInstance &r, Vertex v) { return to_string(r.layout.role_of(v)); })
        .def("roles", [](const ReducedInstance &r) { return emit_roles(r.layout); });

    m.def("reduce", &reduce, py::arg("h"));
    m.def("target_size", &target_size, py::arg("n"), py::arg("k"));
    m.def("forward_map", [](const ReducedInstance &inst, const VertexList &clique) {
        return forward_map(inst, clique);
    });
    m.def("extract_clique", [](const ReducedInstance &inst, const VertexList &club) {
        return extract_clique(inst, club);
    });
    m.def("validate_gadget", [](const ReducedInstance &inst) -> std::optional<std::tuple<Vertex, Vertex, bool>> {
        auto v = validate_gadget(inst);
        if (!v) {
            return std::nullopt;
        }
        return std::make_tuple(v->u, v->v, v->missing);
    }, "None when the gadget is exact, else (u, v, missing) for the first bad pair.");

    py::class_<SolveResult>(m, "SolveResult")
        .def_readonly("best_set", &SolveResult::best_set)
        .def_readonly("best_size", &SolveResult::best_size)
        .def_readonly("nodes_explored", &SolveResult::nodes_explored)
        .def_property_readonly("elapsed_ms", [](const SolveResult &r) {
            return std::chrono::duration<double, std::milli>(r.elapsed).count();
        });

    const auto release = py::call_guard<py::gil_scoped_release>();
    m.def("max_clique", &max_clique, release);
    m.def("max_s_club", &max_s_club, py::arg("g"), py::arg("s") = 2, release);
    m.def("has_s_club_of_size", &has_s_club_of_size, py::arg("g"), py::arg("s"), py::arg("t"), release);
    m.def("brute_force_max_s_club", &brute_force_max_s_club, py::arg("g"), py::arg("s") = 2, release);
    m.def("brute_force_max_clique", &brute_force_max_clique, release);

    m.def("is_s_club_cluster", py::overload_cast<const Graph &, std::uint32_t>(&is_s_club_cluster),
          py::arg("g"), py::arg("s") = 2);
    m.def("verify_deletion", [](const Graph &g, const VertexList &deleted, std::uint32_t s) {
        return verify_deletion(g, deleted, s);
    }, py::arg("g"), py::arg("deleted"), py::arg("s") = 2);
    m.def("min_deletion_to_s_club_cluster",
          [](const Graph &g, std::uint32_t s, std::size_t d_max) -> std::optional<VertexList> {
              py::gil_scoped_release unlocked;
              auto cert = min_deletion_to_s_club_cluster(g, s, d_max);
              if (!cert) {
                  return std::nullopt;
              }
              return cert->deleted;
          },
          py::arg("g"), py::arg("s") = 2, py::arg("d_max") = 2);

    m.def("run_equivalence_sweep",
          [](std::size_t n, std::int64_t k_min, std::int64_t k_max, const std::string &engine, unsigned threads,
             bool guard_override) {
              SweepOptions options;
              options.k_min = k_min;
              options.k_max = k_max;
              options.engine = parse_engine_name(engine);
              options.threads = threads;
              options.guard_override = guard_override;
              SweepReport report;
              {
                  py::gil_scoped_release unlocked;
                  report = run_equivalence_sweep(n, options);
              }
              py::list rows;
              for (const auto &row : report.rows) {
                  rows.append(row_dict(row));
              }
              return rows;
          },
          py::arg("n"), py::arg("k_min") = 1, py::arg("k_max") = 0, py::arg("engine") = "branching",
          py::arg("threads") = 1, py::arg("guard_override") = false);

    m.def("run_verify", [](const Graph &h, std::int64_t k) {
        VerifyReport r;
        {
            py::gil_scoped_release unlocked;
            r = run_verify(h, k);
        }
        py::dict d;
        d["n"] = r.n;
        d["k"] = r.k;
        d["omega"] = r.omega;
        d["target"] = r.target;
        d["clique"] = r.clique;
        d["clique_yes"] = r.clique_yes;
        d["club_yes"] = r.club_yes;
        d["forward_set"] = r.forward_set;
        d["certificate"] = r.certificate;
        d["forward_ok"] = r.forward_ok;
        d["certificate_ok"] = r.certificate_ok;
        d["agree"] = r.agree;
        d["ok"] = r.ok();
        return d;
    });
}
