#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "brittle/bounds.hpp"
#include "brittle/brittleness.hpp"
#include "brittle/connectivity.hpp"
#include "brittle/errors.hpp"
#include "brittle/graph.hpp"
#include "brittle/graphio.hpp"
#include "brittle/isomorphism.hpp"
#include "brittle/linear_rank_width.hpp"
#include "brittle/structure.hpp"
#include "brittle/verify.hpp"
#include "brittle/vertex_minor.hpp"

namespace py = pybind11;
using namespace brittle;

namespace {

ConnKind conn_arg(const std::string& name) {
  auto kind = conn_from_name(name);
  if (!kind) throw std::invalid_argument("unknown connectivity function " + name);
  return *kind;
}

VertexSet set_arg(const std::vector<int>& idx) { return indices_to_set(idx); }

py::object bigint_to_py(const BigInt& v) {
  return py::module_::import("builtins").attr("int")(v.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "graph connectivity functions, exact brittleness, vertex-minors, linear rank-width";

  py::register_exception<ResourceLimit>(m, "ResourceLimit", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n") = 0)
      .def_static("from_edges", &Graph::from_edges, py::arg("n"), py::arg("edges"))
      .def_readonly("n", &Graph::n)
      .def("edges", &Graph::edges)
      .def("edge_count", &Graph::edge_count)
      .def("has_edge", &Graph::has_edge)
      .def("add_edge", &Graph::add_edge)
      .def("degree", &Graph::degree)
      .def("label", &Graph::label)
      .def("neighbors", [](const Graph& g, int v) { return set_to_indices(g.neighbors(v)); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__",
           [](const Graph& g) {
             return "Graph(n=" + std::to_string(g.n) + ", m=" + std::to_string(g.edge_count()) +
                    ")";
           });

  m.def("path", &make_path);
  m.def("complete", &make_complete);
  m.def("star", &make_star);
  m.def("complete_bipartite", &make_complete_bipartite);
  m.def("empty", &make_empty);
  m.def("disjoint_union", &disjoint_union);
  m.def("m_copies", &m_copies);
  m.def("quotient_family", [](const Graph& base, int copies, const std::vector<int>& glued) {
    return quotient_family({base, copies, set_arg(glued)});
  });
  m.def("join", [](const Graph& g, const Graph& h, const std::string& kind) {
    auto k = join_from_name(kind);
    if (!k) throw std::invalid_argument("join kind must be mat, antimat, or tri");
    return join(g, h, *k);
  });
  m.def("complement", &complement);
  m.def("induced", [](const Graph& g, const std::vector<int>& s) { return induced(g, set_arg(s)); });
  m.def("delete_vertex", &delete_vertex);
  m.def("components", [](const Graph& g) {
    std::vector<std::vector<int>> out;
    for (VertexSet c : components(g)) out.push_back(set_to_indices(c));
    return out;
  });

  m.def("is_isomorphic", &is_isomorphic);
  m.def("find_induced_pattern", [](const Graph& host, const Graph& pattern) -> py::object {
    auto hit = find_induced_pattern(host, pattern);
    if (!hit) return py::none();
    return py::cast(set_to_indices(*hit));
  });
  m.def("find_subgraph_pattern", [](const Graph& host, const Graph& pattern) -> py::object {
    auto hit = find_subgraph_pattern(host, pattern);
    if (!hit) return py::none();
    return py::make_tuple(set_to_indices(hit->vertices), hit->edges);
  });

  m.def("to_graph6", &to_graph6);
  m.def("from_graph6", [](const std::string& s) { return from_graph6(s); });
  m.def("to_sparse6", &to_sparse6);
  m.def("from_sparse6", [](const std::string& s) { return from_sparse6(s); });

  m.def("cutrank", [](const Graph& g, const std::vector<int>& s) { return cutrank(g, set_arg(s)); });
  m.def("edge_boundary",
        [](const Graph& g, const std::vector<int>& s) { return edge_boundary(g, set_arg(s)); });
  m.def("matching_boundary",
        [](const Graph& g, const std::vector<int>& s) { return matching_boundary(g, set_arg(s)); });
  m.def("vertex_boundary", [](const Graph& g, const std::vector<std::pair<int, int>>& f) {
    return vertex_boundary(g, f);
  });

  m.def(
      "brittleness",
      [](const std::string& fn, const Graph& g, int k, int max_ground) {
        SolverLimits limits;
        if (max_ground > 0) limits.max_ground = max_ground;
        BrittlenessResult res = brittleness(conn_arg(fn), g, k, limits);
        py::dict out;
        out["value"] = res.value;
        out["partition"] = res.partition.blocks;
        out["worst_union"] = res.worst_union;
        return out;
      },
      py::arg("fn"), py::arg("g"), py::arg("k"), py::arg("max_ground") = 0);
  m.def(
      "brittleness_naive",
      [](const std::string& fn, const Graph& g, int k, int max_ground) {
        return brittleness_naive(conn_arg(fn), g, k, max_ground);
      },
      py::arg("fn"), py::arg("g"), py::arg("k"), py::arg("max_ground") = 9);
  m.def("partition_width", [](const std::string& fn, const Graph& g,
                              const std::vector<std::vector<int>>& blocks) {
    WidthResult res = partition_width(conn_arg(fn), g, Partition{blocks});
    return py::make_tuple(res.width, res.worst_blocks);
  });

  m.def("local_complement", &local_complement);
  m.def("pivot", &pivot);
  m.def("apply_word", [](const Graph& g, const std::string& word) {
    return apply_word(g, word_from_string(word));
  });
  m.def(
      "orbit",
      [](const Graph& g, std::size_t limit) {
        Orbit o = orbit(g, limit);
        return py::make_tuple(o.graphs, o.limit_hit);
      },
      py::arg("g"), py::arg("limit") = 0);
  m.def(
      "has_vertex_minor",
      [](const Graph& g, const Graph& h, std::size_t limit) {
        VertexMinorResult res = has_vertex_minor(g, h, limit);
        py::dict out;
        out["status"] = res.status == SearchStatus::Found    ? "found"
                        : res.status == SearchStatus::Absent ? "absent"
                                                             : "inconclusive";
        out["states"] = res.states;
        if (res.status == SearchStatus::Found) out["word"] = word_to_string(res.word);
        return out;
      },
      py::arg("g"), py::arg("h"), py::arg("limit") = 0);
  m.def("construction", [](const std::string& name, int n) {
    auto c = construction_from_name(name);
    if (!c) throw std::invalid_argument("unknown construction " + name);
    Construction built = construction(*c, n);
    py::dict out;
    out["input"] = built.input;
    out["word"] = word_to_string(built.word);
    out["target"] = built.target;
    return out;
  });

  m.def("linear_rank_width", [](const Graph& g) {
    LrwResult res = linear_rank_width(g);
    return py::make_tuple(res.value, res.layout.order);
  });
  m.def("layout_width", [](const Graph& g, const std::vector<int>& order) {
    return layout_width(g, Layout{order});
  });

  m.def("tutte_bridges", [](const Graph& g, const std::vector<int>& a) {
    std::vector<py::dict> out;
    for (const Bridge& b : tutte_bridges(g, set_arg(a))) {
      py::dict d;
      d["vertices"] = set_to_indices(b.vertices);
      d["edges"] = b.edges;
      d["attachments"] = set_to_indices(b.attachments);
      out.push_back(d);
    }
    return out;
  });
  m.def("delete_bridges", [](const Graph& g, const std::vector<int>& a, int max_edges) {
    return delete_bridges(g, set_arg(a), max_edges);
  });
  m.def("find_sunflower", [](const std::vector<std::vector<int>>& family, int petals) -> py::object {
    auto hit = find_sunflower(family, petals);
    if (!hit) return py::none();
    return py::make_tuple(hit->core, hit->petals);
  });
  m.def("degree_or_path", [](const Graph& g, int k, int l) {
    DegreeOrPath r = degree_or_path(g, k, l);
    py::dict out;
    out["kind"] = r.kind == DegreeOrPath::HighDegree ? "degree"
                  : r.kind == DegreeOrPath::Path     ? "path"
                                                     : "absent";
    if (r.kind == DegreeOrPath::HighDegree) out["vertex"] = r.vertex;
    if (r.kind == DegreeOrPath::Path) out["path"] = r.path;
    return out;
  });

  m.def(
      "bound_ell",
      [](const std::string& family, int k, long long n, bool toy_rules) {
        auto fam = bound_family_from_name(family);
        if (!fam) throw std::invalid_argument("unknown bound family " + family);
        BoundRules rules = default_bound_rules();
        if (toy_rules) {
          rules.ramsey = [](const BigInt& a, const BigInt& b) { return a + b; };
          rules.dov = [](const BigInt& a) { return 2 * a + 1; };
        }
        return bigint_to_py(bound_ell(*fam, k, n, rules));
      },
      py::arg("family"), py::arg("k"), py::arg("n"), py::arg("toy_rules") = false);

  m.def(
      "verify",
      [](const std::string& id, const std::string& scale, std::uint64_t seed) {
        auto sc = scale_from_name(scale);
        if (!sc) throw std::invalid_argument("unknown scale " + scale);
        const Claim* claim = find_claim(id);
        if (!claim) throw std::invalid_argument("unknown claim id " + id);
        Report rep = claim->run(*sc, seed);
        py::dict out;
        out["claim"] = rep.claim;
        out["status"] = rep.status;
        out["elapsed_ms"] = rep.elapsed_ms;
        out["json"] = rep.to_json().dump();
        return out;
      },
      py::arg("id"), py::arg("scale") = "small", py::arg("seed") = 20250607);
  m.def("claim_ids", [] {
    std::vector<std::string> ids;
    for (const Claim& c : all_claims()) ids.push_back(c.id);
    return ids;
  });
}
