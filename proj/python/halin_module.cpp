#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "halin/canonical.hpp"
#include "halin/constructions.hpp"
#include "halin/cycles.hpp"
#include "halin/enumeration.hpp"
#include "halin/errors.hpp"
#include "halin/reductions.hpp"
#include "halin/serialize.hpp"

namespace py = pybind11;
using namespace halin;

namespace {

std::vector<std::vector<Vertex>> rotation_of(const HalinGraph& g) { return g.tree().rotation(); }

std::vector<std::pair<Vertex, Vertex>> edge_pairs(const HalinGraph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

py::dict step_dict(const ReductionStep& s) {
  py::dict d;
  d["rule"] = std::string(to_string(s.rule));
  d["site"] = s.site;
  d["before_edges"] = s.before_edges;
  d["after_edges"] = s.after_edges;
  d["result"] = s.result;
  return d;
}

py::dict record_dict(const ExtremalRecord& r) {
  py::dict d;
  d["n"] = r.n;
  d["k"] = r.k;
  d["max_edges"] = r.max_edges ? py::cast(*r.max_edges) : py::none();
  d["num_extremal"] = r.num_extremal;
  d["enumerated_total"] = r.enumerated_total;
  d["witnesses"] = r.witnesses;
  return d;
}

EnumerationConfig config(int limit, int threads) {
  EnumerationConfig c;
  c.limit = limit;
  c.threads = threads;
  return c;
}

BaseTreeId base_id(const std::string& name) {
  if (name == "t16") return BaseTreeId::T16;
  if (name == "t17") return BaseTreeId::T17;
  if (name == "t18") return BaseTreeId::T18;
  throw OutOfRange("unknown base tree '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Halin graph workbench";

  auto base = py::register_exception<HalinError>(m, "HalinError", PyExc_RuntimeError);
  py::register_exception<InvalidTree>(m, "InvalidTree", base);
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<EdgeNotInGraph>(m, "EdgeNotInGraph", base);
  py::register_exception<PreconditionFailed>(m, "PreconditionFailed", base);
  py::register_exception<OutOfRange>(m, "OutOfRange", base);
  py::register_exception<LimitExceeded>(m, "LimitExceeded", base);
  py::register_exception<GenerationFailed>(m, "GenerationFailed", base);

  py::class_<HalinGraph>(m, "HalinGraph")
      .def_property_readonly("n", &HalinGraph::vertex_count)
      .def_property_readonly("edge_count", &HalinGraph::edge_count)
      .def_property_readonly("leaf_count", &HalinGraph::leaf_count)
      .def_property_readonly("leaf_cycle",
                             [](const HalinGraph& g) {
                               return std::vector<Vertex>(g.leaf_cycle().begin(), g.leaf_cycle().end());
                             })
      .def_property_readonly("rotation", &rotation_of)
      .def("edges", &edge_pairs)
      .def("has_edge", &HalinGraph::has_edge)
      .def("__eq__", [](const HalinGraph& a, const HalinGraph& b) { return a == b; })
      .def("__str__", [](const HalinGraph& g) { return serialize(g); })
      .def("__repr__", [](const HalinGraph& g) { return "<HalinGraph " + serialize(g) + ">"; });

  m.def("from_rotation", [](std::vector<std::vector<Vertex>> rotation) { return build_halin(PlaneTree(std::move(rotation))); },
        py::arg("rotation"), "Build H from counterclockwise neighbour lists of the tree.");
  m.def("parse", &parse, py::arg("text"));
  m.def("serialize", &serialize, py::arg("graph"));
  m.def("canonical_code", [](const HalinGraph& g) { return canonical_code(g.tree()).parens(); });
  m.def("validate", [](const HalinGraph& g) { return validate(g).violations; });
  m.def("classify_vertices", [](const HalinGraph& g) {
    std::vector<std::string> out;
    for (auto c : classify_vertices(g)) out.emplace_back(to_string(c));
    return out;
  });
  m.def("bounded_faces", [](const HalinGraph& g) {
    py::list out;
    for (const auto& f : bounded_faces(g)) {
      py::dict d;
      d["cycle_edge"] = std::make_pair(f.cycle_edge.u, f.cycle_edge.v);
      d["boundary"] = f.boundary;
      d["size"] = f.size();
      out.append(d);
    }
    return out;
  });

  m.def("find_cycle", &find_cycle, py::arg("graph"), py::arg("k"));
  m.def("contains_cycle", &contains_cycle, py::arg("graph"), py::arg("k"));
  m.def("shortest_cycle_through_edge", [](const HalinGraph& g, Vertex u, Vertex v) {
    const auto c = shortest_cycle_through_edge(g, Edge{u, v});
    return std::make_pair(c.length, c.cycle);
  });
  m.def("girth", &girth);

  m.def("wheel", &wheel, py::arg("spokes"));
  m.def("base_tree", [](const std::string& name) { return build_halin(base_tree(base_id(name)).tree); });
  m.def("extremal_family", &extremal_family, py::arg("n"));
  m.def("c4_extremal_formula", &c4_extremal_formula, py::arg("n"));
  m.def("random_c4free_halin", &random_c4free_halin, py::arg("n"), py::arg("seed"));

  m.def("longest_path", [](const HalinGraph& g) { return longest_path(g).path; });
  m.def("find_reduction", [](const HalinGraph& g) -> py::object {
    const auto site = find_reduction(g);
    if (!site) return py::none();
    return py::make_tuple(std::string(to_string(site->rule)), site->site);
  });
  m.def("apply_reduction", [](const HalinGraph& g, const std::string& rule, std::vector<Vertex> site) {
    return step_dict(apply_reduction(g, ReductionSite{parse_rule(rule), std::move(site)}));
  });

  m.def("count_halin", [](int n, int limit, int threads) {
    py::gil_scoped_release release;
    return count_halin(n, config(limit, threads));
  }, py::arg("n"), py::arg("limit") = kDefaultEnumerationLimit, py::arg("threads") = 1);
  m.def("enumerate_halin", [](int n, int limit) { return enumerate_halin(n, config(limit, 1)); },
        py::arg("n"), py::arg("limit") = kDefaultEnumerationLimit);
  m.def("extremal_number", [](int n, int k, int limit, int threads) {
    ExtremalRecord r;
    {
      py::gil_scoped_release release;
      r = extremal_number(n, k, config(limit, threads));
    }
    return record_dict(r);
  }, py::arg("n"), py::arg("k"), py::arg("limit") = kDefaultEnumerationLimit, py::arg("threads") = 1);
}
