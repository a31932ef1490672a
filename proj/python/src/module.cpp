// Copyright 2026 The cuttree Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <tuple>
#include <vector>

#include "cuttree/errors.hpp"
#include "cuttree/flow.hpp"
#include "cuttree/generators.hpp"
#include "cuttree/graph.hpp"
#include "cuttree/json_io.hpp"
#include "cuttree/kec.hpp"
#include "cuttree/mgraph_io.hpp"
#include "cuttree/ntmc_tree.hpp"
#include "cuttree/oracle.hpp"
#include "cuttree/pendant_tree.hpp"
#include "cuttree/vertex_connectivity.hpp"

namespace py = pybind11;
using namespace cuttree;

namespace {

using EdgeTuple = std::tuple<VertexId, VertexId, Weight>;

Multigraph make_graph(std::size_t n, const std::vector<EdgeTuple>& edges) {
  std::vector<EdgeSpec> specs;
  specs.reserve(edges.size());
  for (const auto& [u, v, m] : edges) specs.push_back({u, v, m});
  return Multigraph(n, specs);
}

std::vector<EdgeTuple> edge_tuples(const Multigraph& g) {
  std::vector<EdgeTuple> out;
  for (const auto& e : g.edges()) out.emplace_back(e.u, e.v, e.multiplicity);
  return out;
}

py::dict report_dict(const ValidationReport& r) {
  py::dict d;
  d["ok"] = r.ok();
  d["checks"] = r.checks;
  d["failures"] = r.failures;
  return d;
}

}  // namespace

PYBIND11_MODULE(_cuttree, m) {
  m.doc() = "Cut trees, pendant pairs and contraction-based sparsification";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_ValueError);
  py::register_exception<UnsupportedInput>(m, "UnsupportedInput", PyExc_ValueError);
  py::register_exception<SizeRefusal>(m, "SizeRefusal", PyExc_OverflowError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  py::class_<Multigraph>(m, "Multigraph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges") = std::vector<EdgeTuple>{},
           "Edges are (u, v, multiplicity) with 0-based vertices.")
      .def_property_readonly("n", &Multigraph::n)
      .def_property_readonly("edge_units", &Multigraph::edge_units)
      .def_property_readonly("is_simple", &Multigraph::is_simple)
      .def("degree", &Multigraph::degree)
      .def("multiplicity", &Multigraph::multiplicity)
      .def("edges", &edge_tuples)
      .def("__eq__", [](const Multigraph& a, const Multigraph& b) { return a == b; })
      .def("__repr__", [](const Multigraph& g) {
        return "<Multigraph n=" + std::to_string(g.n()) +
               " m=" + std::to_string(g.edge_units()) + ">";
      });

  py::class_<BlockTree>(m, "BlockTree")
      .def_property_readonly("block_count", &BlockTree::block_count)
      .def("partition", &BlockTree::partition)
      .def("edges",
           [](const BlockTree& t) {
             py::list out;
             for (const auto& e : t.edges()) {
               out.append(py::make_tuple(t.block(e.a), t.block(e.b), e.cut_value));
             }
             return out;
           },
           "List of (block_a, block_b, cut_value).")
      .def("to_json", [](const BlockTree& t, const std::string& kind) {
        return tree_to_json(t, tree_kind_from_string(kind)).dump();
      });

  m.def("parse_mgraph", &parse_mgraph);
  m.def("format_mgraph", &format_mgraph);
  m.def("min_degree", &min_degree);
  m.def("cut_weight", [](const Multigraph& g, const VertexSet& side) { return cut_weight(g, side); });
  m.def("local_edge_connectivity", &local_edge_connectivity);
  m.def("global_edge_connectivity", &global_edge_connectivity);
  m.def("vertex_connectivity", &vertex_connectivity);
  m.def("gomory_hu", [](const Multigraph& g) {
    std::vector<EdgeTuple> out;
    for (const auto& e : gomory_hu(g).edges) out.emplace_back(e.u, e.v, e.weight);
    return out;
  });

  m.def("is_pendant", &is_pendant);
  m.def("build_pendant_tree", &build_pendant_tree);
  m.def("validate_pendant_tree",
        [](const Multigraph& g, const BlockTree& t, bool oracle) {
          ValidationOptions o;
          o.use_oracle = oracle;
          return report_dict(validate_pendant_tree(g, t, o));
        },
        py::arg("g"), py::arg("tree"), py::arg("oracle") = false);
  m.def("count_pendant_pairs", [](const Multigraph& g) {
    const auto c = count_pendant_pairs(g);
    return py::make_tuple(c.lower_bound, c.exact);
  });

  m.def("build_ntmc_tree", &build_ntmc_tree);
  m.def("validate_ntmc_tree",
        [](const Multigraph& g, const BlockTree& t, bool oracle) {
          ValidationOptions o;
          o.use_oracle = oracle;
          return report_dict(validate_ntmc_tree(g, t, o));
        },
        py::arg("g"), py::arg("tree"), py::arg("oracle") = false);
  m.def("count_nontrivial_mincuts", &count_nontrivial_mincuts, py::arg("g"),
        py::arg("limit") = oracle::kDefaultLimit);

  m.def("build_kec_tree", &build_kec_tree);
  m.def("kec_components", &kec_components);
  m.def("sparsify",
        [](const Multigraph& g, const BlockTree& t, const std::string& mode, std::size_t limit) {
          return sparsify_to_json(sparsify(g, t, sparsify_mode_from_string(mode), limit)).dump();
        },
        py::arg("g"), py::arg("tree"), py::arg("mode"), py::arg("oracle_limit") = 10,
        "Returns the report as a JSON string.");

  auto gen = m.def_submodule("gen", "Graph families");
  gen.def("clique_cycle", &gen::clique_cycle);
  gen.def("multi_cycle_clique", &gen::multi_cycle_clique);
  gen.def("disjoint_cliques", &gen::disjoint_cliques);
  gen.def("multiplicity_path", &gen::multiplicity_path);
  gen.def("bone_family", &gen::bone_family);
  gen.def("random_graph", &gen::random_graph, py::arg("n"), py::arg("p_per_mille"),
          py::arg("seed"));

  auto orc = m.def_submodule("oracle", "Exhaustive reference routines");
  orc.def("brute_lambda", &oracle::brute_lambda, py::arg("g"), py::arg("v"), py::arg("w"),
          py::arg("limit") = oracle::kDefaultLimit);
  orc.def("brute_pendant_pairs", &oracle::brute_pendant_pairs, py::arg("g"),
          py::arg("limit") = oracle::kDefaultPairLimit);
  orc.def("brute_kec_components", &oracle::brute_kec_components, py::arg("g"), py::arg("k"),
          py::arg("limit") = oracle::kDefaultPairLimit);
}
