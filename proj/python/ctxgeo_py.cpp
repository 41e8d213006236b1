// Copyright 2026 The ctxgeo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ctxgeo/analysis.hpp"
#include "ctxgeo/cli.hpp"
#include "ctxgeo/geometry.hpp"
#include "ctxgeo/json_io.hpp"
#include "ctxgeo/pauli.hpp"
#include "ctxgeo/search.hpp"

namespace py = pybind11;
using namespace ctxgeo;

namespace {

py::object to_py(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null:
      return py::none();
    case Json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case Json::value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case Json::value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case Json::value_t::number_float:
      return py::float_(j.get<double>());
    case Json::value_t::string:
      return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const auto& v : j) out.append(to_py(v));
      return out;
    }
    default: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = to_py(v);
      return out;
    }
  }
}

TwoContextGeometry make_geometry(int points, const std::vector<std::vector<int>>& contexts) {
  return TwoContextGeometry::make(GeometryData{points, contexts});
}

py::dict verify(const TwoContextGeometry& g, const std::map<int, std::string>& labeling, bool require_distinct) {
  return to_py(report_to_json(verify_labeling(g, parse_labeling(labeling), VerifyOptions{require_distinct})));
}

py::dict search(const TwoContextGeometry& g, int n_qubits, std::size_t max_solutions, bool require_contextual,
                double time_budget, std::optional<std::uint64_t> seed, bool symmetry_reduction, bool allow_duplicates,
                int threads) {
  SearchConfig cfg;
  cfg.n_qubits = n_qubits;
  cfg.max_solutions = max_solutions;
  cfg.require_contextual = require_contextual;
  cfg.time_budget = std::chrono::duration<double>(time_budget);
  cfg.seed = seed;
  cfg.symmetry_reduction = symmetry_reduction;
  cfg.allow_duplicates = allow_duplicates;
  cfg.threads = threads;
  RealizationResult res;
  {
    py::gil_scoped_release release;
    res = find_realization(g, cfg);
  }
  py::list sols;
  for (const auto& lab : res.solutions) sols.append(to_py(labeling_to_json(lab)));
  py::dict out;
  out["solutions"] = sols;
  out["nodes_explored"] = res.nodes_explored;
  out["exhausted"] = res.exhausted;
  out["timed_out"] = res.timed_out;
  return out;
}

}  // namespace

PYBIND11_MODULE(_ctxgeo, m) {
  m.doc() = "Kochen-Specker 2-context-geometries over multi-qubit Pauli observables";

  py::register_exception<PauliParseError>(m, "PauliParseError", PyExc_ValueError);
  py::register_exception<InvalidGeometry>(m, "InvalidGeometry", PyExc_ValueError);
  py::register_exception<SizeLimitExceeded>(m, "SizeLimitExceeded", PyExc_ValueError);
  py::register_exception<LabelingMismatch>(m, "LabelingMismatch", PyExc_ValueError);

  m.def("normalize_observable", [](const std::string& s) { return format_observable(parse_observable(s)); });
  m.def("multiply", [](const std::string& a, const std::string& b) {
    return format_element(multiply(parse_observable(a).element(), parse_observable(b).element()));
  });
  m.def("commutes", [](const std::string& a, const std::string& b) {
    return commutes(parse_observable(a).element(), parse_observable(b).element());
  });
  m.def(
      "context_product",
      [](const std::vector<std::string>& ops) {
        std::vector<PauliObservable> v;
        for (const auto& s : ops) v.push_back(parse_observable(s));
        return context_product(v).sign;
      },
      "Sign (+1 or -1) of the product of mutually commuting observables.");

  py::class_<TwoContextGeometry>(m, "Geometry")
      .def(py::init(&make_geometry), py::arg("points"), py::arg("contexts"))
      .def_property_readonly("num_points", &TwoContextGeometry::num_points)
      .def_property_readonly("num_contexts", &TwoContextGeometry::num_contexts)
      .def_property_readonly("context_size", &TwoContextGeometry::context_size)
      .def_property_readonly("contexts", &TwoContextGeometry::contexts)
      .def("dual_edges",
           [](const TwoContextGeometry& g) {
             return dual_multigraph(g).edges;
           })
      .def("__repr__", [](const TwoContextGeometry& g) {
        return "Geometry(points=" + std::to_string(g.num_points()) + ", contexts=" + Json(g.contexts()).dump() + ")";
      });

  m.def("validate", [](int points, const std::vector<std::vector<int>>& contexts) {
    std::vector<std::string> out;
    for (const auto& v : validate(GeometryData{points, contexts}).violations) {
      out.push_back(std::string(to_string(v.kind)) + ": " + v.message);
    }
    return out;
  });
  m.def("enumerate_geometries", &enumerate_geometries, py::arg("contexts"), py::arg("context_size"));
  m.def("canonical_form", [](const TwoContextGeometry& g) { return py::bytes(canonical_form(g)); });
  m.def("identify", [](const TwoContextGeometry& g) { return identify_geometry(canonical_form(g)); });
  m.def("star_polygon", [](int p, int q) { return star_polygon(p, q).geometry; });
  m.def("catalog_names", &catalog_names);
  m.def("catalog", [](const std::string& name) { return to_py(catalog_entry_to_json(catalog(name))); });
  m.def("catalog_geometry", [](const std::string& name) { return catalog(name).geometry; });

  m.def("verify_labeling", &verify, py::arg("geometry"), py::arg("labeling"), py::arg("require_distinct") = true);
  m.def("parity_analysis", [](const TwoContextGeometry& g) { return to_py(verdict_to_json(parity_analysis(g))); });
  m.def("is_planar", [](const TwoContextGeometry& g) { return is_planar(dual_multigraph(g)); });
  m.def(
      "census",
      [](int max_points, int threads) {
        std::vector<CensusEntry> entries;
        {
          py::gil_scoped_release release;
          entries = contextuality_census(max_points, threads);
        }
        py::list out;
        for (const auto& e : entries) {
          py::dict row;
          row["points"] = e.params.points();
          row["l"] = e.params.contexts;
          row["p"] = e.params.context_size;
          row["geometry"] = e.geometry;
          row["verdict"] = to_string(e.verdict.verdict);
          row["planar"] = e.planar;
          out.append(row);
        }
        return out;
      },
      py::arg("max_points"), py::arg("threads") = 1);
  m.def("find_realization", &search, py::arg("geometry"), py::arg("n_qubits"), py::arg("max_solutions") = 1,
        py::arg("require_contextual") = true, py::arg("time_budget") = 60.0, py::arg("seed") = py::none(),
        py::arg("symmetry_reduction") = true, py::arg("allow_duplicates") = false, py::arg("threads") = 1);
}
