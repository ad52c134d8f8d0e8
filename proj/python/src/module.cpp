#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mapkit/builders.hpp"
#include "mapkit/enumeration.hpp"
#include "mapkit/errors.hpp"
#include "mapkit/formats.hpp"
#include "mapkit/operations.hpp"
#include "mapkit/symmetry.hpp"
#include "mapkit/tables.hpp"

namespace py = pybind11;
using namespace mapkit;

namespace {

ColourSet colour_set(const std::vector<Colour>& colours) {
  ColourSet s;
  for (Colour c : colours) {
    if (c < 0 || c >= kColours) throw py::value_error("colours are 0, 1 and 2");
    s.insert(c);
  }
  return s;
}

const ExpansionScheme& scheme(const std::string& op) {
  if (op == "truncation" || op == "tr") return kTruncation;
  if (op == "leapfrog" || op == "le") return kLeapfrog;
  throw py::value_error("op must be 'truncation' or 'leapfrog'");
}

py::dict record_dict(const CensusRecord& r) {
  py::dict d;
  d["key"] = r.key.hex();
  d["n_flags"] = r.n_flags;
  d["V"] = r.V;
  d["E"] = r.E;
  d["F"] = r.F;
  d["chi"] = r.chi;
  d["orientable"] = r.orientable;
  d["k"] = r.k;
  d["type"] = type_label(r.type_key);
  d["tr_k"] = r.tr_k;
  d["tr_type"] = type_label(r.tr_type_key);
  d["le_k"] = r.le_k;
  d["le_type"] = type_label(r.le_type_key);
  d["labels"] = r.labels;
  return d;
}

}  // namespace

PYBIND11_MODULE(_mapkit, m) {
  m.doc() = "Combinatorial maps as involution systems";

  auto error = py::register_exception<Error>(m, "MapkitError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<InvalidSystemError>(m, "InvalidSystemError", error.ptr());
  py::register_exception<InadmissibleTypeGraphError>(m, "InadmissibleTypeGraphError", error.ptr());
  py::register_exception<BoundExceededError>(m, "BoundExceededError", error.ptr());
  py::register_exception<VerificationError>(m, "VerificationError", error.ptr());

  py::class_<InvolutionSystem> system(m, "InvolutionSystem");
  system.def(py::init([](std::vector<Point> t0, std::vector<Point> t1, std::vector<Point> t2) {
             return InvolutionSystem({std::move(t0), std::move(t1), std::move(t2)});
           }),
           py::arg("t0"), py::arg("t1"), py::arg("t2"))
      .def_static("identity", &InvolutionSystem::identity, py::arg("size"))
      .def("__len__", &InvolutionSystem::size)
      .def("__call__", [](const InvolutionSystem& s, Colour c, Point x) {
        if (c < 0 || c >= kColours || x >= s.size()) throw py::index_error();
        return s(c, x);
      })
      .def_property_readonly("images", [](const InvolutionSystem& s) {
        const auto& im = s.images();
        return py::make_tuple(im[0], im[1], im[2]);
      })
      .def("violations",
           [](const InvolutionSystem& s, bool strict) {
             std::vector<std::string> out;
             for (const auto& v : validate(s, strict ? Strictness::strict : Strictness::relaxed))
               out.push_back(describe(v));
             return out;
           },
           py::arg("strict") = false)
      .def("__eq__", [](const InvolutionSystem& a, const InvolutionSystem& b) { return a == b; })
      .def("__repr__", [](const InvolutionSystem& s) {
        return "<InvolutionSystem with " + std::to_string(s.size()) + " points>";
      });

  py::class_<FlagMap>(m, "FlagMap")
      .def(py::init<InvolutionSystem>(), py::arg("system"))
      .def_property_readonly("system", &FlagMap::system)
      .def("__len__", &FlagMap::size)
      .def("__eq__", [](const FlagMap& a, const FlagMap& b) { return a == b; })
      .def("__repr__", [](const FlagMap& f) {
        return "<FlagMap with " + std::to_string(f.size()) + " flags>";
      });
  system.def(py::init([](const FlagMap& f) { return f.system(); }), py::arg("map"));
  py::implicitly_convertible<FlagMap, InvolutionSystem>();

  m.def("canonical_key", [](const InvolutionSystem& s) { return canonical_key(s).hex(); });
  m.def("from_key", [](const std::string& hex) { return system_from_key(CanonicalKey::from_hex(hex)); });
  m.def("isomorphic", &isomorphic);
  m.def("orbits", [](const InvolutionSystem& s, const std::vector<Colour>& colours) {
    return orbits(s, colour_set(colours)).classes();
  });
  m.def("cell_counts", [](const FlagMap& f) {
    auto c = cell_counts(f);
    return py::make_tuple(c.vertices, c.edges, c.faces);
  });
  m.def("euler_characteristic", &euler_characteristic);
  m.def("is_orientable", &is_orientable);

  m.def("automorphism_count", [](const InvolutionSystem& s) { return automorphism_group(s).size(); });
  m.def("flag_orbits", [](const FlagMap& f) { return flag_orbit_partition(f).classes(); });
  m.def("symmetry_type_graph", [](const FlagMap& f) { return symmetry_type_graph(f).graph; });
  m.def("type_label", py::overload_cast<const InvolutionSystem&>(&type_label));
  m.def("named_type_graph", &named_type_graph);
  m.def("is_truncation_admissible", &is_truncation_admissible);

  m.def("dual", py::overload_cast<const FlagMap&>(&dual));
  m.def("dual_graph", py::overload_cast<const InvolutionSystem&>(&dual));
  m.def("truncate", [](const FlagMap& f) {
    auto r = truncate(f);
    return py::make_tuple(r.map, r.tripartition.classes());
  });
  m.def("leapfrog", &leapfrog);
  m.def("subdivide2d", &subdivide2d);
  m.def("recognize_truncation", [](const FlagMap& f) -> std::optional<FlagMap> {
    auto r = recognize_truncation(f);
    if (!r) return std::nullopt;
    return r->source;
  });
  m.def("expand_type_graph",
        [](const InvolutionSystem& g, const std::string& op) {
          return &scheme(op) == &kLeapfrog ? expand_type_graph_leapfrog(g)
                                           : expand_type_graph_truncation(g);
        },
        py::arg("graph"), py::arg("op") = "truncation");
  m.def("assemble_source_type",
        [](const InvolutionSystem& g, const std::string& op) {
          std::vector<std::pair<InvolutionSystem, std::size_t>> out;
          for (auto& c : assemble_source_type(g, scheme(op))) out.emplace_back(c.source, c.fold);
          return out;
        },
        py::arg("graph"), py::arg("op") = "truncation");

  m.def("enumerate_type_graphs", [](std::size_t k) { return enumerate_type_graphs(k); }, py::arg("k"));
  m.def("enumerate_admissible", [](std::size_t k) { return enumerate_admissible(k); }, py::arg("k"));
  m.def("enumerate_maps", [](std::size_t n) { return enumerate_maps(n); }, py::arg("n_flags"));
  m.def("census",
        [](std::size_t max_flags, bool builders) {
          py::list out;
          for (const auto& r : census(max_flags, builders)) out.append(record_dict(r));
          return out;
        },
        py::arg("max_flags"), py::arg("include_builders") = true);

  m.def("derive_rules",
        [](const std::vector<std::size_t>& ks, const std::string& op) {
          auto set = derive_rules(ks, &scheme(op) == &kLeapfrog ? TableOperation::leapfrog
                                                                : TableOperation::truncation,
                                  CheckPolicy::record);
          py::list rules;
          for (const auto& r : set.rules)
            rules.append(py::make_tuple(r.name_aliases.at(0), r.name_aliases.at(1), to_string(r.orbit_relation)));
          py::list checks;
          for (const auto& c : set.checks) checks.append(py::make_tuple(c.statement, c.quantity, c.expected, c.actual));
          return py::make_tuple(rules, checks);
        },
        py::arg("k_values"), py::arg("op") = "truncation");

  m.def("build", py::overload_cast<const std::string&>(&build_named), py::arg("name"));
  m.def("parse_cis", [](const std::string& text) { return parse_cis(text).system; });
  m.def("serialize_cis", py::overload_cast<const InvolutionSystem&, bool>(&serialize_cis),
        py::arg("system"), py::arg("canonicalize") = true);
  m.def("export_dot", [](const InvolutionSystem& s, const std::string& name) {
    DotOptions o;
    o.graph_name = name;
    return export_dot(s, o);
  }, py::arg("system"), py::arg("graph_name") = "G");
}
