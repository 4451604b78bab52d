#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "trisurg/configs.hpp"
#include "trisurg/fixtures.hpp"
#include "trisurg/generate.hpp"
#include "trisurg/reduce.hpp"

namespace py = pybind11;
using namespace trisurg;

namespace {

DegreeClass parse_class(const std::string& s) {
  if (s == "f0") return DegreeClass::InnerDegree4;
  if (s == "f4") return DegreeClass::MinDegree4;
  throw py::value_error("class must be 'f0' or 'f4'");
}

const char* class_token(DegreeClass c) {
  switch (c) {
    case DegreeClass::InnerDegree4: return "f0";
    case DegreeClass::MinDegree4: return "f4";
    default: return "none";
  }
}

py::dict certificate_dict(const MinimalityCertificate& cert) {
  py::list residuals;
  for (const auto& r : cert.residuals)
    residuals.append(py::make_tuple(py::make_tuple(r.edge.u, r.edge.v), to_string(r.housing), r.witness));
  py::dict d;
  d["verdict"] = to_string(cert.verdict);
  d["next"] = cert.next ? py::cast(format_move(*cert.next)) : py::none();
  d["residuals"] = residuals;
  d["all_housed"] = cert.all_housed();
  return d;
}

}  // namespace

PYBIND11_MODULE(_trisurg, m) {
  m.doc() = "Surgery on triangulated punctured surfaces";

  py::register_exception<Error>(m, "TrisurgError");

  py::class_<Triangulation>(m, "Triangulation")
      .def(py::init([](const FaceList& faces) { return Triangulation::build(faces); }), py::arg("faces"))
      .def_static("parse", [](const std::string& text) { return Triangulation::build(parse_tri(text)); })
      .def_static("fixture", &fixtures::by_name)
      .def_property_readonly("faces", &Triangulation::faces)
      .def_property_readonly("num_vertices", &Triangulation::num_vertices)
      .def_property_readonly("num_edges", &Triangulation::num_edges)
      .def_property_readonly("num_faces", &Triangulation::num_faces)
      .def_property_readonly("edges",
                             [](const Triangulation& t) {
                               std::vector<std::pair<VertexId, VertexId>> out;
                               for (Edge e : t.edges()) out.emplace_back(e.u, e.v);
                               return out;
                             })
      .def("degree", &Triangulation::degree)
      .def("surface",
           [](const Triangulation& t) {
             auto s = classify_surface(t);
             return py::make_tuple(s.euler_characteristic, s.orientable, s.boundary_components);
           })
      .def("degree_class", [](const Triangulation& t) { return class_token(class_membership(t)); })
      .def("canonical_code", [](const Triangulation& t) { return canonical_form(t).hex(); })
      .def("serialize", [](const Triangulation& t) { return serialize_tri(t.faces()); })
      .def("__repr__", [](const Triangulation& t) {
        std::ostringstream os;
        os << "<Triangulation v=" << t.num_vertices() << " f=" << t.num_faces() << ">";
        return os.str();
      });

  m.def("fixture_names", [] {
    std::vector<std::string> names;
    for (const auto& f : fixtures::all()) names.push_back(f.name);
    return names;
  });

  m.def("is_contractible",
        [](const Triangulation& t, VertexId u, VertexId v) { return is_contractible(t, Edge(u, v)).contractible(); });

  m.def("detect", [](const Triangulation& t, const std::string& cls) {
    std::vector<std::string> out;
    for (const auto& f : detect_all(t, parse_class(cls))) out.push_back(format_finding(f));
    return out;
  });

  m.def("certify", [](const Triangulation& t, const std::string& cls) { return certificate_dict(certify(t, parse_class(cls))); });

  m.def(
      "reduce",
      [](const Triangulation& t, const std::string& cls, bool flips) {
        auto c = parse_class(cls);
        if (flips && c != DegreeClass::MinDegree4) throw py::value_error("flips need class 'f4'");
        Reduction red;
        {
          py::gil_scoped_release release;
          red = c == DegreeClass::InnerDegree4 ? reduce_to_irreducible(t) : reduce_to_4minimal(t, flips);
        }
        py::dict d;
        d["terminal"] = red.terminal;
        d["trace"] = format_reduction_trace(red.trace);
        d["certificate"] = certificate_dict(red.certificate);
        return d;
      },
      py::arg("t"), py::arg("cls"), py::arg("flips") = false);

  m.def("replay", [](const Triangulation& initial, const std::string& trace) {
    std::istringstream in(trace);
    return replay(initial, parse_reduction_trace(in));
  });

  m.def(
      "enumerate_catalog",
      [](const std::vector<Triangulation>& seeds, const std::string& cls, int max_vertices, int threads) {
        EnumerateOptions opts;
        opts.threads = threads;
        Catalog cat;
        {
          py::gil_scoped_release release;
          cat = enumerate(seeds, parse_class(cls), max_vertices, opts);
        }
        std::map<int, std::vector<std::string>> out;
        for (const auto& [v, level] : cat.levels)
          for (const auto& [code, faces] : level) out[v].push_back(code.hex());
        return out;
      },
      py::arg("seeds"), py::arg("cls"), py::arg("max_vertices"), py::arg("threads") = 1);
}
