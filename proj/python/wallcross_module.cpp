#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wallcross/arrangement.hpp"
#include "wallcross/circle.hpp"
#include "wallcross/engine.hpp"
#include "wallcross/generators.hpp"
#include "wallcross/oracle.hpp"
#include "wallcross/render.hpp"
#include "wallcross/validate.hpp"
#include "wallcross/xray_io.hpp"

#include <memory>

namespace py = pybind11;
using namespace wallcross;

namespace {

py::object to_fraction(const Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_string(q));
}

py::list to_fractions(const RatVector& v) {
  py::list out;
  for (const auto& q : v) out.append(to_fraction(q));
  return out;
}

Rational from_py(const py::handle& h) { return parse_rational(py::str(h).cast<std::string>()); }

RatVector vector_from_py(const py::sequence& seq) {
  RatVector v;
  for (auto item : seq) v.push_back(from_py(item));
  return v;
}

py::object value_to_py(const IntPolynomial& v, Ring ring) {
  if (ring == Ring::Integer) return py::int_(v.as_integer());
  return py::cast(v.coefficients());
}

/// An X-ray together with its subchambers, computed on first use.
class PyXray {
 public:
  explicit PyXray(WeightedXray x) : x_(std::make_shared<WeightedXray>(std::move(x))) {}

  const WeightedXray& xray() const { return *x_; }
  const ChamberComplex& complex() {
    if (!complex_) complex_ = std::make_shared<ChamberComplex>(*x_);
    return *complex_;
  }

 private:
  std::shared_ptr<WeightedXray> x_;
  std::shared_ptr<ChamberComplex> complex_;
};

RecursiveInvariantSpec spec_named(const std::string& name) {
  if (name == "sig" || name == "signature") return signature_invariant();
  if (name == "poincare") return poincare_invariant();
  if (name == "euler") return euler_invariant();
  throw py::value_error("unknown invariant '" + name + "'");
}

CircleFixedData circle_from_py(const py::sequence& comps) {
  CircleFixedData data;
  for (auto item : comps) {
    auto t = item.cast<py::tuple>();
    if (t.size() != 4) throw py::value_error("component must be (level, weights, signature, poincare)");
    CircleComponent c;
    c.level = from_py(t[0]);
    c.weights = t[1].cast<std::vector<std::int64_t>>();
    c.seed_signature = t[2].cast<std::int64_t>();
    c.seed_poincare = IntPolynomial(t[3].cast<std::vector<std::int64_t>>());
    data.components.push_back(std::move(c));
  }
  return data;
}

}  // namespace

PYBIND11_MODULE(wallcross, m) {
  m.doc() = "Weighted X-rays and wall-crossing invariants over exact rationals";

  py::register_exception<XrayError>(m, "XrayError", PyExc_ValueError);
  py::register_exception<GeometryError>(m, "GeometryError", PyExc_ValueError);
  py::register_exception<PathDependenceError>(m, "PathDependenceError", PyExc_RuntimeError);
  py::register_exception<LoadError>(m, "LoadError", PyExc_ValueError);

  m.def("w_signature", &w_signature, py::arg("forward"), py::arg("backward"));
  m.def("w_euler", &w_euler, py::arg("forward"), py::arg("backward"));
  m.def(
      "w_poincare", [](int f, int b) { return w_poincare(f, b).coefficients(); }, py::arg("forward"),
      py::arg("backward"), "Coefficient list, index = degree in t.");

  m.def(
      "signature_regular",
      [](const py::sequence& comps, const py::object& a) { return signature_regular(circle_from_py(comps), from_py(a)); },
      py::arg("components"), py::arg("level"),
      "Components are (level, weights, signature, poincare coefficients).");
  m.def(
      "poincare_regular",
      [](const py::sequence& comps, const py::object& a) {
        return poincare_regular(circle_from_py(comps), from_py(a)).coefficients();
      },
      py::arg("components"), py::arg("level"));
  m.def(
      "signature_singular",
      [](const py::sequence& comps, const py::object& c) { return signature_singular(circle_from_py(comps), from_py(c)); },
      py::arg("components"), py::arg("level"));

  py::class_<PyXray>(m, "XRay")
      .def_static(
          "cpn",
          [](int n, const std::string& matrix, const std::vector<std::string>& labels) {
            return PyXray(cpn_xray(n, ProjectionMatrix::parse(matrix), labels));
          },
          py::arg("n"), py::arg("matrix"), py::arg("labels") = std::vector<std::string>{})
      .def_static(
          "delzant_simplex",
          [](std::size_t d) {
            const Polytope p = standard_simplex(d);
            return PyXray(delzant_xray(p, edge_direction_weights(p)));
          },
          py::arg("d"))
      .def_static(
          "delzant_cube",
          [](std::size_t d) {
            const Polytope p = unit_cube(d);
            return PyXray(delzant_xray(p, edge_direction_weights(p)));
          },
          py::arg("d"))
      .def_static(
          "preset",
          [](const std::string& name) {
            if (name == "cp3") return PyXray(presets::cp3());
            if (name == "generic_cp4") return PyXray(presets::generic_cp4());
            if (name == "nongeneric_cp4") return PyXray(presets::nongeneric_cp4());
            throw py::value_error("unknown preset '" + name + "'");
          },
          py::arg("name"))
      .def_static(
          "from_json", [](const std::string& text, bool unchecked) { return PyXray(xray_from_json(text, unchecked)); },
          py::arg("text"), py::arg("unchecked") = false)
      .def("to_json", [](const PyXray& self) { return xray_to_json(self.xray()); })
      .def_property_readonly("torus_rank", [](const PyXray& self) { return self.xray().torus_rank(); })
      .def_property_readonly("half_dim", [](const PyXray& self) { return self.xray().half_dim(); })
      .def_property_readonly("fingerprint", [](const PyXray& self) { return self.xray().fingerprint(); })
      .def("strata",
           [](const PyXray& self) {
             std::vector<std::string> ids;
             for (const auto& s : self.xray().strata()) ids.push_back(s.id);
             return ids;
           })
      .def("top", [](const PyXray& self) { return self.xray().stratum(self.xray().top()).id; })
      .def("wall",
           [](const PyXray& self, const std::string& id) {
             py::list out;
             for (const auto& v : self.xray().stratum(id).wall.vertices()) out.append(to_fractions(v));
             return out;
           })
      .def("validate",
           [](const PyXray& self) {
             std::vector<std::string> out;
             for (const auto& v : validate_all(self.xray())) out.push_back(to_string(v));
             return out;
           })
      .def("subchambers",
           [](PyXray& self, const std::string& id) {
             py::list out;
             for (const auto& s : self.complex().subchambers(self.xray().index_of(id))) {
               py::list verts;
               for (const auto& v : s.cell.vertices()) verts.append(to_fractions(v));
               py::dict d;
               d["rep"] = to_fractions(s.rep);
               d["vertices"] = verts;
               out.append(d);
             }
             return out;
           })
      .def("locate",
           [](PyXray& self, const std::string& id, const py::sequence& q) {
             return self.complex().locate(self.xray().index_of(id), vector_from_py(q));
           })
      .def(
          "invariant",
          [](PyXray& self, const std::string& name) {
            const RecursiveInvariantSpec spec = spec_named(name);
            const InvariantTable t = propagate(self.complex(), spec);
            py::dict out;
            for (const auto& r : t.rows()) out[py::make_tuple(r.stratum, r.subchamber)] = value_to_py(r.value, t.ring());
            return out;
          },
          py::arg("name"), "Mapping (stratum id, subchamber index) -> value.")
      .def("oracle",
           [](PyXray& self) {
             std::vector<std::pair<std::string, bool>> out;
             for (const auto& r : run_oracle(self.complex())) out.emplace_back(r.name, r.passed());
             return out;
           })
      .def(
          "render_svg",
          [](PyXray& self, const std::string& label) {
            std::optional<InvariantTable> t;
            if (label != "none") t = propagate(self.complex(), spec_named(label));
            return render_svg(self.complex(), t ? &*t : nullptr);
          },
          py::arg("label") = "sig");
}
