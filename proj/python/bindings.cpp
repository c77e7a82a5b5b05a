#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pil/arrangement_io.hpp"
#include "pil/constructions.hpp"
#include "pil/matroid.hpp"
#include "pil/powerideal.hpp"
#include "pil/scenarios.hpp"

namespace py = pybind11;
using namespace pil;

namespace {

py::object fraction_type() {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls;
}

py::int_ big_int(const Integer& z) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::object to_py(const Rational& q) { return fraction_type()(big_int(q.get_num()), big_int(q.get_den())); }

// Accepts int, fractions.Fraction or a string such as "-3/4".
Rational from_py(py::handle h) {
  if (py::isinstance<py::bool_>(h)) throw py::type_error("expected a rational, got bool");
  if (py::isinstance<py::int_>(h) || py::isinstance<py::str>(h)) return parse_rational(py::str(h).cast<std::string>());
  if (py::isinstance(h, fraction_type())) {
    const auto num = py::str(h.attr("numerator")).cast<std::string>();
    const auto den = py::str(h.attr("denominator")).cast<std::string>();
    return parse_rational(num + "/" + den);
  }
  throw py::type_error("expected int, Fraction or str, got " + py::repr(h).cast<std::string>());
}

Vector vector_from_py(const py::iterable& xs) {
  Vector out;
  for (auto x : xs) out.push_back(from_py(x));
  return out;
}

py::list to_py(std::span<const Rational> v) {
  py::list out;
  for (const auto& q : v) out.append(to_py(q));
  return out;
}

py::list to_py(const Matrix& m) {
  py::list out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.append(to_py(m.row(r)));
  return out;
}

py::dict stratum_dict(const Stratum& s) {
  py::dict d;
  d["basis"] = to_py(s.basis);
  d["dim"] = s.dim;
  d["multiplicity"] = s.multiplicity;
  d["containing"] = s.containing;
  return d;
}

Variant variant_of(bool lines_only) { return lines_only ? Variant::Lines : Variant::Full; }

std::vector<std::string> poly_strings(const std::vector<GradedPoly>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

}  // namespace

PYBIND11_MODULE(_pil, m) {
  m.doc() = "Exact power ideals and inverse systems of central hyperplane arrangements.";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ConstructionError>(m, "ConstructionError", PyExc_RuntimeError);

  py::class_<Arrangement>(m, "Arrangement")
      .def(py::init([](std::size_t dim, const py::iterable& forms, std::size_t loops) {
             std::vector<Vector> fs;
             for (auto f : forms) fs.push_back(vector_from_py(py::reinterpret_borrow<py::iterable>(f)));
             return Arrangement(dim, std::move(fs), loops);
           }),
           py::arg("dim"), py::arg("forms"), py::arg("loops") = 0)
      .def_property_readonly("dim", &Arrangement::ambient_dim)
      .def_property_readonly("loops", &Arrangement::loops)
      .def_property_readonly("forms",
                             [](const Arrangement& a) {
                               py::list out;
                               for (const auto& f : a.forms()) out.append(to_py(f));
                               return out;
                             })
      .def("__len__", &Arrangement::size)
      .def("__eq__", [](const Arrangement& a, const Arrangement& b) { return a == b; })
      .def("__repr__", [](const Arrangement& a) {
        return "<Arrangement dim=" + std::to_string(a.ambient_dim()) + " forms=" + std::to_string(a.size()) +
               " loops=" + std::to_string(a.loops()) + ">";
      });

  m.def("parse_arrangement", [](const std::string& text) { return parse_arrangement(text); }, py::arg("text"));
  m.def("load_arrangement", &load_arrangement, py::arg("path"));
  m.def("format_arrangement", &format_arrangement, py::arg("arrangement"));
  m.def("k23_arrangement", &k23_arrangement);
  m.def("uniform_u23", &uniform_u23);
  m.def(
      "pencil_arrangement",
      [](std::size_t planes, bool coplanar, std::uint64_t seed) {
        const auto cfg = coplanar ? PencilConfig::coplanar_default(planes, seed)
                                  : PencilConfig::generic_default(planes, seed);
        return build_pencil_arrangement(cfg).arrangement;
      },
      py::arg("m"), py::arg("coplanar"), py::arg("seed") = 1);

  m.def("rho_min", &rho_min, py::arg("arrangement"));
  m.def(
      "rho_of", [](const Arrangement& a, const py::iterable& h) { return rho_of(a, vector_from_py(h)); },
      py::arg("arrangement"), py::arg("h"));
  m.def(
      "strata",
      [](const Arrangement& a) {
        py::list out;
        for (const auto& s : strata(a)) out.append(stratum_dict(s));
        return out;
      },
      py::arg("arrangement"));
  m.def(
      "lines",
      [](const Arrangement& a) {
        py::list out;
        for (const auto& s : lines(a)) out.append(stratum_dict(s));
        return out;
      },
      py::arg("arrangement"));
  m.def("large_span", [](const Arrangement& a) { return to_py(large_span(a)); }, py::arg("arrangement"));
  m.def("delete_form", &delete_form, py::arg("arrangement"), py::arg("label"));
  m.def(
      "contract",
      [](const Arrangement& a, std::size_t label) {
        const Contraction c = contract(a, label);
        return py::make_tuple(c.arrangement, to_py(c.embedding));
      },
      py::arg("arrangement"), py::arg("label"));

  m.def(
      "hilbert_function",
      [](const Arrangement& a, int k, bool lines_only) {
        return hilbert_function(IdealSpec(a, k, variant_of(lines_only))).dims;
      },
      py::arg("arrangement"), py::arg("k"), py::arg("lines_only") = false);
  m.def(
      "ideal_dim",
      [](const Arrangement& a, int k, unsigned d, bool lines_only) {
        return ideal_degree_span(IdealSpec(a, k, variant_of(lines_only)), d).dim();
      },
      py::arg("arrangement"), py::arg("k"), py::arg("d"), py::arg("lines_only") = false);
  m.def(
      "inverse_system_basis",
      [](const Arrangement& a, int k, unsigned d) { return poly_strings(inverse_system_basis(IdealSpec(a, k), d)); },
      py::arg("arrangement"), py::arg("k"), py::arg("d"));
  m.def(
      "a_monomial_span",
      [](const Arrangement& a, int k) {
        const MonomialSpan s = a_monomial_span(IdealSpec(a, k));
        return py::make_tuple(s.dims, s.spanned);
      },
      py::arg("arrangement"), py::arg("k"));
  m.def("check_c_equals_cprime", &check_c_equals_cprime, py::arg("arrangement"), py::arg("k"));
  m.def(
      "degree1_component",
      [](const Arrangement& a) {
        const Degree1Component c = degree1_component(a);
        py::dict d;
        d["from_inverse_system"] = to_py(c.from_inverse_system);
        d["from_large_span"] = to_py(c.from_large_span);
        d["agree"] = c.agree;
        d["dim"] = c.dim();
        return d;
      },
      py::arg("arrangement"));
  m.def("exact_sequence_defect", &exact_sequence_defect, py::arg("arrangement"), py::arg("label"), py::arg("k"));

  m.def(
      "same_matroid", [](const Arrangement& a, const Arrangement& b) { return same_matroid(a, b); }, py::arg("a"),
      py::arg("b"));
  m.def(
      "tutte",
      [](const Arrangement& a) {
        const TuttePolynomial t = tutte(matroid_of(a));
        py::list coeffs;
        for (const auto& row : t.coefficients()) {
          py::list r;
          for (const auto& c : row) r.append(big_int(c));
          coeffs.append(r);
        }
        py::dict d;
        d["polynomial"] = t.to_string();
        d["coefficients"] = coeffs;
        return d;
      },
      py::arg("arrangement"));
  m.def(
      "tutte_eval",
      [](const Arrangement& a, py::handle x, py::handle y) {
        return to_py(tutte_eval(tutte(matroid_of(a)), from_py(x), from_py(y)));
      },
      py::arg("arrangement"), py::arg("x"), py::arg("y"));

  m.def(
      "verify",
      [](const std::string& scenario, std::size_t planes, std::uint64_t seed) {
        const ScenarioReport r = run_scenario(scenario, ScenarioOptions{planes, seed, false});
        return py::module_::import("json").attr("loads")(r.to_json().dump());
      },
      py::arg("scenario"), py::arg("m") = 3, py::arg("seed") = 1);
}
