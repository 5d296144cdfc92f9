#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qmf/almostholo.hpp"
#include "qmf/document.hpp"
#include "qmf/eisenstein.hpp"
#include "qmf/errors.hpp"
#include "qmf/expression.hpp"
#include "qmf/numverify.hpp"
#include "qmf/vectorvalued.hpp"

namespace py = pybind11;
using namespace qmf;

namespace {

py::object to_fraction(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(r.get_str());
}

Rational from_python(const py::handle& value) { return parse_rational(py::str(value).cast<std::string>()); }

py::list series_to_list(const QSeries& s) {
  py::list out;
  for (const auto& c : s.coefficients()) out.append(to_fraction(c));
  return out;
}

QSeries series_from_list(const py::sequence& seq) {
  std::vector<Rational> coeffs;
  for (const auto& item : seq) coeffs.push_back(from_python(item));
  return QSeries(std::move(coeffs));
}

py::dict terms_dict(const QuasiModularForm& f) {
  py::dict out;
  for (const auto& [m, c] : f.terms()) out[py::make_tuple(m.e2, m.e4, m.e6)] = to_fraction(c);
  return out;
}

py::dict residual_dict(const Residual& r) {
  py::dict d;
  d["form"] = r.form;
  d["gamma"] = py::make_tuple(r.gamma.a(), r.gamma.b(), r.gamma.c(), r.gamma.d());
  d["tau"] = r.tau;
  d["absolute"] = r.absolute;
  d["relative"] = r.relative;
  d["truncation"] = r.truncation;
  return d;
}

py::list residual_list(const std::vector<Residual>& rs) {
  py::list out;
  for (const auto& r : rs) out.append(residual_dict(r));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact quasi-modular, almost holomorphic and vector-valued modular forms for SL2(Z)";
  m.attr("__version__") = "0.1.0";
  m.attr("DEFAULT_PRECISION") = kDefaultPrecision;

  py::register_exception<NoMatchError>(m, "NoMatchError", PyExc_ValueError);
  py::register_exception<UnderdeterminedError>(m, "UnderdeterminedError", PyExc_ValueError);
  py::register_exception<NotHolomorphicError>(m, "NotHolomorphicError", PyExc_ValueError);

  m.def("generator", [](const std::string& name, std::size_t n) { return series_to_list(generator(parse_generator(name), n)); },
        py::arg("name"), py::arg("precision") = kDefaultPrecision);
  m.def("dim_modular", &dim_modular);
  m.def("dim_cusp", &dim_cusp);
  m.def("monomial_basis", &monomial_basis);
  m.def("qs_derive", [](const py::sequence& s) { return series_to_list(derive(series_from_list(s))); });
  m.def("qs_eval", [](const py::sequence& s, std::complex<double> tau) {
    const auto v = evaluate(series_from_list(s), tau);
    return py::make_tuple(v.value, v.truncation_error);
  });

  py::class_<QuasiModularForm>(m, "QuasiModularForm")
      .def(py::init([](const std::string& expr) { return parse_expression(expr); }), py::arg("expression"))
      .def_static("E2", &QuasiModularForm::E2)
      .def_static("E4", &QuasiModularForm::E4)
      .def_static("E6", &QuasiModularForm::E6)
      .def_static("Delta", &QuasiModularForm::Delta)
      .def_static("constant", [](const py::handle& c) { return QuasiModularForm::constant(from_python(c)); })
      .def_property_readonly("weight", &QuasiModularForm::weight)
      .def_property_readonly("depth", &QuasiModularForm::depth)
      .def_property_readonly("terms", &terms_dict)
      .def("is_zero", &QuasiModularForm::is_zero)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def("__mul__", [](const QuasiModularForm& f, const py::int_& c) { return f * from_python(c); })
      .def("__rmul__", [](const QuasiModularForm& f, const py::int_& c) { return f * from_python(c); })
      .def("scale", [](const QuasiModularForm& f, const py::handle& c) { return f * from_python(c); })
      .def(py::self == py::self)
      .def("to_json", [](const QuasiModularForm& f) { return serialize(FormDocument(f)); })
      .def("__repr__", [](const QuasiModularForm& f) { return "QuasiModularForm('" + format_expression(f) + "')"; })
      .def("__str__", &format_expression);

  m.def("reduced_component", &reduced_component);
  m.def("components", [](const QuasiModularForm& f) { return components(f).entries; });
  m.def("derive", py::overload_cast<const QuasiModularForm&, int>(&derive), py::arg("f"), py::arg("times") = 1);
  m.def("lower", &lower);
  m.def("weight_op", &weight_op);
  m.def("derivative_lift", [](const QuasiModularForm& g, int p) { return derivative_lift(g, p).entries; });
  m.def("qexpansion", [](const QuasiModularForm& f, std::size_t n) { return series_to_list(qexpansion(f, n)); },
        py::arg("f"), py::arg("precision") = kDefaultPrecision);
  m.def("recognize", [](const py::sequence& s, int k, int depth) { return recognize(series_from_list(s), k, depth); });
  m.def("parse_document", [](const std::string& text) -> py::object {
    return std::visit([](auto&& v) -> py::object {
      using T = std::decay_t<decltype(v)>;
      if constexpr (std::is_same_v<T, ComponentTuple>) return py::cast(v.entries);
      else if constexpr (std::is_same_v<T, WBasisParts>) return py::cast(v.parts);
      else return py::cast(v);
    }, parse_document(text));
  });

  py::class_<AlmostHolomorphicForm>(m, "AlmostHolomorphicForm")
      .def_property_readonly("weight", &AlmostHolomorphicForm::weight)
      .def_property_readonly("degree", &AlmostHolomorphicForm::degree)
      .def_property_readonly("precision", &AlmostHolomorphicForm::precision)
      .def_property_readonly("coefficients", [](const AlmostHolomorphicForm& F) {
        py::list out;
        for (const auto& c : F.coefficients()) out.append(series_to_list(c));
        return out;
      })
      .def("is_zero", &AlmostHolomorphicForm::is_zero)
      .def("__call__", [](const AlmostHolomorphicForm& F, std::complex<double> tau) { return evaluate(F, tau); })
      .def(py::self == py::self)
      .def("to_json", [](const AlmostHolomorphicForm& F) { return serialize(FormDocument(F)); });

  m.def("completion", &completion, py::arg("f"), py::arg("precision") = kDefaultPrecision);
  m.def("constant_term", [](const AlmostHolomorphicForm& F) { return series_to_list(constant_term(F)); });
  m.def("component_forms", &component_forms, py::arg("f"), py::arg("precision") = kDefaultPrecision);
  m.def("reconstruct", [](const std::vector<AlmostHolomorphicForm>& parts, int k) {
    return series_to_list(reconstruct(parts, k));
  });
  m.def("raise_weight", &raise);
  m.def("lower_op", &lower_op);

  py::class_<GroupElement>(m, "GroupElement")
      .def(py::init<std::int64_t, std::int64_t, std::int64_t, std::int64_t>())
      .def_static("T", &GroupElement::T)
      .def_static("S", &GroupElement::S)
      .def("j", py::overload_cast<std::complex<double>>(&GroupElement::j, py::const_))
      .def("act", py::overload_cast<std::complex<double>>(&GroupElement::act, py::const_))
      .def("inverse", &GroupElement::inverse)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("entries", [](const GroupElement& g) { return py::make_tuple(g.a(), g.b(), g.c(), g.d()); });

  m.def("sym_matrix", [](const GroupElement& g, int rank) {
    const auto mat = sym_matrix(g, rank);
    py::list rows;
    for (std::size_t i = 0; i < mat.size(); ++i) {
      py::list row;
      for (std::size_t j = 0; j < mat.size(); ++j) row.append(py::int_(py::str(mat(i, j).get_str())));
      rows.append(row);
    }
    return rows;
  });

  py::class_<VectorValuedForm>(m, "VectorValuedForm")
      .def(py::init<QuasiModularForm, int, int>(), py::arg("source"), py::arg("m"), py::arg("weight_label"))
      .def_property_readonly("m", &VectorValuedForm::rank_parameter)
      .def_property_readonly("weight_label", &VectorValuedForm::weight_label)
      .def_property_readonly("weight", &VectorValuedForm::weight)
      .def_property_readonly("source", &VectorValuedForm::source)
      .def(py::self == py::self)
      .def("to_json", [](const VectorValuedForm& F) { return serialize(FormDocument(F)); });

  m.def("from_quasimodular", &from_quasimodular);
  m.def("to_quasimodular", &to_quasimodular);
  m.def("w_form", &w_form);
  m.def("eval_standard", &eval_standard, py::arg("F"), py::arg("tau"), py::arg("precision") = kDefaultPrecision);
  m.def("holwt_component", &holwt_component, py::arg("F"), py::arg("s"), py::arg("precision") = kDefaultPrecision);
  m.def("embed_i", &embed_i);
  m.def("image_test", &image_test);
  m.def("w_decompose", &w_decompose);
  m.def("w_compose", &w_compose, py::arg("parts"), py::arg("m"), py::arg("k"));
  m.def("iota_lift", &iota_lift);
  m.def("vv_product", &vv_product);
  m.def("filtration_degree", &filtration_degree);
  m.def("dim_vv", &dim_vv);
  m.def("w_basis_rank", &w_basis_rank, py::arg("k"), py::arg("m"), py::arg("precision") = kDefaultPrecision);

  m.def("normalization_self_test", &normalization_self_test);
  m.def("check_quasimodular", [](const QuasiModularForm& f) { return residual_list(check_quasimodular(f, default_plan())); });
  m.def("check_almost_holomorphic", [](const AlmostHolomorphicForm& F) {
    return residual_list(check_almost_holomorphic(F, default_plan()));
  });
  m.def("check_vv", [](const VectorValuedForm& F) { return residual_list(check_vv(F, default_plan())); });
  m.def("check_scalar", [](const py::sequence& s, int k) {
    const QSeries series = series_from_list(s);
    return residual_list(check_scalar("series", [&series](std::complex<double> tau) { return evaluate(series, tau); },
                                      k, default_plan()));
  });
}
