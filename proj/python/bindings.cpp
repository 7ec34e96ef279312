#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gex2/admissible.hpp"
#include "gex2/clifford.hpp"
#include "gex2/gexgroup.hpp"
#include "gex2/verify.hpp"

namespace py = pybind11;
using namespace gex2;

namespace {

std::vector<std::string> rows_of(const BitMatrix& m) {
  std::vector<std::string> out;
  for (int i = 0; i < m.rows(); ++i) out.push_back(m.row(i).to_string());
  return out;
}

std::optional<std::vector<std::string>> basis_strings(const std::optional<AdmissibleBasis>& b) {
  if (!b) return std::nullopt;
  std::vector<std::string> out;
  for (const auto& v : b->vectors) out.push_back(v.to_string());
  return out;
}

}  // namespace

PYBIND11_MODULE(_gex2, m) {
  m.doc() = "Quadratic forms over F2 and generalized extraspecial 2-groups";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const std::invalid_argument& ex) {
      PyErr_SetString(PyExc_ValueError, ex.what());
    }
  });

  py::enum_<FormKind>(m, "FormKind")
      .value("Plus", FormKind::Plus)
      .value("Minus", FormKind::Minus)
      .value("QOne", FormKind::QOne)
      .value("Zero", FormKind::Zero);

  py::class_<FormClass>(m, "FormClass")
      .def_readonly("dim", &FormClass::dim)
      .def_readonly("m1", &FormClass::m1)
      .def_readonly("kind", &FormClass::kind)
      .def_readonly("m2", &FormClass::m2)
      .def("name", &FormClass::name)
      .def("__eq__", [](const FormClass& a, const FormClass& b) { return a == b; })
      .def("__repr__", [](const FormClass& c) { return "<FormClass " + c.name() + ">"; });

  py::class_<QuadraticForm>(m, "QuadraticForm")
      .def_static("parse", [](const std::string& s) { return QuadraticForm::parse(s); })
      .def_static("zero", &QuadraticForm::zero)
      .def_static("h_plus", &QuadraticForm::h_plus)
      .def_static("h_minus", &QuadraticForm::h_minus)
      .def_static("q_one", &QuadraticForm::q_one)
      .def_static("from_index", &form_from_index)
      .def_property_readonly("dim", &QuadraticForm::dim)
      .def("eval", [](const QuadraticForm& q, const std::string& v) { return q.eval(BitVector::parse(v)); })
      .def("polar", [](const QuadraticForm& q) { return rows_of(q.polar()); })
      .def("__eq__", [](const QuadraticForm& a, const QuadraticForm& b) { return a == b; })
      .def("__str__", &QuadraticForm::to_string)
      .def("__repr__", [](const QuadraticForm& q) { return "QuadraticForm.parse('" + q.to_string() + "')"; });

  m.def("form_count", &form_count);
  m.def("direct_sum", &direct_sum);
  m.def("change_basis", [](const QuadraticForm& q, const std::vector<std::string>& rows) {
    return change_basis(q, BitMatrix::from_rows(rows));
  });
  m.def("classify", &classify);
  m.def("standard_form", &standard_form);
  m.def("is_isometric", &is_isometric);
  m.def("normal_form_witness", [](const QuadraticForm& q) { return rows_of(normal_form_witness(q).map()); });
  m.def("isometry_oracle", [](const QuadraticForm& q, const QuadraticForm& r) -> std::optional<std::vector<std::string>> {
    const auto w = isometry_oracle(q, r);
    if (!w) return std::nullopt;
    return rows_of(w->map());
  });

  m.def("is_admissible", &is_admissible);
  m.def("admissible_witness", [](const QuadraticForm& q) { return basis_strings(admissible_witness(q)); });
  m.def("is_admissible_bruteforce", [](const QuadraticForm& q) { return basis_strings(is_admissible_bruteforce(q)); });

  py::class_<GexGroup>(m, "GexGroup")
      .def(py::init<QuadraticForm>())
      .def_static("parse", [](const std::string& s) { return GexGroup::parse(s); })
      .def_property_readonly("form", &GexGroup::form)
      .def_property_readonly("order", &GexGroup::order)
      .def("center_order", [](const GexGroup& g) { return center(g).size(); })
      .def("frattini_order", [](const GexGroup& g) { return frattini(g).size(); })
      .def("is_generalized_extraspecial", [](const GexGroup& g) { return is_generalized_extraspecial(g); })
      .def("group_class", [](const GexGroup& g) { return classify_group(g).to_string(); })
      .def("associated_form", [](const GexGroup& g) { return q_from_group(g); })
      .def("__str__", &GexGroup::to_string);

  m.def("central_product", &central_product);
  m.def("direct_z2", &direct_z2);
  m.def("iso_oracle", [](const GexGroup& a, const GexGroup& b) { return iso_oracle(a, b); });

  m.def("verify_psi", &verify_psi);
  m.def("en_table", [](int n_max) {
    std::vector<std::string> out;
    for (const auto& row : verify_en_table(n_max)) out.push_back(row.to_string());
    return out;
  });
  m.def("verify_all", [](std::uint64_t seed, bool with_timing) { return verify_all(seed).to_text(with_timing); },
        py::arg("seed") = 20240531, py::arg("with_timing") = false);
}
