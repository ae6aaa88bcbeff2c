// Python module castleqec._core. Structured results cross the boundary as
// JSON text so the Python side sees exactly what the CLI prints.
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "castleqec/io.hpp"
#include "castleqec/reproduce.hpp"

namespace py = pybind11;
using namespace castleqec;

namespace {

std::vector<std::vector<int>> rows_of(const Matrix& m) {
  std::vector<std::vector<int>> out(m.rows(), std::vector<int>(m.cols()));
  for (int r = 0; r < m.rows(); ++r)
    for (int t = 0; t < m.cols(); ++t) out[r][t] = m.at(r, t);
  return out;
}

LinearCode code_from(const std::shared_ptr<Field>& f, int n, const std::vector<std::vector<int>>& rows) {
  Matrix m(static_cast<int>(rows.size()), n);
  for (int r = 0; r < m.rows(); ++r) {
    if (static_cast<int>(rows[r].size()) != n) throw InputError("generator row has the wrong length");
    for (int t = 0; t < n; ++t) {
      if (rows[r][t] < 0 || rows[r][t] >= f->order()) throw InputError("element index out of range");
      m.at(r, t) = static_cast<Elem>(rows[r][t]);
    }
  }
  return LinearCode::from_rows(f, n, m);
}

InnerProduct product(const std::string& s) {
  if (s == "euclidean") return InnerProduct::Euclidean;
  if (s == "hermitian") return InnerProduct::Hermitian;
  throw InputError("inner product must be 'euclidean' or 'hermitian'");
}

std::optional<int> weight_value(const MinWeight& w) {
  if (w.exact()) return w.value;
  return std::nullopt;
}

// pybind11 holders cannot be shared_ptr<const T>; fields are immutable anyway.
using FieldHolder = std::shared_ptr<Field>;
FieldHolder hold(const FieldPtr& f) { return std::const_pointer_cast<Field>(f); }

struct Curve {
  CurveSpec spec;
};

struct Sequence {
  std::shared_ptr<const CodeSequence> seq;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quantum codes from Castle and weak Castle curves";

  py::register_exception<UnsupportedFieldError>(m, "UnsupportedFieldError", PyExc_ValueError);
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<QuantumError>(m, "QuantumError", PyExc_ValueError);

  m.attr("DEFAULT_BUDGET") = kDefaultBudget;

  py::class_<Field, FieldHolder>(m, "Field")
      .def(py::init([](int p, int k) { return hold(Field::make(p, k)); }), py::arg("p"), py::arg("k") = 1)
      .def_property_readonly("order", &Field::order)
      .def_property_readonly("characteristic", &Field::characteristic)
      .def_property_readonly("degree", &Field::degree)
      .def_property_readonly("modulus", [](const Field& f) { return std::vector<int>(f.modulus().begin(), f.modulus().end()); })
      .def_property_readonly("primitive", &Field::primitive)
      .def("add", [](const Field& f, int a, int b) { return f.add(a, b); })
      .def("mul", [](const Field& f, int a, int b) { return f.mul(a, b); })
      .def("inv", [](const Field& f, int a) { return f.inv(a); })
      .def("pow", [](const Field& f, int a, long long e) { return f.pow(a, e); })
      .def("trace", [](const Field& f, int a, int q) { return trace_in_place(f, a, q); })
      .def("to_json", [](const Field& f) { return field_to_json(f).dump(); })
      .def("__repr__", [](const Field& f) { return "GF(" + std::to_string(f.order()) + ")"; });

  py::class_<NumericalSemigroup>(m, "Semigroup")
      .def(py::init([](const std::vector<int>& gens) { return sg_generate(gens); }), py::arg("generators"))
      .def_property_readonly("generators", &NumericalSemigroup::generators)
      .def_property_readonly("genus", &NumericalSemigroup::genus)
      .def_property_readonly("gaps", &NumericalSemigroup::gaps)
      .def_property_readonly("conductor", &NumericalSemigroup::conductor)
      .def("contains", &NumericalSemigroup::contains)
      .def("ell", [](const NumericalSemigroup& s, long long mm) { return s.ell(mm); })
      .def("is_symmetric", [](const NumericalSemigroup& s) { return sg_is_symmetric(s); })
      .def("dimension_set", [](const NumericalSemigroup& s, int n) { return sg_dimension_set(s, n); })
      .def("order_bound", [](const NumericalSemigroup& s, int mm) { return s.order_bound(mm); })
      .def("to_json", [](const NumericalSemigroup& s) { return semigroup_to_json(s).dump(); });

  py::class_<LinearCode>(m, "LinearCode")
      .def(py::init(&code_from), py::arg("field"), py::arg("n"), py::arg("rows"))
      .def_property_readonly("field", [](const LinearCode& c) { return hold(c.field()); })
      .def_property_readonly("n", &LinearCode::length)
      .def_property_readonly("k", &LinearCode::dimension)
      .def_property_readonly("generator", [](const LinearCode& c) { return rows_of(c.generator()); })
      .def("dual", &LinearCode::dual)
      .def("hermitian_dual", [](const LinearCode& c) { return code_hermitian_dual(c); })
      .def("trace", [](const LinearCode& c, int q) { return code_trace(c, q); })
      .def("subfield_subcode", [](const LinearCode& c, int q) { return code_subfield_subcode(c, q); })
      .def("is_self_orthogonal", [](const LinearCode& c, const std::string& mode) { return c.is_self_orthogonal(product(mode)); },
           py::arg("mode") = "euclidean")
      .def("min_weight", [](const LinearCode& c, std::uint64_t budget) { return weight_value(code_min_weight(c, budget)); },
           py::arg("budget") = kDefaultBudget)
      .def("contains", [](const LinearCode& c, const LinearCode& o) { return c.contains(o); })
      .def("to_json", [](const LinearCode& c) { return code_to_json(c).dump(); })
      .def(py::self == py::self)
      .def("__repr__", [](const LinearCode& c) {
        return "[" + std::to_string(c.length()) + "," + std::to_string(c.dimension()) + "]_" + std::to_string(c.field()->order());
      });

  py::class_<Curve>(m, "Curve")
      .def_static("from_json", [](const std::string& text) {
        Json j;
        try {
          j = Json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
          throw InputError(e.what());
        }
        return Curve{curve_spec_from_json(j)};
      })
      .def_static("manifest", [](const std::string& key) {
        const auto e = repro_curve(key);
        return Curve{CurveSpec{e->curve(), e, key}};
      })
      .def_property_readonly("label", [](const Curve& c) { return c.spec.label; })
      .def_property_readonly("family", [](const Curve& c) { return c.spec.curve->tag(); })
      .def_property_readonly("field", [](const Curve& c) { return hold(c.spec.curve->field()); })
      .def_property_readonly("genus", [](const Curve& c) { return c.spec.curve->genus(); })
      .def_property_readonly("point_count", [](const Curve& c) { return c.spec.curve->point_count(); })
      .def_property_readonly("n", [](const Curve& c) { return c.spec.eval->length(); })
      .def_property_readonly("semigroup", [](const Curve& c) { return c.spec.curve->semigroup(); })
      .def("is_castle", [](const Curve& c) { return c.spec.curve->is_castle(); })
      .def("code", [](const Curve& c, int mm) { return ag_build(c.spec.eval, mm).code; }, py::arg("m"))
      .def("report", [](const Curve& c, int mm, std::uint64_t budget) { return code_report(ag_build(c.spec.eval, mm, budget), c.spec.label).dump(); },
           py::arg("m"), py::arg("budget") = 0)
      .def("trace_code", [](const Curve& c, int mm, int q) { return ag_trace_basis(*c.spec.eval, mm, q).code(); }, py::arg("m"), py::arg("q"))
      .def("sequence", [](const Curve& c) { return Sequence{std::make_shared<const CodeSequence>(ag_sequence(c.spec.eval))}; });

  py::class_<Sequence>(m, "Sequence")
      .def_property_readonly("n", [](const Sequence& s) { return s.seq->length(); })
      .def_property_readonly("dimension_set", [](const Sequence& s) { return s.seq->dimension_set(); })
      .def_property_readonly("status", [](const Sequence& s) { return to_string(s.seq->certificate().status); })
      .def("code", [](const Sequence& s, int i) { return s.seq->code(i); })
      .def("self_orthogonality_range",
           [](const Sequence& s, const std::string& mode) { return ag_self_orthogonality_range(*s.seq, product(mode)).m; },
           py::arg("mode") = "euclidean")
      .def("construction",
           [](const Sequence& s, const std::string& which, int i, std::uint64_t budget) -> std::optional<std::string> {
             std::optional<QuantumParams> p;
             if (which == "A") p = construction_A(*s.seq, i, budget);
             else if (which == "B") p = construction_BC(*s.seq, i, TwistVariant::B, budget);
             else if (which == "C") p = construction_BC(*s.seq, i, TwistVariant::C, budget);
             else throw InputError("construction must be A, B or C");
             if (!p) return std::nullopt;
             return quantum_row(*p).dump();
           },
           py::arg("which"), py::arg("i"), py::arg("budget") = kDefaultBudget);

  m.def("css_self_orthogonal", [](const LinearCode& c, std::uint64_t budget) { return quantum_row(css_self_orthogonal(c, budget)).dump(); },
        py::arg("code"), py::arg("budget") = kDefaultBudget);
  m.def("css_hermitian", [](const LinearCode& c, std::uint64_t budget) { return quantum_row(css_hermitian(c, budget)).dump(); },
        py::arg("code"), py::arg("budget") = kDefaultBudget);
  m.def("css_nested",
        [](const LinearCode& c1, const LinearCode& c2, std::uint64_t budget) { return quantum_row(css_nested(c1, c2, budget)).dump(); },
        py::arg("c1"), py::arg("c2"), py::arg("budget") = kDefaultBudget);

  m.def("gv", [](int n, int k, int d, int q) {
    const auto g = gv_evaluate(n, k, d, q);
    Json j;
    j["status"] = g.status == GvStatus::NotApplicable ? "not-applicable" : to_string(g.status);
    j["d_max"] = g.d_max;
    j["lhs"] = g.lhs.str();
    j["rhs"] = g.rhs.str();
    return j.dump();
  });

  m.def("targets", [] {
    std::vector<std::string> out;
    for (const auto& t : repro_manifest()) out.push_back(t.id);
    return out;
  });
  m.def(
      "reproduce",
      [](const std::string& id, std::uint64_t budget) {
        const auto* t = repro_find(id);
        if (!t) throw InputError("unknown target '" + id + "'");
        Json rows = Json::array();
        for (const auto& r : repro_run(*t, budget)) {
          Json j;
          j["expected"] = r.expected.label();
          j["status"] = r.pass ? "PASS" : "FAIL";
          j["computed"] = r.computed ? quantum_row(*r.computed) : Json();
          j["reason"] = r.reason;
          rows.push_back(std::move(j));
        }
        return rows.dump();
      },
      py::arg("target"), py::arg("budget") = kDefaultBudget);
}
