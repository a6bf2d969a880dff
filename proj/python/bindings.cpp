#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "mtcodes/audit.hpp"
#include "mtcodes/code.hpp"
#include "mtcodes/fixtures.hpp"
#include "mtcodes/literal.hpp"
#include "mtcodes/mt.hpp"
#include "mtcodes/report.hpp"
#include "mtcodes/specfile.hpp"

namespace py = pybind11;
using namespace mtc;

namespace {

std::vector<std::vector<unsigned>> matrix_rows(const Matrix& m) {
  std::vector<std::vector<unsigned>> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.emplace_back(m.row(r).begin(), m.row(r).end());
  return out;
}

Poly poly_from(const Field& f, const std::vector<unsigned>& coeffs) {
  std::vector<Code> c;
  for (unsigned v : coeffs) {
    if (v >= f.order()) throw Error(ErrorCode::IndexOutOfRange, "element code " + std::to_string(v));
    c.push_back(static_cast<Code>(v));
  }
  return Poly(f, std::move(c));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Multi-twisted codes over small finite fields";

  static py::exception<Error> mtc_error(m, "MtcError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = mtc_error;
      py::object inst = exc(e.what());
      inst.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(exc.ptr(), inst.ptr());
    }
  });

  py::class_<Field>(m, "Field")
      .def_static("prime", &Field::prime, py::arg("p"))
      .def_static("make", &Field::make, py::arg("p"), py::arg("degree"), py::arg("modulus"))
      .def_property_readonly("characteristic", &Field::characteristic)
      .def_property_readonly("degree", &Field::degree)
      .def_property_readonly("order", &Field::order)
      .def_property_readonly("modulus", &Field::modulus)
      .def_property_readonly("name", &Field::name)
      .def("omega", &Field::omega)
      .def("primitive", &Field::primitive)
      .def("add", &Field::add)
      .def("sub", &Field::sub)
      .def("mul", &Field::mul)
      .def("inv", &Field::inv)
      .def("pow", &Field::pow)
      .def("coeffs", &Field::coeffs)
      .def("format", &Field::format)
      .def("parse", [](const Field& f, std::string_view s) { return parse_element(f, s); })
      .def("__eq__", &Field::operator==)
      .def("__repr__", [](const Field& f) { return "<Field " + f.name() + ">"; });

  py::class_<Poly>(m, "Poly")
      .def(py::init(&poly_from), py::arg("field"), py::arg("coeffs"))
      .def_static("parse", [](const Field& f, std::string_view s) { return parse_poly(f, s); })
      .def_property_readonly("field", &Poly::field)
      .def_property_readonly("coeffs", [](const Poly& p) { return std::vector<unsigned>(p.coeffs().begin(), p.coeffs().end()); })
      .def_property_readonly("degree", &Poly::degree)
      .def("monic", &Poly::monic)
      .def("__add__", &Poly::operator+)
      .def("__sub__", py::overload_cast<const Poly&>(&Poly::operator-, py::const_))
      .def("__mul__", &Poly::operator*)
      .def("__eq__", &Poly::operator==)
      .def("__str__", &Poly::to_string)
      .def("__repr__", [](const Poly& p) { return "<Poly " + p.to_string() + ">"; });

  m.def("gcd", [](const Poly& a, const Poly& b) { return gcd(a, b); });
  m.def("divmod", [](const Poly& a, const Poly& b) {
    const DivRem d = divrem(a, b);
    return py::make_tuple(d.quotient, d.remainder);
  });

  py::class_<MTSpec>(m, "MTSpec")
      .def_property_readonly("field", &MTSpec::field)
      .def_property_readonly("n", &MTSpec::n)
      .def_property_readonly("ell", &MTSpec::ell)
      .def_property_readonly("rho", &MTSpec::rho)
      .def_property_readonly("lengths", &MTSpec::lengths)
      .def_property_readonly("shifts", [](const MTSpec& s) { return std::vector<unsigned>(s.shifts().begin(), s.shifts().end()); })
      .def_property_readonly("generators", &MTSpec::generators)
      .def("__str__", [](const MTSpec& s) { return write_spec(s); });

  m.def("parse_spec", &parse_spec, py::arg("text"));
  m.def("load_spec", &load_spec, py::arg("path"));
  m.def("write_spec", &write_spec, py::arg("spec"), py::arg("comment") = "");
  m.def("dual_spec", &dual_spec);

  m.def("generator_matrix", [](const MTSpec& s) { return matrix_rows(expand(s).basis()); },
        "Reduced row echelon basis of the expanded code");
  m.def("dual_matrix", [](const MTSpec& s) { return matrix_rows(mt_dual(s).basis()); });
  m.def("hull_matrix", [](const MTSpec& s) { return matrix_rows(hull(expand(s)).basis()); });
  m.def("gram_matrix", [](const MTSpec& s) { return matrix_rows(gram(expand(s))); });
  m.def("dimension", [](const MTSpec& s) { return expand(s).dimension(); });
  m.def("formula_dimension", [](const MTSpec& s) { return dimension_formula(s).dimension; });
  m.def("determinantal_divisor", [](const MTSpec& s) { return dimension_formula(s).divisor; });
  m.def("block_generators", [](const MTSpec& s) { return coprimality_condition(s).generators; });
  m.def("quotients_coprime", [](const MTSpec& s) { return coprimality_condition(s).holds; });
  m.def("lcd_verdict", [](const MTSpec& s) { return to_string(lcd_verdict(s).kind); });
  m.def("is_lcd", [](const MTSpec& s) { return is_lcd(expand(s)); });
  m.def("legacy_lcd_condition", &legacy_lcd_condition);
  m.def("min_distance", [](const MTSpec& s, std::uint64_t cap, unsigned threads) {
    return min_distance(expand(s), cap, threads);
  }, py::arg("spec"), py::arg("cap") = kDefaultDistanceCap, py::arg("threads") = 0);

  m.def("analyze_machine", [](const MTSpec& s, bool mindist, bool dual, std::uint64_t cap) {
    AnalyzeOptions o;
    o.min_distance = mindist;
    o.dual = dual;
    o.cap = cap;
    return parse_machine(render_machine(analyze(s, o)));
  }, py::arg("spec"), py::arg("mindist") = false, py::arg("dual") = false, py::arg("cap") = kDefaultDistanceCap,
        "Analysis as a key -> value dict");
  m.def("analyze_text", [](const MTSpec& s, bool mindist, bool dual) {
    AnalyzeOptions o;
    o.min_distance = mindist;
    o.dual = dual;
    return render_text(analyze(s, o));
  }, py::arg("spec"), py::arg("mindist") = false, py::arg("dual") = false);

  m.def("fixture_names", [] {
    std::vector<std::string> out;
    for (const Fixture& f : fixtures()) out.push_back(f.name);
    return out;
  });
  m.def("fixture_spec", [](const std::string& name) {
    const Fixture* f = find_fixture(name);
    if (!f) throw Error(ErrorCode::UsageError, "unknown fixture " + name);
    return fixture_spec(*f);
  });
  m.def("run_suite", [](std::optional<std::string> tamper) {
    SuiteOptions o;
    o.tamper = std::move(tamper);
    const SuiteOutcome out = run_suite(o);
    py::dict d;
    for (const FixtureOutcome& f : out.fixtures) {
      py::list failed;
      for (const Check& c : f.checks)
        if (!c.passed) failed.append(py::make_tuple(c.claim, c.detail));
      d[py::str(f.name)] = py::make_tuple(f.checks.size(), failed);
    }
    return d;
  }, py::arg("tamper") = py::none(), "name -> (number of checks, [(failed claim, detail)])");

  m.def("run_audit", [](std::size_t trials, std::uint64_t seed, std::vector<unsigned> orders, unsigned threads) {
    AuditOptions o;
    o.trials = trials;
    o.seed = seed;
    o.threads = threads;
    o.bounds.orders = std::move(orders);
    const AuditSummary s = run_audit(o);
    py::dict d;
    d["trials"] = s.trials;
    d["formula_agreements"] = s.formula_agreements;
    d["coprime_cases"] = s.coprime_cases;
    d["verdict_agreements"] = s.verdict_agreements;
    d["verdict_lcd"] = s.verdict_lcd;
    d["legacy_lcd"] = s.legacy_lcd;
    d["exact_lcd"] = s.exact_lcd;
    d["direct_sums"] = s.direct_sums;
    d["dual_coprime_cases"] = s.dual_coprime_cases;
    d["coprime_mismatches"] = s.coprime_mismatches;
    return d;
  }, py::arg("trials") = 1000, py::arg("seed") = 42, py::arg("orders") = std::vector<unsigned>{2, 3, 4, 5},
        py::arg("threads") = 0);
}
