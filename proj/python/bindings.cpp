#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "knotcert/acceptance.hpp"
#include "knotcert/catalog.hpp"
#include "knotcert/classify.hpp"
#include "knotcert/hfk.hpp"
#include "knotcert/invariants.hpp"

namespace py = pybind11;
using namespace knotcert;

namespace {

// {exponent: coeff}; Jones exponents are halves of the stored ones.
py::dict poly_dict(const LaurentPoly& p) {
  py::dict d;
  for (const auto& [e, c] : p.terms()) {
    py::object key;
    if (p.nvars() == 2) key = py::make_tuple(e[0], e[1]);
    else if (p.scale() == 2) key = py::float_(e[0] / 2.0);
    else key = py::int_(e[0]);
    d[key] = c;
  }
  return d;
}

PDCode resolve(const std::string& spec) {
  if (spec.rfind("closure:", 0) == 0) return braid_closure(BraidWord::parse(spec.substr(8)));
  if (spec.rfind("X[", 0) == 0 || spec == "O") return parse_pd(spec);
  return catalog(spec);
}

py::tuple mat(const Mat2& m) { return py::make_tuple(m.a, m.b, m.c, m.d); }

CaseKind case_kind(const std::string& c) {
  if (c == "unknot") return CaseKind::Unknot;
  if (c == "torus") return CaseKind::Torus;
  if (c == "whitehead") return CaseKind::Whitehead;
  throw py::value_error("unknown case " + c);
}

}  // namespace

PYBIND11_MODULE(_knotcert, m) {
  m.doc() = "3-braid enumeration and knot invariants";

  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<CatalogError>(m, "CatalogError", PyExc_ValueError);
  py::register_exception<PDError>(m, "PDError", PyExc_ValueError);

  m.def("reduce_word", [](const std::string& w) { return BraidWord::parse(w).str(); });
  m.def("rho", [](const std::string& w) { return mat(rho(BraidWord::parse(w))); },
        "rho image as (a, b, c, d)");
  m.def("exponent_sum", [](const std::string& w) { return exponent_sum(BraidWord::parse(w)); });
  m.def("matrix_to_word", [](long long a, long long b, long long c, long long d) {
    return matrix_to_word(Mat2{a, b, c, d}).str();
  });
  m.def("same_element", [](const std::string& u, const std::string& v) {
    return same_element(BraidWord::parse(u), BraidWord::parse(v));
  });
  m.def("same_class", [](const std::string& u, const std::string& v) {
    return same_class(BraidWord::parse(u), BraidWord::parse(v));
  });
  m.def("canonical_word", [](const std::string& w) { return canonical_word(BraidWord::parse(w)).str(); });

  // Knot specs: a catalog name, a PD code, or "closure:<word>".
  m.def("pd", [](const std::string& spec) { return emit_pd(resolve(spec)); });
  m.def("jones", [](const std::string& spec, int budget) { return poly_dict(jones(resolve(spec), budget)); },
        py::arg("spec"), py::arg("budget") = kBracketBudget);
  m.def("alexander", [](const std::string& spec) { return poly_dict(alexander_pd(resolve(spec))); });
  m.def("determinant", [](const std::string& spec, int budget) { return determinant(resolve(spec), budget); },
        py::arg("spec"), py::arg("budget") = kBracketBudget);
  m.def("homfly", [](const std::string& spec, int budget) { return poly_dict(homfly(resolve(spec), budget)); },
        py::arg("spec"), py::arg("budget") = 16);
  m.def("h1_from_trace", [](const std::string& w) { return h1_from_trace(BraidWord::parse(w)); });
  m.def("unknot_certificate", [](const std::string& spec) {
    auto c = unknot_certificate(resolve(spec));
    return py::make_tuple(c.consistent, c.witness);
  });
  m.def("tau_cable_unknot", [](const std::string& w) {
    return emit_pd(drop_last_cycle(tau_cable_unknot(BraidWord::parse(w))));
  });

  m.def("classify", [](const std::string& c, long long n_window, long long q_bound) {
          Certificate cert;
          if (c == "unknot") cert = enumerate_unknot_case(n_window).cert;
          else if (c == "torus") cert = enumerate_torus_case(q_bound).cert;
          else if (c == "whitehead") cert = enumerate_whitehead_case().cert;
          else throw py::value_error("unknown case " + c);
          return cert.to_json().dump();
        },
        "certificate JSON text", py::arg("case"), py::arg("n_window") = 6, py::arg("q_bound") = 50);
  m.def("replay", [](const std::string& text) {
    return replay(Certificate::from_json(nlohmann::ordered_json::parse(text))).to_json().dump();
  });
  m.def("braid_to_knot", [](const std::string& c, const std::string& w) {
    return braid_to_knot(case_kind(c), BraidWord::parse(w));
  });

  m.def("thin_profiles", [](int total, bool fibered, std::optional<int> genus, bool strict, bool filter) {
          ThinQuery q{total, fibered, strict, genus, filter};
          std::vector<std::vector<int>> out;
          for (const auto& p : enumerate_thin_profiles(q)) out.push_back(p.dims);
          return out;
        },
        py::arg("total"), py::arg("fibered"), py::arg("genus") = py::none(), py::arg("strict") = false,
        py::arg("alexander_filter") = true);

  m.def("verify", []() {
    std::vector<py::tuple> out;
    for (const auto& r : run_acceptance(AcceptanceConfig{})) out.push_back(py::make_tuple(r.id, r.title, r.pass));
    return out;
  });
}
