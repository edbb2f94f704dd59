#include "refsev/chrecursion.hpp"
#include "refsev/cli.hpp"
#include "refsev/engines.hpp"
#include "refsev/floordiagrams.hpp"
#include "refsev/gfseries.hpp"
#include "refsev/invariants.hpp"
#include "refsev/templates.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace refsev;

namespace {

py::int_ to_py(const BigInt& v) { return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10)); }

py::object to_py(const Rational& v) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(boost::multiprecision::numerator(v)), to_py(boost::multiprecision::denominator(v)));
}

// Polynomials cross the boundary as {half_exponent: coefficient}.
py::dict to_py(const LaurentPoly& p) {
  py::dict d;
  for (const auto& [e, c] : p.terms()) d[py::int_(e)] = to_py(c);
  return d;
}

py::dict to_py(const RatLaurent& p) {
  py::dict d;
  for (const auto& [e, c] : p.terms()) d[py::int_(e)] = to_py(c);
  return d;
}

LaurentPoly from_py(const py::dict& d) {
  std::vector<LaurentPoly::Term> terms;
  for (auto item : d) {
    const int e = item.first.cast<int>();
    terms.emplace_back(e, BigInt(py::str(item.second).cast<std::string>()));
  }
  return LaurentPoly::from_terms(std::move(terms));
}

Surface make_surface(const std::string& kind, int d, int m, int c) {
  Surface s;
  if (kind == "p2") {
    s = Surface::p2(d);
  } else if (kind == "hirzebruch") {
    s = Surface::hirzebruch(m, c, d);
  } else if (kind == "p11m") {
    s = Surface::wps(m, d);
  } else {
    throw std::invalid_argument("unknown surface '" + kind + "'");
  }
  s.validate();
  return s;
}

}  // namespace

PYBIND11_MODULE(refsev, m) {
  m.doc() = "Refined Severi degrees of P2, Hirzebruch surfaces and P(1,1,m)";

  static py::exception<DomainError> domain_error(m, "DomainError", PyExc_ValueError);
  static py::exception<ConsistencyError> consistency_error(m, "ConsistencyError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DomainError& e) {
      py::set_error(domain_error, e.what());
    } catch (const ConsistencyError& e) {
      py::set_error(consistency_error, e.what());
    }
  });

  m.def(
      "severi",
      [](int d, long delta, const std::string& surface, int m_, int c, const std::string& engine) {
        return to_py(severi_by(parse_engine(engine), make_surface(surface, d, m_, c), delta));
      },
      py::arg("d"), py::arg("delta"), py::arg("surface") = "p2", py::arg("m") = 1, py::arg("c") = 0,
      py::arg("engine") = "ch", "Refined Severi degree as {half_exponent: coefficient}.");

  m.def(
      "relative_severi",
      [](int d, long delta, const std::vector<int>& alpha, const std::vector<int>& beta, const std::string& surface,
         int m_, int c) {
        return to_py(relative_severi(CHKey(make_surface(surface, d, m_, c), TangencySeq(alpha), TangencySeq(beta), delta)));
      },
      py::arg("d"), py::arg("delta"), py::arg("alpha"), py::arg("beta"), py::arg("surface") = "p2", py::arg("m") = 1,
      py::arg("c") = 0);

  m.def(
      "welschinger",
      [](int d, long delta, const std::string& surface, int m_, int c) {
        return to_py(welschinger(make_surface(surface, d, m_, c), delta));
      },
      py::arg("d"), py::arg("delta"), py::arg("surface") = "p2", py::arg("m") = 1, py::arg("c") = 0);

  m.def(
      "classical",
      [](int d, long delta, const std::string& surface, int m_, int c) {
        return to_py(classical(make_surface(surface, d, m_, c), delta));
      },
      py::arg("d"), py::arg("delta"), py::arg("surface") = "p2", py::arg("m") = 1, py::arg("c") = 0);

  m.def(
      "irreducible_severi", [](int d, long delta) { return to_py(irreducible_severi(d, delta)); }, py::arg("d"),
      py::arg("delta"));

  m.def(
      "templates",
      [](int delta) {
        py::list out;
        for (const Template& t : enumerate_templates(delta)) {
          const TemplateStats st = template_stats(t);
          py::list edges;
          for (const Edge& e : t.edges) edges.append(py::make_tuple(e.i, e.j, e.w));
          py::dict row;
          row["edges"] = edges;
          row["length"] = st.length;
          row["cogenus"] = st.cogenus;
          row["mult"] = to_py(st.mult);
          row["eps0"] = st.eps0;
          row["eps1"] = st.eps1;
          row["kappa"] = st.kappa;
          row["kmin"] = st.kmin;
          out.append(row);
        }
        return out;
      },
      py::arg("delta"));

  m.def(
      "diagrams",
      [](int d, long delta, const std::string& surface, int m_, int c) {
        const Surface s = make_surface(surface, d, m_, c);
        const auto [fc, fm] = floor_parameters(s);
        py::list out;
        for (const DiagramRecord& r : enumerate_diagrams(s, delta)) {
          py::dict row;
          row["diagram"] = r.diagram.to_string();
          row["cogenus"] = diagram_cogenus(r.diagram, fc, fm);
          row["mult"] = to_py(diagram_mult(r.diagram));
          row["nu"] = to_py(diagram_markings(r.diagram, s));
          out.append(row);
        }
        return out;
      },
      py::arg("d"), py::arg("delta"), py::arg("surface") = "p2", py::arg("m") = 1, py::arg("c") = 0);

  m.def(
      "node_polynomial",
      [](int delta, const std::string& engine) {
        const auto poly = node_polynomial_p2(delta, parse_engine(engine));
        py::list out;
        for (const RatLaurent& c : poly.coeffs()) out.append(to_py(c));
        return out;
      },
      py::arg("delta"), py::arg("engine") = "template",
      "Coefficients of d^0, d^1, ... of the plane node polynomial.");

  m.def(
      "refined_invariant_gf",
      [](int d, int delta_max, const std::string& surface, int m_, int c) {
        ChernData data;
        if (surface == "p2") {
          data = p2_data(d);
        } else if (surface == "hirzebruch") {
          data = hirzebruch_data(m_, c, d);
        } else {
          throw std::invalid_argument("generating functions need surface p2 or hirzebruch");
        }
        py::list out;
        for (const LaurentPoly& p : refined_invariant_gf(data, delta_max)) out.append(to_py(p));
        return out;
      },
      py::arg("d"), py::arg("delta_max"), py::arg("surface") = "p2", py::arg("m") = 0, py::arg("c") = 0);

  m.def(
      "p11m_prediction",
      [](int d, int m_, int delta_max) {
        py::list out;
        for (const LaurentPoly& p : p11m_prediction(d, m_, delta_max)) out.append(to_py(p));
        return out;
      },
      py::arg("d"), py::arg("m"), py::arg("delta_max"));

  m.def(
      "render", [](const py::dict& poly) { return to_string(from_py(poly)); }, py::arg("poly"),
      "Text form, e.g. 'y^-1 + 10 + y'.");

  m.def(
      "evaluate", [](const py::dict& poly, int y) { return to_py(eval_special(from_py(poly), y)); }, py::arg("poly"),
      py::arg("y"), "Exact value at y = 1 or y = -1.");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int status = run_cli(args, out, err);
        return py::make_tuple(status, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line front end; returns (status, stdout, stderr).");
}
