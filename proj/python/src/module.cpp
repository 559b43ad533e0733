#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gliaison/errors.hpp"
#include "gliaison/kernel/parse.hpp"
#include "gliaison/liaison/linkage.hpp"
#include "gliaison/liaison/rao.hpp"
#include "gliaison/mcm/factorization.hpp"
#include "gliaison/scenario/scenarios.hpp"

namespace py = pybind11;
using namespace gliaison;

namespace {

// Context ring with the variable names kept for printing and re-parsing.
struct PyRing {
  Ring ring;
  std::vector<std::string> names;
};

PyRing make_ring(std::vector<std::string> names, std::uint32_t p, const std::optional<std::string>& modulus) {
  RingPtr R = PolynomialRing::create(p, names);
  if (!modulus) return PyRing{Ring(R), std::move(names)};
  return PyRing{Ring(R, parse_polynomial(R, *modulus)), std::move(names)};
}

std::vector<Polynomial> parse_all(const PyRing& r, const std::vector<std::string>& gens) {
  std::vector<Polynomial> out;
  for (auto& g : gens) out.push_back(parse_polynomial(r.ring.ambient(), g));
  return out;
}

std::vector<std::string> generator_strings(const GradedIdeal& I) {
  std::vector<std::string> out;
  for (auto& g : I.generators()) out.push_back(g.to_string());
  return out;
}

std::map<std::pair<int, int>, int> betti_dict(const BettiTable& b) {
  return b.entries();
}

py::dict certificate_dict(const LinkageCertificate& c) {
  py::dict d;
  d["kind"] = c.kind_name();
  d["valid"] = c.valid;
  d["failure"] = c.failure;
  d["containment"] = c.containment;
  d["bidual"] = c.bidual;
  d["degree_additive"] = c.degree_additive;
  d["intersection_equal"] = c.intersection_equal;
  d["quotient_saturated"] = c.quotient_saturated;
  return d;
}

py::object json_to_python(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

ScenarioOptions options(std::uint64_t seed, int max_degree, int retries) {
  ScenarioOptions o;
  o.seed = seed;
  o.max_degree = max_degree;
  o.retries = retries;
  return o;
}

}  // namespace

PYBIND11_MODULE(_gliaison, m) {
  m.doc() = "Liaison, Rao modules and ACM sheaves over GF(p)";

  static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
  static py::exception<GenericityError> genericity_error(m, "GenericityError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      parse_error(e.what());
    } catch (const GenericityError& e) {
      genericity_error(e.what());
    } catch (const UsageError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const DomainError& e) {
      PyErr_SetString(PyExc_ArithmeticError, e.what());
    }
  });

  py::class_<PyRing>(m, "Ring")
      .def(py::init(&make_ring), py::arg("variables"), py::arg("p") = 32003, py::arg("modulus") = py::none())
      .def_property_readonly("variables", [](const PyRing& r) { return r.names; })
      .def_property_readonly("characteristic", [](const PyRing& r) { return r.ring.field().characteristic(); })
      .def_property_readonly("modulus",
                             [](const PyRing& r) -> std::optional<std::string> {
                               if (!r.ring.has_modulus()) return std::nullopt;
                               return r.ring.modulus().to_string();
                             })
      .def("hilbert_function",
           [](const PyRing& r, const std::vector<std::string>& gens, int n) {
             return GradedIdeal(r.ring.ambient(), parse_all(r, gens)).hilbert_function(n);
           },
           py::arg("generators"), py::arg("n"), "dim of (P/I)_n")
      .def("subscheme",
           [](const PyRing& r, const std::vector<std::string>& gens) {
             return Subscheme::from_generators(r.ring, parse_all(r, gens));
           },
           py::arg("generators"), "saturate the ideal (with the modulus) and wrap it")
      .def("__repr__", [](const PyRing& r) { return "<Ring " + r.ring.describe() + ">"; });

  py::class_<Subscheme>(m, "Subscheme")
      .def_property_readonly("generators", [](const Subscheme& s) { return generator_strings(s.ideal()); })
      .def_property_readonly("degree", &Subscheme::degree)
      .def_property_readonly("dimension", &Subscheme::dimension)
      .def_property_readonly("codimension", &Subscheme::codimension)
      .def_property_readonly("betti", [](const Subscheme& s) { return betti_dict(s.betti()); },
                             "{(i, j): beta_ij} of P/I over P")
      .def_property_readonly("betti_table", [](const Subscheme& s) { return s.betti().to_string(); })
      .def_property_readonly("is_acm", [](const Subscheme& s) { return is_acm(s); })
      .def_property_readonly("is_ag", [](const Subscheme& s) { return is_ag(s); })
      .def_property_readonly("is_ci", [](const Subscheme& s) { return is_ci(s) || is_ci_in_context(s); })
      .def_property_readonly("is_unmixed", [](const Subscheme& s) { return is_unmixed(s); })
      .def("rao", [](const Subscheme& s) { return rao_module(s).hilbert; }, "Hilbert function of the Rao module")
      .def("__eq__", [](const Subscheme& a, const Subscheme& b) { return a.ideal() == b.ideal(); })
      .def("__repr__", [](const Subscheme& s) { return "<Subscheme " + s.describe() + ">"; });

  m.def("link",
        [](const Subscheme& c, const Subscheme& y) {
          LinkResult r = link(c, y);
          return py::make_tuple(r.residual, certificate_dict(r.certificate));
        },
        py::arg("c"), py::arg("y"), "residual I_Y : I_C and its certificate");
  m.def("ci_link",
        [](const Subscheme& c, int a, int b, std::uint64_t seed, int retries) {
          CiLink l = ci_link_in_context(c, a, b, seed, retries);
          return py::make_tuple(l.y, l.residual, certificate_dict(l.certificate));
        },
        py::arg("c"), py::arg("a"), py::arg("b"), py::arg("seed") = 1, py::arg("retries") = 16,
        "link by a random complete intersection of type (a, b) in the context");

  m.def("mf_verify",
        [](const PyRing& r, const std::vector<std::vector<std::string>>& phi, const std::string& f) {
          if (phi.empty()) throw UsageError("empty matrix");
          // reuse the input grammar for degree inference
          std::ostringstream doc;
          doc << "ring " << r.ring.field().characteristic();
          for (auto& n : r.names) doc << ' ' << n;
          doc << "\nmatrix phi " << phi.size() << ' ' << phi[0].size() << '\n';
          for (auto& row : phi) {
            for (std::size_t j = 0; j < row.size(); ++j) doc << (j ? ", " : "") << row[j];
            doc << '\n';
          }
          InputDocument parsed = parse_input(doc.str());
          MatrixFactorization mf = mf_complete(parsed.matrices.at("phi"), parse_polynomial(parsed.ring, f));
          MfReport rep = mf_verify(mf);
          py::dict d;
          d["valid"] = rep.valid;
          d["rank"] = rep.rank;
          py::list checks;
          for (auto& c : rep.checks) checks.append(py::make_tuple(c.name, c.passed, c.detail));
          d["checks"] = checks;
          std::vector<std::vector<std::string>> psi;
          const Matrix& p = mf.psi.matrix();
          for (std::size_t i = 0; i < p.rows(); ++i) {
            psi.emplace_back();
            for (std::size_t j = 0; j < p.cols(); ++j) psi.back().push_back(p(i, j).to_string());
          }
          d["psi"] = psi;
          return d;
        },
        py::arg("ring"), py::arg("phi"), py::arg("f"), "complete phi to a matrix factorization of f and verify it");

  m.def("scenarios", [] {
    std::vector<std::string> out;
    for (auto& s : scenario_list()) out.push_back(s.name);
    return out;
  });
  m.def("run_scenario",
        [](const std::string& name, std::uint64_t seed, int max_degree, int retries) {
          ScenarioReport r;
          {
            py::gil_scoped_release release;
            r = run_scenario(name, options(seed, max_degree, retries));
          }
          return json_to_python(r.to_json());
        },
        py::arg("name"), py::arg("seed") = 1, py::arg("max_degree") = 10, py::arg("retries") = 16,
        "the JSON report as a dict");
  m.def("analyze",
        [](const std::string& text, std::uint64_t seed, int max_degree) {
          InputDocument doc = parse_input(text);
          return json_to_python(analyze_document(doc, options(seed, max_degree, 16)).to_json());
        },
        py::arg("text"), py::arg("seed") = 1, py::arg("max_degree") = 10);
}
