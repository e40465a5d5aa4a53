#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "gossamer/discrete_sum.hpp"
#include "gossamer/errors.hpp"
#include "gossamer/gossamer_number.hpp"
#include "gossamer/poly_calculus.hpp"
#include "gossamer/polynomial.hpp"
#include "gossamer/report.hpp"
#include "gossamer/riemann.hpp"
#include "gossamer/step_smoothing.hpp"

namespace py = pybind11;
using namespace gossamer;

namespace {

py::object to_fraction(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(r.str());
}

// Accepts int, fractions.Fraction or text such as "3/4".
Rational to_rational(const py::handle& value) {
  if (py::isinstance<py::bool_>(value)) throw py::type_error("expected a rational, got bool");
  if (py::isinstance<py::int_>(value) || py::isinstance<py::str>(value)) return Rational::parse(py::str(value).cast<std::string>());
  if (py::hasattr(value, "numerator") && py::hasattr(value, "denominator")) {
    return Rational::parse(py::str(value.attr("numerator")).cast<std::string>() + "/" +
                           py::str(value.attr("denominator")).cast<std::string>());
  }
  throw py::type_error("expected int, Fraction or rational text");
}

GossamerNumber to_gossamer(const py::handle& value) {
  if (py::isinstance<GossamerNumber>(value)) return value.cast<GossamerNumber>();
  if (py::isinstance<py::str>(value)) return GossamerNumber::parse(value.cast<std::string>());
  return GossamerNumber(to_rational(value));
}

Polynomial to_polynomial(const py::handle& value) {
  if (py::isinstance<Polynomial>(value)) return value.cast<Polynomial>();
  return Polynomial::parse(value.cast<std::string>());
}

std::vector<Rational> to_rationals(const py::iterable& values) {
  std::vector<Rational> out;
  for (const auto& v : values) out.push_back(to_rational(v));
  return out;
}

BridgeShape to_shape(const std::string& name) {
  const auto shape = parse_bridge_shape(name);
  if (!shape) throw DomainError("unknown bridge shape '" + name + "'");
  return *shape;
}

py::object json_to_python(const std::string& text) { return py::module_::import("json").attr("loads")(text); }

}  // namespace

PYBIND11_MODULE(_gossamer, m) {
  m.doc() = "Exact gossamer-number arithmetic and calculus";

  // Translators run newest first, so the base class is registered before its subclasses.
  auto& error = py::register_exception<Error>(m, "GossamerError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<DomainError>(m, "DomainError", error.ptr());
  py::register_exception<ZeroMagnitude>(m, "ZeroMagnitude", error.ptr());
  py::register_exception<InfinitePartPresent>(m, "InfinitePartPresent", error.ptr());
  py::register_exception<DivisionByZero>(m, "DivisionByZero", PyExc_ZeroDivisionError);

  py::class_<GossamerNumber>(m, "GossamerNumber")
      .def(py::init([](const py::object& value) { return to_gossamer(value); }), py::arg("value") = 0)
      .def_static("omega", [](const py::object& e) { return GossamerNumber::omega(to_rational(e)); }, py::arg("exponent") = 1)
      .def_static("parse", &GossamerNumber::parse)
      .def_property_readonly("terms",
                             [](const GossamerNumber& g) {
                               py::list out;
                               for (const auto& t : g.terms()) out.append(py::make_tuple(to_fraction(t.exponent), to_fraction(t.coefficient)));
                               return out;
                             })
      .def_property_readonly("truncated", &GossamerNumber::truncated)
      .def_property_readonly("truncation_floor", [](const GossamerNumber& g) { return to_fraction(g.truncation_floor()); })
      .def("is_zero", &GossamerNumber::is_zero)
      .def("classify", [](const GossamerNumber& g) { return to_string(g.classify()); })
      .def("standard_part", [](const GossamerNumber& g) { return to_fraction(g.standard_part()); })
      .def("realize", [](const GossamerNumber& g, const py::object& floor) { return g.realize(to_rational(floor)); })
      .def("leading_exponent",
           [](const GossamerNumber& g) -> py::object {
             const auto e = g.leading_exponent();
             return e ? to_fraction(*e) : py::none();
           })
      .def("__str__", &GossamerNumber::str)
      .def("__repr__", [](const GossamerNumber& g) { return "GossamerNumber('" + g.str() + "')"; })
      .def("__hash__", [](const GossamerNumber& g) { return py::hash(py::str(g.str())); })
      .def("__neg__", [](const GossamerNumber& a) { return -a; })
      .def("__abs__", &GossamerNumber::abs)
      .def("__pow__", [](const GossamerNumber& a, unsigned e) { return a.pow(e); })
      .def("__add__", [](const GossamerNumber& a, const py::object& b) { return a + to_gossamer(b); })
      .def("__radd__", [](const GossamerNumber& a, const py::object& b) { return to_gossamer(b) + a; })
      .def("__sub__", [](const GossamerNumber& a, const py::object& b) { return a - to_gossamer(b); })
      .def("__rsub__", [](const GossamerNumber& a, const py::object& b) { return to_gossamer(b) - a; })
      .def("__mul__", [](const GossamerNumber& a, const py::object& b) { return a * to_gossamer(b); })
      .def("__rmul__", [](const GossamerNumber& a, const py::object& b) { return to_gossamer(b) * a; })
      .def("__truediv__", [](const GossamerNumber& a, const py::object& b) { return a / to_gossamer(b); })
      .def("__rtruediv__", [](const GossamerNumber& a, const py::object& b) { return to_gossamer(b) / a; })
      .def("__eq__", [](const GossamerNumber& a, const py::object& b) { return a == to_gossamer(b); })
      .def("__lt__", [](const GossamerNumber& a, const py::object& b) { return a < to_gossamer(b); })
      .def("__le__", [](const GossamerNumber& a, const py::object& b) { return a <= to_gossamer(b); })
      .def("__gt__", [](const GossamerNumber& a, const py::object& b) { return a > to_gossamer(b); })
      .def("__ge__", [](const GossamerNumber& a, const py::object& b) { return a >= to_gossamer(b); });

  m.def("omega", [](const py::object& e) { return GossamerNumber::omega(to_rational(e)); }, py::arg("exponent") = 1);
  m.def(
      "inverse",
      [](const py::object& a, std::optional<std::size_t> order) {
        return order ? inverse(to_gossamer(a), *order) : inverse(to_gossamer(a));
      },
      py::arg("a"), py::arg("order") = py::none());
  m.def("much_less", [](const py::object& a, const py::object& b) { return much_less(to_gossamer(a), to_gossamer(b)); });
  m.def("asymptotic_sim", [](const py::object& a, const py::object& b) { return asymptotic_sim(to_gossamer(a), to_gossamer(b)); });
  m.def("infinitely_close", [](const py::object& a, const py::object& b) { return infinitely_close(to_gossamer(a), to_gossamer(b)); });
  m.def("bounded_series_sum", [](const py::iterable& coeffs, const py::object& h, std::size_t order) {
    return bounded_series_sum(to_rationals(coeffs), to_gossamer(h), order);
  });

  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init([](const std::string& text) { return Polynomial::parse(text); }), py::arg("text") = "0")
      .def_static("from_coefficients", [](const py::iterable& c) { return Polynomial(to_rationals(c)); })
      .def_property_readonly("coefficients",
                             [](const Polynomial& p) {
                               py::list out;
                               for (const auto& c : p.coefficients()) out.append(to_fraction(c));
                               return out;
                             })
      .def_property_readonly("degree", &Polynomial::degree)
      .def("__call__",
           [](const Polynomial& p, const py::object& x) -> py::object {
             if (py::isinstance<GossamerNumber>(x) || py::isinstance<py::str>(x)) return py::cast(eval(p, to_gossamer(x)));
             return to_fraction(eval(p, to_rational(x)));
           })
      .def("str", &Polynomial::str, py::arg("variable") = 'x')
      .def("__str__", [](const Polynomial& p) { return p.str(); })
      .def("__repr__", [](const Polynomial& p) { return "Polynomial('" + p.str() + "')"; })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self == py::self);

  m.def("derivative", [](const py::object& p) { return derivative(to_polynomial(p)); });
  m.def("antiderivative", [](const py::object& p) { return antiderivative(to_polynomial(p)); });
  m.def("definite_integral", [](const py::object& p, const py::object& a, const py::object& b) {
    return definite_integral(to_polynomial(p), to_gossamer(a), to_gossamer(b));
  });
  m.def("ftc_inverse_check", [](const py::object& p, const py::object& a, const py::object& x, const py::object& h) {
    const auto c = ftc_inverse_check(to_polynomial(p), to_rational(a), to_rational(x), to_gossamer(h));
    return py::dict(py::arg("difference_quotient") = c.difference_quotient, py::arg("recovered") = to_fraction(c.recovered),
                    py::arg("equal") = c.equal);
  });
  m.def("order_swap_demo", [](const py::object& p, const py::object& x, const py::object& h) {
    const auto s = order_swap_demo(to_polynomial(p), to_rational(x), to_gossamer(h));
    return py::dict(py::arg("h_first") = s.h_first, py::arg("n_first") = s.n_first, py::arg("differ") = s.differ);
  });

  m.def("bernoulli_number", [](unsigned n) { return to_fraction(bernoulli_number(n)); });
  m.def("faulhaber", &faulhaber);
  m.def(
      "uniform_riemann_sum",
      [](const py::object& f, const py::object& nu) {
        return uniform_riemann_sum(to_polynomial(f), nu.is_none() ? GossamerNumber::omega() : to_gossamer(nu)).value;
      },
      py::arg("f"), py::arg("nu") = py::none());
  m.def("riemann_limit", [](const py::object& f) { return to_fraction(riemann_limit(to_polynomial(f))); });
  m.def("integrability_check", [](const py::object& f) { return integrability_check(to_polynomial(f)); });
  m.def("definite_to_sum_pipeline", [](const py::object& f) {
    const auto t = definite_to_sum_pipeline(to_polynomial(f));
    py::list stages;
    for (const auto& s : t.stages) {
      stages.append(py::dict(py::arg("stage") = s.stage, py::arg("expression") = s.expression, py::arg("value") = s.value));
    }
    return py::dict(py::arg("stages") = stages, py::arg("remainder") = t.remainder,
                    py::arg("stages_equal") = t.stages_equal, py::arg("remainder_negligible") = t.remainder_negligible,
                    py::arg("recovered") = to_fraction(t.recovered));
  });
  m.def(
      "divergent_integral_via_sum",
      [](unsigned p, const py::object& n) {
        return divergent_integral_via_sum(p, n.is_none() ? GossamerNumber::omega() : to_gossamer(n)).value;
      },
      py::arg("p"), py::arg("n") = py::none());
  m.def("conjecture_probe", [](const py::object& f, const py::iterable& partition, std::size_t n) {
    const auto points = to_rationals(partition);
    const ConjectureProbe p = py::isinstance<py::str>(f) || py::isinstance<Polynomial>(f)
                                  ? conjecture_probe(to_polynomial(f), points, n)
                                  : conjecture_probe(f.cast<std::function<double(double)>>(), points, n);
    return py::dict(py::arg("n") = p.refinement, py::arg("uniform") = p.uniform_value, py::arg("tagged") = p.tagged_value,
                    py::arg("gap") = p.gap);
  });

  m.def("indefinite_sum", [](const py::object& g) { return indefinite_sum(to_polynomial(g)).point_function; });
  m.def("sum_interval_bruteforce", [](const py::object& g, std::int64_t a, std::int64_t b) {
    return to_fraction(sum_interval_bruteforce(to_polynomial(g), a, b));
  });
  m.def("sum_ftc", [](const py::object& g, const py::object& a, const py::object& b) {
    const auto s = sum_ftc(to_polynomial(g), to_gossamer(a), to_gossamer(b));
    return py::dict(py::arg("value") = s.value, py::arg("oracle_match") = s.oracle_match,
                    py::arg("negative_argument") = s.negative_argument);
  });

  py::class_<StepFunction>(m, "StepFunction")
      .def(py::init([](const py::iterable& breakpoints, const py::iterable& levels) {
             return StepFunction(to_rationals(breakpoints), to_rationals(levels));
           }),
           py::arg("breakpoints"), py::arg("levels"))
      .def_static("from_json", &StepFunction::from_json)
      .def_static("iverson", [](const py::object& q) { return iverson_step(to_rational(q)); })
      .def("to_json", &StepFunction::to_json)
      .def_property_readonly("jump_count", &StepFunction::jump_count)
      .def("__call__", [](const StepFunction& f, const py::object& x) { return to_fraction(f(to_rational(x))); })
      .def("area", [](const StepFunction& f, const py::object& a, const py::object& b) {
        return to_fraction(area(f, to_rational(a), to_rational(b)));
      })
      .def(py::self == py::self);

  py::class_<SmoothedFunction>(m, "SmoothedFunction")
      .def("__call__", [](const SmoothedFunction& f, const py::object& x) { return f(to_gossamer(x)); })
      .def("sample", &SmoothedFunction::sample)
      .def("area", [](const SmoothedFunction& f, const py::object& a, const py::object& b) {
        return smoothed_area(f, to_rational(a), to_rational(b));
      })
      .def("transfer_to_real", [](const SmoothedFunction& f) { return transfer_to_real(f); });

  m.def("smooth", [](const StepFunction& f, const std::string& shape, const py::object& eps) {
    return smooth(f, to_shape(shape), to_gossamer(eps));
  });
  m.def("area_delta", [](const StepFunction& f, const SmoothedFunction& f2, const py::object& a, const py::object& b) {
    const auto d = area_delta(f, f2, to_rational(a), to_rational(b));
    return py::dict(py::arg("delta") = d.delta, py::arg("infinitesimal") = d.infinitesimal);
  });
  m.def("trapezoid_discontinuity_budget", [](const StepFunction& f, const py::object& eps) {
    const auto b = trapezoid_discontinuity_budget(f, to_gossamer(eps));
    return py::dict(py::arg("per_bridge") = b.per_bridge, py::arg("total") = b.total,
                    py::arg("infinitesimal") = b.infinitesimal);
  });

  m.def("suite_names", [] {
    std::vector<std::string> out;
    for (const auto n : suite_names()) out.emplace_back(n);
    return out;
  });
  m.def(
      "run_suite",
      [](const std::string& name, std::uint64_t seed, std::size_t cases) {
        VerificationReport r;
        {
          py::gil_scoped_release release;
          r = run_suite(name, seed, cases);
        }
        return json_to_python(r.to_json());
      },
      py::arg("name"), py::arg("seed") = 0, py::arg("cases") = 100);
}
