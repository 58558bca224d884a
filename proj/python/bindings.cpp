#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spectra/arrow_engine.hpp"
#include "spectra/cli.hpp"
#include "spectra/cyclotomic.hpp"
#include "spectra/errors.hpp"
#include "spectra/finite_spectral.hpp"
#include "spectra/io.hpp"
#include "spectra/measures.hpp"
#include "spectra/representation.hpp"

namespace py = pybind11;
using namespace spectra;
using io::json;

namespace {

py::object big_to_py(const BigInt& x) {
  const std::string s = x.str();
  return py::reinterpret_steal<py::object>(PyLong_FromString(s.c_str(), nullptr, 10));
}

BigInt py_to_big(const py::handle& h) { return BigInt(py::str(h).cast<std::string>()); }

py::object fraction(const Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(big_to_py(r.num()), big_to_py(r.den()));
}

// Accepts int, fractions.Fraction or a "p/q" string. Floats are inexact and rejected.
Rational to_rational(const py::handle& h) {
  if (py::isinstance<py::str>(h)) return parse_rational(h.cast<std::string>());
  if (py::isinstance<py::bool_>(h) || py::isinstance<py::float_>(h)) {
    throw InvalidInput("inexact_number", "expected an exact rational, got " + py::repr(h).cast<std::string>());
  }
  if (py::isinstance<py::int_>(h)) return Rational(py_to_big(h));
  if (py::hasattr(h, "numerator") && py::hasattr(h, "denominator")) {
    return Rational(py_to_big(h.attr("numerator")), py_to_big(h.attr("denominator")));
  }
  throw InvalidInput("bad_rational", "cannot read a rational from " + py::repr(h).cast<std::string>());
}

std::vector<Rational> to_rationals(const py::iterable& xs) {
  std::vector<Rational> out;
  for (auto x : xs) out.push_back(to_rational(x));
  return out;
}

py::list fractions(const std::vector<Rational>& xs) {
  py::list out;
  for (const auto& x : xs) out.append(fraction(x));
  return out;
}

py::object to_python(const json& j) {
  switch (j.type()) {
    case json::value_t::null: return py::none();
    case json::value_t::boolean: return py::bool_(j.get<bool>());
    case json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case json::value_t::number_float: return py::float_(j.get<double>());
    case json::value_t::string: return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const auto& e : j) out.append(to_python(e));
      return out;
    }
    case json::value_t::object: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = to_python(v);
      return out;
    }
    default: throw std::runtime_error("unsupported JSON value");
  }
}

AtomicMeasure measure(const py::iterable& points, const std::vector<double>& weights) {
  return AtomicMeasure(to_rationals(points), weights);
}

ZeroDetection detection(const std::string& mode) {
  if (mode == "symbolic") return ZeroDetection::symbolic;
  if (mode == "floating") return ZeroDetection::floating;
  throw InvalidInput("bad_mode", "mode must be \"symbolic\" or \"floating\"");
}

py::dict rep_dict(const FiniteRep& rep) {
  py::dict d;
  d["eigenvalues"] = fractions(rep.eigenvalues());
  d["eigenvectors"] = rep.eigenvectors();
  d["v0"] = rep.v0();
  return d;
}

std::vector<LinearForm> forms(const py::iterable& xs) {
  std::vector<LinearForm> out;
  for (auto x : xs) {
    out.push_back(py::isinstance<py::str>(x) ? parse_linear_form(x.cast<std::string>()) : LinearForm(to_rational(x)));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_spectra, m) {
  m.doc() = "Exact spectral-pair certification, wandering-vector representations and IFS transforms";

  // Held by the module's attributes for the interpreter's lifetime.
  static py::handle invalid = py::exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError).release();
  static py::handle inconsistent = py::exception<Inconsistent>(m, "Inconsistent", PyExc_RuntimeError).release();
  m.attr("InvalidInput") = invalid;
  m.attr("Inconsistent") = inconsistent;
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InvalidInput& e) {
      py::object err = invalid(e.what());
      err.attr("reason") = e.reason();
      PyErr_SetObject(invalid.ptr(), err.ptr());
    } catch (const Inconsistent& e) {
      py::object err = inconsistent(e.what());
      err.attr("trace") = e.trace();
      PyErr_SetObject(inconsistent.ptr(), err.ptr());
    }
  });

  m.def("cyclotomic_polynomial", [](std::uint64_t n) {
    py::list out;
    for (const auto& c : cyclotomic_polynomial(n).coeffs()) out.append(big_to_py(c));
    return out;
  }, py::arg("n"), "Coefficients of the n-th cyclotomic polynomial, constant term first.");

  m.def("exponential_sum_vanishes", [](const py::iterable& a, const py::handle& d) {
    auto check = exponential_sum_vanishes(to_rationals(a), to_rational(d));
    return py::make_tuple(check.vanishes, check.exact, big_to_py(check.order));
  }, py::arg("a"), py::arg("d"), "(vanishes, exact, order) for sum over a of exp(2 pi i a d).");

  m.def("is_spectral_pair", [](const py::iterable& a, const py::iterable& b) {
    return is_spectral_pair(FiniteRationalSet(to_rationals(a)), FiniteRationalSet(to_rationals(b)));
  }, py::arg("a"), py::arg("b"));

  m.def("certify_spectral_pair", [](const py::iterable& a, const py::iterable& b) {
    auto c = certify_spectral_pair(FiniteRationalSet(to_rationals(a)), FiniteRationalSet(to_rationals(b)));
    py::dict d;
    d["spectral"] = c.spectral;
    d["exact"] = c.exact;
    d["max_order"] = big_to_py(c.max_order);
    return d;
  }, py::arg("a"), py::arg("b"));

  m.def("decide_line_set", [](std::int64_t n, const py::object& a, const py::object& irrational) {
    if (a.is_none() == irrational.is_none()) {
      throw InvalidInput("usage_error", "pass exactly one of a and irrational");
    }
    ElementInput x = a.is_none() ? ElementInput(IrrationalTag{irrational.cast<std::string>()})
                                 : ElementInput(to_rational(a));
    auto d = decide_line_set(n, x);
    py::dict out;
    out["verdict"] = to_string(d.verdict);
    if (d.certificate) out["certificate"] = fractions(d.certificate->elements());
    if (d.reason) out["reason"] = to_string(*d.reason);
    return out;
  }, py::arg("n"), py::arg("a") = py::none(), py::arg("irrational") = py::none());

  m.def("construct_line_spectrum", [](std::int64_t n, const py::int_& p, const py::int_& q) {
    return fractions(construct_line_spectrum(n, py_to_big(p), py_to_big(q)).elements());
  }, py::arg("n"), py::arg("p"), py::arg("q"));

  m.def("search_spectrum", [](const py::iterable& a, std::int64_t q_max, const py::handle& span) -> py::object {
    auto found = search_spectrum(FiniteRationalSet(to_rationals(a)), q_max, to_rational(span));
    if (!found) return py::none();
    return fractions(found->elements());
  }, py::arg("a"), py::arg("q_max"), py::arg("span"), "Smallest spectrum found within bounds, or None.");

  m.def("atomic_transform", [](const py::iterable& points, const std::vector<double>& weights, const py::handle& t) {
    return atomic_transform(measure(points, weights), to_rational(t));
  }, py::arg("points"), py::arg("weights"), py::arg("t"));

  m.def("ifs_transform", [](std::int64_t scale, const py::iterable& digits, const py::handle& t, double eps,
                            const std::string& mode) {
    auto v = ifs_transform(IFSMeasure(scale, to_rationals(digits)), to_rational(t), eps, detection(mode));
    return py::make_tuple(v.value, v.depth, v.exact_zero);
  }, py::arg("scale"), py::arg("digits"), py::arg("t"), py::arg("eps") = 1e-12, py::arg("mode") = "symbolic",
     "(value, depth, exact_zero) of the self-similar measure's transform at t.");

  m.def("jp_spectrum", &jp_spectrum, py::arg("level"));

  m.def("frame_bounds", [](const py::iterable& points, const std::vector<double>& weights, const py::iterable& lambda) {
    auto fb = frame_bounds(measure(points, weights), to_rationals(lambda));
    return py::make_tuple(fb.lower, fb.upper);
  }, py::arg("points"), py::arg("weights"), py::arg("lambda_"));

  m.def("completeness_defect", [](const py::iterable& lambda, const py::handle& t, double eps) {
    return completeness_defect(IFSMeasure::cantor4(), to_rationals(lambda), to_rational(t), eps);
  }, py::arg("lambda_"), py::arg("t"), py::arg("eps") = 1e-12,
     "Q(t) for the quarter Cantor measure.");

  m.def("multiplication_representation", [](const py::iterable& points, const std::vector<double>& weights) {
    return rep_dict(multiplication_representation(measure(points, weights)));
  }, py::arg("points"), py::arg("weights"));

  m.def("measure_from_representation", [](const py::iterable& eigenvalues, const Eigen::MatrixXcd& eigenvectors,
                                          const Eigen::VectorXcd& v0) {
    auto mu = measure_from_representation(FiniteRep(to_rationals(eigenvalues), eigenvectors, v0));
    return py::make_tuple(fractions(mu.points()), mu.weights());
  }, py::arg("eigenvalues"), py::arg("eigenvectors"), py::arg("v0"), "(points, weights)");

  m.def("permutation_representation", [](std::int64_t n, const py::int_& p, const py::int_& q) {
    auto pr = permutation_representation(n, py_to_big(p), py_to_big(q));
    py::dict d = rep_dict(pr.rep);
    d["k"] = big_to_py(pr.k);
    d["l"] = big_to_py(pr.l);
    d["generator_shift"] = pr.generator_shift;
    d["u_one"] = pr.permutation_at(pr.q);
    d["u_a"] = pr.permutation_at(pr.p);
    return d;
  }, py::arg("n"), py::arg("p"), py::arg("q"));

  m.def("arrow_close", [](const py::iterable& ground, const py::object& moves, int budget) {
    auto g = forms(ground);
    auto mv = moves.is_none() ? pairwise_differences(g) : forms(moves);
    Session s = close(new_session(g, mv, budget));
    py::dict out = to_python(io::to_json(s));
    py::dict perms;
    for (const auto& move : s.generators()) {
      if (auto p = extract_permutation(s, move)) perms[py::str(move.str())] = p->sigma;
    }
    out["permutations"] = perms;
    return out;
  }, py::arg("ground_set"), py::arg("moves") = py::none(), py::arg("budget") = 2,
     "Closed session as a dict; raises Inconsistent with a trace on contradiction.");

  m.def("run_cli", [](const std::vector<std::string>& argv) {
    auto r = cli::run(argv);
    return py::make_tuple(r.exit_code, r.render());
  }, py::arg("argv"), "(exit code, stdout text) of the command-line tool.");
}
