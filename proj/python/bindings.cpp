#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "wilsonid/cli.hpp"
#include "wilsonid/combinatorics.hpp"
#include "wilsonid/identity.hpp"
#include "wilsonid/modular.hpp"

namespace py = pybind11;
using namespace wilsonid;

namespace {

// Python ints and fractions.Fraction cross the boundary as decimal text.

Integer to_integer(const py::int_& v) { return Integer::parse(py::str(v).cast<std::string>()); }

py::int_ to_py(const Integer& v) { return py::int_(py::str(v.to_string())); }

Rational to_rational(const py::handle& v) {
    if (py::isinstance<py::int_>(v)) return Rational(to_integer(v.cast<py::int_>()));
    return Rational::make(to_integer(v.attr("numerator").cast<py::int_>()),
                          to_integer(v.attr("denominator").cast<py::int_>()));
}

py::object to_py(const Rational& v) {
    static const py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py(v.numerator()), to_py(v.denominator()));
}

py::list to_py(const Polynomial& p) {
    py::list out;
    for (const auto& c : p.coeffs()) out.append(to_py(c));
    return out;
}

Polynomial to_polynomial(const py::iterable& coeffs) {
    std::vector<Rational> cs;
    for (const auto& c : coeffs) cs.push_back(to_rational(c));
    return Polynomial(std::move(cs));
}

py::dict to_py(const VerificationResult& r) {
    py::dict d;
    d["check"] = r.check;
    d["n"] = r.n;
    d["j"] = r.j ? py::object(py::int_(*r.j)) : py::object(py::none());
    d["x"] = r.x ? to_py(*r.x) : py::object(py::none());
    d["lhs"] = to_py(r.lhs);
    d["rhs"] = to_py(r.rhs);
    d["holds"] = r.holds;
    return d;
}

py::dict to_py(const CongruenceReport& r) {
    py::list entries;
    for (const auto& e : r.entries) {
        entries.append(py::make_tuple(to_py(e.index), to_py(e.residue), to_py(e.expected)));
    }
    py::dict d;
    d["check"] = r.check;
    d["modulus"] = to_py(r.modulus);
    d["entries"] = entries;
    d["holds"] = r.holds;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact checks of the alternating difference identity and the congruence chain to Wilson's theorem";

    m.def("factorial", [](std::int64_t n) { return to_py(factorial(n)); }, py::arg("n"));
    m.def("binomial", [](std::int64_t n, std::int64_t i) { return to_py(binomial(n, i)); },
          py::arg("n"), py::arg("i"));

    m.def("eval_difference_sum",
          [](std::int64_t n, const py::object& x) { return to_py(eval_difference_sum(n, to_rational(x))); },
          py::arg("n"), py::arg("x"));
    m.def("symbolic_difference_poly", [](std::int64_t n) { return to_py(symbolic_difference_poly(n)); },
          py::arg("n"), "Ascending coefficients of the expanded sum.");
    m.def("eval_lower_power_sum",
          [](std::int64_t n, std::int64_t j, const py::object& x) {
              return to_py(eval_lower_power_sum(n, j, to_rational(x)));
          },
          py::arg("n"), py::arg("j"), py::arg("x"));
    m.def("symbolic_lower_power_poly",
          [](std::int64_t n, std::int64_t j) { return to_py(symbolic_lower_power_poly(n, j)); },
          py::arg("n"), py::arg("j"));
    m.def("backward_difference",
          [](const py::iterable& coeffs, std::int64_t order) {
              return to_py(backward_difference(to_polynomial(coeffs), order));
          },
          py::arg("coeffs"), py::arg("order"));
    m.def("verify_theorem1",
          [](std::int64_t n, const py::object& x) { return to_py(verify_theorem1(n, to_rational(x))); },
          py::arg("n"), py::arg("x"));
    m.def("verify_corollary2",
          [](std::int64_t n, std::int64_t j, const py::object& x) {
              return to_py(verify_corollary2(n, j, to_rational(x)));
          },
          py::arg("n"), py::arg("j"), py::arg("x"));
    m.def("derivative_collapse_check", &derivative_collapse_check, py::arg("n"), py::arg("j"));

    m.def("mod_pow",
          [](const py::int_& b, const py::int_& e, const py::int_& mod) {
              return to_py(mod_pow(to_integer(b), to_integer(e), to_integer(mod)));
          },
          py::arg("base"), py::arg("exp"), py::arg("m"));
    m.def("factorial_mod",
          [](std::int64_t n, const py::int_& mod) { return to_py(factorial_mod(n, to_integer(mod))); },
          py::arg("n"), py::arg("m"));
    m.def("trial_division", [](const py::int_& n) { return trial_division(to_integer(n)); }, py::arg("n"));
    m.def("wilson_test",
          [](const py::int_& n) {
              const auto v = wilson_test(to_integer(n));
              py::dict d;
              d["n"] = to_py(v.n);
              d["residue"] = to_py(v.wilson_residue);
              d["is_prime"] = v.is_prime;
              d["oracle_agrees"] = v.oracle_agrees;
              return d;
          },
          py::arg("n"));
    m.def("binomial_row_mod", [](const py::int_& p) { return to_py(binomial_row_mod(to_integer(p))); },
          py::arg("p"));
    m.def("fermat_check", [](const py::int_& p) { return to_py(fermat_check(to_integer(p))); }, py::arg("p"));
    m.def("power_sum_mod", [](const py::int_& p) { return to_py(power_sum_mod(to_integer(p))); }, py::arg("p"));
    m.def("identity_at_zero_mod",
          [](const py::int_& p) {
              const auto r = identity_at_zero_mod(to_integer(p));
              py::dict d = to_py(r.congruence);
              d["exact_lhs"] = to_py(r.exact_lhs);
              d["exact_rhs"] = to_py(r.exact_rhs);
              d["exact_holds"] = r.exact_holds;
              d["holds"] = r.holds();
              return d;
          },
          py::arg("p"));

    m.def("run_cli",
          [](const std::vector<std::string>& args) {
              std::ostringstream out, err;
              const int code = run_cli(args, out, err);
              return py::make_tuple(code, out.str(), err.str());
          },
          py::arg("args"), "Run the command line tool in-process; returns (exit_code, stdout, stderr).");
}
