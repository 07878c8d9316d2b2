// Python bindings for the main counting operations. Exact big integers
// cross the boundary as Python ints (via decimal strings); polynomial
// coefficients as Fraction-compatible strings.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "subring/bounds.hpp"
#include "subring/composition.hpp"
#include "subring/enumerate.hpp"
#include "subring/formulas.hpp"
#include "subring/interpolate.hpp"
#include "subring/recursion.hpp"
#include "subring/variety.hpp"
#include "subring/zeta.hpp"

namespace py = pybind11;
using namespace subring;

namespace {

py::int_ to_pyint(const mpz_class& v) {
    std::string dec = v.get_str();
    PyObject* obj = PyLong_FromString(dec.c_str(), nullptr, 10);
    if (!obj)
        throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

EnumerateOptions make_opts(int jobs, uint64_t budget) {
    EnumerateOptions o;
    o.jobs = jobs;
    o.budget = budget;
    return o;
}

Composition make_alpha(const std::vector<int>& parts) { return Composition(parts); }

} // namespace

PYBIND11_MODULE(_subring_census, m) {
    m.doc() = "Exact counts of unital subrings of Z^n of prescribed index";

    py::register_exception<BudgetError>(m, "BudgetError");
    py::register_exception<GuardError>(m, "GuardError");

    m.def(
        "g_alpha",
        [](const std::vector<int>& alpha, int64_t p, int jobs, uint64_t budget) {
            return to_pyint(count_g_alpha(make_alpha(alpha), p, make_opts(jobs, budget)));
        },
        py::arg("alpha"), py::arg("p"), py::arg("jobs") = 0, py::arg("budget") = kDefaultBudget,
        "Number of irreducible subring matrices with diagonal exponents alpha.");

    m.def(
        "g_n",
        [](int n, int e, int64_t p, int jobs, uint64_t budget) {
            return to_pyint(count_g_n(n, e, p, make_opts(jobs, budget)));
        },
        py::arg("n"), py::arg("e"), py::arg("p"), py::arg("jobs") = 0,
        py::arg("budget") = kDefaultBudget,
        "Number of irreducible subrings of Z^n of index p^e.");

    m.def(
        "f_prime_power",
        [](int n, int e, int64_t p, int jobs, uint64_t budget) {
            return to_pyint(f_prime_power(n, e, p, make_opts(jobs, budget)).value);
        },
        py::arg("n"), py::arg("e"), py::arg("p"), py::arg("jobs") = 0,
        py::arg("budget") = kDefaultBudget,
        "Number of unital subrings of Z^n of index p^e (recursion route).");

    m.def(
        "f_general",
        [](int n, uint64_t k, int jobs, uint64_t budget) {
            return to_pyint(f_general(n, k, make_opts(jobs, budget)).value);
        },
        py::arg("n"), py::arg("k"), py::arg("jobs") = 0, py::arg("budget") = kDefaultBudget,
        "Number of unital subrings of Z^n of index k (multiplicative route).");

    m.def(
        "f_direct",
        [](int n, uint64_t k, uint64_t budget) { return to_pyint(f_direct(n, k, budget).value); },
        py::arg("n"), py::arg("k"), py::arg("budget") = kDefaultBudget,
        "Oracle count over all HNF matrices of determinant k.");

    m.def(
        "variety_point_count",
        [](int64_t p, int jobs) { return to_pyint(count_points_32211(p, jobs)); },
        py::arg("p"), py::arg("jobs") = 0,
        "F_p point count of the builtin 3-equation, 8-variable system.");

    m.def(
        "zeta_coeffs",
        [](int n, int64_t p, int emax) {
            TruncatedSeries s = local_factor_series(n, p, emax);
            py::list out;
            for (const auto& c : s.c)
                out.append(to_pyint(c));
            return out;
        },
        py::arg("n"), py::arg("p"), py::arg("emax"),
        "Coefficients of the local zeta factor for n in {2,3}.");

    m.def(
        "lower_bound_gn",
        [](int n, int e, int64_t p) { return to_pyint(lower_bound_gn(n, e, mpz_class(p))); },
        py::arg("n"), py::arg("e"), py::arg("p"));

    m.def(
        "m_beta", [](const std::vector<int>& beta) { return m_beta(make_alpha(beta)); },
        py::arg("beta"));

    m.def(
        "eval_f9_minus_gamma",
        [](long n, int64_t p) {
            return to_pyint(FormulaTable::builtin().eval_f9_minus_gamma(n, mpz_class(p)));
        },
        py::arg("n"), py::arg("p"));

    m.def(
        "gamma_term",
        [](long n, int64_t p, const std::string& g32211) {
            return to_pyint(gamma_term(n, mpz_class(p), mpz_class(g32211)));
        },
        py::arg("n"), py::arg("p"), py::arg("g32211"));

    m.def(
        "lagrange_fit",
        [](const std::vector<std::pair<long, long>>& samples) {
            std::vector<std::pair<mpz_class, mpz_class>> s;
            for (auto [x, y] : samples)
                s.emplace_back(x, y);
            PolynomialQ poly = lagrange_fit(s);
            py::list out;
            for (const auto& c : poly.coeffs())
                out.append(py::str(c.get_str()));
            return out;
        },
        py::arg("samples"),
        "Exact interpolation; returns ascending coefficients as fraction strings.");
}
