#include <doctest.h>

#include <stdexcept>

#include "subring/expr.hpp"
#include "subring/polynomial.hpp"

using namespace subring;

TEST_CASE("polynomial arithmetic and printing") {
    PolynomialQ x = PolynomialQ::variable();
    PolynomialQ p = x.pow(2) * PolynomialQ::constant(3) - x + PolynomialQ::constant(mpq_class(1, 2));
    CHECK(p.degree() == 2);
    CHECK(p.eval(2) == mpq_class(21, 2));
    CHECK_FALSE(p.integer_coefficients());
    CHECK_THROWS_AS(p.eval_z(2), std::domain_error);

    PolynomialQ q = x.pow(5) + PolynomialQ::constant(4) * x.pow(4);
    CHECK(q.eval_z(2) == 96);
    CHECK(q.str() == "p^5 + 4*p^4");

    CHECK((q - q).is_zero());
    CHECK((q - q).degree() == -1);
    CHECK(PolynomialQ::constant(0).is_zero());
}

TEST_CASE("expression parsing") {
    PolynomialQ poly = parse_poly_expr("p^5 + 4*p^4 - 9*p^3 + 4*p", "p", {});
    CHECK(poly.degree() == 5);
    CHECK(poly.eval_z(2) == 32);
    CHECK(poly.coeffs()[1] == 4);
    CHECK(poly.coeffs()[3] == -9);

    SymbolEnv env{{"n", 6}, {"r", 3}};
    PolynomialQ fam = parse_poly_expr("(r+1)*(p^(n-3+r) + p^(n-3)*(p-1))", "p", env);
    CHECK(fam.eval_z(2) == 4 * (64 + 8)); // 4(p^6 + p^3(p-1)) at p=2

    CHECK(parse_poly_expr("binom(7,6)", "p", {}).constant_value() == 7);
    CHECK(parse_poly_expr("fdiv(5,2)", "p", {}).constant_value() == 2);
    CHECK(parse_poly_expr("-p + 3", "p", {}).eval_z(1) == 2);

    CHECK_THROWS_AS(parse_poly_expr("p + q", "p", {}), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly_expr("p^p", "p", {}), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly_expr("p + ", "p", {}), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly_expr("2 3", "p", {}), std::invalid_argument);
}

TEST_CASE("guards") {
    SymbolEnv env{{"beta", 3}, {"gamma", 2}, {"n", 5}};
    CHECK(eval_guard("beta > 2 & gamma >= beta-1", env));
    CHECK_FALSE(eval_guard("beta == 2", env));
    auto violated = guard_violation("n >= 4 & beta > 2 & gamma >= beta", env);
    REQUIRE(violated.has_value());
    CHECK(*violated == "gamma >= beta");
    CHECK_THROWS_AS(eval_guard("beta", env), std::invalid_argument);
}

TEST_CASE("binomial polynomials") {
    BinomPoly bp;
    bp.terms = {{2, PolynomialQ::constant(1)},
                {3, parse_poly_expr("p + 1", "p", {})}};
    // binom(3,2)*1 + binom(3,3)*(p+1) = p + 4
    CHECK(bp.eval(3, 2) == 6);
    CHECK(bp.eval(3, 5) == 9);
    CHECK(bp.eval(2, 7) == 1); // binom(2,3) = 0
}
