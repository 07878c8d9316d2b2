#include <doctest.h>

#include <stdexcept>

#include "subring/zeta.hpp"

using namespace subring;

TEST_CASE("series arithmetic round trip") {
    TruncatedSeries one_minus_t{{1, -1}};
    TruncatedSeries inv = series_inv(one_minus_t, 12);
    for (int e = 0; e <= 12; ++e)
        CHECK(inv.coeff(e) == 1);
    TruncatedSeries prod = series_mul(one_minus_t, inv, 12);
    CHECK(prod.coeff(0) == 1);
    for (int e = 1; e <= 12; ++e)
        CHECK(prod.coeff(e) == 0);
    CHECK_THROWS_AS(series_inv(TruncatedSeries{{2, 1}}, 3), std::invalid_argument);
}

TEST_CASE("local factor coefficients") {
    TruncatedSeries z2 = local_factor_series(2, 7, 12);
    for (int e = 0; e <= 12; ++e)
        CHECK(z2.coeff(e) == 1);

    for (int64_t p : {2, 3, 5}) {
        TruncatedSeries z3 = local_factor_series(3, p, 9);
        CHECK(z3.coeff(0) == 1);
        CHECK(z3.coeff(1) == 3);     // binom(3,2)
        CHECK(z3.coeff(3) == p + 4); // f_3(p^3)
    }
    CHECK_THROWS_AS(local_factor_series(4, 2, 5), std::invalid_argument);
}

TEST_CASE("series matches counted coefficients") {
    ZetaCompareReport rep = compare_zeta_coeffs(3, 2, 9);
    CHECK(rep.all_match);
    CHECK(rep.rows.size() == 10);
    CHECK(rep.rows[9].f_count == 36); // f_3(2^9)

    rep = compare_zeta_coeffs(2, 5, 12);
    CHECK(rep.all_match);
    for (const auto& row : rep.rows)
        CHECK(row.f_count == 1);
}
