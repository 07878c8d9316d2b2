#pragma once
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "subring/enumerate.hpp"

namespace subring {

// Power series in t = p^{-s}, truncated at order E (coefficients 0..E).
struct TruncatedSeries {
    std::vector<mpz_class> c;

    int order() const { return static_cast<int>(c.size()) - 1; }
    const mpz_class& coeff(int e) const { return c.at(e); }
};

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b, int E);
// Inverse of a series with constant term 1.
TruncatedSeries series_inv(const TruncatedSeries& a, int E);

// Local factor of the subring zeta function as a t-series:
//   n = 2: 1/(1-t)
//   n = 3: (1-t^2)^2 / ((1-t)^3 (1-p t^3))
// Only these two dimensions have a built-in rational form.
TruncatedSeries local_factor_series(int n, int64_t p, int E);

struct ZetaCompareRow {
    int e;
    mpz_class series_coeff;
    mpz_class f_count;
    bool match;
};

struct ZetaCompareReport {
    std::vector<ZetaCompareRow> rows;
    bool all_match = true;
};

// Coefficient-by-coefficient comparison of the closed local factor against
// f_n(p^e) from the recursion, for e <= E.
ZetaCompareReport compare_zeta_coeffs(int n, int64_t p, int E, const EnumerateOptions& opt = {});

} // namespace subring
