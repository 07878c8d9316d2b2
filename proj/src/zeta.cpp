#include "subring/zeta.hpp"

#include <map>
#include <stdexcept>

#include "subring/recursion.hpp"

namespace subring {

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b, int E) {
    TruncatedSeries r;
    r.c.assign(E + 1, 0);
    for (int i = 0; i <= E && i < static_cast<int>(a.c.size()); ++i) {
        if (a.c[i] == 0)
            continue;
        for (int j = 0; j + i <= E && j < static_cast<int>(b.c.size()); ++j)
            r.c[i + j] += a.c[i] * b.c[j];
    }
    return r;
}

TruncatedSeries series_inv(const TruncatedSeries& a, int E) {
    if (a.c.empty() || a.c[0] != 1)
        throw std::invalid_argument("series_inv: constant term must be 1");
    TruncatedSeries r;
    r.c.assign(E + 1, 0);
    r.c[0] = 1;
    for (int i = 1; i <= E; ++i) {
        mpz_class acc = 0;
        for (int j = 1; j <= i && j < static_cast<int>(a.c.size()); ++j)
            acc += a.c[j] * r.c[i - j];
        r.c[i] = -acc;
    }
    return r;
}

TruncatedSeries local_factor_series(int n, int64_t p, int E) {
    if (E < 0)
        throw std::invalid_argument("truncation order must be >= 0");
    if (n == 2) {
        TruncatedSeries r;
        r.c.assign(E + 1, 1); // 1/(1-t)
        return r;
    }
    if (n == 3) {
        TruncatedSeries one_minus_t{{1, -1}};
        TruncatedSeries num{{1, 0, -2, 0, 1}}; // (1-t^2)^2
        TruncatedSeries one_minus_pt3{{1, 0, 0, -p}};
        TruncatedSeries r = series_inv(one_minus_t, E);
        r = series_mul(r, r, E);
        r = series_mul(r, series_inv(one_minus_t, E), E);
        r = series_mul(r, series_inv(one_minus_pt3, E), E);
        return series_mul(r, num, E);
    }
    throw std::invalid_argument("no built-in local factor for n = " + std::to_string(n) +
                                " (only n = 2 and n = 3)");
}

ZetaCompareReport compare_zeta_coeffs(int n, int64_t p, int E, const EnumerateOptions& opt) {
    TruncatedSeries series = local_factor_series(n, p, E);
    ZetaCompareReport report;
    std::map<std::pair<int, int>, mpz_class> gmemo;
    auto g = [&](int j, int i) -> mpz_class {
        auto key = std::make_pair(j, i);
        auto it = gmemo.find(key);
        if (it == gmemo.end())
            it = gmemo.emplace(key, count_g_n(j, i, p, opt)).first;
        return it->second;
    };
    for (int e = 0; e <= E; ++e) {
        ZetaCompareRow row;
        row.e = e;
        row.series_coeff = series.coeff(e);
        row.f_count = f_prime_power(n, e, p, g);
        row.match = (row.series_coeff == row.f_count);
        if (!row.match)
            report.all_match = false;
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace subring
