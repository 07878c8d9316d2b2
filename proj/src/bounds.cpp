#include "subring/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "subring/errors.hpp"
#include "subring/util.hpp"

namespace subring {

bool prop73_applicable(const Composition& beta) {
    const int n = beta.length() + 1;
    return beta.parts.front() > 1 && beta.weight() > n;
}

int m_beta(const Composition& beta) {
    const int n = beta.length() + 1;
    if (beta.parts.front() <= 1)
        throw GuardError("m_beta: first part must exceed 1 (got " +
                         std::to_string(beta.parts.front()) + ")");
    if (beta.weight() <= n)
        throw GuardError("m_beta: weight " + std::to_string(beta.weight()) +
                         " must exceed n = " + std::to_string(n));
    int m = beta.parts.front() / 2;
    for (size_t i = 1; i < beta.parts.size(); ++i)
        m = std::min(m, beta.parts[i]);
    return m;
}

mpz_class lower_bound_prop73(const Composition& beta, const mpz_class& p) {
    const int n = beta.length() + 1;
    return pow_mpz(p, static_cast<unsigned long>((n - 2) * m_beta(beta)));
}

mpz_class composition_class_size(int n, int e, int j) {
    return binomial(e - 1 - n * j, n - 2) - binomial(e - 1 - n * (j + 1), n - 2);
}

mpz_class lower_bound_gn(int n, int e, const mpz_class& p) {
    if (n < 3)
        throw std::invalid_argument("lower_bound_gn: n >= 3 required");
    mpz_class total = 0;
    for (int j = 1; j <= e / n; ++j)
        total += pow_mpz(p, static_cast<unsigned long>((n - 2) * j)) * composition_class_size(n, e, j);
    return total;
}

GrowthProbeReport growth_probe(const Composition& alpha, int t, int k_min, int k_max, int64_t p,
                               const EnumerateOptions& opt) {
    for (int part : alpha.parts)
        if (part <= 1)
            throw GuardError("growth_probe: every part of alpha must exceed 1");
    if (t < 1 || t > alpha.length())
        throw std::invalid_argument("growth_probe: t out of range");
    if (k_min < 1 || k_max < k_min)
        throw std::invalid_argument("growth_probe: bad k range");

    GrowthProbeReport rep;
    rep.t = t;
    rep.gamma = *std::max_element(alpha.parts.begin(), alpha.parts.begin() + t);

    double prev_log = 0.0;
    bool have_prev = false;
    const double logp = std::log(static_cast<double>(p));
    for (int k = k_min; k <= k_max; ++k) {
        GrowthProbeRow row;
        row.k = k;
        std::vector<int> parts = alpha.parts;
        parts[t - 1] *= k;
        row.alpha_k = Composition(parts);
        try {
            row.count = count_g_alpha(row.alpha_k, p, opt);
        } catch (const BudgetError& e) {
            row.refusal = e.what();
            rep.rows.push_back(std::move(row));
            have_prev = false;
            continue;
        }
        double lg = std::log(row.count->get_d());
        if (have_prev) {
            row.step_exponent = (lg - prev_log) / logp;
            rep.max_step_exponent = std::max(rep.max_step_exponent, row.step_exponent);
        }
        prev_log = lg;
        have_prev = true;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

} // namespace subring
