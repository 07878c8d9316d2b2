#include "subring/interpolate.hpp"

#include <stdexcept>

namespace subring {

PolynomialQ lagrange_fit(const std::vector<std::pair<mpz_class, mpz_class>>& samples) {
    if (samples.size() < 2)
        throw std::invalid_argument("lagrange_fit: need at least 2 samples");
    for (size_t i = 0; i < samples.size(); ++i)
        for (size_t j = i + 1; j < samples.size(); ++j)
            if (samples[i].first == samples[j].first)
                throw std::invalid_argument("lagrange_fit: duplicate abscissa " +
                                            samples[i].first.get_str());

    // Newton form: divided differences, then expand.
    const size_t k = samples.size();
    std::vector<mpq_class> dd(k);
    for (size_t i = 0; i < k; ++i)
        dd[i] = mpq_class(samples[i].second);
    for (size_t level = 1; level < k; ++level)
        for (size_t i = k - 1; i >= level; --i) {
            mpq_class denom = mpq_class(samples[i].first - samples[i - level].first);
            dd[i] = (dd[i] - dd[i - 1]) / denom;
            if (i == level)
                break;
        }

    PolynomialQ poly = PolynomialQ::constant(dd[0]);
    PolynomialQ basis = PolynomialQ::constant(1);
    for (size_t i = 1; i < k; ++i) {
        basis = basis * (PolynomialQ::variable() -
                         PolynomialQ::constant(mpq_class(samples[i - 1].first)));
        poly = poly + PolynomialQ::constant(dd[i]) * basis;
    }
    return poly;
}

std::string fit_status_name(FitStatus s) {
    switch (s) {
    case FitStatus::CONFIRMED: return "CONFIRMED";
    case FitStatus::REFUTED: return "REFUTED";
    case FitStatus::UNDETERMINED: return "UNDETERMINED";
    }
    return "?";
}

FitReport fit_and_confirm(const Composition& alpha, const std::vector<int64_t>& fit_primes,
                          const std::vector<int64_t>& confirm_primes, const EnumerateOptions& opt) {
    FitReport rep;
    std::vector<std::pair<mpz_class, mpz_class>> samples;
    try {
        for (int64_t p : fit_primes)
            samples.emplace_back(mpz_class(p), count_g_alpha(alpha, p, opt));
    } catch (const BudgetError& e) {
        rep.status = FitStatus::UNDETERMINED;
        rep.note = e.what();
        return rep;
    }
    rep.poly = lagrange_fit(samples);
    rep.integer_coeffs = rep.poly.integer_coefficients();

    bool mismatch = false;
    bool budget_hit = false;
    for (int64_t p : confirm_primes) {
        FitConfirmation c;
        c.prime = p;
        try {
            c.counted = count_g_alpha(alpha, p, opt);
        } catch (const BudgetError& e) {
            budget_hit = true;
            rep.note = e.what();
            continue;
        }
        mpq_class predicted_q = rep.poly.eval(mpq_class(p));
        if (predicted_q.get_den() != 1 || predicted_q.get_num() != c.counted)
            mismatch = true;
        if (predicted_q.get_den() == 1)
            c.predicted = predicted_q.get_num();
        rep.confirmations.push_back(std::move(c));
    }

    if (mismatch)
        rep.status = FitStatus::REFUTED;
    else if (!rep.confirmations.empty() && rep.integer_coeffs)
        rep.status = FitStatus::CONFIRMED;
    else {
        rep.status = FitStatus::UNDETERMINED;
        if (rep.note.empty() && !budget_hit) {
            rep.note = rep.confirmations.empty() ? "no held-out prime was checked"
                                                 : "fit has non-integer coefficients";
        }
    }
    return rep;
}

} // namespace subring
