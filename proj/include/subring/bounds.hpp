#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "subring/composition.hpp"
#include "subring/enumerate.hpp"

namespace subring {

// Hypotheses for the p^{(n-2) m_beta} lower bound: first part > 1 and
// weight > n (= length + 1).
bool prop73_applicable(const Composition& beta);

// m_beta = min(floor(beta_1 / 2), beta_2, ..., beta_{n-1}).
// GuardError when the hypotheses fail.
int m_beta(const Composition& beta);

// p^{(n-2) * m_beta}.
mpz_class lower_bound_prop73(const Composition& beta, const mpz_class& p);

// Polynomial lower bound for g_n(p^e), n >= 3:
//   sum_{j=1}^{floor(e/n)} p^{(n-2)j} (binom(e-1-nj, n-2) - binom(e-1-n(j+1), n-2))
// with binom(a,b) = 0 whenever a < b or a < 0.
mpz_class lower_bound_gn(int n, int e, const mpz_class& p);

// Number of compositions of e into n-1 parts with m_beta = j (the binomial
// difference above); exposed for the internal nonnegativity sanity check.
mpz_class composition_class_size(int n, int e, int j);

struct GrowthProbeRow {
    int k;
    Composition alpha_k;
    std::optional<mpz_class> count; // empty on budget refusal
    std::string refusal;
    double step_exponent = 0.0;     // log_p(count_k / count_{k-1}), 0 for the first row
};

struct GrowthProbeReport {
    int t = 0;
    int gamma = 0; // max(alpha_1..alpha_t)
    std::vector<GrowthProbeRow> rows;
    double max_step_exponent = 0.0;
};

// Diagnostic growth data for g over the family alpha_{/k,t} (t-th part
// scaled by k). Requires every part > 1; reports counts and per-step
// exponents, asserting nothing about the asymptotic constant.
GrowthProbeReport growth_probe(const Composition& alpha, int t, int k_min, int k_max, int64_t p,
                               const EnumerateOptions& opt = {});

} // namespace subring
