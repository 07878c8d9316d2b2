#pragma once
#include <cstdint>
#include <functional>
#include <string>

#include <gmpxx.h>

#include "subring/enumerate.hpp"

namespace subring {

enum class CountMethod { enumeration, recursion, direct, formula };

std::string method_name(CountMethod m);

// Exact nonnegative count with a tag saying how it was obtained.
struct CountValue {
    mpz_class value;
    CountMethod method;
};

// Supplies g_j(p^i) for j >= 2, i >= 1 (the irreducible counts feeding the
// recursion). Lets callers route through a cache.
using GProvider = std::function<mpz_class(int j, int i)>;

// f_n(p^e) by the recursion
//   f_n(p^e) = sum_{i=0}^{e} sum_{j=1}^{n} binom(n-1, j-1) f_{n-j}(p^{e-i}) g_j(p^i)
// with the conventions f_0(p^0) = 1, f_0(p^m) = 0 for m > 0, g_1(p^0) = 1,
// g_1(p^i) = 0 for i > 0. The conventions are pinned by the derived
// identities f_1(p^e) = [e = 0] and f_2(p^e) = 1.
mpz_class f_prime_power(int n, int e, int64_t p, const GProvider& g);
CountValue f_prime_power(int n, int e, int64_t p, const EnumerateOptions& opt = {});

// f_n(k) via multiplicativity: factor k and multiply the prime-power values.
CountValue f_general(int n, uint64_t k, const EnumerateOptions& opt = {});

// Independent oracle: counts all Hermite-normal-form matrices of determinant
// k that pass is_subring_matrix, with no irreducibility or prime-power
// assumption. The iteration space is summed over diagonal divisor tuples;
// BudgetError when it exceeds `budget`.
CountValue f_direct(int n, uint64_t k, uint64_t budget = kDefaultBudget);

// Iteration-space size of the oracle (for budget reasoning and tests).
mpz_class f_direct_space(int n, uint64_t k);

// f_direct(n, k1 k2) == f_direct(n, k1) * f_direct(n, k2) for coprime k1, k2.
bool check_multiplicativity(int n, uint64_t k1, uint64_t k2, uint64_t budget = kDefaultBudget);

} // namespace subring
