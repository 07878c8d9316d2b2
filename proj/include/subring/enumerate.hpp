#pragma once
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "subring/composition.hpp"
#include "subring/errors.hpp"

namespace subring {

inline constexpr uint64_t kDefaultBudget = 10'000'000'000ULL; // 10^10 leaf candidates

struct EnumerateOptions {
    int jobs = 0;           // 0 = one worker per hardware thread
    uint64_t budget = kDefaultBudget;
    int prefix_depth = -1;  // -1 = pick automatically from the worker count
};

// One branch of the search: the first prefix.size() free entries (fill order:
// columns left to right, entries top to bottom) are pinned to these digits.
struct EnumerationTask {
    Composition alpha;
    int64_t p;
    std::vector<int64_t> prefix;
};

// Raw search-space size: product over free entries (i,j), i<j<=n-1, of
// p^{alpha_i - 1}.
mpz_class search_space_size(const Composition& alpha, int64_t p);

// Number of irreducible subring matrices with diagonal exponents alpha,
// counted by column-by-column backtracking with closure tests fired as soon
// as every row they read is assigned. Throws BudgetError when the raw space
// exceeds opt.budget.
mpz_class count_g_alpha(const Composition& alpha, int64_t p, const EnumerateOptions& opt = {});

// Count for a single branch; building block for the parallel split and for
// determinism tests.
mpz_class count_task(const EnumerationTask& task);

// g_n(p^e): sum of count_g_alpha over all compositions of e into n-1 parts.
mpz_class count_g_n(int n, int e, int64_t p, const EnumerateOptions& opt = {});

// Checks g_n(p^e) = g_{n-1}(p^{e-1}) + sum over compositions with first part
// > 1; requires n > 1 and e >= n-1.
bool check_gn_recurrence(int n, int e, int64_t p, const EnumerateOptions& opt = {});

void require_prime(int64_t p);

} // namespace subring
