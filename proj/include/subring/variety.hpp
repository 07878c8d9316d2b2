#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "subring/enumerate.hpp"

namespace subring {

// Sparse multivariate polynomial over F_p: sum of coeff * prod x_i^e_i.
struct FpTerm {
    int64_t coeff;                             // reduced mod p
    std::vector<std::pair<int, int>> powers;   // (1-based variable, exponent >= 1)
};

struct FpPoly {
    std::vector<FpTerm> terms;
};

struct FpSystem {
    int64_t p;
    int nvars;
    std::vector<FpPoly> polys;
};

// Plain-text system format, one polynomial per line:
//   poly   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := INTEGER | 'x' INDEX ('^' EXPONENT)?
// '#' starts a comment; an optional "vars N" line fixes the variable count
// (otherwise the largest index used).
FpSystem parse_system(const std::string& text, int64_t p);

// The 3-equation, 8-variable system whose F_p point count feeds the
// g_(3,2,2,1,1) analysis:
//   (x3^2-x3) - x2(x7^2-x7) - x1(x5^2-x5) = 0
//   (x4^2-x4) - x2(x8^2-x8) - x1(x6^2-x6) = 0
//   x3 x4 - x2 x7 x8 - x1 x5 x6 = 0
FpSystem builtin_system_32211(int64_t p);

// Exact count of common zeros by full iteration over F_p^nvars.
// BudgetError when p^nvars exceeds the budget.
mpz_class count_points_bruteforce(const FpSystem& sys, uint64_t budget = kDefaultBudget,
                                  int jobs = 0);

// Same count as brute force on the builtin system, in O(p^6) field steps:
// equations 1 and 2 are monic quadratics in x3 resp. x4, solved by
// completing the square (Tonelli-Shanks for the square root; exhaustive
// check at p = 2); equation 3 is tested on each root pair.
mpz_class count_points_32211(int64_t p, int jobs = 0);

struct ConjectureReport {
    mpz_class enumerated;
    mpz_class conjectured;
    bool match;
};

// Enumerates g_(3,2,2,1,1)(p) and compares with the conjectured polynomial.
ConjectureReport check_g32211_conjecture(int64_t p, const EnumerateOptions& opt = {});

} // namespace subring
