#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace subring {

using int128 = __int128;

std::string to_string(int128 v);
mpz_class to_mpz(int128 v);

// binom(a, b) with the zero convention: 0 whenever a < b or a < 0.
mpz_class binomial(long a, long b);

bool is_prime(uint64_t n);

// Prime factorization by trial division (bound 10^6). Inputs up to 10^12 are
// always factored completely; beyond that a leftover cofactor raises.
std::vector<std::pair<uint64_t, int>> factorize(uint64_t k);

mpz_class pow_mpz(const mpz_class& base, unsigned long exp);

// p^e as int64, throwing if it does not fit.
int64_t pow_i64_checked(int64_t p, int e);

} // namespace subring
