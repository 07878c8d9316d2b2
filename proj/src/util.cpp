#include "subring/util.hpp"

#include <stdexcept>

namespace subring {

std::string to_string(int128 v) {
    if (v == 0)
        return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    std::string s;
    while (u) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg)
        s.push_back('-');
    return std::string(s.rbegin(), s.rend());
}

mpz_class to_mpz(int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    mpz_class hi(static_cast<unsigned long>(u >> 64));
    mpz_class r = (hi << 64) + static_cast<unsigned long>(u & 0xffffffffffffffffULL);
    return neg ? mpz_class(-r) : r;
}

mpz_class binomial(long a, long b) {
    if (b < 0 || a < 0 || a < b)
        return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

bool is_prime(uint64_t n) {
    if (n < 2)
        return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::vector<std::pair<uint64_t, int>> factorize(uint64_t k) {
    if (k == 0)
        throw std::invalid_argument("factorize: k must be positive");
    std::vector<std::pair<uint64_t, int>> out;
    for (uint64_t d = 2; d <= 1000000 && d * d <= k; ++d) {
        if (k % d == 0) {
            int e = 0;
            while (k % d == 0) {
                k /= d;
                ++e;
            }
            out.emplace_back(d, e);
        }
    }
    if (k > 1) {
        // Cofactor beyond the trial-division bound: prime iff k <= 10^12
        // (a composite would have a factor below 10^6, already removed).
        if (k > 1000000000000ULL)
            throw std::invalid_argument("factorize: cofactor " + std::to_string(k) +
                                        " exceeds the trial-division bound");
        out.emplace_back(k, 1);
    }
    return out;
}

mpz_class pow_mpz(const mpz_class& base, unsigned long exp) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

int64_t pow_i64_checked(int64_t p, int e) {
    if (p < 0 || e < 0)
        throw std::invalid_argument("pow_i64_checked: negative input");
    int64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > INT64_MAX / (p == 0 ? 1 : p))
            throw std::overflow_error("p^" + std::to_string(e) + " does not fit in 64 bits");
        r *= p;
    }
    return r;
}

} // namespace subring
