#include "subring/recursion.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

#include "subring/hnf.hpp"
#include "subring/util.hpp"

namespace subring {

std::string method_name(CountMethod m) {
    switch (m) {
    case CountMethod::enumeration: return "enumeration";
    case CountMethod::recursion: return "recursion";
    case CountMethod::direct: return "direct";
    case CountMethod::formula: return "formula";
    }
    return "?";
}

mpz_class f_prime_power(int n, int e, int64_t p, const GProvider& gprov) {
    if (n < 0 || e < 0)
        throw std::invalid_argument("f_prime_power: n and e must be >= 0");
    require_prime(p);

    // g_j(p^i) with the j = 1 convention and the j >= 2 vanishing rule
    // (no composition of i into j-1 parts when i < j-1).
    std::map<std::pair<int, int>, mpz_class> gmemo;
    auto g = [&](int j, int i) -> const mpz_class& {
        auto key = std::make_pair(j, i);
        auto it = gmemo.find(key);
        if (it != gmemo.end())
            return it->second;
        mpz_class v;
        if (j == 1)
            v = (i == 0) ? 1 : 0;
        else if (i < j - 1)
            v = 0;
        else
            v = gprov(j, i);
        return gmemo.emplace(key, std::move(v)).first->second;
    };

    // f[nn][ee] with f_0(p^0) = 1, f_0(p^m) = 0
    std::vector<std::vector<mpz_class>> f(n + 1, std::vector<mpz_class>(e + 1, 0));
    f[0][0] = 1;
    for (int nn = 1; nn <= n; ++nn)
        for (int ee = 0; ee <= e; ++ee) {
            mpz_class acc = 0;
            for (int j = 1; j <= nn; ++j) {
                mpz_class c = binomial(nn - 1, j - 1);
                for (int i = 0; i <= ee; ++i) {
                    if (j >= 2 && i < j - 1)
                        continue;
                    const mpz_class& gv = g(j, i);
                    if (gv == 0)
                        continue;
                    acc += c * f[nn - j][ee - i] * gv;
                }
            }
            f[nn][ee] = acc;
        }
    return f[n][e];
}

CountValue f_prime_power(int n, int e, int64_t p, const EnumerateOptions& opt) {
    auto g = [&](int j, int i) { return count_g_n(j, i, p, opt); };
    return CountValue{f_prime_power(n, e, p, g), CountMethod::recursion};
}

CountValue f_general(int n, uint64_t k, const EnumerateOptions& opt) {
    if (k == 0)
        throw std::invalid_argument("f_general: k must be >= 1");
    mpz_class result = 1;
    for (auto [prime, exp] : factorize(k)) {
        if (prime > static_cast<uint64_t>(INT64_MAX))
            throw std::invalid_argument("f_general: prime factor too large");
        result *= f_prime_power(n, exp, static_cast<int64_t>(prime), opt).value;
    }
    return CountValue{result, CountMethod::recursion};
}

namespace {

// Ordered tuples d_1 ... d_n of positive integers with product k.
void divisor_tuples(int n, uint64_t k, std::vector<int64_t>& cur,
                    std::vector<std::vector<int64_t>>& out) {
    if (n == 1) {
        cur.push_back(static_cast<int64_t>(k));
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (uint64_t d = 1; d <= k; ++d) {
        if (k % d != 0)
            continue;
        cur.push_back(static_cast<int64_t>(d));
        divisor_tuples(n - 1, k / d, cur, out);
        cur.pop_back();
    }
}

mpz_class tuple_space(const std::vector<int64_t>& diag) {
    const int n = static_cast<int>(diag.size());
    mpz_class s = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            s *= diag[i - 1];
    return s;
}

} // namespace

mpz_class f_direct_space(int n, uint64_t k) {
    std::vector<std::vector<int64_t>> tuples;
    std::vector<int64_t> cur;
    divisor_tuples(n, k, cur, tuples);
    mpz_class total = 0;
    for (const auto& d : tuples)
        total += tuple_space(d);
    return total;
}

CountValue f_direct(int n, uint64_t k, uint64_t budget) {
    if (n < 1 || k == 0)
        throw std::invalid_argument("f_direct: need n >= 1 and k >= 1");
    mpz_class space = f_direct_space(n, k);
    if (space > mpz_class(budget))
        throw BudgetError("f_direct(" + std::to_string(n) + "," + std::to_string(k) + ") iterates " +
                              space.get_str() + " matrices, over the budget of " + std::to_string(budget),
                          space.get_str());

    std::vector<std::vector<int64_t>> tuples;
    std::vector<int64_t> cur;
    divisor_tuples(n, k, cur, tuples);

    mpz_class count = 0;
    std::vector<std::pair<int, int>> entries; // off-diagonal positions
    for (const auto& diag : tuples) {
        entries.clear();
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (diag[i - 1] > 1)
                    entries.emplace_back(i, j);

        std::vector<std::vector<int64_t>> rows(n, std::vector<int64_t>(n, 0));
        for (int i = 0; i < n; ++i)
            rows[i][i] = diag[i];

        // odometer over all off-diagonal assignments
        std::vector<int64_t> digits(entries.size(), 0);
        for (;;) {
            for (size_t t = 0; t < entries.size(); ++t)
                rows[entries[t].first - 1][entries[t].second - 1] = digits[t];
            if (is_subring_matrix(HNFMatrix(rows)))
                ++count;
            size_t t = 0;
            while (t < entries.size()) {
                if (++digits[t] < diag[entries[t].first - 1])
                    break;
                digits[t] = 0;
                ++t;
            }
            if (t == entries.size())
                break;
        }
    }
    return CountValue{count, CountMethod::direct};
}

bool check_multiplicativity(int n, uint64_t k1, uint64_t k2, uint64_t budget) {
    if (std::gcd(k1, k2) != 1)
        throw std::invalid_argument("check_multiplicativity: k1 and k2 must be coprime");
    mpz_class lhs = f_direct(n, k1 * k2, budget).value;
    mpz_class rhs = f_direct(n, k1, budget).value * f_direct(n, k2, budget).value;
    return lhs == rhs;
}

} // namespace subring
