#include "subring/variety.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "subring/formulas.hpp"
#include "subring/util.hpp"

namespace subring {

namespace {

int64_t mod_reduce(int64_t v, int64_t p) {
    int64_t r = v % p;
    return r < 0 ? r + p : r;
}

int64_t pow_mod(int64_t base, int64_t exp, int64_t p) {
    int64_t r = 1;
    base = mod_reduce(base, p);
    while (exp > 0) {
        if (exp & 1)
            r = (__int128)r * base % p;
        base = (__int128)base * base % p;
        exp >>= 1;
    }
    return r;
}

// square root mod an odd prime via Tonelli-Shanks; -1 if a is a non-residue
int64_t sqrt_mod(int64_t a, int64_t p) {
    a = mod_reduce(a, p);
    if (a == 0)
        return 0;
    if (pow_mod(a, (p - 1) / 2, p) != 1)
        return -1;
    if (p % 4 == 3)
        return pow_mod(a, (p + 1) / 4, p);
    // factor p-1 = q * 2^s with q odd
    int64_t q = p - 1;
    int s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    int64_t z = 2;
    while (pow_mod(z, (p - 1) / 2, p) != p - 1)
        ++z;
    int64_t m = s;
    int64_t c = pow_mod(z, q, p);
    int64_t t = pow_mod(a, q, p);
    int64_t r = pow_mod(a, (q + 1) / 2, p);
    while (t != 1) {
        int64_t i = 0;
        int64_t tt = t;
        while (tt != 1) {
            tt = (__int128)tt * tt % p;
            ++i;
        }
        int64_t b = pow_mod(c, int64_t(1) << (m - i - 1), p);
        m = i;
        c = (__int128)b * b % p;
        t = (__int128)t * c % p;
        r = (__int128)r * b % p;
    }
    return r;
}

// roots of t^2 - t - c over F_p (0, 1 or 2 of them)
struct QuadRoots {
    int count = 0;
    int64_t root[2] = {0, 0};
};

QuadRoots quad_roots(int64_t c, int64_t p) {
    QuadRoots out;
    c = mod_reduce(c, p);
    if (p == 2) {
        // t^2 - t vanishes identically on F_2
        if (c == 0) {
            out.count = 2;
            out.root[0] = 0;
            out.root[1] = 1;
        }
        return out;
    }
    int64_t disc = mod_reduce(1 + 4 * c, p);
    if (disc == 0) {
        out.count = 1;
        out.root[0] = (__int128)(1) * pow_mod(2, p - 2, p) % p;
        return out;
    }
    int64_t s = sqrt_mod(disc, p);
    if (s < 0)
        return out;
    int64_t inv2 = pow_mod(2, p - 2, p);
    out.count = 2;
    out.root[0] = (__int128)mod_reduce(1 + s, p) * inv2 % p;
    out.root[1] = (__int128)mod_reduce(1 - s, p) * inv2 % p;
    return out;
}

} // namespace

FpSystem parse_system(const std::string& text, int64_t p) {
    require_prime(p);
    FpSystem sys;
    sys.p = p;
    sys.nvars = 0;
    int declared_vars = -1;

    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        // trim
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos)
            continue;
        size_t b = line.find_last_not_of(" \t\r");
        std::string s = line.substr(a, b - a + 1);

        if (s.rfind("vars", 0) == 0) {
            declared_vars = std::stoi(s.substr(4));
            continue;
        }

        auto fail = [&](const std::string& msg) {
            throw std::invalid_argument("system line " + std::to_string(lineno) + ": " + msg);
        };

        FpPoly poly;
        size_t pos = 0;
        auto skip_ws = [&] {
            while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
                ++pos;
        };
        int sign = 1;
        skip_ws();
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        }
        for (;;) {
            FpTerm term;
            term.coeff = sign;
            bool saw_factor = false;
            for (;;) {
                skip_ws();
                if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                    size_t start = pos;
                    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                        ++pos;
                    int64_t v = std::stoll(s.substr(start, pos - start));
                    term.coeff = mod_reduce((__int128)term.coeff * v % p, p);
                    saw_factor = true;
                } else if (pos < s.size() && s[pos] == 'x') {
                    ++pos;
                    size_t start = pos;
                    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                        ++pos;
                    if (start == pos)
                        fail("variable index expected after 'x'");
                    int var = std::stoi(s.substr(start, pos - start));
                    if (var < 1)
                        fail("variable indices are 1-based");
                    int exp = 1;
                    if (pos < s.size() && s[pos] == '^') {
                        ++pos;
                        size_t es = pos;
                        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                            ++pos;
                        if (es == pos)
                            fail("exponent expected after '^'");
                        exp = std::stoi(s.substr(es, pos - es));
                        if (exp < 1)
                            fail("exponents must be >= 1");
                    }
                    bool merged = false;
                    for (auto& pw : term.powers)
                        if (pw.first == var) {
                            pw.second += exp;
                            merged = true;
                        }
                    if (!merged)
                        term.powers.emplace_back(var, exp);
                    sys.nvars = std::max(sys.nvars, var);
                    saw_factor = true;
                } else {
                    fail("factor expected");
                }
                skip_ws();
                if (pos < s.size() && s[pos] == '*') {
                    ++pos;
                    continue;
                }
                break;
            }
            if (!saw_factor)
                fail("empty term");
            term.coeff = mod_reduce(term.coeff, p);
            poly.terms.push_back(std::move(term));

            skip_ws();
            if (pos >= s.size())
                break;
            if (s[pos] == '+')
                sign = 1;
            else if (s[pos] == '-')
                sign = -1;
            else
                fail(std::string("unexpected character '") + s[pos] + "'");
            ++pos;
        }
        sys.polys.push_back(std::move(poly));
    }
    if (declared_vars >= 0) {
        if (sys.nvars > declared_vars)
            throw std::invalid_argument("system uses x" + std::to_string(sys.nvars) +
                                        " but declares vars " + std::to_string(declared_vars));
        sys.nvars = declared_vars;
    }
    if (sys.polys.empty() && sys.nvars == 0)
        sys.nvars = 0;
    return sys;
}

FpSystem builtin_system_32211(int64_t p) {
    return parse_system("x3^2 - x3 - x2*x7^2 + x2*x7 - x1*x5^2 + x1*x5\n"
                        "x4^2 - x4 - x2*x8^2 + x2*x8 - x1*x6^2 + x1*x6\n"
                        "x3*x4 - x2*x7*x8 - x1*x5*x6\n",
                        p);
}

namespace {

int64_t eval_poly(const FpPoly& poly, const std::vector<int64_t>& x, int64_t p) {
    int64_t acc = 0;
    for (const auto& term : poly.terms) {
        int64_t v = term.coeff;
        for (auto [var, exp] : term.powers)
            for (int i = 0; i < exp; ++i)
                v = (__int128)v * x[var - 1] % p;
        acc = (acc + v) % p;
    }
    return acc;
}

} // namespace

mpz_class count_points_bruteforce(const FpSystem& sys, uint64_t budget, int jobs) {
    const int64_t p = sys.p;
    mpz_class space = pow_mpz(p, sys.nvars);
    if (space > mpz_class(budget))
        throw BudgetError("brute-force space p^" + std::to_string(sys.nvars) + " = " +
                              space.get_str() + " exceeds the budget of " + std::to_string(budget),
                          space.get_str());
    if (sys.nvars == 0)
        return sys.polys.empty() ? 1 : 0;

    int nthreads = jobs > 0 ? jobs : std::max(1u, std::thread::hardware_concurrency());
    nthreads = std::min<int64_t>(nthreads, p);

    // split on the first variable
    std::vector<uint64_t> partial(nthreads, 0);
    auto work = [&](int tid) {
        std::vector<int64_t> x(sys.nvars, 0);
        uint64_t local = 0;
        for (int64_t first = tid; first < p; first += nthreads) {
            x[0] = first;
            std::fill(x.begin() + 1, x.end(), 0);
            for (;;) {
                bool all_zero = true;
                for (const auto& poly : sys.polys)
                    if (eval_poly(poly, x, p) != 0) {
                        all_zero = false;
                        break;
                    }
                if (all_zero)
                    ++local;
                int i = 1;
                while (i < sys.nvars && ++x[i] == p) {
                    x[i] = 0;
                    ++i;
                }
                if (i == sys.nvars)
                    break;
            }
        }
        partial[tid] = local;
    };
    if (sys.nvars == 1) {
        uint64_t c = 0;
        std::vector<int64_t> x(1);
        for (int64_t v = 0; v < p; ++v) {
            x[0] = v;
            bool ok = true;
            for (const auto& poly : sys.polys)
                if (eval_poly(poly, x, p) != 0) {
                    ok = false;
                    break;
                }
            if (ok)
                ++c;
        }
        return mpz_class(c);
    }
    std::vector<std::thread> threads;
    for (int t = 0; t < nthreads; ++t)
        threads.emplace_back(work, t);
    for (auto& t : threads)
        t.join();
    mpz_class total = 0;
    for (uint64_t c : partial)
        total += mpz_class(c);
    return total;
}

mpz_class count_points_32211(int64_t p, int jobs) {
    require_prime(p);
    if (p > 97)
        throw std::invalid_argument("count_points_32211: p <= 97 required");

    // q(t) = t^2 - t, and the root sets of t^2 - t - c for every c
    std::vector<int64_t> q(p);
    for (int64_t t = 0; t < p; ++t)
        q[t] = mod_reduce(t * t - t, p);
    std::vector<QuadRoots> roots(p);
    for (int64_t c = 0; c < p; ++c)
        roots[c] = quad_roots(c, p);

    int nthreads = jobs > 0 ? jobs : std::max(1u, std::thread::hardware_concurrency());
    nthreads = std::min<int64_t>(nthreads, p);

    std::vector<uint64_t> partial(nthreads, 0);
    auto work = [&](int tid) {
        uint64_t local = 0;
        for (int64_t x1 = tid; x1 < p; x1 += nthreads)
            for (int64_t x2 = 0; x2 < p; ++x2)
                for (int64_t x5 = 0; x5 < p; ++x5)
                    for (int64_t x7 = 0; x7 < p; ++x7) {
                        const int64_t c1 = (x2 * q[x7] + x1 * q[x5]) % p;
                        const QuadRoots& r1 = roots[c1];
                        if (r1.count == 0)
                            continue;
                        const int64_t x27 = x2 * x7 % p;
                        const int64_t x15 = x1 * x5 % p;
                        for (int64_t x6 = 0; x6 < p; ++x6) {
                            const int64_t a6 = x1 * q[x6] % p;
                            const int64_t m6 = x15 * x6 % p;
                            for (int64_t x8 = 0; x8 < p; ++x8) {
                                const int64_t c2 = (x2 * q[x8] + a6) % p;
                                const QuadRoots& r2 = roots[c2];
                                if (r2.count == 0)
                                    continue;
                                const int64_t rhs = (x27 * x8 + m6) % p;
                                for (int i = 0; i < r1.count; ++i)
                                    for (int j = 0; j < r2.count; ++j)
                                        if (r1.root[i] * r2.root[j] % p == rhs)
                                            ++local;
                            }
                        }
                    }
        partial[tid] = local;
    };
    std::vector<std::thread> threads;
    for (int t = 0; t < nthreads; ++t)
        threads.emplace_back(work, t);
    for (auto& t : threads)
        t.join();
    mpz_class total = 0;
    for (uint64_t c : partial)
        total += mpz_class(c);
    return total;
}

ConjectureReport check_g32211_conjecture(int64_t p, const EnumerateOptions& opt) {
    ConjectureReport rep;
    rep.enumerated = count_g_alpha(Composition({3, 2, 2, 1, 1}), p, opt);
    rep.conjectured = FormulaTable::builtin().conjecture("g(3,2,2,1,1)").eval_z(p);
    rep.match = (rep.enumerated == rep.conjectured);
    return rep;
}

} // namespace subring
