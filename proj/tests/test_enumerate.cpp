#include <doctest.h>

#include <stdexcept>

#include <random>

#include "subring/enumerate.hpp"
#include "subring/hnf.hpp"

using namespace subring;

namespace {

// Reference count: iterate every candidate, materialize, run the public
// subring predicate. Exercises a completely different code path from the
// backtracking walker (exact rationals vs 128-bit, no pruning).
mpz_class count_by_bruteforce(const Composition& alpha, int64_t p) {
    const int m = alpha.length();
    std::vector<int64_t> ranges;
    for (int i = 1; i <= m; ++i) {
        int64_t r = 1;
        for (int t = 1; t < alpha.parts[i - 1]; ++t)
            r *= p;
        for (int j = i + 1; j <= m; ++j)
            ranges.push_back(r);
    }
    // the candidate stores digits row by row, matching ranges above
    std::vector<int64_t> digits(ranges.size(), 0);
    mpz_class count = 0;
    for (;;) {
        IrreducibleCandidate cand{p, alpha, digits};
        if (is_subring_matrix(cand.materialize()))
            ++count;
        size_t t = 0;
        while (t < digits.size() && ++digits[t] == ranges[t]) {
            digits[t] = 0;
            ++t;
        }
        if (t == digits.size())
            break;
    }
    return count;
}

} // namespace

TEST_CASE("count_g_alpha known values") {
    EnumerateOptions opt;
    opt.jobs = 1;
    CHECK(count_g_alpha(Composition({2, 1, 1}), 3, opt) == 9); // p^{n-2}
    for (int64_t p : {2, 3, 5})
        CHECK(count_g_alpha(Composition({1, 1, 1}), p, opt) == 1);
    CHECK(count_g_alpha(Composition({2, 1, 4, 2}), 2, opt) == 32); // 3p^4 - 2p^3
    for (int e = 1; e <= 6; ++e)
        CHECK(count_g_alpha(Composition({e}), 3, opt) == 1);
}

TEST_CASE("walker agrees with the exact-arithmetic brute force") {
    EnumerateOptions opt;
    opt.jobs = 2;
    std::vector<std::pair<Composition, int64_t>> cases = {
        {Composition({2, 2}), 5},      {Composition({3, 1, 2}), 2},
        {Composition({2, 2, 1}), 3},   {Composition({1, 3, 2}), 2},
        {Composition({2, 1, 2}), 3},   {Composition({4, 2}), 3},
        {Composition({2, 2, 2}), 2},   {Composition({3, 2, 1}), 2},
    };
    for (const auto& [alpha, p] : cases)
        CHECK_MESSAGE(count_g_alpha(alpha, p, opt) == count_by_bruteforce(alpha, p),
                      "alpha=", alpha.str(), " p=", p);
}

TEST_CASE("count_g_n values") {
    EnumerateOptions opt;
    CHECK(count_g_n(3, 9, 2, opt) == 33);  // p^3+4p^2+4p+1 at p=2
    CHECK(count_g_n(4, 9, 2, opt) == 455); // 11p^4+30p^3+9p^2+p+1 at p=2
    CHECK(count_g_n(3, 1, 7, opt) == 0);   // e < n-1
    CHECK(count_g_n(4, 0, 2, opt) == 0);
    for (int n = 2; n <= 8; ++n)
        for (int64_t p : {2, 3})
            CHECK(count_g_n(n, n - 1, p, opt) == 1); // only composition (1,...,1)
}

TEST_CASE("gn recurrence") {
    EnumerateOptions opt;
    CHECK(check_gn_recurrence(3, 4, 2, opt));
    CHECK(check_gn_recurrence(4, 5, 3, opt));
    CHECK(check_gn_recurrence(3, 2, 5, opt)); // both sides 1
    CHECK(check_gn_recurrence(5, 7, 2, opt));
    CHECK_THROWS_AS(check_gn_recurrence(3, 1, 2, opt), std::invalid_argument);
}

TEST_CASE("determinism under re-partitioning") {
    Composition alpha({3, 2, 2});
    for (int64_t p : {2, 3}) {
        EnumerateOptions seq;
        seq.jobs = 1;
        mpz_class reference = count_g_alpha(alpha, p, seq);

        EnumerateOptions par;
        par.jobs = 4;
        CHECK(count_g_alpha(alpha, p, par) == reference);

        par.prefix_depth = 2;
        CHECK(count_g_alpha(alpha, p, par) == reference);

        // manual split over the first free entry
        int64_t range = p * p; // alpha_1 - 1 = 2 digits
        mpz_class total = 0;
        for (int64_t b = 0; b < range; ++b)
            total += count_task(EnumerationTask{alpha, p, {b}});
        CHECK(total == reference);
    }
}

TEST_CASE("budget refusal names the size") {
    EnumerateOptions opt;
    opt.budget = 1000;
    Composition alpha({5, 1, 1, 1, 1}); // space p^16
    try {
        count_g_alpha(alpha, 2, opt);
        FAIL("expected BudgetError");
    } catch (const BudgetError& e) {
        CHECK(e.size() == "65536");
        CHECK(std::string(e.what()).find("65536") != std::string::npos);
    }
    CHECK(search_space_size(alpha, 2) == 65536);
}

TEST_CASE("count is bounded by the raw space") {
    std::mt19937_64 rng(99);
    EnumerateOptions opt;
    for (int iter = 0; iter < 30; ++iter) {
        int m = 1 + int(rng() % 4);
        std::vector<int> parts(m);
        for (auto& a : parts)
            a = 1 + int(rng() % 3);
        Composition alpha(parts);
        int64_t p = (rng() % 2) ? 2 : 3;
        CHECK(count_g_alpha(alpha, p, opt) <= search_space_size(alpha, p));
    }
}

TEST_CASE("input validation") {
    EnumerateOptions opt;
    CHECK_THROWS_AS(count_g_alpha(Composition({2, 1}), 4, opt), std::invalid_argument);
    CHECK_THROWS_AS(count_g_n(1, 3, 2, opt), std::invalid_argument);
}
