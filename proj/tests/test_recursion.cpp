#include <doctest.h>

#include <stdexcept>

#include "subring/recursion.hpp"

using namespace subring;

TEST_CASE("f_prime_power base identities") {
    EnumerateOptions opt;
    for (int64_t p : {2, 3, 5}) {
        for (int n = 2; n <= 6; ++n)
            CHECK(f_prime_power(n, 0, p, opt).value == 1);
        // f_1(p^e) = [e = 0], f_2(p^e) = 1: pins the base-case conventions
        for (int e = 0; e <= 9; ++e) {
            CHECK(f_prime_power(1, e, p, opt).value == (e == 0 ? 1 : 0));
            CHECK(f_prime_power(2, e, p, opt).value == 1);
        }
    }
}

TEST_CASE("f_prime_power small closed forms") {
    EnumerateOptions opt;
    CHECK(f_prime_power(4, 1, 3, opt).value == 6); // binom(4,2)
    for (int64_t p : {2, 3, 5})
        CHECK(f_prime_power(3, 3, p, opt).value == p + 4);
    CHECK(f_prime_power(3, 3, 2, opt).value == 6);
}

TEST_CASE("f_general multiplicativity route") {
    EnumerateOptions opt;
    CHECK(f_general(3, 6, opt).value == 9); // 3 * 3
    CHECK(f_general(5, 1, opt).value == 1);
    for (uint64_t k : {2, 3, 4, 6, 9, 12, 30})
        CHECK(f_general(2, k, opt).value == 1);
}

TEST_CASE("f_direct oracle values") {
    for (uint64_t k = 2; k <= 12; ++k)
        CHECK(f_direct(2, k).value == 1);
    CHECK(f_direct(3, 4).value == 4);
    CHECK(f_direct(3, 6).value == 9);
    CHECK(f_direct(3, 6).value == f_general(3, 6).value);
    CHECK(f_direct(1, 1).value == 1);
}

TEST_CASE("recursion equals the direct oracle") {
    EnumerateOptions opt;
    // (n, p^e) pairs kept small here; the acceptance suite extends the range
    for (int n = 2; n <= 4; ++n) {
        for (auto [p, e] : std::vector<std::pair<int64_t, int>>{
                 {2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 1}}) {
            uint64_t k = 1;
            for (int i = 0; i < e; ++i)
                k *= uint64_t(p);
            CHECK_MESSAGE(f_prime_power(n, e, p, opt).value == f_direct(n, k).value,
                          "n=", n, " p=", p, " e=", e);
        }
    }
}

TEST_CASE("multiplicativity on coprime pairs") {
    CHECK(check_multiplicativity(3, 2, 3));
    CHECK(check_multiplicativity(3, 4, 3));
    CHECK(check_multiplicativity(2, 5, 7));
    CHECK_THROWS_AS(check_multiplicativity(3, 4, 6), std::invalid_argument);
}

TEST_CASE("monotone in n at tested points") {
    EnumerateOptions opt;
    for (int64_t p : {2, 3})
        for (int e = 0; e <= 5; ++e)
            for (int n = 2; n <= 5; ++n)
                CHECK(f_prime_power(n + 1, e, p, opt).value >= f_prime_power(n, e, p, opt).value);
}

TEST_CASE("f_direct budget refusal") {
    CHECK_THROWS_AS(f_direct(4, 81, 1000), BudgetError);
    CHECK(f_direct_space(2, 6) == 1 + 2 + 3 + 6); // diag tuples (1,6),(2,3),(3,2),(6,1)
}

TEST_CASE("factorization guard") {
    EnumerateOptions opt;
    CHECK_THROWS_AS(f_general(3, 0, opt), std::invalid_argument);
    CHECK(method_name(f_general(3, 6, opt).method) == "recursion");
    CHECK(method_name(f_direct(3, 6).method) == "direct");
}
