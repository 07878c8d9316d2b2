#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <random>

#include "subring/variety.hpp"

using namespace subring;

TEST_CASE("parse and brute force basics") {
    // single polynomial x1 over F_p: one zero
    for (int64_t p : {2, 5}) {
        FpSystem sys = parse_system("x1", p);
        CHECK(sys.nvars == 1);
        CHECK(count_points_bruteforce(sys) == 1);
    }
    // no constraints: p^2 points
    FpSystem empty = parse_system("vars 2\n", 7);
    CHECK(empty.nvars == 2);
    CHECK(count_points_bruteforce(empty) == 49);

    FpSystem affine = parse_system("x1 + 2*x2 - 1", 5);
    CHECK(count_points_bruteforce(affine) == 5);

    CHECK_THROWS_AS(parse_system("x0", 5), std::invalid_argument);
    CHECK_THROWS_AS(parse_system("x1 + + x2", 5), std::invalid_argument);
    CHECK_THROWS_AS(parse_system("vars 1\nx2", 5), std::invalid_argument);
    CHECK_THROWS_AS(parse_system("x1", 6), std::invalid_argument); // p not prime
}

TEST_CASE("builtin system point counts") {
    CHECK(count_points_32211(2) == 164);
    CHECK(count_points_32211(3) == 915);

    // fast path equals brute force at small p
    for (int64_t p : {2, 3, 5})
        CHECK(count_points_32211(p) == count_points_bruteforce(builtin_system_32211(p)));

    // N_p formula through p = 7 here (the acceptance suite goes to 19)
    for (int64_t p : {2, 3, 5, 7}) {
        mpz_class expected = mpz_class(p) * p * p * (mpz_class(p) * p + 12 * p - 20) +
                             30 * mpz_class(p) * p - 10 * p;
        CHECK(count_points_32211(p) == expected);
    }
}

TEST_CASE("point count invariant under variable relabeling") {
    std::mt19937_64 rng(4242);
    const int64_t p = 3;
    mpz_class reference = count_points_bruteforce(builtin_system_32211(p));
    for (int iter = 0; iter < 5; ++iter) {
        std::vector<int> perm(8);
        for (int i = 0; i < 8; ++i)
            perm[i] = i + 1;
        std::shuffle(perm.begin(), perm.end(), rng);
        FpSystem sys = builtin_system_32211(p);
        for (auto& poly : sys.polys)
            for (auto& term : poly.terms)
                for (auto& pw : term.powers)
                    pw.first = perm[pw.first - 1];
        CHECK(count_points_bruteforce(sys) == reference);
    }
}

TEST_CASE("brute force budget refusal") {
    CHECK_THROWS_AS(count_points_bruteforce(builtin_system_32211(19)), BudgetError); // 19^8 > 10^10
    CHECK_NOTHROW(count_points_32211(19));
    CHECK_THROWS_AS(count_points_32211(101), std::invalid_argument);
}

TEST_CASE("g(3,2,2,1,1) conjecture check at p=2") {
    ConjectureReport rep = check_g32211_conjecture(2);
    CHECK(rep.conjectured == 1040);
    CHECK(rep.enumerated == 1040);
    CHECK(rep.match);
}
