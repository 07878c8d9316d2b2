#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <random>

#include "subring/interpolate.hpp"

using namespace subring;

TEST_CASE("lagrange fit recovers exact polynomials") {
    PolynomialQ cube = lagrange_fit({{2, 8}, {3, 27}, {5, 125}, {7, 343}});
    CHECK(cube == PolynomialQ::variable().pow(3));

    PolynomialQ cst = lagrange_fit({{2, 42}, {3, 42}});
    CHECK(cst == PolynomialQ::constant(42));

    PolynomialQ line = lagrange_fit({{2, 6}, {3, 7}});
    CHECK(line.eval_z(11) == 15); // p + 4

    CHECK_THROWS_AS(lagrange_fit({{2, 1}, {2, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(lagrange_fit({{2, 1}}), std::invalid_argument);
}

TEST_CASE("fit round trip and sample-order independence") {
    std::mt19937_64 rng(31337);
    for (int iter = 0; iter < 100; ++iter) {
        int deg = int(rng() % 7);
        std::vector<mpq_class> coeffs(deg + 1);
        for (auto& c : coeffs)
            c = mpq_class(int64_t(rng() % 41) - 20);
        if (coeffs.back() == 0)
            coeffs.back() = 1;
        PolynomialQ poly(coeffs);

        std::vector<std::pair<mpz_class, mpz_class>> samples;
        for (int x = 0; x <= std::max(deg, 1); ++x)
            samples.emplace_back(x + 2, poly.eval_z(x + 2));
        PolynomialQ fitted = lagrange_fit(samples);
        CHECK(fitted == poly);

        std::shuffle(samples.begin(), samples.end(), rng);
        CHECK(lagrange_fit(samples) == poly);
    }
}

TEST_CASE("fit_and_confirm verdicts") {
    EnumerateOptions opt;

    // constant family: g_(1,1,1) = 1
    FitReport r = fit_and_confirm(Composition({1, 1, 1}), {2, 3}, {5}, opt);
    CHECK(r.status == FitStatus::CONFIRMED);
    CHECK(r.poly == PolynomialQ::constant(1));

    // degree-4 count fitted on five primes, confirmed on a held-out one
    r = fit_and_confirm(Composition({2, 1, 4, 2}), {2, 3, 5, 7, 11}, {13}, opt);
    CHECK(r.status == FitStatus::CONFIRMED);
    CHECK(r.integer_coeffs);
    CHECK(r.poly.eval_z(2) == 32); // 3p^4 - 2p^3

    // no held-out prime: cannot confirm
    r = fit_and_confirm(Composition({2, 1, 4, 2}), {2, 3, 5, 7, 11}, {}, opt);
    CHECK(r.status == FitStatus::UNDETERMINED);

    // two samples cannot witness a degree-4 count
    r = fit_and_confirm(Composition({2, 1, 4, 2}), {2, 3}, {5}, opt);
    CHECK(r.status == FitStatus::REFUTED);

    // budget refusal comes back UNDETERMINED
    EnumerateOptions tight;
    tight.budget = 10;
    r = fit_and_confirm(Composition({3, 2, 2}), {2, 3}, {}, tight);
    CHECK(r.status == FitStatus::UNDETERMINED);
    CHECK_FALSE(r.note.empty());
}
