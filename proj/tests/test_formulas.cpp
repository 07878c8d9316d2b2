#include <doctest.h>

#include <stdexcept>

#include "subring/formulas.hpp"
#include "subring/util.hpp"

using namespace subring;

TEST_CASE("builtin table parses") {
    const FormulaTable& t = FormulaTable::builtin();
    CHECK(t.version() == 1);
    CHECK(t.find("g:(2,3,2,2)") != nullptr);
    CHECK(t.find("f:e=4") != nullptr);
    CHECK(t.find("f:e=9-minus-gamma") != nullptr);
    CHECK(t.find("conj:g(3,2,2,1,1)") != nullptr);
    CHECK(t.find("gn:5:9") != nullptr);
    CHECK(t.find("nope") == nullptr);
}

TEST_CASE("family matching and evaluation") {
    const FormulaTable& t = FormulaTable::builtin();

    // (beta,1,...,1) with beta >= 3: (n-1) p^{n-2}
    Composition a311({3, 1, 1});
    const FormulaEntry* fam = t.family_for(a311);
    REQUIRE(fam != nullptr);
    CHECK(t.eval_g(*fam, a311, 2) == 12);

    // (2,1,...,1,beta,1,...,1) with beta = 2 at k=2, r=1: p^2 + 2p(p-1)
    Composition a221({2, 2, 1});
    fam = t.family_for(a221);
    REQUIRE(fam != nullptr);
    CHECK(t.eval_g(*fam, a221, 2) == 8);

    // guard violation carries the failed hypothesis
    Composition bad({2, 1, 1, 1}); // head-ones with beta = 2 matches; (b,1*,g) must not
    const FormulaEntry* headones = t.find("g-fam:(b,1*)#b=2");
    REQUIRE(headones != nullptr);
    CHECK(t.eval_g(*headones, bad, 3) == 27); // p^{n-2}, n=5

    const FormulaEntry* bg = t.find("g-fam:(b,1*,g)");
    REQUIRE(bg != nullptr);
    CHECK_THROWS_AS(t.eval_g(*bg, Composition({2, 1, 2}), 3), GuardError); // beta > 2 fails
    CHECK_NOTHROW(t.eval_g(*bg, Composition({3, 1, 1, 2}), 3));           // gamma = beta-1 is fine
    try {
        t.eval_g(*bg, Composition({4, 1, 1, 2}), 3); // gamma = 2 < beta-1 = 3
        FAIL("expected GuardError");
    } catch (const GuardError& e) {
        CHECK(std::string(e.what()).find("gamma >= beta-1") != std::string::npos);
    }
}

TEST_CASE("at most one family applies to any composition") {
    const FormulaTable& t = FormulaTable::builtin();
    int covered = 0;
    for (int w = 1; w <= 9; ++w)
        for (int len = 1; len <= w; ++len)
            for (const auto& alpha : compositions(w, len))
                if (t.family_for(alpha)) // throws if two families claim alpha
                    ++covered;
    CHECK(covered > 100);
}

TEST_CASE("f closed forms") {
    const FormulaTable& t = FormulaTable::builtin();
    CHECK(t.eval_f_closed(0, 5, 7) == 1);
    CHECK(t.eval_f_closed(1, 4, 3) == 6);           // binom(4,2)
    CHECK(t.eval_f_closed(3, 3, 2) == 6);           // p + 4 at p=2
    CHECK(t.eval_f_closed(2, 4, 5) == 6 + 4 + 3);   // binom(4,2)+binom(4,3)+3binom(4,4)
    CHECK_THROWS_AS(t.eval_f_closed(5, 7, 2), GuardError);
    CHECK_THROWS_AS(t.eval_f_closed(6, 3, 2), GuardError);
}

TEST_CASE("f9 minus gamma") {
    const FormulaTable& t = FormulaTable::builtin();
    for (int64_t p : {2, 3, 5})
        CHECK(t.eval_f9_minus_gamma(2, p) == 1); // only binom(2,2) survives
    CHECK(t.eval_f9_minus_gamma(3, 2) == 36);    // 3 + (8+16+8+1)
    CHECK_THROWS_AS(t.eval_f9_minus_gamma(1, 2), GuardError);
}

TEST_CASE("gamma term via hockey stick") {
    // binom(n,6) vanishes through n = 5; at n = 6 the k = 6 summand is 1
    CHECK(gamma_term(5, 2, 12345) == 0);
    CHECK(gamma_term(6, 2, 12345) == 12345);
    CHECK(gamma_term(7, 2, 1040) == 7 * 1040);
    mpz_class G = 99;
    CHECK(gamma_term(8, 3, G) == 28 * G);
    // direct summation agrees with binom(n,6)
    for (long n = 2; n <= 40; ++n) {
        mpz_class direct = 0;
        for (long k = 2; k <= n; ++k)
            direct += binomial(k - 1, 5);
        CHECK(direct == binomial(n, 6));
    }
}

TEST_CASE("eval_formula by id") {
    CHECK(eval_formula("g:(2,1,1,5)", 3) == 27); // p^3
    CHECK(eval_formula("f:e=2", 5, 4) == 13);
    CHECK(eval_formula("conj:variety-32211", 2) == 164);
    CHECK(eval_formula("g-fam:(b,1*)#b>=3", 2, std::nullopt, Composition({3, 1, 1})) == 12);
    CHECK_THROWS_AS(eval_formula("f:e=2", 5), std::invalid_argument);       // needs n
    CHECK_THROWS_AS(eval_formula("no-such-id", 2), std::invalid_argument);
}

TEST_CASE("verify suite smoke") {
    VerifyOptions vo;
    vo.primes = {2};
    vo.n_max = 4;
    VerifyReport rep = verify_suite("theorem1.2", vo);
    CHECK(rep.failures == 0);
    CHECK(rep.refusals == 0);
    CHECK(rep.rows.size() > 10);
    CHECK_THROWS_AS(verify_suite("bogus", vo), std::invalid_argument);
}

TEST_CASE("table file round trip") {
    // the shipped text file parses to the same entries as the embedded copy
    FormulaTable from_file = FormulaTable::load_file(std::string(SUBRING_SOURCE_DIR) +
                                                     "/data/formula_table.txt");
    const FormulaTable& baked = FormulaTable::builtin();
    REQUIRE(from_file.entries().size() == baked.entries().size());
    for (size_t i = 0; i < baked.entries().size(); ++i)
        CHECK(from_file.entries()[i].id == baked.entries()[i].id);
}
