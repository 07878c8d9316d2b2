#include <doctest.h>

#include <stdexcept>

#include "subring/bounds.hpp"
#include "subring/enumerate.hpp"
#include "subring/errors.hpp"

using namespace subring;

TEST_CASE("m_beta and its hypotheses") {
    CHECK(m_beta(Composition({3, 2, 2, 1, 1})) == 1);
    CHECK(m_beta(Composition({4, 3, 3})) == 2);
    try {
        m_beta(Composition({2, 1, 1})); // weight 4 equals n
        FAIL("expected GuardError");
    } catch (const GuardError& e) {
        CHECK(std::string(e.what()).find("weight") != std::string::npos);
    }
    CHECK_THROWS_AS(m_beta(Composition({1, 3, 3})), GuardError);
    CHECK(prop73_applicable(Composition({3, 2, 2, 1, 1})));
    CHECK_FALSE(prop73_applicable(Composition({2, 1, 1})));
}

TEST_CASE("prop73 lower bound") {
    CHECK(lower_bound_prop73(Composition({3, 2, 2, 1, 1}), 2) == 16); // p^4
    CHECK(lower_bound_prop73(Composition({4, 3, 3}), 3) == 81);      // p^4 with n-2=2, m=2
    // (k, l, ..., l): p^{floor(k/2)(n-2)}
    CHECK(lower_bound_prop73(Composition({5, 2, 2}), 2) == 16);
}

TEST_CASE("g_n lower bound") {
    for (int64_t p : {2, 3, 5})
        CHECK(lower_bound_gn(3, 9, p) == 2 * p * p + 3 * p);
    CHECK(lower_bound_gn(3, 2, 7) == 0); // empty sum
    CHECK_THROWS_AS(lower_bound_gn(2, 9, 2), std::invalid_argument);

    EnumerateOptions opt;
    CHECK(lower_bound_gn(3, 9, 2) <= count_g_n(3, 9, 2, opt)); // 14 <= 33
    mpz_class g48 = count_g_n(4, 8, 2, opt);
    CHECK(lower_bound_gn(4, 8, 2) <= g48);
}

TEST_CASE("composition class sizes") {
    // the binomial differences are nonnegative under the zero convention and
    // telescope to the number of compositions of e - n
    for (int n = 3; n <= 6; ++n)
        for (int e = 0; e <= 20; ++e) {
            mpz_class total = 0;
            for (int j = 1; j <= e; ++j) {
                mpz_class size = composition_class_size(n, e, j);
                CHECK(size >= 0);
                total += size;
            }
            mpz_class direct = 0;
            if (e - n >= n - 1)
                direct = compositions(e - n, n - 1).size();
            CHECK(total == direct);
        }
}

TEST_CASE("growth probe") {
    EnumerateOptions opt;
    GrowthProbeReport rep = growth_probe(Composition({2, 2}), 1, 1, 3, 2, opt);
    CHECK(rep.gamma == 2);
    REQUIRE(rep.rows.size() == 3);
    CHECK(rep.rows[0].alpha_k == Composition({2, 2}));
    CHECK(rep.rows[1].alpha_k == Composition({4, 2}));
    CHECK(rep.rows[2].alpha_k == Composition({6, 2}));
    REQUIRE(rep.rows[0].count.has_value());
    CHECK(*rep.rows[0].count == count_g_alpha(Composition({2, 2}), 2, opt));

    // k = 1 reproduces alpha itself
    GrowthProbeReport same = growth_probe(Composition({2, 2}), 2, 1, 1, 3, opt);
    CHECK(*same.rows[0].count == count_g_alpha(Composition({2, 2}), 3, opt));

    // gamma = max over the first t parts
    GrowthProbeReport g = growth_probe(Composition({2, 3, 2}), 2, 1, 1, 2, opt);
    CHECK(g.gamma == 3);

    CHECK_THROWS_AS(growth_probe(Composition({2, 1}), 1, 1, 2, 2, opt), GuardError);
    CHECK_THROWS_AS(growth_probe(Composition({2, 2}), 3, 1, 2, 2, opt), std::invalid_argument);
}
