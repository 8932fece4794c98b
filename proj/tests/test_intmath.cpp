#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "quadpower/intmath.hpp"

using namespace quadpower;

TEST_CASE("isqrt and perfect squares") {
    CHECK(isqrt(Int(0)) == 0);
    CHECK(isqrt(Int(15)) == 3);
    CHECK(isqrt(Int(16)) == 4);
    Int r;
    CHECK(is_square(Int(1369), r));
    CHECK(r == 37);
    CHECK(!is_square(Int(1368)));
    CHECK(!is_square(Int(-4)));
}

TEST_CASE("exact k-th roots") {
    Int r;
    CHECK(exact_kth_root(Int(343), 3, r));
    CHECK(r == 7);
    CHECK(exact_kth_root(Int(-32), 5, r));
    CHECK(r == -2);
    CHECK(!exact_kth_root(Int(-32), 4, r));
    CHECK(!exact_kth_root(Int(100), 3, r));
    CHECK(exact_kth_root(Int(1), 17, r));
    CHECK(r == 1);
}

TEST_CASE("floor and ceil division") {
    CHECK(floor_div(Int(7), Int(2)) == 3);
    CHECK(floor_div(Int(-7), Int(2)) == -4);
    CHECK(ceil_div(Int(7), Int(2)) == 4);
    CHECK(ceil_div(Int(-7), Int(2)) == -3);
    CHECK(mod_floor(Int(-7), Int(4)) == 1);
    CHECK(mod_floor(Int(-3), Int(4)) == 1);
}

TEST_CASE("factorize by trial division") {
    auto f = factorize(Int(735134400));
    Int back = 1;
    for (const auto& [p, e] : f) back *= ipow(p, e);
    CHECK(back == 735134400);
    for (size_t i = 1; i < f.size(); ++i) CHECK(f[i - 1].first < f[i].first);

    CHECK(factorize(Int(-12)) ==
          std::vector<std::pair<Int, unsigned>>{{2, 2}, {3, 1}});
    CHECK(factorize(Int(1)).empty());
    CHECK_THROWS_AS(factorize(Int(0)), std::invalid_argument);
}

TEST_CASE("factoring budget") {
    // 101 * 103: no factor within a trial limit of 10, and the cofactor is
    // too large to certify prime.
    CHECK_THROWS_AS(factorize(Int(101 * 103), Int(10)),
                    FactoringLimitExceeded);
    CHECK_THROWS_AS(smallest_prime_factor(Int(101 * 103), Int(10)),
                    FactoringLimitExceeded);
    // With the default limit both complete.
    CHECK(smallest_prime_factor(Int(101 * 103)) == 101);
    CHECK(smallest_prime_factor(Int(10403), Int(101)) == 101);
}

TEST_CASE("primality") {
    CHECK(is_prime(Int(2)));
    CHECK(is_prime(Int(97)));
    CHECK(!is_prime(Int(1)));
    CHECK(!is_prime(Int(91)));
    CHECK(is_prime(Int("1000000007")));
}

TEST_CASE("divisors") {
    CHECK(positive_divisors(Int(7)) == std::vector<Int>{1, 7});
    CHECK(positive_divisors(Int(12)) == std::vector<Int>{1, 2, 3, 4, 6, 12});
    CHECK(positive_divisors(Int(-8)) == std::vector<Int>{1, 2, 4, 8});
}

TEST_CASE("squarefree decomposition") {
    auto [s, d] = squarefree_decompose(Int(-76));
    CHECK(s == 2);
    CHECK(d == -19);
    CHECK(is_squarefree(Int(-7)));
    CHECK(!is_squarefree(Int(-8)));
    auto [s2, d2] = squarefree_decompose(Int(360));
    CHECK(s2 * s2 * d2 == 360);
    CHECK(is_squarefree(d2));
}

TEST_CASE("binomial") {
    CHECK(binomial(13, 3) == 286);
    CHECK(binomial(13, 0) == 1);
    CHECK(binomial(13, 13) == 1);
}
