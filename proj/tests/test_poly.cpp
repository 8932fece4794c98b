#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "quadpower/poly.hpp"

using namespace quadpower;

namespace {

IntPoly from_longs(std::vector<long> cs) {
    std::vector<Int> c(cs.begin(), cs.end());
    return IntPoly(std::move(c));
}

// Exhaustive reference: integer roots with |t| <= limit.
std::vector<Int> scan_reference(const IntPoly& p, long limit) {
    std::vector<Int> out;
    for (long t = -limit; t <= limit; ++t)
        if (p.eval(Int(t)) == 0) out.emplace_back(t);
    return out;
}

IntPoly from_roots(const std::vector<long>& roots, long lead) {
    std::vector<Int> c{Int(lead)};
    for (long r : roots) {
        std::vector<Int> next(c.size() + 1, Int(0));
        for (size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= Int(r) * c[i];
        }
        c = next;
    }
    return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("evaluation and normalization") {
    IntPoly p = from_longs({-7, 0, 3});  // 3U^2 - 7
    CHECK(p.degree() == 2);
    CHECK(p.eval(Int(2)) == 5);
    CHECK(IntPoly(std::vector<Int>{Int(1), Int(0), Int(0)}).degree() == 0);
    CHECK(IntPoly().is_zero());
}

TEST_CASE("degree-twelve root extraction") {
    // 13U^12 - 2002U^10 + 63063U^8 - 588588U^6 + 1716715U^4 - 1310946U^2
    // + 117649, shifted by 4096: roots are exactly ±1.
    IntPoly p = from_longs({117649 + 4096, 0, -1310946, 0, 1716715, 0,
                            -588588, 0, 63063, 0, -2002, 0, 13});
    CHECK(integer_roots(p) == std::vector<Int>{-1, 1});
}

TEST_CASE("small cases") {
    CHECK(integer_roots(from_longs({-4, 0, 1})) == std::vector<Int>{-2, 2});
    CHECK(integer_roots(from_longs({0, 0, 0, 1})) == std::vector<Int>{0});
    CHECK(integer_roots(from_longs({5})).empty());
    CHECK(integer_roots(from_longs({6, -5, 1})) == std::vector<Int>{2, 3});
    CHECK(integer_roots(from_longs({3, 2})).empty());    // 2U + 3
    CHECK(integer_roots(from_longs({-6, 2})) == std::vector<Int>{3});
    CHECK_THROWS_AS(integer_roots(IntPoly()), std::invalid_argument);
}

TEST_CASE("every real root is inside the bound") {
    for (int i = 0; i < 300; ++i) {
        std::vector<long> roots;
        for (int k = 0; k < 3; ++k)
            roots.push_back(qptest::rand_long(-100000, 100000));
        long lead = qptest::rand_long(1, 9);
        IntPoly p = from_roots(roots, lead);
        Int bound = integer_root_bound(p);
        for (long r : roots) CHECK(abs(Int(r)) <= bound);
    }
}

TEST_CASE("cubics with planted roots") {
    for (int i = 0; i < 500; ++i) {
        std::vector<long> roots;
        for (int k = 0; k < 3; ++k)
            roots.push_back(qptest::rand_long(-1000000, 1000000));
        long lead = qptest::rand_long(1, 5);
        IntPoly p = from_roots(roots, lead);
        std::vector<Int> expected(roots.begin(), roots.end());
        std::sort(expected.begin(), expected.end());
        expected.erase(std::unique(expected.begin(), expected.end()),
                       expected.end());
        CHECK(integer_roots(p) == expected);
    }
}

TEST_CASE("cubics with repeated and clustered roots") {
    CHECK(integer_roots(from_roots({7, 7, 7}, 1)) == std::vector<Int>{7});
    CHECK(integer_roots(from_roots({7, 7, -2}, 1)) == std::vector<Int>{-2, 7});
    CHECK(integer_roots(from_roots({5, 6, 7}, 3)) ==
          std::vector<Int>{5, 6, 7});
    CHECK(integer_roots(from_roots({-1, 0, 1}, 1)) ==
          std::vector<Int>{-1, 0, 1});
}

TEST_CASE("cubics without integer roots") {
    // U^3 - 2: irrational root only.
    CHECK(integer_roots(from_longs({-2, 0, 0, 1})).empty());
    // (U^2 + 1)(U - 4) has one integer root.
    CHECK(integer_roots(from_longs({-4, 1, -4, 1})) == std::vector<Int>{4});
}

TEST_CASE("random polynomials match an exhaustive scan") {
    for (int i = 0; i < 400; ++i) {
        long deg = qptest::rand_long(1, 6);
        std::vector<Int> c;
        for (long k = 0; k <= deg; ++k)
            c.push_back(qptest::rand_int(-40, 40));
        if (c.back() == 0) c.back() = 1;
        IntPoly p(std::move(c));
        auto found = integer_roots(p);
        // Roots within the bound are exactly the scan's findings, and the
        // bound certifies nothing lies beyond it.
        CHECK(found == scan_reference(p, 200));
        for (const auto& r : found) CHECK(p.eval(r) == 0);
    }
}

TEST_CASE("planted roots at mixed scales for higher degree") {
    IntPoly p = from_roots({-30000, -2, 1, 17, 4096}, 7);
    CHECK(integer_roots(p) == std::vector<Int>{-30000, -2, 1, 17, 4096});
}
