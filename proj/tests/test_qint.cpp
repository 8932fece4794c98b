#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "quadpower/qint.hpp"

using namespace quadpower;
using qptest::rand_qint;

namespace {
const std::vector<long> kDiscs = {-1, -2, -3, -7, -11, -19, -23, -43};
}

TEST_CASE("field disc validation") {
    CHECK(FieldDisc::of(-7).halves_allowed);
    CHECK(FieldDisc::of(-3).halves_allowed);
    CHECK(!FieldDisc::of(-1).halves_allowed);
    CHECK(!FieldDisc::of(-2).halves_allowed);
    CHECK_THROWS_AS(FieldDisc::of(-4), std::invalid_argument);   // 4 | d
    CHECK_THROWS_AS(FieldDisc::of(-12), std::invalid_argument);  // square part
    CHECK_THROWS_AS(FieldDisc::of(5), std::invalid_argument);    // positive
}

TEST_CASE("construction and parity") {
    FieldDisc d7 = FieldDisc::of(-7);
    QuadInt alpha(1, 1, d7);
    CHECK(trace(alpha) == 1);
    CHECK(norm(alpha) == 2);

    QuadInt zero(0, 0, d7);
    CHECK(zero.is_zero());
    CHECK(norm(zero) == 0);

    CHECK_THROWS_AS(QuadInt(1, 0, d7), ParityViolation);

    FieldDisc d2 = FieldDisc::of(-2);
    CHECK_THROWS_AS(QuadInt(1, 1, d2), ParityViolation);
    CHECK_NOTHROW(QuadInt(2, 4, d2));
}

TEST_CASE("arithmetic examples") {
    FieldDisc d7 = FieldDisc::of(-7);
    QuadInt alpha(1, 1, d7), beta(1, -1, d7);
    CHECK(alpha * beta == QuadInt::integer(2, d7));  // norm of (1+sqrt(-7))/2
    CHECK(pow(alpha, 2) == QuadInt(-3, 1, d7));
    CHECK(pow(alpha, 0) == QuadInt::one(d7));
    CHECK(alpha + beta == QuadInt(2, 0, d7));
}

TEST_CASE("disc mismatch is rejected") {
    QuadInt a(1, 1, FieldDisc::of(-7));
    QuadInt b(1, 1, FieldDisc::of(-11));
    CHECK_THROWS_AS(a * b, DiscMismatch);
    CHECK_THROWS_AS(a + b, DiscMismatch);
}

TEST_CASE("conjugation") {
    FieldDisc d7 = FieldDisc::of(-7);
    QuadInt x(1, 1, d7);
    CHECK(conj(x) == QuadInt(1, -1, d7));
    CHECK(conj(conj(x)) == x);
    CHECK(conj(QuadInt::integer(5, d7)) == QuadInt::integer(5, d7));

    for (int i = 0; i < 200; ++i) {
        FieldDisc fd = FieldDisc::of(kDiscs[i % kDiscs.size()]);
        QuadInt a = rand_qint(fd, 1000), b = rand_qint(fd, 1000);
        CHECK(conj(a * b) == conj(a) * conj(b));
        CHECK(conj(a + b) == conj(a) + conj(b));
    }
}

TEST_CASE("norm and trace examples") {
    CHECK(norm(QuadInt(1, 1, FieldDisc::of(-7))) == 2);
    CHECK(norm(QuadInt(1, 1, FieldDisc::of(-11))) == 3);
    CHECK(trace(QuadInt(1, 1, FieldDisc::of(-19))) == 1);
    CHECK(norm(QuadInt(1, 1, FieldDisc::of(-19))) == 5);
}

TEST_CASE("norm is multiplicative") {
    for (int i = 0; i < 1200; ++i) {
        FieldDisc fd = FieldDisc::of(kDiscs[i % kDiscs.size()]);
        QuadInt a = rand_qint(fd, 1000000000L), b = rand_qint(fd, 1000000000L);
        CHECK(norm(a * b) == norm(a) * norm(b));
        CHECK(norm(a) >= 0);
        if (!a.is_zero()) CHECK(norm(a) > 0);
    }
}

TEST_CASE("conjugation commutes with pow") {
    for (int i = 0; i < 300; ++i) {
        FieldDisc fd = FieldDisc::of(kDiscs[i % kDiscs.size()]);
        QuadInt a = rand_qint(fd, 50);
        unsigned n = static_cast<unsigned>(qptest::rand_long(0, 12));
        CHECK(conj(pow(a, n)) == pow(conj(a), n));
    }
}

TEST_CASE("discriminant identity") {
    for (int i = 0; i < 300; ++i) {
        FieldDisc fd = FieldDisc::of(kDiscs[i % kDiscs.size()]);
        QuadInt a = rand_qint(fd, 100000);
        CHECK(trace(a) * trace(a) - 4 * norm(a) ==
              Int(fd.d) * a.v() * a.v());
    }
}

TEST_CASE("ring closure keeps the parity invariant") {
    // Constructors re-validate, so surviving an operation means the result
    // is a legal ring element; exercise deep power towers too.
    for (int i = 0; i < 100; ++i) {
        FieldDisc fd = FieldDisc::of(kDiscs[i % kDiscs.size()]);
        QuadInt a = rand_qint(fd, 30);
        CHECK_NOTHROW(pow(a, 13));
        QuadInt b = rand_qint(fd, 30);
        CHECK_NOTHROW(a * b + pow(b, 3) - a);
    }
}

TEST_CASE("unit classes") {
    auto only_one = unit_classes(FieldDisc::of(-7), 13);
    REQUIRE(only_one.reps.size() == 1);
    CHECK(only_one.reps[0] == QuadInt::one(FieldDisc::of(-7)));

    FieldDisc d3 = FieldDisc::of(-3);
    auto cubes = unit_classes(d3, 3);
    REQUIRE(cubes.reps.size() == 3);
    QuadInt one = QuadInt::one(d3), w(-1, 1, d3), w2(-1, -1, d3);
    CHECK(cubes.reps[0] == one);
    CHECK(std::count(cubes.reps.begin(), cubes.reps.end(), w) == 1);
    CHECK(std::count(cubes.reps.begin(), cubes.reps.end(), w2) == 1);

    // Independent coset check: reps are units, pairwise in different cosets
    // of the cube subgroup, and together they cover all six units.
    auto us = units(d3);
    std::vector<QuadInt> cubed;
    for (const auto& u : us) cubed.push_back(pow(u, 3));
    for (const auto& r : cubes.reps) CHECK(norm(r) == 1);
    for (size_t i = 0; i < cubes.reps.size(); ++i)
        for (size_t j = i + 1; j < cubes.reps.size(); ++j)
            for (const auto& c : cubed)
                CHECK(!(cubes.reps[i] * c == cubes.reps[j]));
    for (const auto& u : us) {
        bool covered = false;
        for (const auto& r : cubes.reps)
            for (const auto& c : cubed)
                if (r * c == u) covered = true;
        CHECK(covered);
    }

    auto fifth = unit_classes(d3, 5);
    REQUIRE(fifth.reps.size() == 1);
    CHECK(fifth.reps[0] == one);

    auto gauss = unit_classes(FieldDisc::of(-1), 3);
    CHECK(gauss.reps.size() == 1);
}
