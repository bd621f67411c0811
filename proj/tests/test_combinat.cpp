#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lring/combinat.hpp"

using namespace lring;

TEST_CASE("gen_binom examples") {
    CHECK(gen_binom(Partition({2}), 1) == 2);  // (1+q)^2 - 1 = 2q + q^2
    CHECK(gen_binom(Partition({2, 1}), 2) == 2);
    CHECK(gen_binom(Partition({2, 1}), 3) == 1);
    CHECK(gen_binom(Partition({2, 1}), 1) == 0);
    CHECK(gen_binom(Partition(), 0) == 1);
    CHECK(gen_binom(Partition({3, 2}), 0) == 0);
    CHECK(gen_binom(Partition({3, 2}), 6) == 0);
}

TEST_CASE("gen_binom_brute examples") {
    CHECK(gen_binom_brute(Partition({2}), 1) == 2);
    CHECK(gen_binom_brute(Partition({1, 1}), 2) == 1);
    CHECK(gen_binom_brute(Partition({3, 2}), 2) == 6);
    CHECK_THROWS_AS(gen_binom_brute(Partition({21}), 1), std::invalid_argument);
}

TEST_CASE("gen_binom matches the subset oracle, weight <= 8") {
    for (int n = 0; n <= 8; ++n)
        for (const auto& p : enumerate_partitions(n))
            for (int r = 0; r <= n + 1; ++r) CHECK(gen_binom(p, r) == gen_binom_brute(p, r));
}

TEST_CASE("row sums and boundary values") {
    for (int n = 1; n <= 8; ++n)
        for (const auto& p : enumerate_partitions(n)) {
            Integer total = 0;
            for (int r = 0; r <= n; ++r) total += gen_binom(p, r);
            Integer expected = 1;
            for (int part : p.parts()) expected *= (Integer(1) << part) - 1;
            CHECK(total == expected);

            CHECK(gen_binom(p, n) == 1);
            Integer prod = 1;
            for (int part : p.parts()) prod *= part;
            CHECK(gen_binom(p, p.length()) == prod);
            CHECK(gen_binom(p, p.length() - 1) == 0);
        }
}

TEST_CASE("factorial polynomials") {
    SparsePoly z(poly_var("z"));
    CHECK(rising_factorial(2) == z.pow(2) + z);
    CHECK(falling_factorial(3) == z.pow(3) - 3 * Rational(1) * z.pow(2) + 2 * Rational(1) * z);
    CHECK(rising_factorial(0) == SparsePoly(1));
    CHECK(binom_poly(2).evaluate({{"z", Rational(5)}}) == Rational(10));

    // (z)_n at z equals [z]_n at z+n-1, as a polynomial identity.
    for (int n = 0; n <= 6; ++n) {
        auto shifted = falling_factorial(n).substitute("z", z + SparsePoly(n - 1));
        CHECK(rising_factorial(n) == shifted);
    }
}

TEST_CASE("binom_int") {
    CHECK(binom_int(5, 2) == Rational(10));
    CHECK(binom_int(3, -1) == Rational(0));
    CHECK(binom_int(-1, 2) == Rational(1));
    CHECK(binom_int(4, 0) == Rational(1));
    CHECK(binom_int(3, 5) == Rational(0));
    for (long long m = -4; m <= 6; ++m)
        for (long long k = 0; k <= 6; ++k)
            CHECK(binom_int(m, k) == binom_poly(static_cast<int>(k)).evaluate({{"z", Rational(m)}}));
}
