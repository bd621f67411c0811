#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lring/partitions.hpp"

#include <set>

using namespace lring;

namespace {

// Independent count of p(n) by the Euler pentagonal-number recurrence.
long long pentagonal_p(int n) {
    static std::vector<long long> memo{1};
    for (int m = static_cast<int>(memo.size()); m <= n; ++m) {
        long long total = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2;
            int g2 = k * (3 * k + 1) / 2;
            if (g1 > m && g2 > m) break;
            long long sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= m) total += sign * memo[m - g1];
            if (g2 <= m) total += sign * memo[m - g2];
        }
        memo.push_back(total);
    }
    return memo[n];
}

}  // namespace

TEST_CASE("construction and parsing") {
    CHECK(Partition({3, 1, 1}).weight() == 5);
    CHECK(Partition().length() == 0);
    CHECK(Partition::parse("3,1,1") == Partition({3, 1, 1}));
    CHECK(Partition::parse("-") == Partition());
    CHECK(Partition::parse("") == Partition());
    CHECK(Partition({3, 1, 1}).str() == "3,1,1");
    CHECK(Partition().str() == "-");
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("2,x"), std::invalid_argument);
}

TEST_CASE("enumeration order and counts") {
    auto p0 = enumerate_partitions(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0] == Partition());

    auto p4 = enumerate_partitions(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0] == Partition({4}));
    CHECK(p4[1] == Partition({3, 1}));
    CHECK(p4[2] == Partition({2, 2}));
    CHECK(p4[3] == Partition({2, 1, 1}));
    CHECK(p4[4] == Partition({1, 1, 1, 1}));

    CHECK(enumerate_partitions(8).size() == 22);

    for (int n = 0; n <= 30; ++n) {
        auto all = enumerate_partitions(n);
        CHECK(static_cast<long long>(all.size()) == pentagonal_p(n));
        std::set<Partition> distinct(all.begin(), all.end());
        CHECK(distinct.size() == all.size());
    }
}

TEST_CASE("multiplicity") {
    Partition p({2, 1, 1});
    CHECK(p.multiplicity(1) == 2);
    CHECK(p.multiplicity(2) == 1);
    CHECK(p.multiplicity(3) == 0);
}

TEST_CASE("z_mu") {
    CHECK(z_mu(Partition({1, 1, 1})) == 6);
    CHECK(z_mu(Partition({3})) == 3);
    CHECK(z_mu(Partition({2, 1})) == 2);
    CHECK(z_mu(Partition()) == 1);
}

TEST_CASE("conjugate") {
    CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
    CHECK(Partition({2, 2}).conjugate() == Partition({2, 2}));
    for (int n = 0; n <= 8; ++n)
        for (const auto& p : enumerate_partitions(n)) {
            CHECK(p.conjugate().conjugate() == p);
            CHECK(p.conjugate().weight() == p.weight());
            CHECK(p.conjugate().length() == p.max_part());
            CHECK(p.conjugate().max_part() == p.length());
        }
}

TEST_CASE("cells") {
    auto c = Partition({2, 1}).cells();
    REQUIRE(c.size() == 3);
    CHECK(c[0] == Cell{1, 1});
    CHECK(c[1] == Cell{1, 2});
    CHECK(c[2] == Cell{2, 1});
    CHECK(Partition().cells().empty());
    for (int n = 0; n <= 8; ++n)
        for (const auto& p : enumerate_partitions(n))
            CHECK(static_cast<int>(p.cells().size()) == p.weight());
}

TEST_CASE("statistics invariants") {
    for (int n = 0; n <= 10; ++n)
        for (const auto& p : enumerate_partitions(n)) {
            int weighted = 0, count = 0;
            for (int i = 1; i <= p.max_part(); ++i) {
                weighted += i * p.multiplicity(i);
                count += p.multiplicity(i);
            }
            CHECK(weighted == p.weight());
            CHECK(count == p.length());
        }
}
