#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lring/combinat.hpp"
#include "lring/sparse_poly.hpp"
#include "lring/truncated_series.hpp"

#include <random>

using namespace lring;

namespace {

TruncatedSeries make(const SparsePoly& p, std::map<std::string, int> caps) {
    return TruncatedSeries(p, TruncationProfile(std::move(caps)));
}

SparsePoly sv(const std::string& name) { return SparsePoly(series_var(name)); }
SparsePoly pv(const std::string& name) { return SparsePoly(poly_var(name)); }

// Random polynomial in {z POLY, u,t SERIES} with small coefficients.
SparsePoly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 4), exp(0, 2), coeff(-4, 4), den(1, 3);
    SparsePoly p;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        SparsePoly term(Rational(coeff(rng), den(rng)));
        term *= SparsePoly(poly_var("z"), exp(rng));
        term *= SparsePoly(series_var("u"), exp(rng));
        term *= SparsePoly(series_var("t"), exp(rng));
        p += term;
    }
    return p;
}

}  // namespace

TEST_CASE("rational parsing and powers") {
    CHECK(parse_rational("3") == Rational(3));
    CHECK(parse_rational("-7/4") == Rational(-7, 4));
    CHECK(parse_rational("2/4") == Rational(1, 2));
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK(rational_pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(to_string(Rational(-1, 2)) == "-1/2");
}

TEST_CASE("series_add examples") {
    auto u = sv("u");
    CHECK((make(SparsePoly(1) + u, {{"u", 3}}) + make(SparsePoly(1) - u, {{"u", 3}})).poly() ==
          SparsePoly(2));

    auto q = sv("q");
    auto sum = make(q, {{"q", 2}}) + make(q.pow(3), {{"q", 3}});
    CHECK(sum.poly() == q);
    CHECK(sum.profile().cap("q") == 2);

    auto z = pv("z");
    CHECK((make(z * u, {{"u", 2}}) + make(u, {{"u", 2}})).poly() == (z + SparsePoly(1)) * u);
}

TEST_CASE("series_mul examples") {
    auto t = sv("t");
    auto one_plus = SparsePoly(1) + t, one_minus = SparsePoly(1) - t;
    CHECK(series_mul(make(one_plus, {{"t", 2}}), make(one_minus, {{"t", 2}})).poly() ==
          SparsePoly(1) - t.pow(2));
    CHECK(series_mul(make(one_plus, {{"t", 1}}), make(one_minus, {{"t", 1}})).poly() ==
          SparsePoly(1));

    auto z = pv("z");
    auto u = sv("u");
    CHECK(series_mul(make(z + u, {{"u", 2}}), make(z - u, {{"u", 2}})).poly() ==
          z.pow(2) - u.pow(2));
}

TEST_CASE("classing conflict is rejected") {
    auto a = make(SparsePoly(series_var("u")), {{"u", 2}});
    SparsePoly u_as_poly(poly_var("u"));
    CHECK_THROWS_AS(a.poly() + u_as_poly, std::invalid_argument);
}

TEST_CASE("series_inverse examples") {
    auto q = sv("q");
    auto inv = series_inverse(make(SparsePoly(1) - q, {{"q", 3}}));
    CHECK(inv.poly() == SparsePoly(1) + q + q.pow(2) + q.pow(3));

    CHECK(series_inverse(make(SparsePoly(2), {})).poly() == SparsePoly(Rational(1, 2)));

    auto t = sv("t");
    CHECK(series_inverse(make(SparsePoly(1) + t, {{"t", 2}})).poly() ==
          SparsePoly(1) - t + t.pow(2));

    CHECK_THROWS_AS(series_inverse(make(t, {{"t", 2}})), std::domain_error);
    CHECK_THROWS_AS(series_inverse(make(pv("z") + t, {{"t", 2}})), std::domain_error);
}

TEST_CASE("series_log examples") {
    auto t = sv("t");
    CHECK(series_log(make(SparsePoly(1), {})).poly().is_zero());
    CHECK(series_log(make(SparsePoly(1) + t, {{"t", 3}})).poly() ==
          t - t.pow(2) * Rational(1, 2) + t.pow(3) * Rational(1, 3));
    CHECK_THROWS_AS(series_log(make(SparsePoly(2) + t, {{"t", 3}})), std::domain_error);

    auto q = sv("q");
    auto a = make(SparsePoly(1) + q + q.pow(2), {{"q", 4}});
    CHECK(series_exp(series_log(a)).poly() == a.poly());
}

TEST_CASE("series_pow_symbolic examples") {
    auto t = sv("t");
    auto z = pv("z");
    auto p = series_pow_symbolic(make(SparsePoly(1) + t, {{"t", 2}}), z);
    CHECK(p.poly() == SparsePoly(1) + z * t + z * (z - SparsePoly(1)) * Rational(1, 2) * t.pow(2));

    auto base = make(SparsePoly(1) + t, {{"t", 5}});
    CHECK(series_equal(series_pow_symbolic(base, SparsePoly(3)), series_pow_int(base, 3)));

    CHECK_THROWS_AS(series_pow_symbolic(make(SparsePoly(2) + t, {{"t", 2}}), z),
                    std::domain_error);
}

TEST_CASE("(1-y)^(z-2) matches generalized binomial expansion") {
    // y = -q*t/(1+t), caps t,q <= 2
    TruncationProfile prof(std::map<std::string, int>{{"t", 2}, {"q", 2}});
    auto t = sv("t"), q = sv("q");
    auto z = pv("z");
    auto y = series_mul(TruncatedSeries(-(q * t), prof),
                        series_inverse(TruncatedSeries(SparsePoly(1) + t, prof)));
    auto lhs = series_pow_symbolic(TruncatedSeries(SparsePoly(1), prof) - y, z - SparsePoly(2));

    // Independent oracle: sum_k binom(z-2, k) * (-y)^k, k up to the cap budget.
    auto zm2 = z - SparsePoly(2);
    TruncatedSeries rhs(SparsePoly(0), prof);
    for (int k = 0; k <= 4; ++k) {
        SparsePoly c = binom_poly(k).substitute("z", zm2);
        rhs += TruncatedSeries(series_pow_int(-y, k).poly() * c, prof);
    }
    CHECK(series_equal(lhs, rhs));
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(20240811);
    for (int i = 0; i < 20; ++i) {
        auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("exp/log and inverse round-trips on random unit series") {
    std::mt19937_64 rng(7);
    TruncationProfile prof(std::map<std::string, int>{{"u", 3}, {"t", 3}});
    for (int i = 0; i < 20; ++i) {
        SparsePoly p = random_poly(rng);
        // Strip the series-constant part, then put back 1.
        TruncatedSeries tail(p, prof);
        SparsePoly unit = SparsePoly(1) + (tail.poly() - tail.series_constant_part());
        auto a = TruncatedSeries(unit, prof);
        CHECK(series_equal(series_exp(series_log(a)), a));
        CHECK(series_mul(a, series_inverse(a)).poly() == SparsePoly(1));
    }
}

TEST_CASE("symbolic integer powers equal iterated multiplication") {
    std::mt19937_64 rng(99);
    TruncationProfile prof(std::map<std::string, int>{{"u", 3}, {"t", 3}});
    std::uniform_int_distribution<int> mdist(0, 5);
    for (int i = 0; i < 20; ++i) {
        SparsePoly p = random_poly(rng);
        TruncatedSeries tail(p, prof);
        SparsePoly unit = SparsePoly(1) + (tail.poly() - tail.series_constant_part());
        auto a = TruncatedSeries(unit, prof);
        int m = mdist(rng);
        auto sym = series_pow_symbolic(a, SparsePoly(m));
        TruncatedSeries rep(SparsePoly(1), prof);
        for (int k = 0; k < m; ++k) rep = series_mul(rep, a);
        CHECK(series_equal(sym, rep));
    }
}

TEST_CASE("truncation is a ring morphism") {
    std::mt19937_64 rng(123);
    TruncationProfile prof(std::map<std::string, int>{{"u", 2}, {"t", 1}});
    for (int i = 0; i < 20; ++i) {
        SparsePoly a = random_poly(rng), b = random_poly(rng);
        auto ta = TruncatedSeries(a, prof), tb = TruncatedSeries(b, prof);
        CHECK(truncate_poly(a * b, prof) == series_mul(ta, tb).poly());
        CHECK(truncate_poly(a + b, prof) == (ta + tb).poly());
    }
}

TEST_CASE("canonical rendering") {
    auto z = pv("z");
    auto u = sv("u");
    CHECK(SparsePoly().str() == "0");
    CHECK((z * z * Rational(1, 2) - z * Rational(1, 2)).str() == "-1/2*z + 1/2*z^2");
    CHECK((SparsePoly(1) - u).str() == "1 - u");
    CHECK((-(z * u)).str() == "-u*z");
    CHECK(SparsePoly(poly_var("X1"), 2).str() == "X1^2");
}

TEST_CASE("substitute and evaluate") {
    auto z = pv("z");
    auto f = z.pow(2) + z;
    CHECK(f.substitute("z", z - SparsePoly(1)) == z.pow(2) - z);
    CHECK(f.evaluate({{"z", Rational(3)}}) == Rational(12));
    CHECK_THROWS_AS(f.evaluate({}), std::invalid_argument);
}
