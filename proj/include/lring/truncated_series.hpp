#pragma once

#include "lring/sparse_poly.hpp"

#include <map>
#include <optional>
#include <string>

namespace lring {

// Per-variable degree caps for SERIES variables. Combining two profiles
// takes the pointwise minimum over the union of capped variables.
class TruncationProfile {
public:
    TruncationProfile() = default;
    explicit TruncationProfile(std::map<std::string, int> caps);

    TruncationProfile& set_cap(const std::string& name, int cap);
    std::optional<int> cap(const std::string& name) const;
    const std::map<std::string, int>& caps() const { return caps_; }

    static TruncationProfile merge(const TruncationProfile& a, const TruncationProfile& b);
    bool operator==(const TruncationProfile& other) const { return caps_ == other.caps_; }

private:
    std::map<std::string, int> caps_;
};

// A SparsePoly together with a truncation profile. Every SERIES variable of
// the polynomial must be capped; arithmetic re-truncates eagerly. POLY
// variables are never truncated.
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    TruncatedSeries(const SparsePoly& p, const TruncationProfile& profile);

    const SparsePoly& poly() const { return poly_; }
    const TruncationProfile& profile() const { return profile_; }
    bool is_zero() const { return poly_.is_zero(); }

    // Terms whose SERIES exponents are all zero (may still contain POLY vars).
    SparsePoly series_constant_part() const;
    SparsePoly coeff_of(const std::string& name, int k) const { return poly_.coeff_of(name, k); }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    TruncatedSeries operator-() const { return TruncatedSeries(-poly_, profile_); }
    TruncatedSeries& operator+=(const TruncatedSeries& other) { return *this = *this + other; }
    TruncatedSeries& operator-=(const TruncatedSeries& other) { return *this = *this - other; }
    TruncatedSeries& operator*=(const TruncatedSeries& other) { return *this = *this * other; }

    std::string str() const { return poly_.str(); }

private:
    SparsePoly poly_;
    TruncationProfile profile_;
};

SparsePoly truncate_poly(const SparsePoly& p, const TruncationProfile& profile);

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

// a * result == 1 up to the profile; the series-constant term of `a` must be
// a nonzero rational with no POLY variables.
TruncatedSeries series_inverse(const TruncatedSeries& a);

// log(1+s) for a series with constant term exactly 1.
TruncatedSeries series_log(const TruncatedSeries& a);

// exp of a series with zero series-constant part.
TruncatedSeries series_exp(const TruncatedSeries& a);

// a^g = exp(g*log a) for a symbolic exponent g: a polynomial in POLY
// variables only (e.g. z, z-j). `a` must have constant term 1.
TruncatedSeries series_pow_symbolic(const TruncatedSeries& a, const SparsePoly& exponent);

// Integer powers; negative exponents go through series_inverse.
TruncatedSeries series_pow_int(const TruncatedSeries& a, int e);

// Equality of values: both sides re-truncated to the merged profile.
bool series_equal(const TruncatedSeries& a, const TruncatedSeries& b);

}  // namespace lring
