#pragma once

#include "lring/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace lring {

// POLY variables are exact and never truncated (z, x, X_k); SERIES variables
// carry degree caps inside a TruncationProfile (u, q, t, w, a_i). A name must
// keep a single class; mixing the two classes for one name across operands is
// a classing-conflict error.
enum class VarClass { Poly, Series };

struct VarId {
    std::string name;
    VarClass cls = VarClass::Poly;
};

VarId poly_var(std::string name);
VarId series_var(std::string name);

// Exponent vector: (name, exponent) pairs sorted by name, exponents > 0,
// zero exponents omitted. The empty monomial is the constant 1.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::pair<std::string, int>> factors);
    static Monomial var(const std::string& name, int exp = 1);

    bool empty() const { return factors_.empty(); }
    int exponent(const std::string& name) const;
    int total_degree() const;
    const std::vector<std::pair<std::string, int>>& factors() const { return factors_; }

    Monomial operator*(const Monomial& other) const;
    Monomial pow(int e) const;
    // Strips one variable entirely.
    Monomial without(const std::string& name) const;

    bool operator==(const Monomial& other) const { return factors_ == other.factors_; }
    // Canonical term order: lexicographic on (name, exponent) pairs.
    bool operator<(const Monomial& other) const;

    std::string str() const;

private:
    std::vector<std::pair<std::string, int>> factors_;
};

// Sparse multivariate polynomial over Q. Terms never store zero coefficients.
// Each polynomial tracks the class of every variable it mentions; binary
// operations merge that information and reject POLY/SERIES conflicts.
class SparsePoly {
public:
    SparsePoly() = default;
    SparsePoly(int c) : SparsePoly(Rational(c)) {}
    SparsePoly(long c) : SparsePoly(Rational(c)) {}
    SparsePoly(const Rational& c);
    explicit SparsePoly(const VarId& v, int exp = 1);

    static SparsePoly term(const Rational& coeff, const std::vector<std::pair<VarId, int>>& powers);
    // Bulk constructor from prepared data; zero coefficients are dropped and
    // the class map pruned to the variables actually present.
    static SparsePoly from_terms(std::map<Monomial, Rational> terms,
                                 std::map<std::string, VarClass> classes);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    const std::map<std::string, VarClass>& var_classes() const { return classes_; }
    std::size_t term_count() const { return terms_.size(); }

    Rational coeff(const Monomial& m) const;
    // Highest power of `name`; 0 for the zero polynomial.
    int degree(const std::string& name) const;
    int total_degree() const;
    // Coefficient of name^k, with the variable stripped from the result.
    SparsePoly coeff_of(const std::string& name, int k) const;
    // All coefficients by power of `name`.
    std::map<int, SparsePoly> collect(const std::string& name) const;
    bool uses_only_class(VarClass cls) const;

    SparsePoly operator-() const;
    SparsePoly& operator+=(const SparsePoly& other);
    SparsePoly& operator-=(const SparsePoly& other);
    SparsePoly& operator*=(const SparsePoly& other);
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
    SparsePoly& operator*=(const Rational& c);
    friend SparsePoly operator*(SparsePoly a, const Rational& c) { return a *= c; }
    friend SparsePoly operator*(const Rational& c, SparsePoly a) { return a *= c; }

    bool operator==(const SparsePoly& other) const { return terms_ == other.terms_; }
    bool operator!=(const SparsePoly& other) const { return !(*this == other); }

    SparsePoly pow(int e) const;
    SparsePoly substitute(const std::string& name, const SparsePoly& value) const;
    // Every variable of the polynomial must be assigned a value.
    Rational evaluate(const std::map<std::string, Rational>& point) const;

    // Canonical text form: terms in canonical order, explicit '+'/'-',
    // '^' for powers, e.g. "1/2*X1^2 + 1/2*X2".
    std::string str() const;

    friend class TruncatedSeries;

private:
    std::map<Monomial, Rational> terms_;
    std::map<std::string, VarClass> classes_;

    void add_term(const Monomial& m, const Rational& c);
    void absorb_classes(const std::map<std::string, VarClass>& other);
    void prune_classes();
};

// Union of the two class maps; throws on a POLY/SERIES conflict.
std::map<std::string, VarClass> merge_var_classes(const std::map<std::string, VarClass>& a,
                                                  const std::map<std::string, VarClass>& b);

}  // namespace lring
