#include "lring/sparse_poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lring {

VarId poly_var(std::string name) { return VarId{std::move(name), VarClass::Poly}; }
VarId series_var(std::string name) { return VarId{std::move(name), VarClass::Series}; }

Monomial::Monomial(std::vector<std::pair<std::string, int>> factors) {
    std::sort(factors.begin(), factors.end());
    for (auto& [name, exp] : factors) {
        if (exp <= 0) throw std::invalid_argument("monomial exponent must be positive");
        if (!factors_.empty() && factors_.back().first == name)
            factors_.back().second += exp;
        else
            factors_.emplace_back(name, exp);
    }
}

Monomial Monomial::var(const std::string& name, int exp) {
    return Monomial({{name, exp}});
}

int Monomial::exponent(const std::string& name) const {
    for (const auto& [n, e] : factors_)
        if (n == name) return e;
    return 0;
}

int Monomial::total_degree() const {
    int d = 0;
    for (const auto& [n, e] : factors_) d += e;
    return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial r;
    r.factors_.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin(), b = other.factors_.begin();
    while (a != factors_.end() && b != other.factors_.end()) {
        if (a->first < b->first)
            r.factors_.push_back(*a++);
        else if (b->first < a->first)
            r.factors_.push_back(*b++);
        else {
            r.factors_.emplace_back(a->first, a->second + b->second);
            ++a, ++b;
        }
    }
    r.factors_.insert(r.factors_.end(), a, factors_.end());
    r.factors_.insert(r.factors_.end(), b, other.factors_.end());
    return r;
}

Monomial Monomial::pow(int e) const {
    if (e < 0) throw std::invalid_argument("monomial power must be nonnegative");
    Monomial r;
    if (e == 0) return r;
    r.factors_ = factors_;
    for (auto& [n, x] : r.factors_) x *= e;
    return r;
}

Monomial Monomial::without(const std::string& name) const {
    Monomial r;
    for (const auto& f : factors_)
        if (f.first != name) r.factors_.push_back(f);
    return r;
}

bool Monomial::operator<(const Monomial& other) const {
    return std::lexicographical_compare(factors_.begin(), factors_.end(),
                                        other.factors_.begin(), other.factors_.end());
}

std::string Monomial::str() const {
    if (factors_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [n, e] : factors_) {
        if (!first) os << "*";
        os << n;
        if (e != 1) os << "^" << e;
        first = false;
    }
    return os.str();
}

std::map<std::string, VarClass> merge_var_classes(const std::map<std::string, VarClass>& a,
                                                  const std::map<std::string, VarClass>& b) {
    std::map<std::string, VarClass> r = a;
    for (const auto& [name, cls] : b) {
        auto it = r.find(name);
        if (it == r.end())
            r.emplace(name, cls);
        else if (it->second != cls)
            throw std::invalid_argument("variable '" + name + "' classed both POLY and SERIES");
    }
    return r;
}

SparsePoly::SparsePoly(const Rational& c) {
    if (c != 0) terms_.emplace(Monomial(), c);
}

SparsePoly::SparsePoly(const VarId& v, int exp) {
    if (exp < 0) throw std::invalid_argument("negative exponent");
    if (exp == 0) {
        terms_.emplace(Monomial(), Rational(1));
        return;
    }
    terms_.emplace(Monomial::var(v.name, exp), Rational(1));
    classes_.emplace(v.name, v.cls);
}

SparsePoly SparsePoly::term(const Rational& coeff, const std::vector<std::pair<VarId, int>>& powers) {
    SparsePoly r(coeff);
    for (const auto& [v, e] : powers) r *= SparsePoly(v, e);
    return r;
}

SparsePoly SparsePoly::from_terms(std::map<Monomial, Rational> terms,
                                  std::map<std::string, VarClass> classes) {
    SparsePoly r;
    for (auto it = terms.begin(); it != terms.end();)
        it = (it->second == 0) ? terms.erase(it) : std::next(it);
    r.terms_ = std::move(terms);
    r.classes_ = std::move(classes);
    r.prune_classes();
    return r;
}

bool SparsePoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational SparsePoly::constant_term() const {
    auto it = terms_.find(Monomial());
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational SparsePoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int SparsePoly::degree(const std::string& name) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(name));
    return d;
}

int SparsePoly::total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

SparsePoly SparsePoly::coeff_of(const std::string& name, int k) const {
    SparsePoly r;
    for (const auto& [m, c] : terms_)
        if (m.exponent(name) == k) r.add_term(m.without(name), c);
    r.classes_ = classes_;
    r.prune_classes();
    return r;
}

std::map<int, SparsePoly> SparsePoly::collect(const std::string& name) const {
    std::map<int, SparsePoly> r;
    for (const auto& [m, c] : terms_) {
        int k = m.exponent(name);
        auto& part = r[k];
        part.add_term(m.without(name), c);
        part.classes_ = classes_;
    }
    for (auto& [k, p] : r) p.prune_classes();
    return r;
}

bool SparsePoly::uses_only_class(VarClass cls) const {
    for (const auto& [n, c] : classes_)
        if (c != cls) return false;
    return true;
}

void SparsePoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void SparsePoly::absorb_classes(const std::map<std::string, VarClass>& other) {
    classes_ = merge_var_classes(classes_, other);
}

void SparsePoly::prune_classes() {
    std::set<std::string> used;
    for (const auto& [m, c] : terms_)
        for (const auto& [n, e] : m.factors()) used.insert(n);
    for (auto it = classes_.begin(); it != classes_.end();)
        it = used.count(it->first) ? std::next(it) : classes_.erase(it);
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& other) {
    absorb_classes(other.classes_);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    prune_classes();
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& other) {
    absorb_classes(other.classes_);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    prune_classes();
    return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r;
    r.classes_ = merge_var_classes(a.classes_, b.classes_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    r.prune_classes();
    return r;
}

SparsePoly& SparsePoly::operator*=(const SparsePoly& other) {
    *this = *this * other;
    return *this;
}

SparsePoly& SparsePoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        classes_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

SparsePoly SparsePoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("polynomial power must be nonnegative");
    SparsePoly acc(1), base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        if (e >>= 1) base *= base;
    }
    return acc;
}

SparsePoly SparsePoly::substitute(const std::string& name, const SparsePoly& value) const {
    // Group by the power of `name`, then Horner would need ordering; the
    // powers involved are small, so evaluate directly.
    SparsePoly r;
    std::map<int, SparsePoly> powers;  // cached value^k
    powers[0] = SparsePoly(1);
    for (const auto& [m, c] : terms_) {
        int k = m.exponent(name);
        auto it = powers.find(k);
        if (it == powers.end()) it = powers.emplace(k, value.pow(k)).first;
        SparsePoly rest;
        rest.add_term(m.without(name), c);
        rest.classes_ = classes_;
        rest.prune_classes();
        r += rest * it->second;
    }
    return r;
}

Rational SparsePoly::evaluate(const std::map<std::string, Rational>& point) const {
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (const auto& [n, e] : m.factors()) {
            auto it = point.find(n);
            if (it == point.end())
                throw std::invalid_argument("evaluate: no value for variable '" + n + "'");
            v *= rational_pow(it->second, e);
        }
        total += v;
    }
    return total;
}

std::string SparsePoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        if (m.empty())
            os << mag;
        else if (mag == 1)
            os << m.str();
        else
            os << mag << "*" << m.str();
        first = false;
    }
    return os.str();
}

}  // namespace lring
