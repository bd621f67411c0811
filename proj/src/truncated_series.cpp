#include "lring/truncated_series.hpp"

#include <stdexcept>

namespace lring {

TruncationProfile::TruncationProfile(std::map<std::string, int> caps) : caps_(std::move(caps)) {
    for (const auto& [name, cap] : caps_)
        if (cap < 0) throw std::invalid_argument("negative truncation cap for '" + name + "'");
}

TruncationProfile& TruncationProfile::set_cap(const std::string& name, int cap) {
    if (cap < 0) throw std::invalid_argument("negative truncation cap for '" + name + "'");
    caps_[name] = cap;
    return *this;
}

std::optional<int> TruncationProfile::cap(const std::string& name) const {
    auto it = caps_.find(name);
    if (it == caps_.end()) return std::nullopt;
    return it->second;
}

TruncationProfile TruncationProfile::merge(const TruncationProfile& a, const TruncationProfile& b) {
    TruncationProfile r = a;
    for (const auto& [name, cap] : b.caps_) {
        auto it = r.caps_.find(name);
        if (it == r.caps_.end())
            r.caps_.emplace(name, cap);
        else
            it->second = std::min(it->second, cap);
    }
    return r;
}

SparsePoly truncate_poly(const SparsePoly& p, const TruncationProfile& profile) {
    std::map<Monomial, Rational> kept;
    for (const auto& [m, c] : p.terms()) {
        bool keep = true;
        for (const auto& [name, exp] : m.factors()) {
            auto cap = profile.cap(name);
            if (cap && exp > *cap) {
                keep = false;
                break;
            }
        }
        if (keep) kept.emplace(m, c);
    }
    return SparsePoly::from_terms(std::move(kept), p.var_classes());
}

namespace {

void check_series_caps(const SparsePoly& p, const TruncationProfile& profile) {
    for (const auto& [name, cls] : p.var_classes())
        if (cls == VarClass::Series && !profile.cap(name))
            throw std::invalid_argument("series variable '" + name + "' has no truncation cap");
}

int cap_budget(const TruncationProfile& profile) {
    int total = 0;
    for (const auto& [name, cap] : profile.caps()) total += cap;
    return total;
}

}  // namespace

TruncatedSeries::TruncatedSeries(const SparsePoly& p, const TruncationProfile& profile)
    : poly_(truncate_poly(p, profile)), profile_(profile) {
    check_series_caps(poly_, profile_);
}

SparsePoly TruncatedSeries::series_constant_part() const {
    std::map<Monomial, Rational> kept;
    for (const auto& [m, c] : poly_.terms()) {
        bool series_free = true;
        for (const auto& [name, exp] : m.factors()) {
            auto it = poly_.var_classes().find(name);
            if (it != poly_.var_classes().end() && it->second == VarClass::Series) {
                series_free = false;
                break;
            }
        }
        if (series_free) kept.emplace(m, c);
    }
    return SparsePoly::from_terms(std::move(kept), poly_.var_classes());
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    return TruncatedSeries(a.poly_ + b.poly_, TruncationProfile::merge(a.profile_, b.profile_));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    return TruncatedSeries(a.poly_ - b.poly_, TruncationProfile::merge(a.profile_, b.profile_));
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    return series_mul(a, b);
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) { return a + b; }

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncationProfile profile = TruncationProfile::merge(a.profile(), b.profile());
    auto classes = merge_var_classes(a.poly().var_classes(), b.poly().var_classes());

    // Convolution with an early cap check so oversized terms are never built.
    std::map<Monomial, Rational> acc;
    for (const auto& [ma, ca] : a.poly().terms()) {
        for (const auto& [mb, cb] : b.poly().terms()) {
            Monomial m = ma * mb;
            bool keep = true;
            for (const auto& [name, exp] : m.factors()) {
                auto cap = profile.cap(name);
                if (cap && exp > *cap) {
                    keep = false;
                    break;
                }
            }
            if (!keep) continue;
            auto [it, inserted] = acc.emplace(m, ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second == 0) acc.erase(it);
            }
        }
    }

    return TruncatedSeries(SparsePoly::from_terms(std::move(acc), std::move(classes)), profile);
}

TruncatedSeries series_inverse(const TruncatedSeries& a) {
    SparsePoly head = a.series_constant_part();
    if (!head.is_constant() || head.is_zero())
        throw std::domain_error("series not invertible: leading term must be a nonzero rational");
    Rational c = head.constant_term();

    // a = c*(1 - s) with s of positive series degree; sum the geometric series.
    TruncatedSeries s =
        TruncatedSeries(SparsePoly(1) - a.poly() * (Rational(1) / c), a.profile());
    TruncatedSeries result(SparsePoly(1), a.profile());
    TruncatedSeries power = s;
    int guard = cap_budget(a.profile()) + 1;
    while (!power.is_zero()) {
        if (guard-- < 0) throw std::logic_error("series_inverse failed to terminate");
        result += power;
        power = series_mul(power, s);
    }
    return TruncatedSeries(result.poly() * (Rational(1) / c), a.profile());
}

TruncatedSeries series_log(const TruncatedSeries& a) {
    if (a.series_constant_part() != SparsePoly(1))
        throw std::domain_error("series_log requires constant term exactly 1");
    TruncatedSeries s = TruncatedSeries(a.poly() - SparsePoly(1), a.profile());
    TruncatedSeries result(SparsePoly(0), a.profile());
    TruncatedSeries power = s;
    int k = 1;
    int guard = cap_budget(a.profile()) + 1;
    while (!power.is_zero()) {
        if (guard-- < 0) throw std::logic_error("series_log failed to terminate");
        Rational coeff = Rational(k % 2 == 1 ? 1 : -1) / k;
        result += TruncatedSeries(power.poly() * coeff, a.profile());
        power = series_mul(power, s);
        ++k;
    }
    return result;
}

TruncatedSeries series_exp(const TruncatedSeries& a) {
    if (!a.series_constant_part().is_zero())
        throw std::domain_error("series_exp requires zero constant term");
    TruncatedSeries result(SparsePoly(1), a.profile());
    TruncatedSeries power = a;
    Integer kfact = 1;
    int k = 1;
    int guard = cap_budget(a.profile()) + 1;
    while (!power.is_zero()) {
        if (guard-- < 0) throw std::logic_error("series_exp failed to terminate");
        result += TruncatedSeries(power.poly() * Rational(Integer(1), kfact), a.profile());
        ++k;
        kfact *= k;
        power = series_mul(power, a);
    }
    return result;
}

TruncatedSeries series_pow_symbolic(const TruncatedSeries& a, const SparsePoly& exponent) {
    if (!exponent.uses_only_class(VarClass::Poly))
        throw std::invalid_argument("symbolic exponent must use POLY variables only");
    if (exponent.is_zero()) return TruncatedSeries(SparsePoly(1), a.profile());
    TruncatedSeries lg = series_log(a);
    return series_exp(TruncatedSeries(lg.poly() * exponent, lg.profile()));
}

TruncatedSeries series_pow_int(const TruncatedSeries& a, int e) {
    if (e < 0) return series_pow_int(series_inverse(a), -e);
    TruncatedSeries acc(SparsePoly(1), a.profile());
    TruncatedSeries base = a;
    while (e > 0) {
        if (e & 1) acc = series_mul(acc, base);
        if (e >>= 1) base = series_mul(base, base);
    }
    return acc;
}

bool series_equal(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncationProfile merged = TruncationProfile::merge(a.profile(), b.profile());
    return truncate_poly(a.poly(), merged) == truncate_poly(b.poly(), merged);
}

}  // namespace lring
