#include "lring/lambdaring.hpp"

#include "lring/symfun.hpp"

#include <stdexcept>

namespace lring {

namespace {

void validate_coeff(const SparsePoly& coeff) {
    for (const auto& [name, cls] : coeff.var_classes())
        if (name != kBinomialSymbol)
            throw std::domain_error("coefficient may only involve the binomial symbol '" +
                                    kBinomialSymbol + "', found '" + name + "'");
    if (coeff.degree(kBinomialSymbol) > 1)
        throw std::domain_error("coefficient degree in '" + kBinomialSymbol +
                                "' exceeds 1; no semantics assigned");
}

// Exponent dispatch: integer constants multiply out directly, anything else
// goes through exp(c * log(.)).
TruncatedSeries pow_by_coeff(const TruncatedSeries& base, const SparsePoly& coeff) {
    if (coeff.is_constant()) {
        Rational c = coeff.constant_term();
        if (denominator(c) == 1) {
            Integer n = numerator(c);
            if (n >= -64 && n <= 64) return series_pow_int(base, static_cast<int>(n));
        }
    }
    return series_pow_symbolic(base, coeff);
}

}  // namespace

Rank1Atom rank1_atom(const std::string& name) {
    if (name == kBinomialSymbol)
        throw std::invalid_argument("'" + kBinomialSymbol + "' is reserved for the binomial symbol");
    return Rank1Atom{poly_var(name)};
}

LambdaElement LambdaElement::constant(const Rational& c) {
    LambdaElement e;
    e.add_term(Monomial(), SparsePoly(c));
    return e;
}

LambdaElement LambdaElement::binomial_symbol() {
    LambdaElement e;
    e.add_term(Monomial(), SparsePoly(poly_var(kBinomialSymbol)));
    return e;
}

LambdaElement LambdaElement::atom(const Rank1Atom& a) {
    LambdaElement e;
    e.add_term(Monomial::var(a.id.name), SparsePoly(1));
    return e;
}

LambdaElement LambdaElement::term(const SparsePoly& coeff, const Monomial& atom_monomial) {
    LambdaElement e;
    e.add_term(atom_monomial, coeff);
    return e;
}

void LambdaElement::add_term(const Monomial& m, const SparsePoly& coeff) {
    validate_coeff(coeff);
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LambdaElement LambdaElement::operator-() const {
    LambdaElement e = *this;
    for (auto& [m, c] : e.terms_) c = -c;
    return e;
}

LambdaElement& LambdaElement::operator+=(const LambdaElement& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

LambdaElement& LambdaElement::operator-=(const LambdaElement& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

LambdaElement operator*(const LambdaElement& a, const LambdaElement& b) {
    LambdaElement r;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) r.add_term(ma * mb, ca * cb);
    return r;
}

SparsePoly LambdaElement::to_poly(const std::map<std::string, SparsePoly>& atom_values) const {
    SparsePoly r;
    for (const auto& [m, c] : terms_) {
        SparsePoly term = c;
        for (const auto& [atom, exp] : m.factors()) {
            auto it = atom_values.find(atom);
            SparsePoly value = it != atom_values.end() ? it->second : SparsePoly(poly_var(atom));
            term *= value.pow(exp);
        }
        r += term;
    }
    return r;
}

AtomSubstitution& AtomSubstitution::set(const std::string& atom, const SparsePoly& value) {
    values_[atom] = value;
    return *this;
}

AtomSubstitution& AtomSubstitution::set_geometric(const std::string& atom, const VarId& letter,
                                                  int cap) {
    SparsePoly g;
    for (int k = 0; k <= cap; ++k) g += SparsePoly(letter, k);
    values_[atom] = g;
    return *this;
}

AtomSubstitution AtomSubstitution::q_shift() {
    AtomSubstitution s;
    s.set(kQPrimeAtom, SparsePoly(1) + SparsePoly(series_var("q")));
    return s;
}

SparsePoly AtomSubstitution::value_of(const std::string& atom) const {
    auto it = values_.find(atom);
    return it != values_.end() ? it->second : SparsePoly(poly_var(atom));
}

TruncatedSeries AtomSubstitution::monomial_value(const Monomial& m,
                                                 const TruncationProfile& profile) const {
    TruncatedSeries r(SparsePoly(1), profile);
    for (const auto& [atom, exp] : m.factors())
        r = series_mul(r, series_pow_int(TruncatedSeries(value_of(atom), profile), exp));
    return r;
}

LambdaElement psi_action(int i, const LambdaElement& e) {
    if (i < 1) throw std::invalid_argument("psi_action: i must be >= 1");
    LambdaElement r;
    for (const auto& [m, c] : e.terms()) r += LambdaElement::term(c, m.pow(i));
    return r;
}

TruncatedSeries element_value(const LambdaElement& e, const AtomSubstitution& subs,
                              const TruncationProfile& profile) {
    TruncatedSeries r(SparsePoly(0), profile);
    for (const auto& [m, c] : e.terms())
        r += TruncatedSeries(subs.monomial_value(m, profile).poly() * c, profile);
    return r;
}

namespace {

TruncatedSeries generating_action(const LambdaElement& e, const VarId& t,
                                  const TruncationProfile& profile, const AtomSubstitution& subs,
                                  bool lambda) {
    if (t.cls != VarClass::Series || !profile.cap(t.name))
        throw std::invalid_argument("action parameter '" + t.name +
                                    "' must be a capped SERIES variable");
    SparsePoly tp(t);
    TruncatedSeries result(SparsePoly(1), profile);
    for (const auto& [m, c] : e.terms()) {
        TruncatedSeries u = subs.monomial_value(m, profile);
        if (lambda) {
            TruncatedSeries base(SparsePoly(1) + tp * u.poly(), profile);
            result = series_mul(result, pow_by_coeff(base, c));
        } else {
            TruncatedSeries base(SparsePoly(1) - tp * u.poly(), profile);
            result = series_mul(result, pow_by_coeff(base, -c));
        }
    }
    return result;
}

}  // namespace

TruncatedSeries lambda_t_action(const LambdaElement& e, const VarId& t,
                                const TruncationProfile& profile, const AtomSubstitution& subs) {
    return generating_action(e, t, profile, subs, true);
}

TruncatedSeries sigma_t_action(const LambdaElement& e, const VarId& t,
                               const TruncationProfile& profile, const AtomSubstitution& subs) {
    return generating_action(e, t, profile, subs, false);
}

SparsePoly lambda_coeff(int i, const LambdaElement& e, const TruncationProfile& profile,
                        const AtomSubstitution& subs) {
    return lambda_t_action(e, series_var("t"), profile, subs).coeff_of("t", i);
}

SparsePoly sigma_coeff(int i, const LambdaElement& e, const TruncationProfile& profile,
                       const AtomSubstitution& subs) {
    return sigma_t_action(e, series_var("t"), profile, subs).coeff_of("t", i);
}

namespace {

// Caps large enough that the coefficient of t^i is computed exactly: the
// substituted q-degree per power of t is bounded by the largest atom degree.
TruncationProfile default_coeff_profile(int i, const LambdaElement& e) {
    int max_deg = 1;
    for (const auto& [m, c] : e.terms()) max_deg = std::max(max_deg, m.total_degree());
    TruncationProfile profile;
    profile.set_cap("t", i);
    profile.set_cap("q", i * max_deg);
    return profile;
}

}  // namespace

SparsePoly lambda_coeff(int i, const LambdaElement& e) {
    return lambda_coeff(i, e, default_coeff_profile(i, e), AtomSubstitution::q_shift());
}

SparsePoly sigma_coeff(int i, const LambdaElement& e) {
    return sigma_coeff(i, e, default_coeff_profile(i, e), AtomSubstitution::q_shift());
}

LambdaElement q_element() {
    return LambdaElement::atom(rank1_atom(kQPrimeAtom)) - LambdaElement::constant(1);
}

SparsePoly psi_mu_of_q(const Partition& mu, const VarId& q) {
    std::map<std::string, SparsePoly> shift{{kQPrimeAtom, SparsePoly(1) + SparsePoly(q)}};
    SparsePoly r(1);
    for (int part : mu.parts()) r *= psi_action(part, q_element()).to_poly(shift);
    return r;
}

TruncatedSeries psi_mu_value(const Partition& mu, const LambdaElement& e,
                             const AtomSubstitution& subs, const TruncationProfile& profile) {
    TruncatedSeries r(SparsePoly(1), profile);
    for (int part : mu.parts()) r = series_mul(r, element_value(psi_action(part, e), subs, profile));
    return r;
}

TruncatedSeries apply_powersum_expansion(const SparsePoly& f_in_p, const LambdaElement& e,
                                         const AtomSubstitution& subs,
                                         const TruncationProfile& profile) {
    TruncatedSeries r(SparsePoly(0), profile);
    for (const auto& [m, c] : f_in_p.terms()) {
        TruncatedSeries term(SparsePoly(c), profile);
        for (const auto& [name, exp] : m.factors()) {
            if (name.size() < 2 || name[0] != 'p')
                throw std::invalid_argument("power-sum expansion variable '" + name +
                                            "' is not of the form p<k>");
            int k = std::stoi(name.substr(1));
            TruncatedSeries psi_k = element_value(psi_action(k, e), subs, profile);
            term = series_mul(term, series_pow_int(psi_k, exp));
        }
        r += term;
    }
    return r;
}

bool check_sum_product_rules(const LambdaElement& p, const LambdaElement& q, int i,
                             const AtomSubstitution& subs, const TruncationProfile& profile) {
    if (i < 0) throw std::invalid_argument("check_sum_product_rules: i must be >= 0");
    VarId t = series_var("t");
    TruncationProfile prof = profile;
    prof.set_cap("t", i);

    LambdaElement sum = p + q;
    auto as_series = [&](const SparsePoly& poly) { return TruncatedSeries(poly, prof); };

    // Convolution rules for S^i[P+Q] and Lambda^i[P+Q].
    SparsePoly s_conv, l_conv;
    for (int j = 0; j <= i; ++j) {
        s_conv += sigma_coeff(i - j, p, prof, subs) * sigma_coeff(j, q, prof, subs);
        l_conv += lambda_coeff(i - j, p, prof, subs) * lambda_coeff(j, q, prof, subs);
    }
    if (sigma_coeff(i, sum, prof, subs) != s_conv) return false;
    if (lambda_coeff(i, sum, prof, subs) != l_conv) return false;

    // Generating-series multiplicativity, up to truncation.
    if (!series_equal(sigma_t_action(sum, t, prof, subs),
                      series_mul(sigma_t_action(p, t, prof, subs),
                                 sigma_t_action(q, t, prof, subs))))
        return false;
    if (!series_equal(lambda_t_action(sum, t, prof, subs),
                      series_mul(lambda_t_action(p, t, prof, subs),
                                 lambda_t_action(q, t, prof, subs))))
        return false;

    // Kernel expansions for S^i[PQ] and Lambda^i[PQ].
    LambdaElement prod = p * q;
    TruncatedSeries s_direct = as_series(sigma_coeff(i, prod, prof, subs));
    TruncatedSeries l_direct = as_series(lambda_coeff(i, prod, prof, subs));

    TruncatedSeries s1(SparsePoly(0), prof), s2 = s1, s3 = s1, l1 = s1, l2 = s1, l3 = s1;
    for (const auto& mu : enumerate_partitions(i)) {
        Rational w = Rational(1) / Rational(z_mu(mu));
        Rational sgn = (i - mu.length()) % 2 == 0 ? Rational(1) : Rational(-1);
        TruncatedSeries pp = psi_mu_value(mu, p, subs, prof);
        TruncatedSeries pq = psi_mu_value(mu, q, subs, prof);
        TruncatedSeries pair = series_mul(pp, pq);
        s1 += TruncatedSeries(pair.poly() * w, prof);
        l1 += TruncatedSeries(pair.poly() * (sgn * w), prof);

        TruncatedSeries mono_p = apply_powersum_expansion(monomial_in_powersums(mu), p, subs, prof);
        SparsePoly s_mu_q(1), l_mu_q(1);
        for (int part : mu.parts()) {
            s_mu_q *= sigma_coeff(part, q, prof, subs);
            l_mu_q *= lambda_coeff(part, q, prof, subs);
        }
        s2 += series_mul(mono_p, as_series(s_mu_q));
        l2 += series_mul(mono_p, as_series(l_mu_q));

        TruncatedSeries schur_p = apply_powersum_expansion(schur_in_powersums(mu), p, subs, prof);
        TruncatedSeries schur_q = apply_powersum_expansion(schur_in_powersums(mu), q, subs, prof);
        TruncatedSeries schur_qc =
            apply_powersum_expansion(schur_in_powersums(mu.conjugate()), q, subs, prof);
        s3 += series_mul(schur_p, schur_q);
        l3 += series_mul(schur_p, schur_qc);
    }
    return series_equal(s1, s_direct) && series_equal(s2, s_direct) && series_equal(s3, s_direct) &&
           series_equal(l1, l_direct) && series_equal(l2, l_direct) && series_equal(l3, l_direct);
}

}  // namespace lring
