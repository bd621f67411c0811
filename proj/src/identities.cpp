#include "lring/identities.hpp"

#include "lring/combinat.hpp"
#include "lring/lambdaring.hpp"

#include <sstream>
#include <stdexcept>

namespace lring {

namespace {

Rational parity_sign(int k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

VerificationReport make_report(const std::string& identity, const std::string& params,
                               const SparsePoly& diff, const SparsePoly& lhs,
                               const SparsePoly& rhs) {
    VerificationReport r;
    r.identity = identity;
    r.params = params;
    r.pass = diff.is_zero();
    if (!r.pass) {
        const auto& [monomial, coeff] = *diff.terms().begin();
        r.witness_monomial = monomial.str();
        r.lhs_coeff = to_string(lhs.coeff(monomial));
        r.rhs_coeff = to_string(rhs.coeff(monomial));
    }
    return r;
}

}  // namespace

VerificationReport compare_series(const std::string& identity, const std::string& params,
                                  const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
    TruncationProfile merged = TruncationProfile::merge(lhs.profile(), rhs.profile());
    SparsePoly a = truncate_poly(lhs.poly(), merged);
    SparsePoly b = truncate_poly(rhs.poly(), merged);
    return make_report(identity, params, a - b, a, b);
}

VerificationReport compare_polys(const std::string& identity, const std::string& params,
                                 const SparsePoly& lhs, const SparsePoly& rhs) {
    return make_report(identity, params, lhs - rhs, lhs, rhs);
}

bool all_pass(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports)
        if (!r.pass) return false;
    return true;
}

namespace {

// z + sum_{k=1..cap_u} u^k (i)_k/k! X_k; (i)_k/k! = binom(i+k-1, k).
SparsePoly lhs_row_factor(int i, const XVariables& x, const VarId& u, int cap_u) {
    SparsePoly f(poly_var(kBinomialSymbol));
    for (int k = 1; k <= cap_u; ++k)
        f += binom_int(i + k - 1, k) * SparsePoly(u, k) * SparsePoly(x.var(k));
    return f;
}

}  // namespace

TruncatedSeries theorem1_lhs(int n, int r, const XVariables& x, const VarId& u, int cap_u) {
    if (cap_u > x.count) throw std::invalid_argument("need at least cap_u X-variables");
    TruncationProfile profile;
    profile.set_cap(u.name, cap_u);
    TruncatedSeries acc(SparsePoly(0), profile);
    for (const auto& mu : enumerate_partitions(n)) {
        Integer top = gen_binom(mu, r);
        if (top == 0) continue;
        Rational scale = parity_sign(r - mu.length()) * Rational(top, z_mu(mu));
        TruncatedSeries term(SparsePoly(1), profile);
        for (int i = 1; i <= mu.max_part(); ++i) {
            int m = mu.multiplicity(i);
            if (m == 0) continue;
            TruncatedSeries factor(lhs_row_factor(i, x, u, cap_u), profile);
            term = series_mul(term, series_pow_int(factor, m));
        }
        acc += TruncatedSeries(term.poly() * scale, profile);
    }
    return acc;
}

TruncatedSeries theorem1_rhs(int n, int r, const XVariables& x, const VarId& u, int cap_u) {
    if (cap_u > x.count) throw std::invalid_argument("need at least cap_u X-variables");
    TruncationProfile profile;
    profile.set_cap(u.name, cap_u);
    SparsePoly z(poly_var(kBinomialSymbol));
    SparsePoly acc;
    for (int j = 0; j <= cap_u; ++j) {
        Rational outer = binom_int(n + j - 1, n - r);
        if (outer == 0) continue;
        SparsePoly inner;
        for (int k = 0; k <= std::min(r, j); ++k) {
            SparsePoly pjk = p_jk(j, k, x);
            if (pjk.is_zero()) continue;
            inner += binom_poly(r - k).substitute("z", z - SparsePoly(j)) * pjk;
        }
        acc += outer * SparsePoly(u, j) * inner;
    }
    return TruncatedSeries(acc, profile);
}

TruncatedSeries theorem2_lhs(int n, const XVariables& x, const VarId& u, int cap_u) {
    if (cap_u > x.count) throw std::invalid_argument("need at least cap_u X-variables");
    TruncationProfile profile;
    profile.set_cap(u.name, cap_u);
    TruncatedSeries acc(SparsePoly(0), profile);
    for (const auto& mu : enumerate_partitions(n)) {
        Rational scale = parity_sign(n - mu.length()) / Rational(z_mu(mu));
        TruncatedSeries term(SparsePoly(1), profile);
        for (int i = 1; i <= mu.max_part(); ++i) {
            int m = mu.multiplicity(i);
            if (m == 0) continue;
            TruncatedSeries factor(lhs_row_factor(i, x, u, cap_u), profile);
            term = series_mul(term, series_pow_int(factor, m));
        }
        acc += TruncatedSeries(term.poly() * scale, profile);
    }
    return acc;
}

TruncatedSeries theorem2_rhs(int n, const XVariables& x, const VarId& u, int cap_u) {
    if (cap_u > x.count) throw std::invalid_argument("need at least cap_u X-variables");
    TruncationProfile profile;
    profile.set_cap(u.name, cap_u);
    SparsePoly z(poly_var(kBinomialSymbol));
    SparsePoly acc;
    for (int j = 0; j <= cap_u; ++j) {
        SparsePoly inner;
        for (int k = 0; k <= std::min(n, j); ++k) {
            SparsePoly pjk = p_jk(j, k, x);
            if (pjk.is_zero()) continue;
            inner += binom_poly(n - k).substitute("z", z - SparsePoly(j)) * pjk;
        }
        acc += SparsePoly(u, j) * inner;
    }
    return TruncatedSeries(acc, profile);
}

std::vector<VerificationReport> verify_theorem1(int n_max, int cap_u) {
    std::vector<VerificationReport> reports;
    XVariables x{cap_u};
    VarId u = series_var("u");
    for (int n = 1; n <= n_max; ++n) {
        for (int r = 1; r <= n; ++r) {
            Stopwatch timer;
            std::ostringstream params;
            params << "n=" << n << " r=" << r << " u-cap=" << cap_u;
            auto report = compare_series("theorem1", params.str(),
                                         theorem1_lhs(n, r, x, u, cap_u),
                                         theorem1_rhs(n, r, x, u, cap_u));
            report.millis = timer.millis();
            reports.push_back(std::move(report));
        }

        // r = n+1 is trivial (both sides vanish); only failures are reported.
        Stopwatch timer;
        auto lhs = theorem1_lhs(n, n + 1, x, u, cap_u);
        auto rhs = theorem1_rhs(n, n + 1, x, u, cap_u);
        TruncatedSeries zero(SparsePoly(0), lhs.profile());
        std::ostringstream params;
        params << "n=" << n << " r=" << n + 1 << " u-cap=" << cap_u;
        for (auto check : {compare_series("theorem1-trivial lhs", params.str(), lhs, zero),
                           compare_series("theorem1-trivial rhs", params.str(), rhs, zero)}) {
            if (!check.pass) {
                check.millis = timer.millis();
                reports.push_back(std::move(check));
            }
        }
    }
    return reports;
}

std::vector<VerificationReport> verify_theorem2(int n_max, int cap_u) {
    std::vector<VerificationReport> reports;
    XVariables x{cap_u};
    VarId u = series_var("u");
    for (int n = 1; n <= n_max; ++n) {
        Stopwatch timer;
        std::ostringstream params;
        params << "n=" << n << " u-cap=" << cap_u;
        auto lhs = theorem2_lhs(n, x, u, cap_u);
        auto rhs = theorem2_rhs(n, x, u, cap_u);
        auto report = compare_series("theorem2", params.str(), lhs, rhs);
        report.millis = timer.millis();
        reports.push_back(report);

        // Agreement with the main identity at r = n.
        Stopwatch timer_t1;
        auto vs_lhs = compare_series("theorem2-vs-theorem1-lhs", params.str(), lhs,
                                     theorem1_lhs(n, n, x, u, cap_u));
        vs_lhs.millis = timer_t1.millis();
        reports.push_back(std::move(vs_lhs));
        Stopwatch timer_t1r;
        auto vs_rhs = compare_series("theorem2-vs-theorem1-rhs", params.str(), rhs,
                                     theorem1_rhs(n, n, x, u, cap_u));
        vs_rhs.millis = timer_t1r.millis();
        reports.push_back(std::move(vs_rhs));

        // X = 0 degeneration: a pure (z,u) identity.
        Stopwatch timer_x0;
        SparsePoly lhs0 = lhs.poly(), rhs0 = rhs.poly();
        for (int k = 1; k <= cap_u; ++k) {
            lhs0 = lhs0.substitute("X" + std::to_string(k), SparsePoly(0));
            rhs0 = rhs0.substitute("X" + std::to_string(k), SparsePoly(0));
        }
        auto x0 = compare_series("theorem2-x0", params.str(),
                                 TruncatedSeries(lhs0, lhs.profile()),
                                 TruncatedSeries(rhs0, rhs.profile()));
        x0.millis = timer_x0.millis();
        reports.push_back(std::move(x0));
    }
    return reports;
}

bool binomial_series_lemma(int j, int cap_t) {
    if (j < 1) throw std::invalid_argument("binomial_series_lemma: j must be >= 1");
    TruncationProfile profile;
    profile.set_cap("t", cap_t);
    SparsePoly t(series_var("t"));
    SparsePoly lhs;
    for (int i = j; i - j <= cap_t; ++i) lhs += binom_int(i - 1, j - 1) * t.pow(i - j);
    TruncatedSeries rhs =
        series_pow_int(series_inverse(TruncatedSeries(SparsePoly(1) - t, profile)), j);
    return series_equal(TruncatedSeries(lhs, profile), rhs);
}

namespace {

TruncationProfile theorem3_profile(const Alphabet& a, const Theorem3Caps& caps) {
    TruncationProfile profile;
    profile.set_cap("t", caps.cap_t);
    profile.set_cap("q", caps.cap_q);
    for (const auto& name : a.series_vars()) profile.set_cap(name, caps.cap_a);
    return profile;
}

// y = -q t / (1+t).
TruncatedSeries theorem3_y(const TruncationProfile& profile) {
    SparsePoly t(series_var("t")), q(series_var("q"));
    return series_mul(TruncatedSeries(-(q * t), profile),
                      series_inverse(TruncatedSeries(SparsePoly(1) + t, profile)));
}

}  // namespace

TruncatedSeries theorem3_lhs(const Alphabet& a, const Theorem3Caps& caps) {
    TruncationProfile profile = theorem3_profile(a, caps);
    int p = a.size();
    SparsePoly z(poly_var(kBinomialSymbol));

    // qB = (z+p) q' - (z+p) + sum_i (a'_i - q' a'_i), atoms q', a'_i rank-1.
    LambdaElement qb = LambdaElement::term(z + SparsePoly(p), Monomial::var(kQPrimeAtom)) -
                       LambdaElement::term(z + SparsePoly(p), Monomial());
    AtomSubstitution subs = AtomSubstitution::q_shift();
    for (int i = 1; i <= p; ++i) {
        std::string atom = "ap" + std::to_string(i);
        const auto& letter = a.letter(i - 1);
        if (letter.var_classes().size() != 1 ||
            letter.var_classes().begin()->second != VarClass::Series)
            throw std::invalid_argument("theorem3 needs formal single-variable letters");
        VarId letter_var = series_var(letter.var_classes().begin()->first);
        qb += LambdaElement::term(SparsePoly(1), Monomial::var(atom));
        qb -= LambdaElement::term(SparsePoly(1),
                                  Monomial::var(kQPrimeAtom) * Monomial::var(atom));
        subs.set_geometric(atom, letter_var, caps.cap_a);
    }
    return lambda_t_action(qb, series_var("t"), profile, subs);
}

TruncatedSeries theorem3_closed_product(const Alphabet& a, const Theorem3Caps& caps) {
    TruncationProfile profile = theorem3_profile(a, caps);
    SparsePoly t(series_var("t")), q(series_var("q"));
    SparsePoly z(poly_var(kBinomialSymbol));
    TruncatedSeries y = theorem3_y(profile);
    TruncatedSeries one_minus_y = TruncatedSeries(SparsePoly(1), profile) - y;

    TruncatedSeries result = series_pow_symbolic(one_minus_y, z);
    for (const auto& letter : a.letters()) {
        TruncatedSeries numer(SparsePoly(1) + t - letter, profile);
        TruncatedSeries denom(SparsePoly(1) + t * (SparsePoly(1) + q) - letter, profile);
        result = series_mul(result, one_minus_y);
        result = series_mul(result, numer);
        result = series_mul(result, series_inverse(denom));
    }
    return result;
}

TruncatedSeries theorem3_rhs(const Alphabet& a, const Theorem3Caps& caps) {
    TruncationProfile profile = theorem3_profile(a, caps);
    SparsePoly t(series_var("t"));
    SparsePoly z(poly_var(kBinomialSymbol));
    TruncatedSeries y = theorem3_y(profile);
    TruncatedSeries one_minus_y = TruncatedSeries(SparsePoly(1), profile) - y;
    TruncatedSeries inv_one_plus_t = series_inverse(TruncatedSeries(SparsePoly(1) + t, profile));

    int max_len = std::min(a.size(), caps.cap_q);
    int max_weight = caps.cap_a * a.size();
    TruncatedSeries acc(SparsePoly(0), profile);
    for (int m = 0; m <= max_weight; ++m) {
        for (const auto& nu : enumerate_partitions(m)) {
            if (nu.length() > max_len) continue;
            SparsePoly psi_nu = monomial_sym(a, nu);
            if (psi_nu.is_zero()) continue;
            TruncatedSeries term(psi_nu, profile);
            if (term.is_zero()) continue;
            term = series_mul(term, series_pow_int(y, nu.length()));
            term = series_mul(term, series_pow_int(inv_one_plus_t, m));
            term = series_mul(term,
                              series_pow_symbolic(one_minus_y, z - SparsePoly(m)));
            acc += term;
        }
    }
    return acc;
}

VerificationReport verify_theorem3(int letters, const Theorem3Caps& caps) {
    Stopwatch timer;
    std::ostringstream params;
    params << "letters=" << letters << " caps=" << caps.cap_t << "," << caps.cap_q << ","
           << caps.cap_a;
    Alphabet a = Alphabet::formal("a", letters);
    auto lhs = theorem3_lhs(a, caps);
    auto closed = theorem3_closed_product(a, caps);
    auto rhs = theorem3_rhs(a, caps);

    auto engine_vs_closed = compare_series("theorem3", params.str() + " engine-vs-closed", lhs, closed);
    if (!engine_vs_closed.pass) {
        engine_vs_closed.millis = timer.millis();
        return engine_vs_closed;
    }
    auto engine_vs_sum = compare_series("theorem3", params.str(), lhs, rhs);
    engine_vs_sum.millis = timer.millis();
    return engine_vs_sum;
}

VerificationReport verify_eq11_reformulation(int n_max, int cap_u) {
    Stopwatch timer;
    std::ostringstream params;
    params << "n-max=" << n_max << " u-cap=" << cap_u;

    XVariables x{cap_u};
    VarId u = series_var("u");
    TruncationProfile profile;
    profile.set_cap("u", cap_u);
    profile.set_cap("t", n_max);
    profile.set_cap("q", n_max);
    SparsePoly t(series_var("t")), q(series_var("q"));
    SparsePoly z(poly_var(kBinomialSymbol));

    auto negate_x = [&](SparsePoly poly) {
        for (int k = 1; k <= cap_u; ++k) {
            std::string name = "X" + std::to_string(k);
            poly = poly.substitute(name, -SparsePoly(poly_var(name)));
        }
        return poly;
    };

    // Direct partial sums of the reformulated identity.
    TruncatedSeries lhs_direct(SparsePoly(0), profile), rhs_direct = lhs_direct;
    // The same sums assembled from the per-(n,r) statement.
    TruncatedSeries lhs_from_t1(SparsePoly(0), profile), rhs_from_t1 = lhs_from_t1;

    for (int n = 1; n <= n_max; ++n) {
        for (int r = 1; r <= n; ++r) {
            SparsePoly weight = (parity_sign(n) * t.pow(n)) * (parity_sign(r) * q.pow(r));

            // Direct LHS: signs and X -> -X written into the summand.
            for (const auto& mu : enumerate_partitions(n)) {
                Integer top = gen_binom(mu, r);
                if (top == 0) continue;
                Rational scale = parity_sign(r - mu.length()) * Rational(top, z_mu(mu));
                SparsePoly term(1);
                for (int i = 1; i <= mu.max_part(); ++i) {
                    int m = mu.multiplicity(i);
                    if (m == 0) continue;
                    SparsePoly factor = z;
                    for (int k = 1; k <= cap_u; ++k)
                        factor -= binom_int(i + k - 1, k) * SparsePoly(u, k) * SparsePoly(x.var(k));
                    term = truncate_poly(term * factor.pow(m), profile);
                }
                lhs_direct += TruncatedSeries(term * scale * weight, profile);
            }

            // Direct RHS.
            for (int j = 0; j <= cap_u; ++j) {
                Rational outer = binom_int(n + j - 1, n - r);
                if (outer == 0) continue;
                SparsePoly inner;
                for (int k = 0; k <= std::min(r, j); ++k) {
                    SparsePoly pjk = negate_x(p_jk(j, k, x));
                    if (pjk.is_zero()) continue;
                    inner += binom_poly(r - k).substitute("z", z - SparsePoly(j)) * pjk;
                }
                rhs_direct += TruncatedSeries(outer * SparsePoly(u, j) * inner * weight, profile);
            }

            lhs_from_t1 += TruncatedSeries(
                negate_x(theorem1_lhs(n, r, x, u, cap_u).poly()) * weight, profile);
            rhs_from_t1 += TruncatedSeries(
                negate_x(theorem1_rhs(n, r, x, u, cap_u).poly()) * weight, profile);
        }
    }

    auto check1 = compare_series("eq11", params.str() + " lhs-direct-vs-summed", lhs_direct,
                                 lhs_from_t1);
    auto check2 = compare_series("eq11", params.str() + " rhs-direct-vs-summed", rhs_direct,
                                 rhs_from_t1);
    auto check3 = compare_series("eq11", params.str(), lhs_direct, rhs_direct);
    VerificationReport result = !check1.pass ? check1 : (!check2.pass ? check2 : check3);
    result.millis = timer.millis();
    return result;
}

}  // namespace lring
