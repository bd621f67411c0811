#include "lring/application.hpp"

#include "lring/combinat.hpp"
#include "lring/pjk.hpp"
#include "lring/truncated_series.hpp"

#include <sstream>
#include <stdexcept>

namespace lring {

namespace {

Rational parity_sign(int k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

// LHS of the ratio identity in w = 1/y:
// prod_cells (1 + (c-x)w) * inverse(prod_cells (1 + c w)).
TruncatedSeries ratio_lhs(const std::vector<Rational>& contents, int cap_w) {
    TruncationProfile profile;
    profile.set_cap("w", cap_w);
    SparsePoly w(series_var("w")), x(poly_var("x"));
    SparsePoly numer(1), denom(1);
    for (const auto& c : contents) {
        numer *= SparsePoly(1) + (SparsePoly(c) - x) * w;
        denom *= SparsePoly(1) + SparsePoly(c) * w;
    }
    return series_mul(TruncatedSeries(numer, profile),
                      series_inverse(TruncatedSeries(denom, profile)));
}

std::string theorem4_params(const Partition& lambda, const AlphaParam& alpha, int cap_w,
                            int cap_x) {
    std::ostringstream os;
    os << "lambda=" << lambda.str() << " alpha=" << to_string(alpha.value) << " w-cap=" << cap_w;
    if (cap_x >= 0) os << " x-cap=" << cap_x;
    return os.str();
}

}  // namespace

AlphaParam::AlphaParam(Rational v) : value(std::move(v)) {
    if (value <= 0) throw std::invalid_argument("alpha must be a positive rational");
}

std::vector<Rational> content_alphabet(const Partition& lambda, const AlphaParam& alpha) {
    std::vector<Rational> contents;
    contents.reserve(lambda.weight());
    for (const Cell& cell : lambda.cells())
        contents.push_back(Rational(cell.col - 1) - Rational(cell.row - 1) / alpha.value);
    return contents;
}

Rational d_k(const Partition& lambda, const AlphaParam& alpha, int k) {
    if (k < 0) throw std::invalid_argument("d_k: k must be >= 0");
    Rational total = 0;
    for (const auto& c : content_alphabet(lambda, alpha)) total += rational_pow(c, k);
    return total;
}

SparsePoly pochhammer_lambda(const Partition& lambda, const AlphaParam& alpha,
                             const SparsePoly& shift) {
    SparsePoly r(1);
    for (const auto& c : content_alphabet(lambda, alpha)) r *= shift + SparsePoly(c);
    return r;
}

Rational f_jk(const Partition& lambda, const AlphaParam& alpha, int j, int k) {
    if (j < 0 || k < 0) throw std::invalid_argument("f_jk: indices must be >= 0");
    if (k > j) return 0;
    std::map<std::string, Rational> point;
    for (int i = 1; i <= j; ++i) point["X" + std::to_string(i)] = d_k(lambda, alpha, i);
    return p_jk(j, k, XVariables{j}).evaluate(point);
}

VerificationReport verify_theorem4(const Partition& lambda, const AlphaParam& alpha, int cap_w,
                                   int cap_x) {
    Stopwatch timer;
    std::string params = theorem4_params(lambda, alpha, cap_w, cap_x);
    if (cap_x < lambda.weight())
        throw std::invalid_argument("verify_theorem4: cap_x must be at least |lambda|");

    TruncatedSeries lhs = ratio_lhs(content_alphabet(lambda, alpha), cap_w);

    // The x-degree of the ratio never exceeds |lambda|.
    if (lhs.poly().degree("x") > lambda.weight()) {
        VerificationReport r;
        r.identity = "theorem4-xdegree";
        r.params = params;
        r.pass = false;
        r.witness_monomial = "x^" + std::to_string(lhs.poly().degree("x"));
        r.millis = timer.millis();
        return r;
    }

    SparsePoly w(series_var("w")), x(poly_var("x"));
    SparsePoly rhs_poly;
    for (int j = 0; j <= cap_w; ++j) {
        for (int i = 0; i + j <= cap_w; ++i) {
            Rational inner = 0;
            for (int k = 0; k <= std::min(i, j); ++k)
                inner += binom_int(lambda.weight() - j, i - k) * f_jk(lambda, alpha, j, k);
            if (inner == 0) continue;
            rhs_poly += parity_sign(i + j) * inner * x.pow(i) * w.pow(i + j);
        }
    }
    TruncatedSeries rhs(rhs_poly, lhs.profile());

    auto report = compare_series("theorem4", params, lhs, rhs);
    report.millis = timer.millis();
    return report;
}

VerificationReport verify_vanishing(const Partition& lambda, const AlphaParam& alpha,
                                    std::pair<int, int> i_range, std::pair<int, int> j_range) {
    Stopwatch timer;
    std::ostringstream params;
    params << "lambda=" << lambda.str() << " alpha=" << to_string(alpha.value) << " i="
           << i_range.first << ".." << i_range.second << " j=" << j_range.first << ".."
           << j_range.second;

    VerificationReport r;
    r.identity = "vanishing";
    r.params = params.str();
    r.pass = true;
    if (i_range.first <= lambda.weight())
        throw std::invalid_argument("verify_vanishing: every i must exceed |lambda|");

    for (int i = i_range.first; i <= i_range.second && r.pass; ++i) {
        for (int j = j_range.first; j <= j_range.second && r.pass; ++j) {
            Rational sum = 0;
            for (int k = 0; k <= std::min(i, j); ++k)
                sum += binom_int(lambda.weight() - j, i - k) * f_jk(lambda, alpha, j, k);
            if (sum != 0) {
                r.pass = false;
                r.witness_monomial = "i=" + std::to_string(i) + " j=" + std::to_string(j);
                r.lhs_coeff = to_string(sum);
                r.rhs_coeff = "0";
            }
        }
    }
    r.millis = timer.millis();
    return r;
}

VerificationReport chu_vandermonde_demo(int n, int cap_w) {
    Stopwatch timer;
    if (n < 1) throw std::invalid_argument("chu_vandermonde_demo: n must be >= 1");
    std::string params = "n=" + std::to_string(n) + " w-cap=" + std::to_string(cap_w);
    Partition row({n});

    // Row contents are {0, 1, ..., n-1} for every alpha.
    auto report = verify_theorem4(row, AlphaParam(Rational(1)), cap_w, n + 2);
    report.identity = "chu-vandermonde";
    report.params = params;
    if (!report.pass) {
        report.millis = timer.millis();
        return report;
    }

    // Classical route: w^n (z)_n at z = y-x resp. z = y, using wy = 1:
    // sum_m c_m w^{n-m} (1-xw)^m over the rising-factorial coefficients c_m.
    TruncationProfile profile;
    profile.set_cap("w", cap_w);
    SparsePoly w(series_var("w")), x(poly_var("x"));
    SparsePoly rising = rising_factorial(n);
    SparsePoly numer, denom;
    for (int m = 0; m <= n; ++m) {
        SparsePoly c = rising.coeff_of("z", m);
        if (c.is_zero()) continue;
        numer += c * w.pow(n - m) * (SparsePoly(1) - x * w).pow(m);
        denom += c * w.pow(n - m);
    }
    TruncatedSeries classical = series_mul(TruncatedSeries(numer, profile),
                                           series_inverse(TruncatedSeries(denom, profile)));
    auto vs_classical = compare_series("chu-vandermonde classical", params,
                                       ratio_lhs(content_alphabet(row, AlphaParam(Rational(1))), cap_w),
                                       classical);
    if (!vs_classical.pass) {
        vs_classical.millis = timer.millis();
        return vs_classical;
    }

    // alpha-independence of the row case.
    for (const auto& alpha : {Rational(2), Rational(1, 2)}) {
        auto other = verify_theorem4(row, AlphaParam(alpha), cap_w, n + 2);
        if (!other.pass) {
            other.millis = timer.millis();
            return other;
        }
        auto same = compare_series(
            "chu-vandermonde alpha-independence", params,
            ratio_lhs(content_alphabet(row, AlphaParam(Rational(1))), cap_w),
            ratio_lhs(content_alphabet(row, AlphaParam(alpha)), cap_w));
        if (!same.pass) {
            same.millis = timer.millis();
            return same;
        }
    }

    report.millis = timer.millis();
    return report;
}

}  // namespace lring
