#include "lring/symfun.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lring {

namespace {

Rational parity_sign(int k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

// Cofactor expansion; fine at the sizes used here (l(mu) <= 6).
SparsePoly det_poly(const std::vector<std::vector<SparsePoly>>& m) {
    std::size_t n = m.size();
    if (n == 0) return SparsePoly(1);
    if (n == 1) return m[0][0];
    SparsePoly det;
    for (std::size_t col = 0; col < n; ++col) {
        if (m[0][col].is_zero()) continue;
        std::vector<std::vector<SparsePoly>> minor(n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (c != col) minor[r - 1].push_back(m[r][c]);
        det += parity_sign(static_cast<int>(col)) * m[0][col] * det_poly(minor);
    }
    return det;
}

// Exact solve of A x = b by Gaussian elimination; A must be invertible.
std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) throw std::logic_error("singular transition matrix");
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            Rational f = a[row][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
            b[row] -= f * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

SparsePoly powersum_monomial(const Partition& nu) {
    SparsePoly r(1);
    for (int part : nu.parts()) r *= SparsePoly(poly_var("p" + std::to_string(part)));
    return r;
}

}  // namespace

Alphabet::Alphabet(std::vector<SparsePoly> letters) : letters_(std::move(letters)) {
    for (std::size_t i = 0; i < letters_.size(); ++i)
        for (std::size_t j = i + 1; j < letters_.size(); ++j)
            if (letters_[i] == letters_[j])
                throw std::invalid_argument("alphabet letters must be distinct");
}

Alphabet Alphabet::formal(const std::string& prefix, int count) {
    std::vector<SparsePoly> letters;
    for (int i = 1; i <= count; ++i)
        letters.emplace_back(SparsePoly(series_var(prefix + std::to_string(i))));
    return Alphabet(std::move(letters));
}

Alphabet Alphabet::numeric(const std::vector<Rational>& values) {
    std::vector<SparsePoly> letters;
    for (const auto& v : values) letters.emplace_back(v);
    return Alphabet(std::move(letters));
}

Alphabet Alphabet::product(const Alphabet& a, const Alphabet& b) {
    std::vector<SparsePoly> letters;
    for (const auto& la : a.letters_)
        for (const auto& lb : b.letters_) letters.push_back(la * lb);
    return Alphabet(std::move(letters));
}

std::vector<std::string> Alphabet::series_vars() const {
    std::set<std::string> names;
    for (const auto& l : letters_)
        for (const auto& [name, cls] : l.var_classes())
            if (cls == VarClass::Series) names.insert(name);
    return {names.begin(), names.end()};
}

SparsePoly elementary(const Alphabet& a, int i) {
    if (i < 0) throw std::invalid_argument("elementary: degree must be >= 0");
    std::vector<SparsePoly> e(i + 1);
    e[0] = SparsePoly(1);
    for (const auto& letter : a.letters())
        for (int j = i; j >= 1; --j) e[j] += e[j - 1] * letter;
    return e[i];
}

SparsePoly complete(const Alphabet& a, int i) {
    if (i < 0) throw std::invalid_argument("complete: degree must be >= 0");
    std::vector<SparsePoly> h(i + 1);
    h[0] = SparsePoly(1);
    for (const auto& letter : a.letters())
        for (int j = 1; j <= i; ++j) h[j] += h[j - 1] * letter;
    return h[i];
}

SparsePoly power_sum(const Alphabet& a, int i) {
    if (i < 0) throw std::invalid_argument("power_sum: degree must be >= 0");
    if (i == 0) return SparsePoly(a.size());
    SparsePoly r;
    for (const auto& letter : a.letters()) r += letter.pow(i);
    return r;
}

SparsePoly monomial_sym(const Alphabet& a, const Partition& p) {
    if (p.length() > a.size()) return SparsePoly();
    std::vector<int> exps(a.size(), 0);
    std::copy(p.parts().begin(), p.parts().end(), exps.begin());
    SparsePoly r;
    do {
        SparsePoly term(1);
        for (int i = 0; i < a.size(); ++i)
            if (exps[i] > 0) term *= a.letter(i).pow(exps[i]);
        r += term;
    } while (std::prev_permutation(exps.begin(), exps.end()));
    return r;
}

SparsePoly schur(const Alphabet& a, const Partition& p) {
    int l = p.length();
    if (l == 0) return SparsePoly(1);
    std::vector<std::vector<SparsePoly>> jt(l, std::vector<SparsePoly>(l));
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j) {
            int deg = p.part(i) - i + j;
            jt[i - 1][j - 1] = deg < 0 ? SparsePoly() : complete(a, deg);
        }
    return det_poly(jt);
}

SparsePoly mu_indexed(GenBasis basis, const Alphabet& a, const Partition& p) {
    SparsePoly r(1);
    for (int part : p.parts()) {
        switch (basis) {
            case GenBasis::Elementary: r *= elementary(a, part); break;
            case GenBasis::Complete: r *= complete(a, part); break;
            case GenBasis::PowerSum: r *= power_sum(a, part); break;
        }
    }
    return r;
}

bool check_cauchy(int i, const Alphabet& a) {
    SparsePoly lambda_sum, sigma_sum;
    for (const auto& mu : enumerate_partitions(i)) {
        Rational w = Rational(1) / Rational(z_mu(mu));
        SparsePoly psi_mu = mu_indexed(GenBasis::PowerSum, a, mu);
        lambda_sum += parity_sign(i - mu.length()) * w * psi_mu;
        sigma_sum += w * psi_mu;
    }
    return elementary(a, i) == lambda_sum && complete(a, i) == sigma_sum;
}

bool check_kernel_expansions(int i, const Alphabet& a, const Alphabet& b) {
    Alphabet prod = Alphabet::product(a, b);
    SparsePoly s_direct = complete(prod, i);
    SparsePoly e_direct = elementary(prod, i);

    SparsePoly s1, s2, s3, e1, e2, e3;
    for (const auto& mu : enumerate_partitions(i)) {
        Rational w = Rational(1) / Rational(z_mu(mu));
        SparsePoly pa = mu_indexed(GenBasis::PowerSum, a, mu);
        SparsePoly pb = mu_indexed(GenBasis::PowerSum, b, mu);
        s1 += w * pa * pb;
        e1 += parity_sign(i - mu.length()) * w * pa * pb;
        s2 += monomial_sym(a, mu) * mu_indexed(GenBasis::Complete, b, mu);
        e2 += monomial_sym(a, mu) * mu_indexed(GenBasis::Elementary, b, mu);
        s3 += schur(a, mu) * schur(b, mu);
        e3 += schur(a, mu) * schur(b, mu.conjugate());
    }
    return s1 == s_direct && s2 == s_direct && s3 == s_direct && e1 == e_direct &&
           e2 == e_direct && e3 == e_direct;
}

SubsetProductResult subset_product_expand(const Alphabet& a, const VarId& v, const VarId& y,
                                          int n, int cap_v) {
    if (n < 0) throw std::invalid_argument("subset size must be >= 0");
    TruncationProfile profile;
    profile.set_cap(v.name, cap_v);
    for (const auto& name : a.series_vars()) profile.set_cap(name, cap_v);

    // Per-letter factor y * v*a/(1-v*a) expanded as a geometric series.
    SparsePoly vp(v);
    std::vector<TruncatedSeries> factor;
    for (const auto& letter : a.letters()) {
        SparsePoly g;
        for (int k = 1; k <= cap_v; ++k) g += vp.pow(k) * letter.pow(k);
        factor.emplace_back(g * SparsePoly(y), profile);
    }

    // LHS: sum over n-subsets.
    TruncatedSeries lhs(SparsePoly(0), profile);
    std::vector<int> idx(n);
    auto rec = [&](auto&& self, int start, int depth, const TruncatedSeries& acc) -> void {
        if (depth == n) {
            lhs += acc;
            return;
        }
        for (int i = start; i <= a.size() - (n - depth); ++i)
            self(self, i + 1, depth + 1, series_mul(acc, factor[i]));
    };
    rec(rec, 0, 0, TruncatedSeries(SparsePoly(1), profile));

    // RHS: y^n sum_{l(nu)=n, |nu|<=cap_v} v^{|nu|} psi_nu(A).
    SparsePoly rhs_poly;
    for (int m = n; m <= cap_v; ++m)
        for (const auto& nu : enumerate_partitions(m))
            if (nu.length() == n) rhs_poly += vp.pow(m) * monomial_sym(a, nu);
    rhs_poly *= SparsePoly(y).pow(n);

    SubsetProductResult result{lhs, TruncatedSeries(rhs_poly, profile), false};
    result.equal = series_equal(result.lhs, result.rhs);
    return result;
}

SparsePoly complete_in_powersums(int k) {
    SparsePoly r;
    for (const auto& nu : enumerate_partitions(k))
        r += (Rational(1) / Rational(z_mu(nu))) * powersum_monomial(nu);
    return r;
}

SparsePoly elementary_in_powersums(int k) {
    SparsePoly r;
    for (const auto& nu : enumerate_partitions(k))
        r += parity_sign(k - nu.length()) * (Rational(1) / Rational(z_mu(nu))) *
             powersum_monomial(nu);
    return r;
}

SparsePoly monomial_in_powersums(const Partition& mu) {
    int d = mu.weight();
    if (d == 0) return SparsePoly(1);
    auto parts = enumerate_partitions(d);
    std::size_t n = parts.size();
    Alphabet support = Alphabet::formal("a", d);

    // p_nu = sum_kappa M[nu][kappa] m_kappa, read off from explicit expansions.
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t r = 0; r < n; ++r) {
        SparsePoly expanded = mu_indexed(GenBasis::PowerSum, support, parts[r]);
        for (std::size_t c = 0; c < n; ++c) {
            std::vector<std::pair<std::string, int>> factors;
            for (int i = 0; i < parts[c].length(); ++i)
                factors.emplace_back("a" + std::to_string(i + 1), parts[c].part(i + 1));
            m[r][c] = expanded.coeff(Monomial(factors));
        }
    }

    // m_mu = sum_nu c_nu p_nu  <=>  M^T c = e_mu.
    std::vector<std::vector<Rational>> mt(n, std::vector<Rational>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) mt[r][c] = m[c][r];
    std::vector<Rational> rhs(n, Rational(0));
    auto it = std::find(parts.begin(), parts.end(), mu);
    if (it == parts.end()) throw std::logic_error("partition not found in its own weight class");
    rhs[static_cast<std::size_t>(it - parts.begin())] = 1;
    auto coeffs = solve_linear(mt, rhs);

    SparsePoly result;
    for (std::size_t i = 0; i < n; ++i) result += coeffs[i] * powersum_monomial(parts[i]);
    return result;
}

SparsePoly schur_in_powersums(const Partition& mu) {
    int l = mu.length();
    if (l == 0) return SparsePoly(1);
    std::vector<std::vector<SparsePoly>> jt(l, std::vector<SparsePoly>(l));
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j) {
            int deg = mu.part(i) - i + j;
            jt[i - 1][j - 1] = deg < 0 ? SparsePoly() : complete_in_powersums(deg);
        }
    return det_poly(jt);
}

}  // namespace lring
