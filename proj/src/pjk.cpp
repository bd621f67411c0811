#include "lring/pjk.hpp"

#include "lring/combinat.hpp"

#include <stdexcept>

namespace lring {

VarId XVariables::var(int i) const {
    if (i < 1 || i > count)
        throw std::invalid_argument("missing variable X" + std::to_string(i) + " (have " +
                                    std::to_string(count) + ")");
    return poly_var("X" + std::to_string(i));
}

SparsePoly p_jk(int j, int k, const XVariables& x) {
    if (j < 0 || k < 0) throw std::invalid_argument("p_jk: indices must be >= 0");
    if (x.count < j) throw std::invalid_argument("p_jk: need at least j X-variables");
    if (k > j) return SparsePoly();
    SparsePoly r;
    for (const auto& mu : enumerate_partitions(j)) {
        Integer top = gen_binom(mu, k);
        if (top == 0) continue;
        SparsePoly term(Rational(top, z_mu(mu)));
        for (int i = 1; i <= mu.max_part(); ++i) {
            int m = mu.multiplicity(i);
            if (m > 0) term *= SparsePoly(x.var(i), m);
        }
        r += term;
    }
    return r;
}

SparsePoly p_jk_via_lemma2(int j, int k, const Alphabet& a) {
    if (j < 0 || k < 0) throw std::invalid_argument("p_jk_via_lemma2: indices must be >= 0");
    SparsePoly sum;
    for (const auto& mu : enumerate_partitions(j))
        if (mu.length() == k) sum += monomial_sym(a, mu);
    return (k % 2 == 0 ? Rational(1) : Rational(-1)) * sum;
}

}  // namespace lring
