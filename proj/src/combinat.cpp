#include "lring/combinat.hpp"

#include <stdexcept>
#include <vector>

namespace lring {

Integer gen_binom(const Partition& p, int r) {
    if (r < 0) return 0;
    // Convolve the rows of prod_i ((1+q)^{lambda_i} - 1), degree capped at r.
    std::vector<Integer> acc{1};
    for (int part : p.parts()) {
        // (1+q)^part - 1 = sum_{k=1..part} C(part,k) q^k
        std::vector<Integer> row(part + 1, 0);
        Integer c = 1;
        for (int k = 1; k <= part; ++k) {
            c = c * (part - k + 1) / k;
            row[k] = c;
        }
        std::size_t limit = std::min<std::size_t>(acc.size() + part, r + 1);
        std::vector<Integer> next(limit, 0);
        for (std::size_t i = 0; i < acc.size(); ++i) {
            if (acc[i] == 0) continue;
            for (int k = 1; k <= part && i + k < limit; ++k) next[i + k] += acc[i] * row[k];
        }
        acc = std::move(next);
    }
    return r < static_cast<int>(acc.size()) ? acc[r] : Integer(0);
}

Integer gen_binom_brute(const Partition& p, int r) {
    int w = p.weight();
    if (w > 20) throw std::invalid_argument("gen_binom_brute: weight above oracle bound 20");
    if (r < 0 || r > w) return 0;
    auto cells = p.cells();
    int rows = p.length();
    Integer count = 0;
    for (unsigned long mask = 0; mask < (1ul << w); ++mask) {
        if (__builtin_popcountl(mask) != r) continue;
        unsigned covered = 0;
        for (int b = 0; b < w; ++b)
            if (mask & (1ul << b)) covered |= 1u << (cells[b].row - 1);
        if (covered == (rows == 0 ? 0u : (1u << rows) - 1)) ++count;
    }
    return count;
}

BinomPoly rising_factorial(int n) {
    if (n < 0) throw std::invalid_argument("rising_factorial: n must be >= 0");
    SparsePoly z(poly_var("z"));
    SparsePoly r(1);
    for (int i = 0; i < n; ++i) r *= z + SparsePoly(i);
    return r;
}

BinomPoly falling_factorial(int n) {
    if (n < 0) throw std::invalid_argument("falling_factorial: n must be >= 0");
    SparsePoly z(poly_var("z"));
    SparsePoly r(1);
    for (int i = 0; i < n; ++i) r *= z - SparsePoly(i);
    return r;
}

BinomPoly binom_poly(int n) {
    return falling_factorial(n) * (Rational(1) / Rational(factorial_int(n)));
}

Rational binom_int(long long m, long long k) {
    if (k < 0) return 0;
    Rational num = 1;
    for (long long j = 0; j < k; ++j) num *= Rational(m - j);
    return num / Rational(factorial_int(static_cast<int>(k)));
}

}  // namespace lring
