#pragma once

#include "lring/partitions.hpp"
#include "lring/report.hpp"
#include "lring/sparse_poly.hpp"

#include <utility>
#include <vector>

namespace lring {

// The Jack-type parameter, restricted to positive rationals so that every
// content stays exact.
struct AlphaParam {
    Rational value;
    explicit AlphaParam(Rational v);
};

// The multiset { j-1 - (i-1)/alpha : (i,j) in lambda }, one entry per cell.
std::vector<Rational> content_alphabet(const Partition& lambda, const AlphaParam& alpha);

// d_k(lambda) = sum over cells of content^k; d_0 = |lambda|.
Rational d_k(const Partition& lambda, const AlphaParam& alpha, int k);

// (shift)_lambda = prod over cells of (shift + content), as an exact
// polynomial in the shift's variables.
SparsePoly pochhammer_lambda(const Partition& lambda, const AlphaParam& alpha,
                             const SparsePoly& shift);

// F_jk(lambda) = P_jk evaluated at X_i = d_i(lambda).
Rational f_jk(const Partition& lambda, const AlphaParam& alpha, int j, int k);

// (y-x)_lambda/(y)_lambda as a series in w = 1/y against the double sum
// sum_{i,j} (-1)^{i+j} x^i w^{i+j} sum_k binom(|lambda|-j, i-k) F_jk.
// Also asserts the x-degree bound <= |lambda| on the computed left side.
VerificationReport verify_theorem4(const Partition& lambda, const AlphaParam& alpha, int cap_w,
                                   int cap_x);

// sum_k binom(|lambda|-j, i-k) F_jk == 0 for every i in i_range (all > |lambda|)
// and j in j_range; ranges are inclusive.
VerificationReport verify_vanishing(const Partition& lambda, const AlphaParam& alpha,
                                    std::pair<int, int> i_range, std::pair<int, int> j_range);

// Row partition (n): the series expansion of the classical Chu-Vandermonde
// ratio. Checks the cell-product route against classical rising factorials
// and alpha-independence.
VerificationReport chu_vandermonde_demo(int n, int cap_w);

}  // namespace lring
