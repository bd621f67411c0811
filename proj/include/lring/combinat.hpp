#pragma once

#include "lring/partitions.hpp"
#include "lring/sparse_poly.hpp"

namespace lring {

// Coefficient of q^r in prod_i ((1+q)^{lambda_i} - 1): the number of ways to
// choose r cells of the diagram with at least one cell in every row.
// Vanishes for r < l(lambda) and r > |lambda|.
Integer gen_binom(const Partition& p, int r);

// Exhaustive subset count; the independent oracle for gen_binom.
// Restricted to |p| <= 20.
Integer gen_binom_brute(const Partition& p, int r);

// Degree-n polynomials in the POLY variable z.
// rising:  z(z+1)...(z+n-1)    falling: z(z-1)...(z-n+1)
// binom:   falling / n!
using BinomPoly = SparsePoly;
BinomPoly rising_factorial(int n);
BinomPoly falling_factorial(int n);
BinomPoly binom_poly(int n);

// [m]_k / k!; 0 for k < 0; valid for negative m (binom_int(-1,2) == 1).
Rational binom_int(long long m, long long k);

}  // namespace lring
