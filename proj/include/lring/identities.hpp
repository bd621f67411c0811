#pragma once

#include "lring/pjk.hpp"
#include "lring/report.hpp"
#include "lring/symfun.hpp"
#include "lring/truncated_series.hpp"

#include <vector>

namespace lring {

// Main identity, left side:
//   sum_{|mu|=n} (-1)^{r-l(mu)} <mu,r>/z_mu
//       prod_i (z + sum_k u^k (i)_k/k! X_k)^{m_i(mu)}
// as an element of Q[z,X][[u]] truncated at u^cap_u. Needs cap_u X-variables.
TruncatedSeries theorem1_lhs(int n, int r, const XVariables& x, const VarId& u, int cap_u);

// Main identity, right side:
//   sum_{j>=0} u^j binom(n+j-1, n-r) sum_{k=0}^{min(r,j)} binom(z-j, r-k) P_jk(X).
TruncatedSeries theorem1_rhs(int n, int r, const XVariables& x, const VarId& u, int cap_u);

// Specialized identity (r = n), stated without the generalized binomial:
//   sum_{|mu|=n} (-1)^{n-l(mu)}/z_mu prod_i (...)^{m_i(mu)}
//     = sum_j u^j sum_k binom(z-j, n-k) P_jk(X).
TruncatedSeries theorem2_lhs(int n, const XVariables& x, const VarId& u, int cap_u);
TruncatedSeries theorem2_rhs(int n, const XVariables& x, const VarId& u, int cap_u);

// Sweeps: every 1 <= r <= n <= n_max, plus the trivial r = n+1 spot check.
std::vector<VerificationReport> verify_theorem1(int n_max, int cap_u);
// r = n cases, agreement with theorem 1 at r = n, and the X = 0 degeneration.
std::vector<VerificationReport> verify_theorem2(int n_max, int cap_u);

// sum_{i>=j} binom(i-1, j-1) t^{i-j} == 1/(1-t)^j, truncated at cap_t.
bool binomial_series_lemma(int j, int cap_t);

struct Theorem3Caps {
    int cap_t = 3;
    int cap_q = 3;
    int cap_a = 3;
};

// lambda_t[qB] with B = z - sum_a a/(1-a), through the action engine with
// q' = 1+q and a' = 1/(1-a) rank-1; result in Q[z][[t,q,a_1..a_p]].
TruncatedSeries theorem3_lhs(const Alphabet& a, const Theorem3Caps& caps);
// (1-y)^z prod_a (1-y)(1+t-a)/(1+t(1+q)-a), with y = -qt/(1+t).
TruncatedSeries theorem3_closed_product(const Alphabet& a, const Theorem3Caps& caps);
// sum_nu psi_nu(A) y^{l(nu)} (1+t)^{-|nu|} (1-y)^{z-|nu|}.
TruncatedSeries theorem3_rhs(const Alphabet& a, const Theorem3Caps& caps);

// Engine route == closed product == monomial sum.
VerificationReport verify_theorem3(int letters, const Theorem3Caps& caps);

// Partial sums of the generating-function reformulation: both sides of the
// main identity multiplied by (-t)^n (-q)^r with X -> -X, summed over
// n <= n_max, r <= n, computed both directly and from the per-(n,r) series.
VerificationReport verify_eq11_reformulation(int n_max, int cap_u);

}  // namespace lring
