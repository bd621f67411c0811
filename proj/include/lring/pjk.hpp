#pragma once

#include "lring/symfun.hpp"

namespace lring {

// The POLY variables X_1..X_m.
struct XVariables {
    int count = 0;
    // 1-indexed; throws when X_i is not allocated.
    VarId var(int i) const;
};

// P_jk(X) = sum_{|mu|=j} <mu,k>/z_mu prod_i X_i^{m_i(mu)}.
// P_00 = 1; P_jk = 0 for k > j; degree <= k. Requires x.count >= j.
SparsePoly p_jk(int j, int k, const XVariables& x);

// Value of P_jk(-X) at X_i = power sums of A, computed through monomial
// symmetric functions: (-1)^k sum_{|mu|=j, l(mu)=k} psi_mu(A).
SparsePoly p_jk_via_lemma2(int j, int k, const Alphabet& a);

}  // namespace lring
