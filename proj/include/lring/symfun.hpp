#pragma once

#include "lring/partitions.hpp"
#include "lring/sparse_poly.hpp"
#include "lring/truncated_series.hpp"

#include <vector>

namespace lring {

// A finite alphabet. Letters are polynomials: formal SERIES variables
// (a1..ap), rational constants, or products of letters (for kernel tests on
// the alphabet {a*b}). Letters must be pairwise distinct.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<SparsePoly> letters);
    static Alphabet formal(const std::string& prefix, int count);
    static Alphabet numeric(const std::vector<Rational>& values);
    static Alphabet product(const Alphabet& a, const Alphabet& b);

    int size() const { return static_cast<int>(letters_.size()); }
    const SparsePoly& letter(int i) const { return letters_.at(i); }
    const std::vector<SparsePoly>& letters() const { return letters_; }
    // Names of the SERIES variables occurring in the letters.
    std::vector<std::string> series_vars() const;

private:
    std::vector<SparsePoly> letters_;
};

// Classical bases on a finite alphabet. elementary(A,i) == 0 for i > card(A);
// power_sum(A,0) == card(A).
SparsePoly elementary(const Alphabet& a, int i);
SparsePoly complete(const Alphabet& a, int i);
SparsePoly power_sum(const Alphabet& a, int i);
// Sum of the distinct monomials whose exponent vector permutes p.
SparsePoly monomial_sym(const Alphabet& a, const Partition& p);
// Jacobi-Trudi determinant in complete functions.
SparsePoly schur(const Alphabet& a, const Partition& p);

enum class GenBasis { Elementary, Complete, PowerSum };
// f^mu = prod_i f^{mu_i} for a generator family f.
SparsePoly mu_indexed(GenBasis basis, const Alphabet& a, const Partition& p);

// Both power-sum expansions of degree i:
//   Lambda^i = sum_{|mu|=i} (-1)^{i-l(mu)} psi^mu / z_mu
//   S^i      = sum_{|mu|=i} psi^mu / z_mu
bool check_cauchy(int i, const Alphabet& a);

// All six kernel expansion lines against the direct expansion on the product
// alphabet {a*b}:
//   S^i[PQ]      = sum 1/z_mu psi^mu psi^mu = sum m_mu h_mu = sum s_mu s_mu
//   Lambda^i[PQ] = sum +-1/z_mu psi^mu psi^mu = sum m_mu e_mu = sum s_mu s_mu'
bool check_kernel_expansions(int i, const Alphabet& a, const Alphabet& b);

struct SubsetProductResult {
    TruncatedSeries lhs;  // sum over n-subsets of prod y*v*a/(1-v*a)
    TruncatedSeries rhs;  // y^n sum_{l(nu)=n} v^{|nu|} psi_nu(A)
    bool equal = false;
};
SubsetProductResult subset_product_expand(const Alphabet& a, const VarId& v, const VarId& y,
                                          int n, int cap_v);

// Expansions in the power-sum generators, written as polynomials in the POLY
// variables p1, p2, ...; evaluating p_k at psi^k recovers the function.
SparsePoly complete_in_powersums(int k);
SparsePoly elementary_in_powersums(int k);
SparsePoly monomial_in_powersums(const Partition& mu);
SparsePoly schur_in_powersums(const Partition& mu);

}  // namespace lring
