#pragma once

#include "lring/partitions.hpp"
#include "lring/sparse_poly.hpp"
#include "lring/truncated_series.hpp"

#include <map>
#include <string>

namespace lring {

// A declared rank-1 symbol: Lambda^i[atom] = 0 for i > 1. Atoms are exact
// (POLY) variables; they acquire a concrete series value only through an
// AtomSubstitution.
struct Rank1Atom {
    VarId id;
};
Rank1Atom rank1_atom(const std::string& name);

// The fixed binomial-type symbol: invariant under every psi^i. Exactly one
// such symbol is supported per context.
inline const std::string kBinomialSymbol = "z";

// Finite linear combination sum_u c_u * u with u a monomial in rank-1 atoms
// and c_u in Q[z] of degree <= 1. Products of atoms are again rank-1;
// higher-degree coefficients are rejected rather than guessed at.
class LambdaElement {
public:
    LambdaElement() = default;
    static LambdaElement constant(const Rational& c);
    static LambdaElement binomial_symbol();
    static LambdaElement atom(const Rank1Atom& a);
    static LambdaElement term(const SparsePoly& coeff, const Monomial& atom_monomial);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, SparsePoly>& terms() const { return terms_; }

    LambdaElement operator-() const;
    LambdaElement& operator+=(const LambdaElement& other);
    LambdaElement& operator-=(const LambdaElement& other);
    friend LambdaElement operator+(LambdaElement a, const LambdaElement& b) { return a += b; }
    friend LambdaElement operator-(LambdaElement a, const LambdaElement& b) { return a -= b; }
    friend LambdaElement operator*(const LambdaElement& a, const LambdaElement& b);
    bool operator==(const LambdaElement& other) const { return terms_ == other.terms_; }

    // Exact substitution of atoms by polynomials.
    SparsePoly to_poly(const std::map<std::string, SparsePoly>& atom_values) const;

private:
    std::map<Monomial, SparsePoly> terms_;

    void add_term(const Monomial& m, const SparsePoly& coeff);
};

// Assigns series values to atoms (q' -> 1+q, a' -> sum_k a^k, ...). Unmapped
// atoms stand for themselves as exact variables.
class AtomSubstitution {
public:
    AtomSubstitution& set(const std::string& atom, const SparsePoly& value);
    AtomSubstitution& set_geometric(const std::string& atom, const VarId& letter, int cap);
    static AtomSubstitution identity() { return {}; }
    // q' -> 1 + q.
    static AtomSubstitution q_shift();

    SparsePoly value_of(const std::string& atom) const;
    TruncatedSeries monomial_value(const Monomial& m, const TruncationProfile& profile) const;

private:
    std::map<std::string, SparsePoly> values_;
};

// psi^i [sum c u] = sum c u^i (Adams operation; a ring morphism).
LambdaElement psi_action(int i, const LambdaElement& e);

// The element itself as a series, with atoms substituted.
TruncatedSeries element_value(const LambdaElement& e, const AtomSubstitution& subs,
                              const TruncationProfile& profile);

// lambda_t [sum c u] = prod (1 + t u)^c,  sigma_t [sum c u] = prod (1 - t u)^{-c}.
TruncatedSeries lambda_t_action(const LambdaElement& e, const VarId& t,
                                const TruncationProfile& profile,
                                const AtomSubstitution& subs = AtomSubstitution::identity());
TruncatedSeries sigma_t_action(const LambdaElement& e, const VarId& t,
                               const TruncationProfile& profile,
                               const AtomSubstitution& subs = AtomSubstitution::identity());

// Coefficient of t^i in the corresponding action series.
SparsePoly lambda_coeff(int i, const LambdaElement& e, const TruncationProfile& profile,
                        const AtomSubstitution& subs);
SparsePoly sigma_coeff(int i, const LambdaElement& e, const TruncationProfile& profile,
                       const AtomSubstitution& subs);
// Convenience overloads in the standard q-context (q' -> 1+q), with caps
// derived from i and the atom degrees of e.
SparsePoly lambda_coeff(int i, const LambdaElement& e);
SparsePoly sigma_coeff(int i, const LambdaElement& e);

// The element q = q' - 1 with q' rank-1 (atom name "qp").
LambdaElement q_element();
inline const std::string kQPrimeAtom = "qp";

// psi^mu [q] = prod_i ((1+q)^{mu_i} - 1), exact in the variable q. The
// coefficient of q^k equals gen_binom(mu, k).
SparsePoly psi_mu_of_q(const Partition& mu, const VarId& q);

// psi^mu [e] = prod_parts psi^{mu_i}[e], as a series value.
TruncatedSeries psi_mu_value(const Partition& mu, const LambdaElement& e,
                             const AtomSubstitution& subs, const TruncationProfile& profile);

// Applies a symmetric function written in the power-sum variables p1,p2,...
// to e: every p_k is replaced by the value of psi^k[e].
TruncatedSeries apply_powersum_expansion(const SparsePoly& f_in_p, const LambdaElement& e,
                                         const AtomSubstitution& subs,
                                         const TruncationProfile& profile);

// Verifies the sum and product expansion rules at degree i for the given
// elements: the two convolution lines, the two generating-series lines (up
// to truncation), and all six kernel expansion lines. Uses the SERIES
// variable "t" internally.
bool check_sum_product_rules(const LambdaElement& p, const LambdaElement& q, int i,
                             const AtomSubstitution& subs, const TruncationProfile& profile);

}  // namespace lring
