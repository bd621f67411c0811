#pragma once

#include "lring/identities.hpp"
#include "lring/report.hpp"

#include <vector>

namespace lring {

// Standard verification sweeps, shared by the CLI and the acceptance suite.
// When inject_fault is set the first right-hand side is perturbed by one
// coefficient; the sweep must then fail with a witness (test fixture).
std::vector<VerificationReport> sweep_theorem1(int n_max, int cap_u, bool inject_fault = false);
std::vector<VerificationReport> sweep_theorem2(int n_max, int cap_u);
std::vector<VerificationReport> sweep_theorem3(int max_letters, const Theorem3Caps& caps);
// Fixed shapes x alphas, vanishing ranges, x-degree bound, row demos.
std::vector<VerificationReport> sweep_theorem4(int cap_w);
// gen_binom against the subset oracle (weight <= max_weight) plus sum rule.
std::vector<VerificationReport> sweep_genbinom(int max_weight);
// Dual P_jk construction (0 <= k <= j <= jk_max on jk_max letters) and the
// closed forms for k = 1, 2 up to closed_form_max.
std::vector<VerificationReport> sweep_pjk(int jk_max, int closed_form_max);
// Action table for constants and rank-1 elements, the sum/product rules on
// randomized elements, the q-formulary and its partition powers.
std::vector<VerificationReport> sweep_lambda_formulary(unsigned seed, int i_max,
                                                       int element_count);
// Cauchy expansions, kernel expansions, the binomial-series identity and the
// subset-product identity.
std::vector<VerificationReport> sweep_symfun();
// Everything above at the default acceptance parameters.
std::vector<VerificationReport> sweep_all(unsigned seed);

}  // namespace lring
