#include "lring/sweeps.hpp"

#include "lring/application.hpp"
#include "lring/combinat.hpp"
#include "lring/lambdaring.hpp"
#include "lring/pjk.hpp"
#include "lring/symfun.hpp"

#include <random>
#include <sstream>

namespace lring {

namespace {

VerificationReport flag_report(const std::string& identity, const std::string& params, bool pass,
                               double millis, const std::string& witness = "") {
    VerificationReport r;
    r.identity = identity;
    r.params = params;
    r.pass = pass;
    r.witness_monomial = pass ? "" : witness;
    r.millis = millis;
    return r;
}

}  // namespace

std::vector<VerificationReport> sweep_theorem1(int n_max, int cap_u, bool inject_fault) {
    if (!inject_fault) return verify_theorem1(n_max, cap_u);

    // Test fixture: corrupt one coefficient of the first right-hand side.
    std::vector<VerificationReport> reports;
    XVariables x{cap_u};
    VarId u = series_var("u");
    Stopwatch timer;
    auto lhs = theorem1_lhs(1, 1, x, u, cap_u);
    auto rhs = theorem1_rhs(1, 1, x, u, cap_u);
    SparsePoly corrupted = rhs.poly() + SparsePoly(u) * SparsePoly(x.var(1));
    auto report = compare_series("theorem1", "n=1 r=1 u-cap=" + std::to_string(cap_u) +
                                 " fault-injected",
                                 lhs, TruncatedSeries(corrupted, rhs.profile()));
    report.millis = timer.millis();
    reports.push_back(std::move(report));
    auto rest = verify_theorem1(n_max, cap_u);
    reports.insert(reports.end(), rest.begin(), rest.end());
    return reports;
}

std::vector<VerificationReport> sweep_theorem2(int n_max, int cap_u) {
    return verify_theorem2(n_max, cap_u);
}

std::vector<VerificationReport> sweep_theorem3(int max_letters, const Theorem3Caps& caps) {
    std::vector<VerificationReport> reports;
    for (int letters = 0; letters <= max_letters; ++letters)
        reports.push_back(verify_theorem3(letters, caps));
    return reports;
}

std::vector<VerificationReport> sweep_theorem4(int cap_w) {
    std::vector<VerificationReport> reports;
    const std::vector<Partition> shapes = {Partition({1}),    Partition({2}),
                                           Partition({1, 1}), Partition({2, 1}),
                                           Partition({3, 1}), Partition({2, 2})};
    const std::vector<Rational> alphas = {Rational(1), Rational(2), Rational(1, 2)};
    for (const auto& shape : shapes) {
        for (const auto& a : alphas) {
            AlphaParam alpha(a);
            reports.push_back(verify_theorem4(shape, alpha, cap_w, shape.weight() + 2));
            reports.push_back(verify_vanishing(shape, alpha,
                                               {shape.weight() + 1, shape.weight() + 3}, {0, 4}));
        }
    }
    for (int n = 1; n <= 4; ++n) reports.push_back(chu_vandermonde_demo(n, cap_w));
    return reports;
}

std::vector<VerificationReport> sweep_genbinom(int max_weight) {
    std::vector<VerificationReport> reports;
    Stopwatch timer;
    bool oracle_ok = true, sums_ok = true;
    std::string oracle_witness, sums_witness;
    for (int n = 0; n <= max_weight; ++n) {
        for (const auto& p : enumerate_partitions(n)) {
            Integer total = 0;
            for (int r = 0; r <= n + 1; ++r) {
                Integer fast = gen_binom(p, r);
                if (fast != gen_binom_brute(p, r)) {
                    oracle_ok = false;
                    oracle_witness = p.str() + " r=" + std::to_string(r);
                }
                total += fast;
            }
            Integer expected = 1;
            for (int part : p.parts()) expected *= (Integer(1) << part) - 1;
            if (total != expected) {
                sums_ok = false;
                sums_witness = p.str();
            }
        }
    }
    std::string params = "weight<=" + std::to_string(max_weight);
    reports.push_back(flag_report("genbinom-oracle", params, oracle_ok, timer.millis() / 2,
                                  oracle_witness));
    reports.push_back(flag_report("genbinom-sum-rule", params, sums_ok, timer.millis() / 2,
                                  sums_witness));
    return reports;
}

std::vector<VerificationReport> sweep_pjk(int jk_max, int closed_form_max) {
    std::vector<VerificationReport> reports;

    {
        // Dual construction: the definition with X_i -> -p_i(A) against the
        // monomial-symmetric route.
        Stopwatch timer;
        Alphabet a = Alphabet::formal("a", jk_max);
        XVariables x{jk_max};
        bool ok = true;
        std::string witness;
        for (int j = 0; j <= jk_max && ok; ++j) {
            for (int k = 0; k <= j && ok; ++k) {
                SparsePoly direct = p_jk(j, k, x);
                for (int i = 1; i <= jk_max; ++i)
                    direct = direct.substitute("X" + std::to_string(i), -power_sum(a, i));
                if (direct != p_jk_via_lemma2(j, k, a)) {
                    ok = false;
                    witness = "j=" + std::to_string(j) + " k=" + std::to_string(k);
                }
            }
        }
        reports.push_back(flag_report("pjk-dual-construction",
                                      "j,k<=" + std::to_string(jk_max) + " letters=" +
                                          std::to_string(jk_max),
                                      ok, timer.millis(), witness));
    }

    {
        // Closed forms: P_j1 = X_j and
        // P_j2 = (j-1)/2 X_j + 1/2 sum_{j1+j2=j} X_j1 X_j2, plus P_j0 = 0.
        Stopwatch timer;
        XVariables x{closed_form_max};
        bool ok = true;
        std::string witness;
        for (int j = 1; j <= closed_form_max && ok; ++j) {
            if (p_jk(j, 0, x) != SparsePoly()) {
                ok = false;
                witness = "j=" + std::to_string(j) + " k=0";
            }
            if (p_jk(j, 1, x) != SparsePoly(x.var(j))) {
                ok = false;
                witness = "j=" + std::to_string(j) + " k=1";
            }
            if (j >= 2) {
                SparsePoly expected = Rational(j - 1, 2) * SparsePoly(x.var(j));
                for (int j1 = 1; j1 < j; ++j1)
                    expected += Rational(1, 2) * SparsePoly(x.var(j1)) * SparsePoly(x.var(j - j1));
                if (p_jk(j, 2, x) != expected) {
                    ok = false;
                    witness = "j=" + std::to_string(j) + " k=2";
                }
            }
        }
        reports.push_back(flag_report("pjk-closed-forms", "j<=" + std::to_string(closed_form_max),
                                      ok, timer.millis(), witness));
    }
    return reports;
}

namespace {

// Random element over atoms b1,b2,b3 with small rational coefficients.
LambdaElement random_element(std::mt19937_64& rng, bool allow_z) {
    std::uniform_int_distribution<int> nterms(1, 3), pick(0, 3), exp(1, 2), num(-3, 3), den(1, 2);
    LambdaElement e;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Monomial m;
        int which = pick(rng);
        if (which > 0) m = Monomial::var("b" + std::to_string(which), exp(rng));
        e += LambdaElement::term(SparsePoly(Rational(num(rng), den(rng))), m);
    }
    if (allow_z && pick(rng) == 0)
        e += LambdaElement::term(SparsePoly(poly_var(kBinomialSymbol)), Monomial());
    return e;
}

}  // namespace

std::vector<VerificationReport> sweep_lambda_formulary(unsigned seed, int i_max,
                                                       int element_count) {
    std::vector<VerificationReport> reports;
    SparsePoly z(poly_var(kBinomialSymbol));
    SparsePoly q(series_var("q"));

    {
        // Action table: psi/S/Lambda on binomial-type and rank-1 elements.
        Stopwatch timer;
        bool ok = true;
        std::string witness;
        LambdaElement ez = LambdaElement::binomial_symbol();
        LambdaElement five = LambdaElement::constant(Rational(5, 2));
        Rank1Atom b = rank1_atom("b1");
        LambdaElement eb = LambdaElement::atom(b);
        for (int i = 1; i <= i_max && ok; ++i) {
            Rational ifact(factorial_int(i));
            if (psi_action(i, ez) != ez) { ok = false; witness = "psi-z"; }
            if (psi_action(i, five) != five) { ok = false; witness = "psi-const"; }
            if (sigma_coeff(i, ez) != rising_factorial(i) * (Rational(1) / ifact)) {
                ok = false;
                witness = "S^i[z] i=" + std::to_string(i);
            }
            if (lambda_coeff(i, ez) != falling_factorial(i) * (Rational(1) / ifact)) {
                ok = false;
                witness = "Lambda^i[z] i=" + std::to_string(i);
            }
            Rational c(5, 2);
            Rational rising = 1, falling = 1;
            for (int j = 0; j < i; ++j) {
                rising *= c + j;
                falling *= c - j;
            }
            if (sigma_coeff(i, five) != SparsePoly(rising / ifact)) {
                ok = false;
                witness = "S^i[c]";
            }
            if (lambda_coeff(i, five) != SparsePoly(falling / ifact)) {
                ok = false;
                witness = "Lambda^i[c]";
            }
            // Rank-1: psi_i[u] = u^i = S^i[u]; Lambda^i[u] = 0 for i > 1.
            SparsePoly bi(poly_var("b1"), i);
            if (sigma_coeff(i, eb) != bi) { ok = false; witness = "S^i[u]"; }
            SparsePoly expected_lambda = i == 1 ? SparsePoly(poly_var("b1")) : SparsePoly();
            if (lambda_coeff(i, eb) != expected_lambda) { ok = false; witness = "Lambda^i[u]"; }
            if (psi_action(i, eb) != LambdaElement::term(SparsePoly(1), Monomial::var("b1", i))) {
                ok = false;
                witness = "psi^i[u]";
            }
        }
        reports.push_back(flag_report("action-table", "i<=" + std::to_string(i_max), ok,
                                      timer.millis(), witness));
    }

    {
        // Sum/product rules on randomized elements, plus psi multiplicativity
        // and the rank-1 product rule lambda_t[PQ] = 1 + tPQ.
        Stopwatch timer;
        std::mt19937_64 rng(seed);
        bool ok = true;
        std::string witness;
        TruncationProfile profile;
        profile.set_cap("q", 2 * i_max);
        std::uniform_int_distribution<int> idist(1, i_max), pick(1, 3), exp(1, 2);
        for (int c = 0; c < element_count && ok; ++c) {
            LambdaElement p = random_element(rng, false);
            LambdaElement qe = random_element(rng, c % 2 == 0);
            int i = idist(rng);
            if (!check_sum_product_rules(p, qe, i, AtomSubstitution::identity(), profile)) {
                ok = false;
                witness = "case " + std::to_string(c) + " i=" + std::to_string(i);
            }
            // psi^i is a ring morphism.
            if (psi_action(i, p * qe) != psi_action(i, p) * psi_action(i, qe)) {
                ok = false;
                witness = "psi-morphism case " + std::to_string(c);
            }
            // Rank-1 pair: lambda_t[PQ] = 1 + t P Q.
            Monomial u1 = Monomial::var("b" + std::to_string(pick(rng)), exp(rng));
            Monomial u2 = Monomial::var("b" + std::to_string(pick(rng)), exp(rng));
            LambdaElement pq = LambdaElement::term(SparsePoly(1), u1 * u2);
            TruncationProfile tp;
            tp.set_cap("t", i_max);
            auto action = lambda_t_action(pq, series_var("t"), tp);
            SparsePoly direct(1);
            {
                std::vector<std::pair<VarId, int>> powers;
                for (const auto& [name, e] : (u1 * u2).factors())
                    powers.push_back({poly_var(name), e});
                direct += SparsePoly(series_var("t")) * SparsePoly::term(Rational(1), powers);
            }
            if (action.poly() != direct) {
                ok = false;
                witness = "rank1-product case " + std::to_string(c);
            }
        }
        reports.push_back(flag_report("sum-product-rules",
                                      "cases=" + std::to_string(element_count) + " i<=" +
                                          std::to_string(i_max) + " seed=" + std::to_string(seed),
                                      ok, timer.millis(), witness));
    }

    {
        // q-formulary: Lambda^i[q] = (-1)^{i-1} q, S^i[q] = (1+q)^{i-1} q, and
        // the partition powers Lambda^mu[q], S^mu[q] for |mu| <= 6.
        Stopwatch timer;
        bool ok = true;
        std::string witness;
        LambdaElement eq = q_element();
        for (int i = 1; i <= 6 && ok; ++i) {
            SparsePoly expected_lambda = (i % 2 == 1 ? q : -q);
            if (lambda_coeff(i, eq) != expected_lambda) {
                ok = false;
                witness = "Lambda^i[q] i=" + std::to_string(i);
            }
            if (sigma_coeff(i, eq) != (SparsePoly(1) + q).pow(i - 1) * q) {
                ok = false;
                witness = "S^i[q] i=" + std::to_string(i);
            }
        }
        for (int n = 0; n <= 6 && ok; ++n) {
            for (const auto& mu : enumerate_partitions(n)) {
                SparsePoly lambda_mu(1), sigma_mu(1);
                for (int part : mu.parts()) {
                    lambda_mu *= lambda_coeff(part, eq);
                    sigma_mu *= sigma_coeff(part, eq);
                }
                int excess = mu.weight() - mu.length();
                SparsePoly expected_l =
                    (excess % 2 == 0 ? Rational(1) : Rational(-1)) * q.pow(mu.length());
                SparsePoly expected_s = (SparsePoly(1) + q).pow(excess) * q.pow(mu.length());
                if (lambda_mu != expected_l || sigma_mu != expected_s) {
                    ok = false;
                    witness = "mu=" + mu.str();
                }
            }
        }
        reports.push_back(flag_report("q-formulary", "|mu|<=6", ok, timer.millis(), witness));
    }

    {
        // Lemma bridge: coefficients of psi^mu[q] equal gen_binom(mu, k).
        Stopwatch timer;
        bool ok = true;
        std::string witness;
        for (int n = 0; n <= 6 && ok; ++n) {
            for (const auto& mu : enumerate_partitions(n)) {
                SparsePoly expanded = psi_mu_of_q(mu, series_var("q"));
                for (int k = 0; k <= n + 1; ++k) {
                    if (expanded.coeff_of("q", k) != SparsePoly(Rational(gen_binom(mu, k)))) {
                        ok = false;
                        witness = "mu=" + mu.str() + " k=" + std::to_string(k);
                    }
                }
            }
        }
        reports.push_back(flag_report("psi-mu-genbinom", "|mu|<=6", ok, timer.millis(), witness));
    }

    return reports;
}

std::vector<VerificationReport> sweep_symfun() {
    std::vector<VerificationReport> reports;

    {
        Stopwatch timer;
        bool ok = true;
        std::string witness;
        for (int letters = 3; letters <= 6 && ok; ++letters) {
            Alphabet a = Alphabet::formal("a", letters);
            for (int i = 0; i <= 6 && ok; ++i) {
                if (!check_cauchy(i, a)) {
                    ok = false;
                    witness = "i=" + std::to_string(i) + " letters=" + std::to_string(letters);
                }
            }
        }
        reports.push_back(flag_report("cauchy", "i<=6 letters=3..6", ok, timer.millis(), witness));
    }

    {
        Stopwatch timer;
        bool ok = true;
        std::string witness;
        Alphabet a = Alphabet::formal("a", 2);
        Alphabet b = Alphabet::formal("b", 3);
        for (int i = 0; i <= 4 && ok; ++i) {
            if (!check_kernel_expansions(i, a, b)) {
                ok = false;
                witness = "i=" + std::to_string(i);
            }
        }
        reports.push_back(flag_report("kernel-expansions", "i<=4 |A|=2 |B|=3", ok, timer.millis(),
                                      witness));
    }

    {
        Stopwatch timer;
        bool ok = true;
        std::string witness;
        for (int j = 1; j <= 5 && ok; ++j) {
            if (!binomial_series_lemma(j, 6)) {
                ok = false;
                witness = "j=" + std::to_string(j);
            }
        }
        reports.push_back(flag_report("binomial-series", "j<=5 t-cap=6", ok, timer.millis(),
                                      witness));
    }

    {
        Stopwatch timer;
        bool ok = true;
        std::string witness;
        for (int letters = 1; letters <= 4 && ok; ++letters) {
            Alphabet a = Alphabet::formal("a", letters);
            for (int n = 0; n <= letters + 1 && ok; ++n) {
                auto result = subset_product_expand(a, series_var("v"), poly_var("y"), n, 4);
                if (!result.equal) {
                    ok = false;
                    witness = "letters=" + std::to_string(letters) + " n=" + std::to_string(n);
                }
            }
        }
        reports.push_back(flag_report("subset-product", "letters<=4 n<=letters+1 v-cap=4", ok,
                                      timer.millis(), witness));
    }

    return reports;
}

std::vector<VerificationReport> sweep_all(unsigned seed) {
    std::vector<VerificationReport> all;
    auto append = [&all](std::vector<VerificationReport> r) {
        all.insert(all.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
    };
    append(sweep_theorem1(5, 5));
    append(sweep_theorem2(6, 4));
    append(sweep_genbinom(8));
    append(sweep_pjk(6, 8));
    append(sweep_lambda_formulary(seed, 4, 20));
    append(sweep_theorem3(3, Theorem3Caps{3, 3, 3}));
    append(sweep_theorem4(6));
    append(sweep_symfun());
    all.push_back(verify_eq11_reformulation(3, 3));
    return all;
}

}  // namespace lring
