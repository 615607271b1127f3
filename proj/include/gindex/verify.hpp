#pragma once

#include <chrono>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "gindex/families.hpp"
#include "gindex/render.hpp"

namespace gindex {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // counterexample dump on failure
};

struct Report {
    std::string suite;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void add(std::string name, bool pass, std::string detail = "") {
        checks.push_back({std::move(name), pass, std::move(detail)});
    }
};

// Knobs for the verification suites. The defaults are the tested ranges; the
// CLI can lower them for quick runs.
struct VerifyParams {
    unsigned nmax = 0;  // 0 = suite default
    unsigned kmax = 3;
    unsigned order = 20;
};

namespace detail {

inline std::string poly_pair(const UniPoly& got, const UniPoly& want) {
    return "got " + got.to_string() + ", want " + want.to_string();
}

inline unsigned pick(unsigned requested, unsigned fallback) {
    return requested == 0 ? fallback : requested;
}

}  // namespace detail

// the expansion table rows n = 1..5, exact term-for-term
inline Report verify_table() {
    Report r{"table", {}};
    const std::vector<std::string> rows{
        "(c) f1",
        "(c c1) f1 + (c^2) f2",
        "(c c1^2 + c^2 c2) f1 + (3 c^2 c1) f2 + (c^3) f3",
        "(c c1^3 + 4 c^2 c1 c2 + c^3 c3) f1 + (7 c^2 c1^2 + 4 c^3 c2) f2 + (6 c^3 c1) f3 + "
        "(c^4) f4",
        "(c c1^4 + 11 c^2 c1^2 c2 + 4 c^3 c2^2 + 7 c^3 c1 c3 + c^4 c4) f1 + (15 c^2 c1^3 + "
        "30 c^3 c1 c2 + 5 c^4 c3) f2 + (25 c^3 c1^2 + 10 c^4 c2) f3 + (10 c^4 c1) f4 + "
        "(c^5) f5"};
    for (unsigned n = 1; n <= 5; ++n) {
        std::string got = diffpoly_to_string(expand_recurrence(n).body);
        r.add("table row n=" + std::to_string(n), got == rows[n - 1],
              got == rows[n - 1] ? "" : "got " + got);
    }
    return r;
}

// recurrence = inversion sequences = Comtet = type/p form
inline Report verify_expand(const VerifyParams& p = {}) {
    Report r{"expand", {}};
    unsigned nmax = detail::pick(p.nmax, 8);
    PTable table;
    for (unsigned n = 1; n <= nmax; ++n) {
        Expansion rec = expand_recurrence(n);
        bool inv = expand_inversion(n).body == rec.body;
        bool typ = expand_from_types(n, table).body == rec.body;
        DiffPolynomial comtet;
        for (unsigned k = 1; k <= n; ++k) comtet += comtet_Ank(n, k);
        bool com = comtet == rec.body;
        r.add("n=" + std::to_string(n) + " inversion-sequence form", inv);
        r.add("n=" + std::to_string(n) + " Comtet form", com,
              com ? "" : "got " + diffpoly_to_string(comtet));
        r.add("n=" + std::to_string(n) + " type/p form", typ);
        bool homog = true;
        for (const auto& [m, c] : rec.body.terms())
            if (m.c_degree() != n || m.weighted_degree() + m.f_index != n) homog = false;
        r.add("n=" + std::to_string(n) + " homogeneity", homog);
    }
    return r;
}

// three-way p_{k,mu} agreement, plus the worked values
inline Report verify_pkmu(const VerifyParams& p = {}) {
    Report r{"pkmu", {}};
    unsigned nmax = detail::pick(p.nmax, 9);
    PTable table;

    const std::vector<std::tuple<unsigned, unsigned, std::vector<unsigned>, long long>> pinned{
        {3, 2, {1}, 3},          {6, 3, {2, 1}, 120},      {6, 3, {1, 1, 1}, 90},
        {6, 2, {2, 1, 1}, 146},  {7, 3, {2, 1, 1}, 896}};
    for (const auto& [n, k, mu, want] : pinned) {
        TypeKMu t(n, k, Partition(mu));
        BigInt rec = p_value(t, PMethod::Recurrence, table);
        BigInt tab = p_value(t, PMethod::Tableau, table);
        BigInt enu = p_value(t, PMethod::Enumeration, table);
        bool ok = rec == BigInt(want) && tab == BigInt(want) && enu == BigInt(want);
        r.add("p_" + t.to_string() + " = " + std::to_string(want), ok,
              ok ? ""
                 : "recurrence " + rec.to_string() + ", tableau " + tab.to_string() +
                       ", enumeration " + enu.to_string());
    }

    for (unsigned n = 1; n <= nmax; ++n) {
        std::map<std::pair<unsigned, std::vector<unsigned>>, BigInt> bins;
        if (n <= kInvSeqEnumerationCap)
            for_each_inv_seq(n, [&](const std::vector<unsigned>& e) {
                TypeKMu t = type_of_seq(InvSeq(e));
                bins[{t.k, t.mu.parts()}] += 1;
            });
        bool ok = true;
        std::string bad;
        for (const auto& t : types_of(n)) {
            BigInt rec = p_value(t, PMethod::Recurrence, table);
            if (rec != p_value(t, PMethod::Tableau, table) ||
                (n <= kInvSeqEnumerationCap && rec != bins[{t.k, t.mu.parts()}])) {
                ok = false;
                bad = "first mismatch at type " + t.to_string();
                break;
            }
        }
        r.add("n=" + std::to_string(n) + " three-way agreement over all types", ok, bad);
    }
    return r;
}

// SYT forms of A_n and C_n against descent oracles
inline Report verify_syt_families(const VerifyParams& p = {}) {
    Report r{"syt-families", {}};
    unsigned nmax = detail::pick(p.nmax, 8);

    UniPoly a4 = eulerian_syt(4);
    UniPoly a4_want{Rational(0), Rational(1), Rational(11), Rational(11), Rational(1)};
    r.add("A_4 from g-index sums", a4 == a4_want, detail::poly_pair(a4, a4_want));
    UniPoly c4 = second_order_syt(4);
    UniPoly c4_want{Rational(0), Rational(1), Rational(22), Rational(58), Rational(24)};
    r.add("C_4 from g-index sums", c4 == c4_want, detail::poly_pair(c4, c4_want));

    for (unsigned n = 1; n <= std::min(nmax, kPermEnumerationCap); ++n) {
        UniPoly syt = eulerian_syt(n);
        UniPoly oracle = perm_poly(n, PermStatistic::DesAug);
        r.add("n=" + std::to_string(n) + " SYT sum = descent oracle (A_n)", syt == oracle,
              syt == oracle ? "" : detail::poly_pair(syt, oracle));
    }
    for (unsigned n = 1; n <= std::min(nmax, kStirlingPermCap / 2); ++n) {
        UniPoly syt = second_order_syt(n);
        UniPoly oracle = stirling_des_poly(n, 2);
        r.add("n=" + std::to_string(n) + " SYT sum = Stirling-permutation oracle (C_n)",
              syt == oracle, syt == oracle ? "" : detail::poly_pair(syt, oracle));
    }
    return r;
}

// sum G_T = n!, sum G_T lambda! = (2n-1)!!, two-column sum = E_{n+1}
inline Report verify_corollaries(const VerifyParams& p = {}) {
    Report r{"corollaries", {}};
    unsigned nmax = detail::pick(p.nmax, 9);
    for (unsigned n = 1; n <= nmax; ++n) {
        BigInt plain = 0, weighted = 0, two_col = 0;
        for (const auto& t : syt_all(n)) {
            BigInt g = g_product(t);
            plain += g;
            weighted += g * t.shape().parts_factorial();
            if (t.shape().part(0) <= 2) two_col += g;
        }
        r.add("n=" + std::to_string(n) + " sum G_T = n!", plain == factorial(n),
              plain.to_string());
        r.add("n=" + std::to_string(n) + " sum G_T lambda! = (2n-1)!!",
              weighted == double_factorial_odd(n), weighted.to_string());
        if (n + 1 <= kAlternatingCap) {
            BigInt euler = alternating_count(n + 1);
            r.add("n=" + std::to_string(n) + " two-column sum G_T = E_{n+1}",
                  two_col == euler,
                  two_col == euler ? "" : two_col.to_string() + " vs " + euler.to_string());
        }
    }
    return r;
}

// fiber identity and the Gamma decomposition
inline Report verify_fibers(const VerifyParams& p = {}) {
    Report r{"fibers", {}};
    unsigned nmax = detail::pick(p.nmax, 7);
    for (unsigned n = 1; n <= nmax; ++n) {
        bool ok = true;
        std::string bad;
        for (const auto& t : syt_all(n)) {
            BigInt sum = 0;
            for (const auto& z : rho_fiber(t)) sum += g_product(z);
            if (sum != g_product(t)) {
                ok = false;
                bad = "fiber sum " + sum.to_string() + " != G_T " +
                      g_product(t).to_string() + " at\n" + render_tableau(t);
                break;
            }
        }
        r.add("n=" + std::to_string(n) + " fiber sums equal G_T", ok, bad);
    }
    for (unsigned n = 1; n <= std::min(nmax, 6u); ++n) {
        bool ok = true;
        std::string bad;
        for (const auto& t : syt_all(n)) {
            GammaDecomposition d = gamma_decompose_fiber(t);
            if (d.gamma1.size() != d.gamma2.size()) {
                ok = false;
                bad = "|Gamma_1| = " + std::to_string(d.gamma1.size()) +
                      ", |Gamma_2| = " + std::to_string(d.gamma2.size()) + " at\n" +
                      render_tableau(t);
                break;
            }
        }
        r.add("n=" + std::to_string(n) + " |Gamma_1| = |Gamma_2|", ok, bad);
    }
    return r;
}

// closed-form operator/series identities plus the classical summation formulas
inline Report verify_thm11(const VerifyParams& p = {}) {
    Report r{"thm1.1", {}};
    unsigned nmax = detail::pick(p.nmax, 5);
    for (unsigned n = 1; n <= nmax; ++n)
        for (unsigned k = 1; k <= p.kmax; ++k) {
            r.add("n=" + std::to_string(n) + " k=" + std::to_string(k) +
                      " first identity (C_n(x;k+1))",
                  verify_thm11_first(n, k, p.order));
            r.add("n=" + std::to_string(n) + " k=" + std::to_string(k) +
                      " second identity (x^n A_n^{(k)}(1/x))",
                  verify_thm11_second(n, k, p.order));
        }
    for (unsigned n = 1; n <= nmax; ++n) {
        r.add("n=" + std::to_string(n) + " sum m^n x^m identity",
              verify_classical_eulerian_series(n, p.order));
        r.add("n=" + std::to_string(n) + " Gessel-Stanley identity",
              verify_gessel_stanley_series(n, p.order));
    }
    return r;
}

// grammar calculus: Dumont, the two Andre grammars, random structural checks
inline Report verify_grammar_suite(const VerifyParams& p = {}) {
    Report r{"grammars", {}};
    unsigned nmax = detail::pick(p.nmax, 8);
    for (unsigned n = 1; n <= nmax; ++n) {
        UniPoly g = eulerian_grammar(n);
        UniPoly a = eulerian(n);
        r.add("n=" + std::to_string(n) + " Dumont slice = A_n", g == a,
              g == a ? "" : detail::poly_pair(g, a));
        auto [s1, s2] = andre_grammar_slices(n);
        UniPoly s = andre(n);
        r.add("n=" + std::to_string(n) + " G1 slice = S_n", s1 == s,
              s1 == s ? "" : detail::poly_pair(s1, s));
        r.add("n=" + std::to_string(n) + " G2 slice = S_n", s2 == s,
              s2 == s ? "" : detail::poly_pair(s2, s));
    }

    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<int> coeff(1, 3), expo(0, 2), nterms(1, 2), nletters(1, 3);
    const std::vector<std::string> names{"x", "y", "z"};
    for (int trial = 0; trial < 20; ++trial) {
        unsigned letters = static_cast<unsigned>(nletters(rng));
        std::map<std::string, MPoly> rules;
        std::string dump;
        for (unsigned l = 0; l < letters; ++l) {
            MPoly rhs;
            for (int t = nterms(rng); t > 0; --t) {
                MPoly::Exponents e;
                unsigned total = 0;
                for (unsigned l2 = 0; l2 < letters && total < 2; ++l2) {
                    unsigned pw = std::min(static_cast<unsigned>(expo(rng)), 2 - total);
                    if (pw > 0) e[names[l2]] = pw;
                    total += pw;
                }
                rhs += MPoly::monomial(e, coeff(rng));
            }
            dump += names[l] + " -> " + rhs.to_string() + "; ";
            rules[names[l]] = rhs;
        }
        Grammar g(std::move(rules));
        std::uniform_int_distribution<unsigned> pick_letter(0, letters - 1);
        MPoly u = MPoly::letter(names[pick_letter(rng)]);
        MPoly target = MPoly::letter(names[pick_letter(rng)]);
        bool ok = true;
        for (unsigned n = 1; n <= 5 && ok; ++n) ok = u_dg_expansion_check(g, u, target, n);
        r.add("random grammar " + std::to_string(trial + 1) + " structural expansion", ok,
              ok ? "" : dump);
    }
    return r;
}

// cross-construction agreement for every polynomial family
inline Report verify_families_suite(const VerifyParams& p = {}) {
    Report r{"families", {}};
    unsigned nmax_ank = std::min(detail::pick(p.nmax, 6), 6u);
    for (unsigned n = 0; n <= nmax_ank; ++n)
        for (unsigned k = 1; k <= p.kmax; ++k) {
            UniPoly a = one_over_k(n, k);
            bool ok = a == exc_cyc_poly(n, k) && a == one_over_k_s_inversion(n, k);
            if (k == 2) ok = ok && a == stirling_ap_poly(n, 2);
            r.add("A_" + std::to_string(n) + "^{(" + std::to_string(k) + ")} cross-checks",
                  ok);
        }

    unsigned nmax_andre = std::min(detail::pick(p.nmax, 8), 8u);
    for (unsigned n = 1; n <= nmax_andre; ++n) {
        UniPoly s = andre(n);
        bool ok = s == simsun_des_poly(n) && s == trees012_leaf_poly(n) && s == andre_syt(n);
        r.add("S_" + std::to_string(n) + " cross-checks", ok,
              ok ? "" : "recurrence " + s.to_string());
    }

    unsigned nmax_gamma = detail::pick(p.nmax, 9);
    for (unsigned n = 1; n <= nmax_gamma; ++n) {
        r.add("n=" + std::to_string(n) + " Frobenius formula (triangle and tableau)",
              frobenius_check(n));
        if (n <= kPermEnumerationCap) {
            GammaReport g = gamma_checks(n);
            r.add("n=" + std::to_string(n) + " gamma expansion of A_n", g.eulerian_ok);
            r.add("n=" + std::to_string(n) + " gamma expansion of A_{n+1} via S(n,i)",
                  g.shifted_ok);
            r.add("n=" + std::to_string(n) + " 2^{i-1}S(n,i) = weighted two-column sum",
                  g.tableau_ok);
        }
    }
    return r;
}

// aggregate identities of the a(n,lambda) coefficients
inline Report verify_aggregates(const VerifyParams& p = {}) {
    Report r{"aggregates", {}};
    unsigned nmax = detail::pick(p.nmax, 9);
    PTable table;
    for (unsigned n = 1; n <= nmax; ++n) {
        bool first_ok = true, second_ok = true, euler_ok = true;
        std::vector<BigInt> by_length(n, BigInt(0));
        for (unsigned m = 0; m + 1 <= n; ++m)
            for (const auto& lambda : partitions_of(m))
                by_length[lambda.length()] += a_coefficient(n, lambda, table);
        for (unsigned k = 1; k <= n; ++k) {
            BigInt total = 0;
            for (const auto& lambda : partitions_of(n - k))
                total += a_coefficient(n, lambda, table);
            if (total != stirling1_unsigned(n, k)) first_ok = false;
            if (a_coefficient(n, Partition(std::vector<unsigned>(n - k, 1)), table) !=
                stirling2(n, k))
                second_ok = false;
        }
        if (n <= kPermEnumerationCap) {
            UniPoly des = perm_poly(n, PermStatistic::DesAug);
            for (unsigned k = 1; k <= n; ++k)
                if (Rational(by_length[n - k]) != des.coeff(k)) euler_ok = false;
        } else {
            UniPoly a = eulerian(n);
            for (unsigned k = 1; k <= n; ++k)
                if (Rational(by_length[n - k]) != a.coeff(k)) euler_ok = false;
        }
        r.add("n=" + std::to_string(n) + " sum a(n,lambda) = unsigned Stirling 1st", first_ok);
        r.add("n=" + std::to_string(n) + " a(n,1^{n-k}) = Stirling 2nd", second_ok);
        r.add("n=" + std::to_string(n) + " length slices = Eulerian numbers", euler_ok);
    }
    return r;
}

inline std::vector<std::string> verify_suite_names() {
    return {"table", "expand", "pkmu",     "syt-families", "corollaries",
            "fibers", "thm1.1", "grammars", "families",     "aggregates"};
}

inline Report run_suite(const std::string& name, const VerifyParams& p = {}) {
    if (name == "table") return verify_table();
    if (name == "expand") return verify_expand(p);
    if (name == "pkmu") return verify_pkmu(p);
    if (name == "syt-families") return verify_syt_families(p);
    if (name == "corollaries") return verify_corollaries(p);
    if (name == "fibers") return verify_fibers(p);
    if (name == "thm1.1") return verify_thm11(p);
    if (name == "grammars") return verify_grammar_suite(p);
    if (name == "families") return verify_families_suite(p);
    if (name == "aggregates") return verify_aggregates(p);
    throw invalid_input_error("unknown verification suite: " + name);
}

}  // namespace gindex
