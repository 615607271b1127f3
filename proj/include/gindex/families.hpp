#pragma once

#include <utility>

#include "gindex/expansion.hpp"
#include "gindex/grammars.hpp"
#include "gindex/inversions.hpp"
#include "gindex/oracles.hpp"
#include "gindex/series.hpp"
#include "gindex/tableaux.hpp"

namespace gindex {

// All acceptance identities hold already at order 20; the default leaves some
// slack for callers.
inline constexpr unsigned kDefaultSeriesOrder = 24;

// --- recurrence constructions ------------------------------------------

// Eulerian polynomial in the convention where the last index is always a
// descent, so A_n here is x times the classical polynomial. A_0 = 1.
inline UniPoly eulerian(unsigned n) {
    return general_Fn(n, Rational(0), Rational(1), Rational(0), Rational(1), Rational(0));
}

inline UniPoly eulerian_classic(unsigned n) {
    if (n == 0) return UniPoly::constant(1);
    UniPoly a = eulerian(n);
    std::vector<Rational> shifted(a.coeffs().begin() + 1, a.coeffs().end());
    return UniPoly(std::move(shifted));
}

// k-order Eulerian polynomial C_n(x;k):
//   C_{n+1} = (kn+1) x C_n + x(1-x) C_n',  C_0 = 1.
inline UniPoly second_order(unsigned n, unsigned k) {
    if (k < 1) throw invalid_input_error("second_order: k must be positive");
    UniPoly C = UniPoly::constant(1);
    UniPoly x = UniPoly::x();
    UniPoly x_one_minus_x{Rational(0), Rational(1), Rational(-1)};
    for (unsigned m = 0; m < n; ++m) {
        Rational scale(static_cast<long long>(k) * m + 1);
        C = scale * (x * C) + x_one_minus_x * C.derivative();
    }
    return C;
}

// 1/k-Eulerian polynomial A_n^{(k)}:
//   A_{n+1} = (1+knx) A_n + kx(1-x) A_n',  A_0 = A_1 = 1.
inline UniPoly one_over_k(unsigned n, unsigned k) {
    if (k < 1) throw invalid_input_error("one_over_k: k must be positive");
    UniPoly A = UniPoly::constant(1);
    UniPoly x_one_minus_x{Rational(0), Rational(1), Rational(-1)};
    for (unsigned m = 0; m < n; ++m) {
        UniPoly scale{Rational(1), Rational(static_cast<long long>(k) * m)};
        A = scale * A + Rational(static_cast<long long>(k)) * (x_one_minus_x * A.derivative());
    }
    return A;
}

// Left ascent plateau polynomial N_n(x) = x^n A_n^{(2)}(1/x).
inline UniPoly left_ascent_plateau(unsigned n) { return one_over_k(n, 2).reversed(n); }

// Type B Eulerian polynomial, defined here through the convolution
//   B_n(x) = sum_i binom(n,i) N_i(x) M_{n-i}(x)  with M_n = A_n^{(2)}.
inline UniPoly type_b(unsigned n) {
    UniPoly B;
    for (unsigned i = 0; i <= n; ++i)
        B += Rational(binomial(n, i)) * (left_ascent_plateau(i) * one_over_k(n - i, 2));
    return B;
}

// Andre polynomial S_n(x):
//   S_n = (n+1) x S_{n-1} + x(1-2x) S_{n-1}',  S_1 = x.
inline UniPoly andre(unsigned n) {
    if (n < 1) throw invalid_input_error("andre: n must be positive");
    UniPoly S = UniPoly::x();
    UniPoly x_one_minus_2x{Rational(0), Rational(1), Rational(-2)};
    for (unsigned m = 2; m <= n; ++m) {
        Rational scale(static_cast<long long>(m) + 1);
        S = scale * (UniPoly::x() * S) + x_one_minus_2x * S.derivative();
    }
    return S;
}

// --- standard-Young-tableau constructions -------------------------------

inline UniPoly eulerian_syt(unsigned n) {
    std::vector<Rational> coeffs(n + 1, Rational(0));
    for (const auto& t : syt_all(n))
        coeffs[n + 1 - t.shape().length()] += Rational(g_product(t));
    return UniPoly(std::move(coeffs));
}

inline UniPoly second_order_syt(unsigned n) {
    std::vector<Rational> coeffs(n + 1, Rational(0));
    for (const auto& t : syt_all(n))
        coeffs[n + 1 - t.shape().length()] +=
            Rational(g_product(t) * t.shape().parts_factorial());
    return UniPoly(std::move(coeffs));
}

inline UniPoly andre_syt(unsigned n) {
    std::vector<Rational> coeffs(n + 1, Rational(0));
    for (const auto& t : syt_all(n)) {
        if (t.shape().part(0) > 2) continue;  // at most two columns
        coeffs[n + 1 - t.shape().length()] += Rational(g_product(t));
    }
    return UniPoly(std::move(coeffs));
}

inline UniPoly andre_syt_weighted(unsigned n) {
    std::vector<Rational> coeffs(n + 1, Rational(0));
    for (const auto& t : syt_all(n)) {
        if (t.shape().part(0) > 2) continue;
        coeffs[n + 1 - t.shape().length()] +=
            Rational(g_product(t) * t.shape().parts_factorial());
    }
    return UniPoly(std::move(coeffs));
}

// --- grammar constructions ----------------------------------------------

inline UniPoly eulerian_grammar(unsigned n) {
    return dumont_eulerian(n).substitute_one("y").to_unipoly("x");
}

inline std::pair<UniPoly, UniPoly> andre_grammar_slices(unsigned n) {
    auto [g1, g2] = andre_grammars(n);
    return {g1.substitute_one("y").to_unipoly("x"), g2.substitute_one("y").to_unipoly("x")};
}

// --- s-inversion-sequence construction ----------------------------------

// A_n^{(k)} as the ascent polynomial over s-inversion sequences for
// s = (1, k+1, 2k+1, ...).
inline UniPoly one_over_k_s_inversion(unsigned n, unsigned k) {
    std::vector<unsigned> s(n);
    for (unsigned i = 0; i < n; ++i) s[i] = i * k + 1;
    return s_ascent_poly(s);
}

// --- gamma expansions -----------------------------------------------------

// generating polynomial of the gamma coefficients a(n,i) of A_n(x)
inline UniPoly gamma_eulerian(unsigned n) { return gamma_peak_poly(n); }

// sum_i 2^{i-1} S(n,i) x^i, read off the Andre polynomial
inline UniPoly gamma_andre(unsigned n) {
    UniPoly S = andre(n);
    std::vector<Rational> coeffs(S.coeffs().size(), Rational(0));
    for (std::size_t i = 1; i < coeffs.size(); ++i)
        coeffs[i] = Rational(BigInt(2).pow(static_cast<unsigned>(i) - 1)) * S.coeff(i);
    return UniPoly(std::move(coeffs));
}

struct GammaReport {
    bool eulerian_ok = false;  // A_n = sum a(n,i) x^i (1+x)^{n+1-2i}
    bool shifted_ok = false;   // A_{n+1} = sum 2^{i-1} S(n,i) x^i (1+x)^{n+2-2i}
    bool tableau_ok = false;   // sum 2^{i-1} S(n,i) x^i = weighted two-column SYT sum

    bool all() const { return eulerian_ok && shifted_ok && tableau_ok; }
};

inline GammaReport gamma_checks(unsigned n) {
    GammaReport r;
    UniPoly one_plus_x{Rational(1), Rational(1)};

    UniPoly a = gamma_eulerian(n);
    UniPoly lhs;
    for (std::size_t i = 1; i < a.coeffs().size(); ++i) {
        if (a.coeff(i).is_zero()) continue;
        lhs += a.coeff(i) * (UniPoly::monomial(1, static_cast<unsigned>(i)) *
                             one_plus_x.pow(n + 1 - 2 * static_cast<unsigned>(i)));
    }
    r.eulerian_ok = lhs == eulerian(n);

    UniPoly g = gamma_andre(n);
    UniPoly lhs2;
    for (std::size_t i = 1; i < g.coeffs().size(); ++i) {
        if (g.coeff(i).is_zero()) continue;
        lhs2 += g.coeff(i) * (UniPoly::monomial(1, static_cast<unsigned>(i)) *
                              one_plus_x.pow(n + 2 - 2 * static_cast<unsigned>(i)));
    }
    r.shifted_ok = lhs2 == eulerian(n + 1);

    r.tableau_ok = g == andre_syt_weighted(n);
    return r;
}

// --- series identities ----------------------------------------------------

// (x (1-x)^{-k} d/dx)^n (1-x)^{-1} * (1-x)^{n+kn+1} = C_n(x;k+1)
inline bool verify_thm11_first(unsigned n, unsigned k, unsigned order = kDefaultSeriesOrder) {
    if (order < n + 5) throw size_limit_error("verify_thm11_first: truncation order too small");
    TruncSeries omx = TruncSeries::one_minus_x(order);
    TruncSeries c_hat = omx.pow_rational(Rational(-static_cast<long long>(k)));
    TruncSeries s = omx.pow_rational(Rational(-1));
    for (unsigned i = 0; i < n; ++i) s = apply_x_c_ddx(c_hat, s);
    TruncSeries lhs = s * omx.pow_rational(Rational(static_cast<long long>(n) + static_cast<long long>(k) * n + 1));
    TruncSeries rhs = TruncSeries::from_poly(second_order(n, k + 1), order);
    return lhs == rhs;
}

// (k x d/dx)^n (1-x)^{-1/k} * (1-x)^{n+1/k} = x^n A_n^{(k)}(1/x)
inline bool verify_thm11_second(unsigned n, unsigned k, unsigned order = kDefaultSeriesOrder) {
    if (order < n + 5) throw size_limit_error("verify_thm11_second: truncation order too small");
    TruncSeries omx = TruncSeries::one_minus_x(order);
    TruncSeries c_hat = TruncSeries::constant(Rational(static_cast<long long>(k)), order);
    TruncSeries s = omx.pow_rational(Rational(BigInt(-1), BigInt(k)));
    for (unsigned i = 0; i < n; ++i) s = apply_x_c_ddx(c_hat, s);
    TruncSeries lhs =
        s * omx.pow_rational(Rational(static_cast<long long>(n)) + Rational(BigInt(1), BigInt(k)));
    TruncSeries rhs = TruncSeries::from_poly(one_over_k(n, k).reversed(n), order);
    return lhs == rhs;
}

// sum_m m^n x^m * (1-x)^{n+1} = A_n(x)
inline bool verify_classical_eulerian_series(unsigned n, unsigned order = kDefaultSeriesOrder) {
    if (order < n + 5)
        throw size_limit_error("verify_classical_eulerian_series: truncation order too small");
    TruncSeries powers(order);
    std::vector<Rational> coeffs(order, Rational(0));
    for (unsigned m = 0; m < order; ++m) coeffs[m] = Rational(BigInt(m).pow(n));
    powers = TruncSeries(order, std::move(coeffs));
    TruncSeries lhs = powers * TruncSeries::one_minus_x(order).pow_rational(Rational(static_cast<long long>(n) + 1));
    return lhs == TruncSeries::from_poly(eulerian(n), order);
}

// sum_m S(m+n, m) x^m * (1-x)^{2n+1} = C_n(x)
inline bool verify_gessel_stanley_series(unsigned n, unsigned order = kDefaultSeriesOrder) {
    if (order < n + 5)
        throw size_limit_error("verify_gessel_stanley_series: truncation order too small");
    std::vector<Rational> coeffs(order, Rational(0));
    for (unsigned m = 0; m < order; ++m) coeffs[m] = Rational(stirling2(m + n, m));
    TruncSeries gs(order, std::move(coeffs));
    TruncSeries lhs = gs * TruncSeries::one_minus_x(order).pow_rational(Rational(2LL * n + 1));
    return lhs == TruncSeries::from_poly(second_order(n, 2), order);
}

// Frobenius formula, both through the Stirling triangle and through the
// tableau counts of shape (k, (1^{n-k} 0^{k-1})):
//   A_n(x) = sum_k k! S(n,k) x^k (1-x)^{n-k}
inline bool frobenius_check(unsigned n) {
    UniPoly one_minus_x{Rational(1), Rational(-1)};
    UniPoly triangle, tableau;
    for (unsigned k = 1; k <= n; ++k) {
        UniPoly basis = UniPoly::monomial(1, k) * one_minus_x.pow(n - k);
        triangle += Rational(factorial(k) * stirling2(n, k)) * basis;
        tableau += Rational(factorial(k) * stirling2_via_tableaux(n, k)) * basis;
    }
    UniPoly a = eulerian(n);
    return triangle == a && tableau == a;
}

}  // namespace gindex
