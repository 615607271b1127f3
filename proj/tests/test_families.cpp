#include <catch2/catch.hpp>

#include "gindex/families.hpp"

using namespace gindex;


namespace {

UniPoly upoly(std::initializer_list<long long> coeffs) {
    std::vector<Rational> v;
    for (long long c : coeffs) v.push_back(Rational(c));
    return UniPoly(std::move(v));
}

}  // namespace

TEST_CASE("Eulerian polynomials, three ways", "[families]") {
    CHECK(eulerian(1) == UniPoly::x());
    CHECK(eulerian(4) == upoly({0, 1, 11, 11, 1}));
    for (unsigned n = 1; n <= 7; ++n) {
        UniPoly a = eulerian(n);
        CHECK(a == perm_poly(n, PermStatistic::DesAug));
        CHECK(a == eulerian_syt(n));
        CHECK(a == eulerian_grammar(n));
        CHECK(a == UniPoly::x() * eulerian_classic(n));
        // symmetry <n,i> = <n,n+1-i>
        for (unsigned i = 1; i <= n; ++i) CHECK(a.coeff(i) == a.coeff(n + 1 - i));
    }
}

TEST_CASE("second-order Eulerian polynomials", "[families]") {
    CHECK(second_order(4, 2) == upoly({0, 1, 22, 58, 24}));
    CHECK(second_order(2, 2) == upoly({0, 1, 2}));
    for (unsigned k = 1; k <= 4; ++k) CHECK(second_order(1, k) == UniPoly::x());
    for (unsigned n = 0; n <= 7; ++n) CHECK(second_order(n, 1) == eulerian(n));
    // descent oracle over the k-Stirling permutations
    for (unsigned n = 1; n <= 5; ++n) CHECK(second_order(n, 2) == stirling_des_poly(n, 2));
    for (unsigned n = 1; n <= 4; ++n) CHECK(second_order(n, 3) == stirling_des_poly(n, 3));
    // SYT construction, k = 2
    for (unsigned n = 1; n <= 7; ++n) CHECK(second_order(n, 2) == second_order_syt(n));
}

TEST_CASE("1/k-Eulerian polynomials against three oracles", "[families]") {
    CHECK(one_over_k(0, 2) == UniPoly::constant(1));
    CHECK(one_over_k(1, 2) == UniPoly::constant(1));
    CHECK(one_over_k(2, 2) == upoly({1, 2}));
    for (unsigned n = 0; n <= 6; ++n)
        for (unsigned k = 1; k <= 3; ++k) {
            UniPoly a = one_over_k(n, k);
            CHECK(a == exc_cyc_poly(n, k));
            CHECK(a == one_over_k_s_inversion(n, k));
        }
    for (unsigned n = 0; n <= 6; ++n) CHECK(one_over_k(n, 2) == stirling_ap_poly(n, 2));
    CHECK(stirling_ap_poly(2, 2) == upoly({1, 2}));
}

TEST_CASE("left ascent plateau polynomial", "[families]") {
    CHECK(left_ascent_plateau(2) == upoly({0, 2, 1}));
    for (unsigned n = 0; n <= 6; ++n) {
        CHECK(left_ascent_plateau(n) == stirling_lap_poly(n));
        CHECK(left_ascent_plateau(n) == one_over_k(n, 2).reversed(n));
    }
}

TEST_CASE("type B Eulerian polynomial via the convolution", "[families]") {
    CHECK(type_b(1) == upoly({1, 1}));
    CHECK(type_b(2) == upoly({1, 6, 1}));
    // independent cross-check: descents of signed permutations
    for (unsigned n = 0; n <= 5; ++n) CHECK(type_b(n) == signed_desB_poly(n));
}

TEST_CASE("2^n A_n(x) as the N * N convolution", "[families]") {
    for (unsigned n = 0; n <= 6; ++n) {
        UniPoly conv;
        for (unsigned i = 0; i <= n; ++i)
            conv += Rational(binomial(n, i)) *
                    (left_ascent_plateau(i) * left_ascent_plateau(n - i));
        CHECK(conv == Rational(BigInt(2).pow(n)) * eulerian(n));
    }
}

TEST_CASE("Andre polynomials, five ways", "[families]") {
    CHECK(andre(1) == UniPoly::x());
    CHECK(andre(2) == upoly({0, 1, 1}));
    CHECK(andre(3) == upoly({0, 1, 4}));
    for (unsigned n = 1; n <= 7; ++n) {
        UniPoly s = andre(n);
        CHECK(s == simsun_des_poly(n));
        CHECK(s == trees012_leaf_poly(n));
        CHECK(s == andre_syt(n));
        auto [g1, g2] = andre_grammar_slices(n);
        CHECK(s == g1);
        CHECK(s == g2);
    }
}

TEST_CASE("gamma expansions", "[families]") {
    UniPoly a = gamma_eulerian(4);
    CHECK(a.coeff(1) == Rational(1));
    CHECK(a.coeff(2) == Rational(8));
    for (unsigned n = 1; n <= 7; ++n) CHECK(gamma_checks(n).all());
    // weighted two-column identity at n = 3: x + 8x^2 on both sides
    CHECK(gamma_andre(3) == upoly({0, 1, 8}));
    CHECK(andre_syt_weighted(3) == upoly({0, 1, 8}));
}

TEST_CASE("series identities at order 20", "[families]") {
    for (unsigned n = 1; n <= 4; ++n)
        for (unsigned k = 1; k <= 3; ++k) {
            CHECK(verify_thm11_first(n, k, 20));
            CHECK(verify_thm11_second(n, k, 20));
        }
    CHECK(verify_thm11_first(1, 1, 20));  // C_1(x;2) = x
    for (unsigned n = 1; n <= 4; ++n) {
        CHECK(verify_classical_eulerian_series(n, 20));
        CHECK(verify_gessel_stanley_series(n, 20));
    }
    CHECK_THROWS_AS(verify_thm11_first(16, 1, 20), size_limit_error);
}

TEST_CASE("the second series identity at k = 2 is the N_n identity", "[families]") {
    // (2xD)^n (1-x)^{-1/2} * (1-x)^{n+1/2} = N_n(x)
    for (unsigned n = 0; n <= 5; ++n)
        CHECK(one_over_k(n, 2).reversed(n) == left_ascent_plateau(n));
    CHECK(verify_thm11_second(2, 2, 20));
    CHECK(one_over_k(2, 2).reversed(2) == upoly({0, 2, 1}));
}

TEST_CASE("Frobenius formula, triangle and tableau forms", "[families]") {
    for (unsigned n = 1; n <= 8; ++n) CHECK(frobenius_check(n));
}

