#include <catch2/catch.hpp>

#include <set>

#include "gindex/oracles.hpp"

using namespace gindex;


namespace {

UniPoly upoly(std::initializer_list<long long> coeffs) {
    std::vector<Rational> v;
    for (long long c : coeffs) v.push_back(Rational(c));
    return UniPoly(std::move(v));
}

}  // namespace

TEST_CASE("descent polynomials over S_n", "[oracles]") {
    CHECK(perm_poly(1, PermStatistic::DesAug) == UniPoly::x());
    CHECK(perm_poly(4, PermStatistic::DesAug) == upoly({0, 1, 11, 11, 1}));
    for (unsigned n = 1; n <= 8; ++n)
        CHECK(perm_poly(n, PermStatistic::DesAug) ==
              UniPoly::x() * perm_poly(n, PermStatistic::DesClassic));
}

TEST_CASE("excedance/cycle statistics", "[oracles]") {
    // 12: exc 0, cyc 2; 21: exc 1, cyc 1 -> 1 + 2x at k = 2
    CHECK(exc_cyc_poly(2, 2) == upoly({1, 2}));
    CHECK(exc_cyc_poly(3, 1) == upoly({1, 4, 1}));  // classical Eulerian
}

TEST_CASE("per-permutation stats on a worked example", "[oracles]") {
    PermStats s = perm_stats({3, 1, 2, 5, 4});
    CHECK(s.des_classic == 2);
    CHECK(s.des_aug == 3);
    CHECK(s.exc == 2);        // pi(1)=3>1, pi(4)=5>4
    CHECK(s.cyc == 2);        // (1 3 2)(4 5)
    CHECK(s.peaks == 2);      // positions 1 and 4
    CHECK(s.ext_double_descents == 1);  // 5 > 4 > 0 at the end
    CHECK(s.alternating == false);
    PermStats alt = perm_stats({2, 1, 4, 3});
    CHECK(alt.alternating == true);
}

TEST_CASE("k-Stirling permutations: counts and small lists", "[oracles]") {
    std::set<std::vector<unsigned>> q22;
    for_each_stirling_perm(2, 2, [&](const std::vector<unsigned>& w) { q22.insert(w); });
    CHECK(q22 == std::set<std::vector<unsigned>>{{1, 1, 2, 2}, {1, 2, 2, 1}, {2, 2, 1, 1}});

    for (unsigned n = 1; n <= 7; ++n) {
        BigInt count = 0;
        for_each_stirling_perm(n, 2, [&](const std::vector<unsigned>&) { count += 1; });
        CHECK(count == double_factorial_odd(n));
    }
    BigInt q43 = 0;
    for_each_stirling_perm(4, 3, [&](const std::vector<unsigned>&) { q43 += 1; });
    CHECK(q43 == BigInt(1 * 4 * 7 * 10));
    CHECK_THROWS_AS(for_each_stirling_perm(8, 2, [](const std::vector<unsigned>&) {}),
                    size_limit_error);
}

TEST_CASE("Stirling permutation statistics", "[oracles]") {
    CHECK(stirling_des_poly(2, 2) == upoly({0, 1, 2}));
    CHECK(stirling_lap_poly(2) == upoly({0, 2, 1}));
    CHECK(stirling_ap_poly(2, 2) == upoly({1, 2}));
    // nesting property holds for every generated word
    for_each_stirling_perm(3, 2, [&](const std::vector<unsigned>& w) {
        for (unsigned letter = 1; letter <= 3; ++letter) {
            std::size_t first = w.size(), last = 0;
            for (std::size_t i = 0; i < w.size(); ++i)
                if (w[i] == letter) {
                    first = std::min(first, i);
                    last = std::max(last, i);
                }
            for (std::size_t i = first; i <= last; ++i) CHECK(w[i] >= letter);
        }
    });
}

TEST_CASE("simsun permutations and Euler numbers", "[oracles]") {
    CHECK(simsun_des_poly(3) == upoly({0, 1, 4}));
    CHECK(alternating_count(4) == BigInt(5));
    const long long euler[] = {1, 1, 1, 2, 5, 16, 61, 272, 1385};
    for (unsigned n = 0; n <= 8; ++n) CHECK(alternating_count(n) == BigInt(euler[n]));
    for (unsigned n = 1; n <= 8; ++n) CHECK(simsun_count(n) == alternating_count(n + 1));
}

TEST_CASE("0-1-2 increasing trees", "[oracles]") {
    CHECK(trees012_leaf_poly(2) == upoly({0, 1, 1}));
    CHECK(trees012_leaf_poly(1) == UniPoly::x());
    // tree count is E_{n+1}
    for (unsigned n = 1; n <= 7; ++n) {
        BigInt total = 0;
        UniPoly p = trees012_leaf_poly(n);
        for (const auto& c : p.coeffs()) total += c.num();
        CHECK(total == alternating_count(n + 1));
    }
}

TEST_CASE("caps raise size errors", "[oracles]") {
    CHECK_THROWS_AS(perm_poly(10, PermStatistic::DesAug), size_limit_error);
    CHECK_THROWS_AS(simsun_des_poly(10), size_limit_error);
    CHECK_THROWS_AS(alternating_count(10), size_limit_error);
    CHECK_THROWS_AS(trees012_leaf_poly(11), size_limit_error);
    CHECK_THROWS_AS(signed_desB_poly(9), size_limit_error);
}

TEST_CASE("Stirling triangles", "[oracles]") {
    CHECK(stirling2(4, 2) == BigInt(7));
    CHECK(stirling1_unsigned(4, 2) == BigInt(11));
    for (unsigned n = 0; n <= 8; ++n) {
        BigInt row1 = 0, row2 = 0;
        for (unsigned k = 0; k <= n; ++k) {
            row1 += stirling1_unsigned(n, k);
            row2 += stirling2(n, k);
        }
        CHECK(row1 == factorial(n));  // all permutations by cycle count
    }
    CHECK(stirling2(6, 3) == BigInt(90));
    CHECK(stirling1_unsigned(6, 3) == BigInt(225));
}

