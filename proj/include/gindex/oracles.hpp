#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "gindex/bigint.hpp"
#include "gindex/unipoly.hpp"

namespace gindex {

// Enumeration caps. These are deliberate limits with hard errors, never
// silent truncation; the module is a slow, trusted referee.
inline constexpr unsigned kPermEnumerationCap = 9;
inline constexpr unsigned kStirlingPermCap = 14;  // on k*n
inline constexpr unsigned kSimsunCap = 9;
inline constexpr unsigned kAlternatingCap = 9;
inline constexpr unsigned kTreesCap = 10;
inline constexpr unsigned kSignedPermCap = 8;

template <typename F>
void for_each_permutation(unsigned n, F&& visit) {
    std::vector<unsigned> pi(n);
    std::iota(pi.begin(), pi.end(), 1u);
    do {
        visit(pi);
    } while (std::next_permutation(pi.begin(), pi.end()));
}

// Per-permutation statistics. The augmented descent statistic also counts
// the last index, so des_aug = des_classic + 1.
struct PermStats {
    unsigned des_aug = 0;
    unsigned des_classic = 0;
    unsigned exc = 0;
    unsigned cyc = 0;
    unsigned peaks = 0;
    unsigned ext_double_descents = 0;
    bool simsun = false;
    bool alternating = false;
};

inline PermStats perm_stats(const std::vector<unsigned>& pi) {
    unsigned n = static_cast<unsigned>(pi.size());
    PermStats s;
    for (unsigned i = 0; i + 1 < n; ++i)
        if (pi[i] > pi[i + 1]) ++s.des_classic;
    s.des_aug = s.des_classic + 1;

    for (unsigned i = 0; i < n; ++i)
        if (pi[i] > i + 1) ++s.exc;

    std::vector<bool> seen(n + 1, false);
    for (unsigned i = 1; i <= n; ++i) {
        if (seen[i]) continue;
        ++s.cyc;
        for (unsigned j = i; !seen[j]; j = pi[j - 1]) seen[j] = true;
    }

    // boundary convention pi(0) = pi(n+1) = 0
    auto at = [&](unsigned i) -> unsigned { return (i == 0 || i == n + 1) ? 0 : pi[i - 1]; };
    for (unsigned i = 1; i <= n; ++i) {
        if (at(i - 1) < at(i) && at(i) > at(i + 1)) ++s.peaks;
        if (at(i - 1) > at(i) && at(i) > at(i + 1)) ++s.ext_double_descents;
    }

    s.simsun = true;
    for (unsigned m = 3; m <= n && s.simsun; ++m) {
        std::vector<unsigned> w;
        for (unsigned x : pi)
            if (x <= m) w.push_back(x);
        for (std::size_t i = 0; i + 2 < w.size(); ++i)
            if (w[i] > w[i + 1] && w[i + 1] > w[i + 2]) {
                s.simsun = false;
                break;
            }
    }

    s.alternating = true;
    for (unsigned i = 0; i + 1 < n; ++i) {
        bool want_desc = i % 2 == 0;  // pi(1) > pi(2) < pi(3) > ...
        if ((pi[i] > pi[i + 1]) != want_desc) {
            s.alternating = false;
            break;
        }
    }
    return s;
}

enum class PermStatistic { DesAug, DesClassic, Peaks };

inline UniPoly perm_poly(unsigned n, PermStatistic stat) {
    if (n > kPermEnumerationCap)
        throw size_limit_error("perm_poly: capped at n = " + std::to_string(kPermEnumerationCap));
    std::vector<Rational> coeffs(n + 2, Rational(0));
    for_each_permutation(n, [&](const std::vector<unsigned>& pi) {
        PermStats s = perm_stats(pi);
        unsigned v = stat == PermStatistic::DesAug     ? s.des_aug
                     : stat == PermStatistic::DesClassic ? s.des_classic
                                                         : s.peaks;
        coeffs[v] += Rational(1);
    });
    return UniPoly(std::move(coeffs));
}

// sum over S_n of x^exc(pi) k^(n - cyc(pi))
inline UniPoly exc_cyc_poly(unsigned n, unsigned k) {
    if (n > kPermEnumerationCap)
        throw size_limit_error("exc_cyc_poly: capped at n = " +
                               std::to_string(kPermEnumerationCap));
    std::vector<Rational> coeffs(n + 1, Rational(0));
    for_each_permutation(n, [&](const std::vector<unsigned>& pi) {
        PermStats s = perm_stats(pi);
        coeffs[s.exc] += Rational(BigInt(k).pow(n - s.cyc));
    });
    return UniPoly(std::move(coeffs));
}

// gamma vector of the Eulerian polynomial: a(n,i) counts permutations with i
// peaks and no exterior double descents
inline UniPoly gamma_peak_poly(unsigned n) {
    if (n > kPermEnumerationCap)
        throw size_limit_error("gamma_peak_poly: capped at n = " +
                               std::to_string(kPermEnumerationCap));
    std::vector<Rational> coeffs(n + 1, Rational(0));
    for_each_permutation(n, [&](const std::vector<unsigned>& pi) {
        PermStats s = perm_stats(pi);
        if (s.ext_double_descents == 0) coeffs[s.peaks] += Rational(1);
    });
    return UniPoly(std::move(coeffs));
}

inline UniPoly simsun_des_poly(unsigned n) {
    if (n > kSimsunCap)
        throw size_limit_error("simsun_des_poly: capped at n = " + std::to_string(kSimsunCap));
    std::vector<Rational> coeffs(n + 2, Rational(0));
    for_each_permutation(n, [&](const std::vector<unsigned>& pi) {
        PermStats s = perm_stats(pi);
        if (s.simsun) coeffs[s.des_aug] += Rational(1);
    });
    return UniPoly(std::move(coeffs));
}

inline BigInt simsun_count(unsigned n) {
    if (n > kSimsunCap)
        throw size_limit_error("simsun_count: capped at n = " + std::to_string(kSimsunCap));
    BigInt c = 0;
    for_each_permutation(n, [&](const std::vector<unsigned>& pi) {
        if (perm_stats(pi).simsun) c += 1;
    });
    return c;
}

// Euler number E_n: the number of alternating permutations of [n]
inline BigInt alternating_count(unsigned n) {
    if (n > kAlternatingCap)
        throw size_limit_error("alternating_count: capped at n = " +
                               std::to_string(kAlternatingCap));
    if (n == 0) return 1;
    BigInt c = 0;
    for_each_permutation(n, [&](const std::vector<unsigned>& pi) {
        if (perm_stats(pi).alternating) c += 1;
    });
    return c;
}

// k-Stirling permutations of order n, generated by inserting the block of
// n copies of the new letter into every gap of a smaller word. Filtering all
// multiset words would already be infeasible at modest n.
template <typename F>
void for_each_stirling_perm(unsigned n, unsigned k, F&& visit) {
    if (n * k > kStirlingPermCap)
        throw size_limit_error("for_each_stirling_perm: capped at k*n = " +
                               std::to_string(kStirlingPermCap));
    std::vector<unsigned> word;
    auto rec = [&](auto&& self, unsigned next) -> void {
        if (next > n) {
            visit(word);
            return;
        }
        for (std::size_t gap = 0; gap <= word.size(); ++gap) {
            std::vector<unsigned> bigger;
            bigger.reserve(word.size() + k);
            bigger.insert(bigger.end(), word.begin(), word.begin() + static_cast<long>(gap));
            bigger.insert(bigger.end(), k, next);
            bigger.insert(bigger.end(), word.begin() + static_cast<long>(gap), word.end());
            std::swap(word, bigger);
            self(self, next + 1);
            std::swap(word, bigger);
        }
    };
    rec(rec, 1);
}

struct StirlingPermStats {
    unsigned des = 0;  // with the final index always a descent
    unsigned ap = 0;   // longest ascent plateaus
    unsigned lap = 0;  // left ascent plateaus, with sigma(0) = 0
};

inline StirlingPermStats stirling_perm_stats(const std::vector<unsigned>& w, unsigned k) {
    StirlingPermStats s;
    unsigned len = static_cast<unsigned>(w.size());
    for (unsigned i = 0; i + 1 < len; ++i)
        if (w[i] > w[i + 1]) ++s.des;
    if (len > 0) ++s.des;  // i = kn
    auto plateau_at = [&](unsigned i) {  // 1-based start of a full k-block
        for (unsigned t = 1; t < k; ++t)
            if (w[i - 1 + t] != w[i - 1]) return false;
        return true;
    };
    for (unsigned i = 2; i + k - 1 <= len; ++i)
        if (w[i - 2] < w[i - 1] && plateau_at(i)) ++s.ap;
    for (unsigned i = 1; i + k - 1 <= len; ++i) {
        unsigned prev = i == 1 ? 0 : w[i - 2];
        if (prev < w[i - 1] && plateau_at(i)) ++s.lap;
    }
    return s;
}

inline UniPoly stirling_des_poly(unsigned n, unsigned k) {
    std::vector<Rational> coeffs(n * k + 1, Rational(0));
    for_each_stirling_perm(n, k, [&](const std::vector<unsigned>& w) {
        coeffs[stirling_perm_stats(w, k).des] += Rational(1);
    });
    return UniPoly(std::move(coeffs));
}

inline UniPoly stirling_ap_poly(unsigned n, unsigned k) {
    std::vector<Rational> coeffs(n + 1, Rational(0));
    for_each_stirling_perm(n, k, [&](const std::vector<unsigned>& w) {
        coeffs[stirling_perm_stats(w, k).ap] += Rational(1);
    });
    return UniPoly(std::move(coeffs));
}

inline UniPoly stirling_lap_poly(unsigned n, unsigned k = 2) {
    std::vector<Rational> coeffs(n + 1, Rational(0));
    for_each_stirling_perm(n, k, [&](const std::vector<unsigned>& w) {
        coeffs[stirling_perm_stats(w, k).lap] += Rational(1);
    });
    return UniPoly(std::move(coeffs));
}

// Leaf-generating polynomial of increasing trees on {0,1,...,n} whose vertex
// degrees are at most two.
inline UniPoly trees012_leaf_poly(unsigned n) {
    if (n > kTreesCap)
        throw size_limit_error("trees012_leaf_poly: capped at n = " + std::to_string(kTreesCap));
    std::vector<Rational> coeffs(n + 2, Rational(0));
    std::vector<unsigned> degree(n + 1, 0);
    auto rec = [&](auto&& self, unsigned v) -> void {
        if (v > n) {
            unsigned leaves = 0;
            for (unsigned i = 0; i <= n; ++i)
                if (degree[i] == 0) ++leaves;
            coeffs[leaves] += Rational(1);
            return;
        }
        for (unsigned p = 0; p < v; ++p) {
            if (degree[p] >= 2) continue;
            ++degree[p];
            self(self, v + 1);
            --degree[p];
        }
    };
    rec(rec, 1);
    return UniPoly(std::move(coeffs));
}

// Type B descent polynomial over signed permutations, with sigma(0) = 0.
// Independent cross-check for the convolution form of B_n; not derived
// from the tableau identities.
inline UniPoly signed_desB_poly(unsigned n) {
    if (n > kSignedPermCap)
        throw size_limit_error("signed_desB_poly: capped at n = " +
                               std::to_string(kSignedPermCap));
    std::vector<Rational> coeffs(n + 1, Rational(0));
    for_each_permutation(n, [&](const std::vector<unsigned>& pi) {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<long long> sigma(n + 1, 0);
            for (unsigned i = 0; i < n; ++i)
                sigma[i + 1] = (mask >> i & 1u) ? -static_cast<long long>(pi[i]) : pi[i];
            unsigned des = 0;
            for (unsigned i = 0; i < n; ++i)
                if (sigma[i] > sigma[i + 1]) ++des;
            coeffs[des] += Rational(1);
        }
    });
    return UniPoly(std::move(coeffs));
}

// Triangle-recurrence oracles for the Stirling numbers.
inline BigInt stirling2(unsigned n, unsigned k) {
    if (k > n) return 0;
    std::vector<std::vector<BigInt>> s(n + 1);
    for (unsigned i = 0; i <= n; ++i) s[i].assign(i + 1, BigInt(0));
    s[0][0] = 1;
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = 1; j <= i; ++j) {
            BigInt up = j + 1 <= i ? s[i - 1][j] : BigInt(0);
            s[i][j] = BigInt(j) * up + s[i - 1][j - 1];
        }
    return s[n][k];
}

inline BigInt stirling1_unsigned(unsigned n, unsigned k) {
    if (k > n) return 0;
    std::vector<std::vector<BigInt>> s(n + 1);
    for (unsigned i = 0; i <= n; ++i) s[i].assign(i + 1, BigInt(0));
    s[0][0] = 1;
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = 1; j <= i; ++j) {
            BigInt up = j + 1 <= i ? s[i - 1][j] : BigInt(0);
            s[i][j] = BigInt(i - 1) * up + s[i - 1][j - 1];
        }
    return s[n][k];
}

}  // namespace gindex
