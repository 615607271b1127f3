#pragma once

#include <map>
#include <utility>
#include <vector>

#include "gindex/diffpoly.hpp"
#include "gindex/inversions.hpp"
#include "gindex/tableaux.hpp"
#include "gindex/unipoly.hpp"

namespace gindex {

// The expansion (cD)^n f = sum_k A_{n,k} f_k. Every monomial has total
// c-degree n and satisfies sum(i * a_i) + k = n.
struct Expansion {
    unsigned n = 0;
    DiffPolynomial body;

    DiffPolynomial slice(unsigned k) const { return body.slice(k); }
};

// Expansion by iterating the recurrence step p -> c * D(p), starting from f.
inline Expansion expand_recurrence(unsigned n) {
    if (n < 1) throw invalid_input_error("expand_recurrence: n must be positive");
    DiffPolynomial p = DiffPolynomial::f_symbol(0);
    for (unsigned i = 0; i < n; ++i) p = diffpoly_apply_cD(p);
    return Expansion{n, std::move(p)};
}

// phi(e) = c * c_{|e|_1} ... c_{|e|_{n-1}} * f_{|e|_0}
inline DiffPolynomial phi(const InvSeq& e) {
    TypeKMu t = type_of_seq(e);
    unsigned c0 = 1 + t.slot_multiplicity(0);
    return DiffPolynomial::monomial(DiffMonomial(t.k, c0, t.mu.parts()), 1);
}

// Expansion as the sum of phi over all inversion sequences of length n.
inline Expansion expand_inversion(unsigned n) {
    if (n < 1) throw invalid_input_error("expand_inversion: n must be positive");
    if (n > kInvSeqEnumerationCap)
        throw size_limit_error("expand_inversion: capped at n = " +
                               std::to_string(kInvSeqEnumerationCap));
    DiffPolynomial p;
    for_each_inv_seq(n, [&](const std::vector<unsigned>& e) {
        TypeKMu t = type_of_seq(InvSeq(e));
        p.add_term(DiffMonomial(t.k, 1 + t.slot_multiplicity(0), t.mu.parts()), 1);
    });
    return Expansion{n, std::move(p)};
}

// A_{n,k} f_k by Comtet's formula: the sum over sequences (k_1..k_{n-1}) of
// nonnegative integers with k_1+...+k_{n-1} = n-k and k_1+...+k_j <= j, each
// contributing prod_j binomial(j - (k_1+...+k_{j-1}), k_j) times
// c * c_{k_1} ... c_{k_{n-1}}. The binomial form keeps every intermediate
// value integral.
inline DiffPolynomial comtet_Ank(unsigned n, unsigned k) {
    if (k < 1 || k > n) throw invalid_input_error("comtet_Ank: k out of range");
    DiffPolynomial out;
    std::vector<unsigned> ks(n >= 1 ? n - 1 : 0, 0);
    auto rec = [&](auto&& self, unsigned j, unsigned prefix, BigInt coeff) -> void {
        if (j == n - 1) {
            if (prefix != n - k) return;
            std::vector<unsigned> mu;
            unsigned zeros = 0;
            for (unsigned v : ks) {
                if (v == 0)
                    ++zeros;
                else
                    mu.push_back(v);
            }
            std::sort(mu.rbegin(), mu.rend());
            out.add_term(DiffMonomial(k, 1 + zeros, std::move(mu)), coeff);
            return;
        }
        unsigned slack = j + 1 - prefix;  // k_{j+1} may be at most this
        unsigned need = n - k - prefix;
        for (unsigned v = 0; v <= std::min(slack, need); ++v) {
            ks[j] = v;
            self(self, j + 1, prefix + v, coeff * binomial(slack, v));
        }
        ks[j] = 0;
    };
    rec(rec, 0, 0, 1);
    return out;
}

// Memoized table of the p_{k,mu} counts, keyed by (k, unpadded mu).
class PTable {
public:
    const BigInt& value(const TypeKMu& t) {
        Key key{t.k, t.mu.parts()};
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        BigInt v = compute(t);
        return memo_.emplace(std::move(key), std::move(v)).first->second;
    }

    std::size_t size() const { return memo_.size(); }

    // entries exposed as (k, mu, value) for cache persistence
    std::vector<std::tuple<unsigned, std::vector<unsigned>, BigInt>> entries() const {
        std::vector<std::tuple<unsigned, std::vector<unsigned>, BigInt>> out;
        for (const auto& [key, v] : memo_) out.emplace_back(key.first, key.second, v);
        return out;
    }

    void insert(unsigned k, std::vector<unsigned> mu, BigInt v) {
        memo_.emplace(Key{k, std::move(mu)}, std::move(v));
    }

private:
    using Key = std::pair<unsigned, std::vector<unsigned>>;
    std::map<Key, BigInt> memo_;

    BigInt compute(const TypeKMu& t) {
        // base cases: p_{1,(1,...,1)} = 1, and p_{0,mu} = 0 is handled by
        // dropping the k-1 branch when k = 1
        if (t.k == 1 && t.mu.length() == t.n - 1) return 1;
        BigInt sum = 0;
        const auto& parts = t.mu.parts();
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i + 1 < parts.size() && parts[i + 1] == parts[i]) continue;
            unsigned j = parts[i];  // i is the last occurrence of part j
            std::vector<unsigned> reduced = parts;
            if (j == 1)
                reduced.erase(reduced.begin() + static_cast<long>(i));
            else
                --reduced[i];
            TypeKMu child(t.n - 1, t.k, Partition(std::move(reduced)));
            sum += BigInt(t.slot_multiplicity(j - 1) + 1) * value(child);
        }
        if (t.k >= 2) {
            TypeKMu child(t.n - 1, t.k - 1, t.mu);
            sum += value(child);
        }
        return sum;
    }
};

enum class PMethod { Recurrence, Tableau, Enumeration };

inline BigInt p_value(const TypeKMu& t, PMethod method, PTable& table) {
    switch (method) {
        case PMethod::Recurrence:
            return table.value(t);
        case PMethod::Tableau:
            return g_sum_over_type(t);
        case PMethod::Enumeration: {
            if (t.n > kInvSeqEnumerationCap)
                throw size_limit_error("p_value: enumeration capped at n = " +
                                       std::to_string(kInvSeqEnumerationCap));
            BigInt count = 0;
            for_each_inv_seq(t.n, [&](const std::vector<unsigned>& e) {
                if (type_of_seq(InvSeq(e)) == t) count += 1;
            });
            return count;
        }
    }
    throw invalid_input_error("p_value: unknown method");
}

inline BigInt p_value(const TypeKMu& t, PMethod method = PMethod::Recurrence) {
    static PTable table;
    return p_value(t, method, table);
}

// Expansion assembled from the type decomposition:
//   (cD)^n f = sum over types (k,mu) of p_{k,mu} c c_{mu_1}...c_{mu_{n-1}} f_k
inline Expansion expand_from_types(unsigned n, PTable& table) {
    if (n < 1) throw invalid_input_error("expand_from_types: n must be positive");
    DiffPolynomial p;
    for (const auto& t : types_of(n))
        p.add_term(DiffMonomial(t.k, 1 + t.slot_multiplicity(0), t.mu.parts()),
                   table.value(t));
    return Expansion{n, std::move(p)};
}

inline Expansion expand_from_types(unsigned n) {
    PTable table;
    return expand_from_types(n, table);
}

// a(n,lambda): the coefficient of c^{n-l(lambda)} c_lambda f_{n-|lambda|},
// which equals p_{n-|lambda|, lambda}.
inline BigInt a_coefficient(unsigned n, const Partition& lambda, PTable& table) {
    if (lambda.weight() + 1 > n)
        throw invalid_input_error("a_coefficient: |lambda| must be at most n-1");
    return table.value(TypeKMu(n, n - lambda.weight(), lambda));
}

inline BigInt a_coefficient(unsigned n, const Partition& lambda) {
    PTable table;
    return a_coefficient(n, lambda, table);
}

// Both sides of the rising-factorial identity
//   sum over types sum_Z G_Z x^k  =  x(x+1)...(x+n-1).
inline std::pair<UniPoly, UniPoly> rising_factorial_check(unsigned n) {
    std::vector<Rational> lhs(n + 1, Rational(0));
    for (const auto& t : types_of(n)) lhs[t.k] += Rational(g_sum_over_type(t));
    UniPoly rhs = UniPoly::x();
    for (unsigned i = 1; i < n; ++i)
        rhs *= UniPoly{Rational(static_cast<long long>(i)), Rational(1)};
    return {UniPoly(std::move(lhs)), rhs};
}

// Stirling number of the second kind as the g-weighted count of k-Young
// tableaux of shape (k, (1^{n-k} 0^{k-1})).
inline BigInt stirling2_via_tableaux(unsigned n, unsigned k) {
    if (k < 1 || k > n) throw invalid_input_error("stirling2_via_tableaux: k out of range");
    std::vector<unsigned> ones(n - k, 1);
    return g_sum_over_type(TypeKMu(n, k, Partition(std::move(ones))));
}

// F_n from F_0 = 1 and the first-order recurrence
//   F_{n+1} = (n + n*alpha + beta)(a + b x + c x^2) F_n
//             + (a + b x + c x^2)(1 - x) F_n'.
inline UniPoly general_Fn(unsigned n, const Rational& alpha, const Rational& beta,
                          const Rational& a, const Rational& b, const Rational& c) {
    UniPoly F = UniPoly::constant(1);
    UniPoly q{a, b, c};
    UniPoly one_minus_x{Rational(1), Rational(-1)};
    for (unsigned m = 0; m < n; ++m) {
        Rational scale = Rational(static_cast<long long>(m)) * (Rational(1) + alpha) + beta;
        F = scale * (q * F) + q * (one_minus_x * F.derivative());
    }
    return F;
}

}  // namespace gindex
