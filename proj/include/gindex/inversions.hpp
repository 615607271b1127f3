#pragma once

#include <vector>

#include "gindex/partitions.hpp"
#include "gindex/rational.hpp"
#include "gindex/unipoly.hpp"

namespace gindex {

inline constexpr unsigned kInvSeqEnumerationCap = 10;

// Inversion sequence (e_1..e_n) with 0 <= e_i < i; entries stored 0-indexed.
struct InvSeq {
    std::vector<unsigned> e;

    InvSeq() = default;

    explicit InvSeq(std::vector<unsigned> entries) : e(std::move(entries)) {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > i) throw invalid_input_error("InvSeq: entry out of range");
    }

    unsigned size() const { return static_cast<unsigned>(e.size()); }

    // |e|_j = #{i : e_i = j}
    unsigned occurrences(unsigned j) const {
        unsigned c = 0;
        for (unsigned v : e)
            if (v == j) ++c;
        return c;
    }

    friend bool operator==(const InvSeq& a, const InvSeq& b) = default;
};

// Visits all n! inversion sequences of length n in lexicographic order.
template <typename F>
void for_each_inv_seq(unsigned n, F&& visit) {
    std::vector<unsigned> e(n, 0);
    while (true) {
        visit(e);
        if (n == 0) return;
        std::size_t i = n;
        while (i-- > 0) {
            if (e[i] < i) {
                ++e[i];
                for (std::size_t j = i + 1; j < n; ++j) e[j] = 0;
                break;
            }
            if (i == 0) return;
        }
    }
}

inline std::vector<InvSeq> inv_seqs(unsigned n) {
    if (n > kInvSeqEnumerationCap)
        throw size_limit_error("inv_seqs: enumeration capped at n = " +
                               std::to_string(kInvSeqEnumerationCap));
    std::vector<InvSeq> out;
    for_each_inv_seq(n, [&](const std::vector<unsigned>& e) { out.push_back(InvSeq(e)); });
    return out;
}

// type of e: k = |e|_0, mu = the |e|_1..|e|_{n-1} sorted decreasingly
inline TypeKMu type_of_seq(const InvSeq& e) {
    unsigned n = e.size();
    std::vector<unsigned> counts(n, 0);
    for (unsigned v : e.e) ++counts[v];
    std::vector<unsigned> mu(counts.begin() + 1, counts.end());
    std::sort(mu.rbegin(), mu.rend());
    return TypeKMu(n, counts[0], Partition(std::move(mu)));
}

// psi: S_n -> I_n, e_i = #{j < i : pi(j) > pi(i)}
inline InvSeq psi(const std::vector<unsigned>& pi) {
    std::vector<unsigned> e(pi.size(), 0);
    for (std::size_t i = 0; i < pi.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (pi[j] > pi[i]) ++e[i];
    return InvSeq(std::move(e));
}

// s-inversion sequence: 0 <= e_i < s_i, with the conventions e_0 = 0, s_0 = 1.
struct SInvSeq {
    std::vector<unsigned> s;
    std::vector<unsigned> e;

    SInvSeq(std::vector<unsigned> s_, std::vector<unsigned> e_)
        : s(std::move(s_)), e(std::move(e_)) {
        if (s.size() != e.size()) throw invalid_input_error("SInvSeq: length mismatch");
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == 0) throw invalid_input_error("SInvSeq: s entries must be positive");
            if (e[i] >= s[i]) throw invalid_input_error("SInvSeq: entry out of range");
        }
    }
};

// asc(e) = #{i in 0..n-1 : e_i/s_i < e_{i+1}/s_{i+1}}, compared exactly
inline unsigned asc_s(const SInvSeq& seq) {
    unsigned n = static_cast<unsigned>(seq.e.size());
    unsigned count = 0;
    Rational prev(0);  // e_0/s_0
    for (unsigned i = 0; i < n; ++i) {
        Rational cur(BigInt(seq.e[i]), BigInt(seq.s[i]));
        if (prev < cur) ++count;
        prev = cur;
    }
    return count;
}

// sum of x^asc(e) over all s-inversion sequences for the given s
inline UniPoly s_ascent_poly(const std::vector<unsigned>& s) {
    std::vector<Rational> coeffs(s.size() + 1, Rational(0));
    std::vector<unsigned> e(s.size(), 0);
    while (true) {
        unsigned a = asc_s(SInvSeq(s, e));
        coeffs[a] += Rational(1);
        std::size_t i = e.size();
        bool done = true;
        while (i-- > 0) {
            if (e[i] + 1 < s[i]) {
                ++e[i];
                for (std::size_t j = i + 1; j < e.size(); ++j) e[j] = 0;
                done = false;
                break;
            }
        }
        if (done) break;
    }
    return UniPoly(std::move(coeffs));
}

}  // namespace gindex
