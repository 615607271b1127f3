#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gindex/partitions.hpp"
#include "gindex/series.hpp"

namespace gindex {

// Monomial c^{c0} * c_{mu_1} c_{mu_2} ... * f_k with the convention c_0 = c,
// f_k = D^k f. The derivative orders mu are kept weakly decreasing; the
// integer coefficient lives in the enclosing DiffPolynomial.
//
// Ordering sorts by f-index first, then mu lexicographically; within a slice
// this reproduces the layout of the (cD)^n f tables.
struct DiffMonomial {
    unsigned f_index = 0;
    unsigned c0 = 0;
    std::vector<unsigned> mu;  // derivative orders >= 1, weakly decreasing

    DiffMonomial() = default;

    DiffMonomial(unsigned f_index_, unsigned c0_, std::vector<unsigned> mu_)
        : f_index(f_index_), c0(c0_), mu(std::move(mu_)) {
        for (std::size_t i = 0; i < mu.size(); ++i) {
            if (mu[i] == 0) throw invalid_input_error("DiffMonomial: zero derivative order");
            if (i > 0 && mu[i] > mu[i - 1])
                throw invalid_input_error("DiffMonomial: orders must be weakly decreasing");
        }
    }

    // total degree in the c-symbols, counting c itself
    unsigned c_degree() const { return c0 + static_cast<unsigned>(mu.size()); }

    // sum of the derivative orders
    unsigned weighted_degree() const {
        unsigned s = 0;
        for (unsigned v : mu) s += v;
        return s;
    }

    friend bool operator==(const DiffMonomial& a, const DiffMonomial& b) = default;

    friend bool operator<(const DiffMonomial& a, const DiffMonomial& b) {
        if (a.f_index != b.f_index) return a.f_index < b.f_index;
        if (a.mu != b.mu) return a.mu < b.mu;
        return a.c0 < b.c0;
    }
};

// Integer combination of DiffMonomials, canonical: unique keys, no zeros.
class DiffPolynomial {
public:
    using Terms = std::map<DiffMonomial, BigInt>;

    DiffPolynomial() = default;

    static DiffPolynomial f_symbol(unsigned k) {
        DiffPolynomial p;
        p.terms_[DiffMonomial(k, 0, {})] = 1;
        return p;
    }

    static DiffPolynomial monomial(DiffMonomial m, BigInt coeff) {
        DiffPolynomial p;
        if (!coeff.is_zero()) p.terms_[std::move(m)] = std::move(coeff);
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const DiffMonomial& m, const BigInt& coeff) {
        if (coeff.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    BigInt coeff(const DiffMonomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    friend DiffPolynomial operator+(const DiffPolynomial& a, const DiffPolynomial& b) {
        DiffPolynomial r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }

    friend DiffPolynomial operator-(const DiffPolynomial& a, const DiffPolynomial& b) {
        DiffPolynomial r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }

    friend DiffPolynomial operator*(const BigInt& c, const DiffPolynomial& p) {
        DiffPolynomial r;
        if (c.is_zero()) return r;
        for (const auto& [m, q] : p.terms_) r.terms_[m] = c * q;
        return r;
    }

    DiffPolynomial& operator+=(const DiffPolynomial& o) { return *this = *this + o; }
    DiffPolynomial& operator-=(const DiffPolynomial& o) { return *this = *this - o; }

    friend bool operator==(const DiffPolynomial& a, const DiffPolynomial& b) = default;

    // the sub-sum of terms multiplying f_k (returned still carrying f_k)
    DiffPolynomial slice(unsigned k) const {
        DiffPolynomial r;
        for (const auto& [m, c] : terms_)
            if (m.f_index == k) r.terms_[m] = c;
        return r;
    }

    std::vector<unsigned> f_indices() const {
        std::vector<unsigned> out;
        for (const auto& [m, c] : terms_)
            if (out.empty() || out.back() != m.f_index) out.push_back(m.f_index);
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const DiffPolynomial& p);

private:
    Terms terms_;
};

// c * D(p), where D acts by the Leibniz rule with D(c_i) = c_{i+1} and
// D(f_k) = f_{k+1}.
inline DiffPolynomial diffpoly_apply_cD(const DiffPolynomial& p) {
    DiffPolynomial out;
    for (const auto& [m, q] : p.terms()) {
        if (m.c0 > 0) {
            // differentiate one factor c, then multiply by c: the net effect
            // keeps c0 and inserts a c_1
            std::vector<unsigned> mu = m.mu;
            mu.push_back(1);
            out.add_term(DiffMonomial(m.f_index, m.c0, std::move(mu)), q * BigInt(m.c0));
        }
        for (std::size_t i = 0; i < m.mu.size(); ++i) {
            if (i + 1 < m.mu.size() && m.mu[i + 1] == m.mu[i]) continue;  // last copy only
            unsigned mult = 1;
            for (std::size_t j = 0; j < i; ++j)
                if (m.mu[j] == m.mu[i]) ++mult;
            std::vector<unsigned> mu = m.mu;
            ++mu[i];
            std::sort(mu.rbegin(), mu.rend());
            out.add_term(DiffMonomial(m.f_index, m.c0 + 1, std::move(mu)), q * BigInt(mult));
        }
        out.add_term(DiffMonomial(m.f_index + 1, m.c0 + 1, m.mu), q);
    }
    return out;
}

// Substitutes concrete series for the symbols: c_family(i) stands for c_i
// (i = 0 is c itself) and f_family(k) for f_k. All series must share one
// truncation order.
inline TruncSeries substitute(const DiffPolynomial& p,
                              const std::function<TruncSeries(unsigned)>& c_family,
                              const std::function<TruncSeries(unsigned)>& f_family,
                              unsigned order) {
    TruncSeries acc(order);
    for (const auto& [m, q] : p.terms()) {
        TruncSeries term = TruncSeries::constant(Rational(q), order);
        if (m.c0 > 0) {
            TruncSeries c0 = c_family(0);
            for (unsigned i = 0; i < m.c0; ++i) term *= c0;
        }
        for (unsigned v : m.mu) term *= c_family(v);
        term *= f_family(m.f_index);
        acc += term;
    }
    return acc;
}

namespace detail {

inline std::string power_string(const std::string& base, unsigned e, bool latex) {
    if (e == 0) return "";
    std::string out = base;
    if (e > 1) {
        if (latex && e >= 10)
            out += "^{" + std::to_string(e) + "}";
        else
            out += "^" + std::to_string(e);
    }
    return out;
}

inline std::string c_symbol(unsigned order, bool latex) {
    if (order == 0) return "c";
    if (latex && order >= 10) return "c_{" + std::to_string(order) + "}";
    return latex ? "c_" + std::to_string(order) : "c" + std::to_string(order);
}

inline std::string monomial_string(const DiffMonomial& m, const BigInt& coeff, bool latex) {
    std::vector<std::string> factors;
    if (!(coeff == BigInt(1))) factors.push_back(coeff.to_string());
    if (m.c0 > 0) factors.push_back(power_string(c_symbol(0, latex), m.c0, latex));
    // mu is stored descending; the table layout wants ascending orders
    for (std::size_t end = m.mu.size(); end > 0;) {
        std::size_t begin = end;
        while (begin > 0 && m.mu[begin - 1] == m.mu[end - 1]) --begin;
        factors.push_back(power_string(c_symbol(m.mu[end - 1], latex),
                                       static_cast<unsigned>(end - begin), latex));
        end = begin;
    }
    if (factors.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += " ";
        out += factors[i];
    }
    return out;
}

inline std::string f_symbol_string(unsigned k, bool latex) {
    if (latex) return "\\mathbf{f}_" + (k >= 10 ? "{" + std::to_string(k) + "}" : std::to_string(k));
    return "f" + std::to_string(k);
}

}  // namespace detail

// "(c c1^2 + c^2 c2) f1 + (3 c^2 c1) f2 + (c^3) f3"
inline std::string diffpoly_to_string(const DiffPolynomial& p, bool latex = false) {
    if (p.is_zero()) return "0";
    std::string out;
    for (unsigned k : p.f_indices()) {
        if (!out.empty()) out += " + ";
        out += "(";
        bool first = true;
        for (const auto& [m, c] : p.terms()) {
            if (m.f_index != k) continue;
            if (!first) out += " + ";
            out += detail::monomial_string(m, c, latex);
            first = false;
        }
        out += ") " + detail::f_symbol_string(k, latex);
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const DiffPolynomial& p) {
    return os << diffpoly_to_string(p);
}

}  // namespace gindex
