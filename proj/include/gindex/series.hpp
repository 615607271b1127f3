#pragma once

#include <string>
#include <vector>

#include "gindex/unipoly.hpp"

namespace gindex {

// Power series truncated at a fixed order N: coefficients of x^0 .. x^{N-1}.
// Ring operations require both operands to share the same order.
class TruncSeries {
public:
    explicit TruncSeries(unsigned order) : coeffs_(check_order(order), Rational(0)) {}

    TruncSeries(unsigned order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        check_order(order);
        coeffs_.resize(order, Rational(0));
    }

    static TruncSeries from_poly(const UniPoly& p, unsigned order) {
        TruncSeries s(order);
        for (unsigned i = 0; i < order; ++i) s.coeffs_[i] = p.coeff(i);
        return s;
    }

    static TruncSeries constant(const Rational& c, unsigned order) {
        TruncSeries s(order);
        s.coeffs_[0] = c;
        return s;
    }

    // 1 - x
    static TruncSeries one_minus_x(unsigned order) {
        TruncSeries s(order);
        s.coeffs_[0] = Rational(1);
        if (order >= 2) s.coeffs_[1] = Rational(-1);
        return s;
    }

    unsigned order() const { return static_cast<unsigned>(coeffs_.size()); }

    const Rational& coeff(unsigned i) const {
        if (i >= order()) throw invalid_input_error("TruncSeries: coefficient beyond order");
        return coeffs_[i];
    }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        match(a, b);
        TruncSeries r(a.order());
        for (unsigned i = 0; i < a.order(); ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
        return r;
    }

    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        match(a, b);
        TruncSeries r(a.order());
        for (unsigned i = 0; i < a.order(); ++i) r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
        return r;
    }

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        match(a, b);
        TruncSeries r(a.order());
        for (unsigned i = 0; i < a.order(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (unsigned j = 0; i + j < b.order(); ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return r;
    }

    friend TruncSeries operator*(const Rational& c, const TruncSeries& s) {
        TruncSeries r = s;
        for (auto& v : r.coeffs_) v *= c;
        return r;
    }

    TruncSeries& operator+=(const TruncSeries& o) { return *this = *this + o; }
    TruncSeries& operator-=(const TruncSeries& o) { return *this = *this - o; }
    TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) = default;

    // termwise derivative; the result is known one order less deep
    TruncSeries derivative() const {
        if (order() < 2) throw invalid_input_error("TruncSeries: derivative needs order >= 2");
        TruncSeries r(order() - 1);
        for (unsigned i = 1; i < order(); ++i)
            r.coeffs_[i - 1] = Rational(BigInt(static_cast<long long>(i))) * coeffs_[i];
        return r;
    }

    TruncSeries truncated(unsigned new_order) const {
        if (new_order > order())
            throw invalid_input_error("TruncSeries: cannot extend truncation order");
        TruncSeries r(new_order);
        for (unsigned i = 0; i < new_order; ++i) r.coeffs_[i] = coeffs_[i];
        return r;
    }

    // multiply by x, raising the order by one (no information is lost)
    TruncSeries shifted_up() const {
        TruncSeries r(order() + 1);
        for (unsigned i = 0; i < order(); ++i) r.coeffs_[i + 1] = coeffs_[i];
        return r;
    }

    // base^e for rational e via the Newton/binomial recurrence
    //   m r_m = sum_{i=1..m} (e*i - (m-i)) b_i r_{m-i}
    // requires constant term 1
    TruncSeries pow_rational(const Rational& exponent) const {
        if (coeffs_[0] != Rational(1))
            throw invalid_input_error("TruncSeries: pow_rational requires constant term 1");
        TruncSeries r(order());
        r.coeffs_[0] = Rational(1);
        for (unsigned m = 1; m < order(); ++m) {
            Rational acc(0);
            for (unsigned i = 1; i <= m; ++i) {
                if (coeffs_[i].is_zero()) continue;
                Rational w = exponent * Rational(static_cast<long long>(i)) -
                             Rational(static_cast<long long>(m - i));
                acc += w * coeffs_[i] * r.coeffs_[m - i];
            }
            r.coeffs_[m] = acc / Rational(static_cast<long long>(m));
        }
        return r;
    }

    std::string to_string() const {
        std::string out;
        UniPoly p{std::vector<Rational>(coeffs_)};
        out = p.to_string();
        out += " + O(x^" + std::to_string(order()) + ")";
        return out;
    }

private:
    std::vector<Rational> coeffs_;

    static unsigned check_order(unsigned order) {
        if (order == 0) throw invalid_input_error("TruncSeries: order must be positive");
        return order;
    }

    static void match(const TruncSeries& a, const TruncSeries& b) {
        if (a.order() != b.order())
            throw invalid_input_error("TruncSeries: operands must share the truncation order");
    }
};

inline TruncSeries series_pow_rational(const TruncSeries& base, const Rational& exponent) {
    return base.pow_rational(exponent);
}

// Applies the operator x*c(x)*d/dx to s. Because of the x factor the result is
// exact at the full order of s even though the derivative alone is not.
inline TruncSeries apply_x_c_ddx(const TruncSeries& c, const TruncSeries& s) {
    if (c.order() != s.order())
        throw invalid_input_error("apply_x_c_ddx: operands must share the truncation order");
    TruncSeries d = s.derivative();
    TruncSeries prod = c.truncated(s.order() - 1) * d;
    return prod.shifted_up();
}

}  // namespace gindex
