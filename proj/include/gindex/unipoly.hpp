#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "gindex/rational.hpp"

namespace gindex {

// Dense univariate polynomial over the rationals. Coefficients are indexed by
// the power of x and never store a trailing zero.
class UniPoly {
public:
    UniPoly() = default;

    explicit UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    UniPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

    static UniPoly constant(Rational c) { return UniPoly({std::move(c)}); }
    static UniPoly x() { return UniPoly({Rational(0), Rational(1)}); }

    // c * x^p
    static UniPoly monomial(Rational c, unsigned p) {
        std::vector<Rational> v(p + 1, Rational(0));
        v[p] = std::move(c);
        return UniPoly(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    Rational coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : Rational(0);
    }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<Rational> r(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return UniPoly(std::move(r));
    }

    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        std::vector<Rational> r(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
        return UniPoly(std::move(r));
    }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return UniPoly(std::move(r));
    }

    friend UniPoly operator*(const Rational& c, const UniPoly& p) {
        std::vector<Rational> r = p.coeffs_;
        for (auto& v : r) v *= c;
        return UniPoly(std::move(r));
    }

    UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
    UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

    UniPoly derivative() const {
        if (coeffs_.size() <= 1) return UniPoly();
        std::vector<Rational> r(coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            r[i - 1] = Rational(BigInt(static_cast<long long>(i))) * coeffs_[i];
        return UniPoly(std::move(r));
    }

    UniPoly pow(unsigned e) const {
        UniPoly r = constant(1), base = *this;
        while (e != 0) {
            if (e & 1u) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    Rational evaluate(const Rational& x) const {
        Rational r(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i];
        return r;
    }

    // x^n * p(1/x); requires deg p <= n
    UniPoly reversed(unsigned n) const {
        if (degree() > static_cast<int>(n))
            throw invalid_input_error("UniPoly: reversal order below degree");
        std::vector<Rational> r(n + 1, Rational(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) r[n - i] = coeffs_[i];
        return UniPoly(std::move(r));
    }

    // rendered with ascending powers, e.g. "x + 4x^2" or "1 + 6x + x^2"
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            const Rational& c = coeffs_[i];
            if (c.is_zero()) continue;
            Rational a = c;
            if (out.empty()) {
                if (a.is_negative()) {
                    out += "-";
                    a = -a;
                }
            } else {
                out += a.is_negative() ? " - " : " + ";
                if (a.is_negative()) a = -a;
            }
            bool unit = a == Rational(1);
            if (i == 0 || !unit) out += a.to_string();
            if (i >= 1) out += "x";
            if (i >= 2) out += "^" + std::to_string(i);
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const UniPoly& p) {
        return os << p.to_string();
    }

private:
    std::vector<Rational> coeffs_;

    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
};

}  // namespace gindex
