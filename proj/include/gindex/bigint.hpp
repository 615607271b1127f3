#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gindex {

class invalid_input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class size_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Arbitrary-precision signed integer, sign/magnitude with base-2^32 limbs.
// Magnitude is little-endian with no trailing zero limb; zero has sign 0 and
// an empty magnitude.
class BigInt {
public:
    BigInt() = default;

    BigInt(long long v) {
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        // avoid overflow on LLONG_MIN
        unsigned long long mag = v < 0 ? ~static_cast<unsigned long long>(v) + 1ULL
                                       : static_cast<unsigned long long>(v);
        while (mag != 0) {
            mag_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffULL));
            mag >>= 32;
        }
    }

    BigInt(int v) : BigInt(static_cast<long long>(v)) {}
    BigInt(unsigned v) : BigInt(static_cast<long long>(v)) {}

    explicit BigInt(const std::string& s) {
        std::size_t i = 0;
        bool neg = false;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
            neg = s[i] == '-';
            ++i;
        }
        if (i == s.size()) throw invalid_input_error("BigInt: empty numeral");
        for (; i < s.size();) {
            // consume up to 9 digits at a time
            std::uint32_t chunk = 0, scale = 1;
            std::size_t j = i;
            while (j < s.size() && j < i + 9) {
                char c = s[j];
                if (c < '0' || c > '9') throw invalid_input_error("BigInt: bad digit");
                chunk = chunk * 10 + static_cast<std::uint32_t>(c - '0');
                scale *= 10;
                ++j;
            }
            mul_small(scale);
            add_small(chunk);
            i = j;
        }
        sign_ = mag_.empty() ? 0 : (neg ? -1 : 1);
    }

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    int sign() const { return sign_; }

    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            int cmp = cmp_mag(a.mag_, b.mag_);
            if (cmp == 0) return BigInt();
            if (cmp > 0) {
                r.mag_ = sub_mag(a.mag_, b.mag_);
                r.sign_ = a.sign_;
            } else {
                r.mag_ = sub_mag(b.mag_, a.mag_);
                r.sign_ = b.sign_;
            }
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.sign_ = a.sign_ * b.sign_;
        r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
        for (std::size_t i = 0; i < a.mag_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.mag_.size(); ++j) {
                std::uint64_t cur = static_cast<std::uint64_t>(a.mag_[i]) * b.mag_[j] +
                                    r.mag_[i + j] + carry;
                r.mag_[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            std::size_t pos = i + b.mag_.size();
            while (carry != 0) {
                std::uint64_t cur = r.mag_[pos] + carry;
                r.mag_[pos] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
                ++pos;
            }
        }
        r.trim();
        return r;
    }

    // truncated division, remainder has the sign of the dividend (C semantics)
    friend void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.sign_ == 0) throw invalid_input_error("BigInt: division by zero");
        int cmp = cmp_mag(a.mag_, b.mag_);
        if (cmp < 0) {
            q = BigInt();
            r = a;
            return;
        }
        std::vector<std::uint32_t> qm, rm;
        divmod_mag(a.mag_, b.mag_, qm, rm);
        q.mag_ = std::move(qm);
        q.trim();
        q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
        r.mag_ = std::move(rm);
        r.trim();
        r.sign_ = r.mag_.empty() ? 0 : a.sign_;
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }

    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }
    BigInt& operator/=(const BigInt& o) { return *this = *this / o; }
    BigInt& operator%=(const BigInt& o) { return *this = *this % o; }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }

    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
        int c = cmp_mag(a.mag_, b.mag_) * a.sign_;
        return c <=> 0;
    }

    BigInt pow(unsigned e) const {
        BigInt base = *this, r = 1;
        while (e != 0) {
            if (e & 1u) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    bool fits_int64() const {
        if (mag_.size() > 2) return false;
        unsigned long long v = to_u64();
        if (sign_ >= 0) return v <= 0x7fffffffffffffffULL;
        return v <= 0x8000000000000000ULL;
    }

    long long to_int64() const {
        if (!fits_int64()) throw invalid_input_error("BigInt: does not fit in 64 bits");
        unsigned long long v = to_u64();
        return sign_ < 0 ? -static_cast<long long>(v - 1) - 1 : static_cast<long long>(v);
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::vector<std::uint32_t> tmp = mag_;
        std::string digits;
        while (!tmp.empty()) {
            std::uint64_t rem = 0;
            for (std::size_t i = tmp.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | tmp[i];
                tmp[i] = static_cast<std::uint32_t>(cur / 1000000000ULL);
                rem = cur % 1000000000ULL;
            }
            while (!tmp.empty() && tmp.back() == 0) tmp.pop_back();
            for (int d = 0; d < 9; ++d) {
                digits.push_back(static_cast<char>('0' + rem % 10));
                rem /= 10;
            }
        }
        while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
        if (sign_ < 0) digits.push_back('-');
        std::reverse(digits.begin(), digits.end());
        return digits;
    }

    friend std::ostream& operator<<(std::ostream& os, const BigInt& v) {
        return os << v.to_string();
    }

private:
    int sign_ = 0;
    std::vector<std::uint32_t> mag_;

    unsigned long long to_u64() const {
        unsigned long long v = 0;
        if (mag_.size() > 1) v = static_cast<unsigned long long>(mag_[1]) << 32;
        if (!mag_.empty()) v |= mag_[0];
        return v;
    }

    void trim() {
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
        if (mag_.empty()) sign_ = 0;
    }

    void mul_small(std::uint32_t m) {
        std::uint64_t carry = 0;
        for (auto& limb : mag_) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) * m + carry;
            limb = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry != 0) mag_.push_back(static_cast<std::uint32_t>(carry));
    }

    void add_small(std::uint32_t a) {
        std::uint64_t carry = a;
        for (std::size_t i = 0; carry != 0 && i < mag_.size(); ++i) {
            std::uint64_t cur = mag_[i] + carry;
            mag_[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry != 0) mag_.push_back(static_cast<std::uint32_t>(carry));
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<std::uint32_t> r = big;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < small.size(); ++i) {
            std::uint64_t cur = static_cast<std::uint64_t>(r[i]) + small[i] + carry;
            r[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        for (std::size_t i = small.size(); carry != 0 && i < r.size(); ++i) {
            std::uint64_t cur = r[i] + carry;
            r[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry != 0) r.push_back(static_cast<std::uint32_t>(carry));
        return r;
    }

    // requires a >= b
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r = a;
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(r[i]) - borrow -
                               (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            borrow = cur < 0 ? 1 : 0;
            if (cur < 0) cur += 0x100000000LL;
            r[i] = static_cast<std::uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // Knuth algorithm D on magnitudes; requires |a| >= |b| > 0
    static void divmod_mag(std::vector<std::uint32_t> u, std::vector<std::uint32_t> v,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
        const std::uint64_t base = 1ULL << 32;
        if (v.size() == 1) {
            std::uint32_t d = v[0];
            q.assign(u.size(), 0);
            std::uint64_t rem = 0;
            for (std::size_t i = u.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | u[i];
                q[i] = static_cast<std::uint32_t>(cur / d);
                rem = cur % d;
            }
            r.clear();
            if (rem != 0) r.push_back(static_cast<std::uint32_t>(rem));
            return;
        }
        const std::size_t n = v.size(), m = u.size() - n;
        int shift = 0;
        while (((v.back() << shift) & 0x80000000u) == 0) ++shift;
        auto shl = [&](const std::vector<std::uint32_t>& x) {
            std::vector<std::uint32_t> y(x.size() + 1, 0);
            for (std::size_t i = 0; i < x.size(); ++i) {
                y[i] |= shift == 0 ? x[i] : (x[i] << shift);
                if (shift != 0) y[i + 1] = x[i] >> (32 - shift);
            }
            return y;
        };
        std::vector<std::uint32_t> un = shl(u);
        std::vector<std::uint32_t> vn = shl(v);
        vn.resize(n);
        q.assign(m + 1, 0);
        for (std::size_t j = m + 1; j-- > 0;) {
            std::uint64_t num = (static_cast<std::uint64_t>(un[j + n]) << 32) | un[j + n - 1];
            std::uint64_t qhat = num / vn[n - 1];
            std::uint64_t rhat = num % vn[n - 1];
            while (qhat >= base ||
                   qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
                --qhat;
                rhat += vn[n - 1];
                if (rhat >= base) break;
            }
            // multiply and subtract
            std::int64_t borrow = 0;
            std::uint64_t carry = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t p = qhat * vn[i] + carry;
                carry = p >> 32;
                std::int64_t t = static_cast<std::int64_t>(un[i + j]) -
                                 static_cast<std::int64_t>(p & 0xffffffffULL) - borrow;
                borrow = t < 0 ? 1 : 0;
                if (t < 0) t += static_cast<std::int64_t>(base);
                un[i + j] = static_cast<std::uint32_t>(t);
            }
            std::int64_t t = static_cast<std::int64_t>(un[j + n]) -
                             static_cast<std::int64_t>(carry) - borrow;
            if (t < 0) {
                // qhat was one too large; add back
                un[j + n] = static_cast<std::uint32_t>(t + static_cast<std::int64_t>(base));
                --qhat;
                std::uint64_t c = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    std::uint64_t cur = static_cast<std::uint64_t>(un[i + j]) + vn[i] + c;
                    un[i + j] = static_cast<std::uint32_t>(cur);
                    c = cur >> 32;
                }
                un[j + n] = static_cast<std::uint32_t>(un[j + n] + c);
            } else {
                un[j + n] = static_cast<std::uint32_t>(t);
            }
            q[j] = static_cast<std::uint32_t>(qhat);
        }
        // denormalize remainder
        r.assign(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (shift == 0)
                r[i] = un[i];
            else
                r[i] = static_cast<std::uint32_t>((un[i] >> shift) |
                       (static_cast<std::uint64_t>(un[i + 1]) << (32 - shift)));
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
};

inline BigInt gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= BigInt(i);
    return r;
}

// (2n-1)!! = 1*3*5*...*(2n-1)
inline BigInt double_factorial_odd(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 1; i <= n; ++i) r *= BigInt(2 * i - 1);
    return r;
}

inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= BigInt(n - i);
        r /= BigInt(i + 1);
    }
    return r;
}

}  // namespace gindex
