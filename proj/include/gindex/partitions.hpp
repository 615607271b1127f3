#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <string>
#include <vector>

#include "gindex/bigint.hpp"

namespace gindex {

// Integer partition: weakly decreasing positive parts. Trailing zeros in the
// input are stripped; the various padded views are computed on demand.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
            if (parts_[i] < parts_[i + 1])
                throw invalid_input_error("Partition: parts must be weakly decreasing");
        for (unsigned p : parts_)
            if (p == 0) throw invalid_input_error("Partition: interior zero part");
    }

    const std::vector<unsigned>& parts() const { return parts_; }
    unsigned length() const { return static_cast<unsigned>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    unsigned weight() const {
        return std::accumulate(parts_.begin(), parts_.end(), 0u);
    }

    unsigned part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    // number of parts equal to i (i >= 1)
    unsigned multiplicity(unsigned i) const {
        return static_cast<unsigned>(std::count(parts_.begin(), parts_.end(), i));
    }

    Partition conjugate() const {
        if (parts_.empty()) return Partition();
        std::vector<unsigned> c(parts_[0], 0);
        for (unsigned p : parts_)
            for (unsigned j = 0; j < p; ++j) ++c[j];
        return Partition(std::move(c));
    }

    // product of factorials of the parts
    BigInt parts_factorial() const {
        BigInt r = 1;
        for (unsigned p : parts_) r *= factorial(p);
        return r;
    }

    friend bool operator==(const Partition& a, const Partition& b) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

    std::string to_string() const {
        std::string out = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(parts_[i]);
        }
        return out + ")";
    }

private:
    std::vector<unsigned> parts_;
};

// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ..., (1^n).
inline std::vector<Partition> partitions_of(unsigned n) {
    std::vector<Partition> out;
    std::vector<unsigned> cur;
    auto rec = [&](auto&& self, unsigned rest, unsigned max_part) -> void {
        if (rest == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (unsigned p = std::min(rest, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    return out;
}

// The type (k, mu) of n: k in [1..n] together with a partition mu of n-k,
// conceptually padded with zeros to n-1 slots.
struct TypeKMu {
    unsigned n = 0;
    unsigned k = 0;
    Partition mu;

    TypeKMu() = default;

    TypeKMu(unsigned n_, unsigned k_, Partition mu_) : n(n_), k(k_), mu(std::move(mu_)) {
        if (k < 1 || k > n) throw invalid_input_error("TypeKMu: k out of range");
        if (k + mu.weight() != n) throw invalid_input_error("TypeKMu: k + |mu| != n");
        if (mu.length() + 1 > n) throw invalid_input_error("TypeKMu: mu has too many parts");
    }

    unsigned padded_slots() const { return n - 1; }

    // |mu|_j: multiplicity of j among the n-1 padded slots (zeros included)
    unsigned slot_multiplicity(unsigned j) const {
        if (j == 0) return padded_slots() - mu.length();
        return mu.multiplicity(j);
    }

    friend bool operator==(const TypeKMu& a, const TypeKMu& b) = default;
    friend auto operator<=>(const TypeKMu& a, const TypeKMu& b) {
        if (auto c = a.n <=> b.n; c != 0) return c;
        if (auto c = a.k <=> b.k; c != 0) return c;
        return a.mu <=> b.mu;
    }

    std::string to_string() const { return "(" + std::to_string(k) + "," + mu.to_string() + ")"; }
};

// All types of n, with k descending and mu in reverse-lexicographic order.
inline std::vector<TypeKMu> types_of(unsigned n) {
    if (n < 1) throw invalid_input_error("types_of: n must be positive");
    std::vector<TypeKMu> out;
    for (unsigned k = n; k >= 1; --k)
        for (auto& mu : partitions_of(n - k)) out.emplace_back(n, k, mu);
    return out;
}

}  // namespace gindex
