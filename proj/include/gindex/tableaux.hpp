#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "gindex/partitions.hpp"

namespace gindex {

// Standard Young tableau. Rows are indexed from the bottom (row 0 is the
// longest), rows increase left to right, columns increase bottom to top.
class Tableau {
public:
    Tableau(Partition shape, std::vector<std::vector<unsigned>> rows)
        : shape_(std::move(shape)), rows_(std::move(rows)) {
        validate();
    }

    explicit Tableau(std::vector<std::vector<unsigned>> rows)
        : shape_(shape_of(rows)), rows_(std::move(rows)) {
        validate();
    }

    unsigned size() const { return shape_.weight(); }
    const Partition& shape() const { return shape_; }
    const std::vector<std::vector<unsigned>>& rows() const { return rows_; }

    // (row, column), 0-based
    std::pair<unsigned, unsigned> position(unsigned letter) const {
        for (unsigned r = 0; r < rows_.size(); ++r)
            for (unsigned c = 0; c < rows_[r].size(); ++c)
                if (rows_[r][c] == letter) return {r, c};
        throw invalid_input_error("Tableau: letter not present");
    }

    // sub-tableau on the letters <= v
    Tableau restricted(unsigned v) const {
        std::vector<std::vector<unsigned>> rows;
        for (const auto& row : rows_) {
            std::vector<unsigned> pre;
            for (unsigned x : row) {
                if (x > v) break;
                pre.push_back(x);
            }
            if (pre.empty()) break;
            rows.push_back(std::move(pre));
        }
        return Tableau(std::move(rows));
    }

    std::vector<unsigned> row_reading_word() const {
        std::vector<unsigned> w;
        for (const auto& row : rows_) w.insert(w.end(), row.begin(), row.end());
        return w;
    }

    friend bool operator==(const Tableau& a, const Tableau& b) = default;

private:
    Partition shape_;
    std::vector<std::vector<unsigned>> rows_;

    static Partition shape_of(const std::vector<std::vector<unsigned>>& rows) {
        std::vector<unsigned> parts;
        for (const auto& row : rows) parts.push_back(static_cast<unsigned>(row.size()));
        return Partition(std::move(parts));
    }

    void validate() const {
        unsigned n = shape_.weight();
        if (rows_.size() != shape_.length())
            throw invalid_input_error("Tableau: row count does not match shape");
        std::vector<bool> seen(n + 1, false);
        for (unsigned r = 0; r < rows_.size(); ++r) {
            if (rows_[r].size() != shape_.part(r))
                throw invalid_input_error("Tableau: row length does not match shape");
            for (unsigned c = 0; c < rows_[r].size(); ++c) {
                unsigned x = rows_[r][c];
                if (x < 1 || x > n || seen[x])
                    throw invalid_input_error("Tableau: letters must be a permutation of [n]");
                seen[x] = true;
                if (c > 0 && rows_[r][c - 1] >= x)
                    throw invalid_input_error("Tableau: rows must increase left to right");
                if (r > 0 && rows_[r - 1][c] >= x)
                    throw invalid_input_error("Tableau: columns must increase bottom to top");
            }
        }
    }
};

// k-Young tableau: an increasing bottom row of k letters starting with 1,
// plus a Young-tableau filling of the Ferrers diagram of mu on top. There is
// no order constraint between the bottom row and the top.
class KTableau {
public:
    KTableau(TypeKMu type, std::vector<unsigned> bottom,
             std::vector<std::vector<unsigned>> top_rows)
        : type_(std::move(type)), bottom_(std::move(bottom)), top_rows_(std::move(top_rows)) {
        validate();
    }

    unsigned size() const { return type_.n; }
    const TypeKMu& type() const { return type_; }
    unsigned k() const { return type_.k; }
    const Partition& mu() const { return type_.mu; }
    const std::vector<unsigned>& bottom() const { return bottom_; }
    const std::vector<std::vector<unsigned>>& top_rows() const { return top_rows_; }

    bool in_bottom(unsigned letter) const {
        return std::find(bottom_.begin(), bottom_.end(), letter) != bottom_.end();
    }

    // (row, column) within the top tableau, 0-based
    std::pair<unsigned, unsigned> top_position(unsigned letter) const {
        for (unsigned r = 0; r < top_rows_.size(); ++r)
            for (unsigned c = 0; c < top_rows_[r].size(); ++c)
                if (top_rows_[r][c] == letter) return {r, c};
        throw invalid_input_error("KTableau: letter not in the top tableau");
    }

    // sub-tableau on the letters <= v, a k'-Young tableau of size v
    KTableau restricted(unsigned v) const {
        std::vector<unsigned> bottom;
        for (unsigned x : bottom_) {
            if (x > v) break;
            bottom.push_back(x);
        }
        std::vector<std::vector<unsigned>> rows;
        std::vector<unsigned> parts;
        for (const auto& row : top_rows_) {
            std::vector<unsigned> pre;
            for (unsigned x : row) {
                if (x > v) break;
                pre.push_back(x);
            }
            if (pre.empty()) break;
            parts.push_back(static_cast<unsigned>(pre.size()));
            rows.push_back(std::move(pre));
        }
        TypeKMu t(v, static_cast<unsigned>(bottom.size()), Partition(std::move(parts)));
        return KTableau(std::move(t), std::move(bottom), std::move(rows));
    }

    std::vector<unsigned> row_reading_word() const {
        std::vector<unsigned> w = bottom_;
        for (const auto& row : top_rows_) w.insert(w.end(), row.begin(), row.end());
        return w;
    }

    friend bool operator==(const KTableau& a, const KTableau& b) = default;

private:
    TypeKMu type_;
    std::vector<unsigned> bottom_;
    std::vector<std::vector<unsigned>> top_rows_;

    void validate() const {
        unsigned n = type_.n;
        if (bottom_.size() != type_.k)
            throw invalid_input_error("KTableau: bottom row length must be k");
        if (bottom_.empty() || bottom_[0] != 1)
            throw invalid_input_error("KTableau: bottom row must start with 1");
        for (std::size_t i = 0; i + 1 < bottom_.size(); ++i)
            if (bottom_[i] >= bottom_[i + 1])
                throw invalid_input_error("KTableau: bottom row must increase");
        if (top_rows_.size() != type_.mu.length())
            throw invalid_input_error("KTableau: top row count does not match mu");
        std::vector<bool> seen(n + 1, false);
        auto mark = [&](unsigned x) {
            if (x < 1 || x > n || seen[x])
                throw invalid_input_error("KTableau: letters must be a permutation of [n]");
            seen[x] = true;
        };
        for (unsigned x : bottom_) mark(x);
        for (unsigned r = 0; r < top_rows_.size(); ++r) {
            if (top_rows_[r].size() != type_.mu.part(r))
                throw invalid_input_error("KTableau: top row length does not match mu");
            for (unsigned c = 0; c < top_rows_[r].size(); ++c) {
                unsigned x = top_rows_[r][c];
                mark(x);
                if (c > 0 && top_rows_[r][c - 1] >= x)
                    throw invalid_input_error("KTableau: top rows must increase");
                if (r > 0 && top_rows_[r - 1][c] >= x)
                    throw invalid_input_error("KTableau: top columns must increase");
            }
        }
    }
};

namespace detail {

// All standard fillings of `shape` with the letters 1..n, as flat row lists.
inline void enumerate_syt_fillings(const Partition& shape,
                                   std::vector<std::vector<std::vector<unsigned>>>& out) {
    unsigned n = shape.weight();
    std::vector<std::vector<unsigned>> rows(shape.length());
    auto rec = [&](auto&& self, unsigned next) -> void {
        if (next > n) {
            out.push_back(rows);
            return;
        }
        for (unsigned r = 0; r < shape.length(); ++r) {
            unsigned len = static_cast<unsigned>(rows[r].size());
            if (len >= shape.part(r)) continue;
            if (r > 0 && rows[r - 1].size() <= len) continue;
            rows[r].push_back(next);
            self(self, next + 1);
            rows[r].pop_back();
        }
    };
    rec(rec, 1);
}

}  // namespace detail

// All SYT of the given shape, fillings in row-reading lexicographic order.
inline std::vector<Tableau> syt_of_shape(const Partition& shape) {
    std::vector<std::vector<std::vector<unsigned>>> fillings;
    detail::enumerate_syt_fillings(shape, fillings);
    std::sort(fillings.begin(), fillings.end());
    std::vector<Tableau> out;
    out.reserve(fillings.size());
    for (auto& f : fillings) out.emplace_back(shape, std::move(f));
    return out;
}

// All SYT of size n: shapes in reverse-lexicographic order.
inline std::vector<Tableau> syt_all(unsigned n) {
    std::vector<Tableau> out;
    for (const auto& shape : partitions_of(n))
        for (auto& t : syt_of_shape(shape)) out.push_back(std::move(t));
    return out;
}

// All k-Young tableaux of the given type: bottom letter sets in lexicographic
// order, then top fillings in row-reading lexicographic order.
inline std::vector<KTableau> ktableaux_of(const TypeKMu& type) {
    unsigned n = type.n, k = type.k;
    std::vector<std::vector<std::vector<unsigned>>> rank_fillings;
    detail::enumerate_syt_fillings(type.mu, rank_fillings);
    std::sort(rank_fillings.begin(), rank_fillings.end());

    std::vector<KTableau> out;
    std::vector<unsigned> bottom{1};
    auto rec = [&](auto&& self, unsigned next) -> void {
        if (bottom.size() == k) {
            std::vector<unsigned> rest;
            std::vector<bool> used(n + 1, false);
            for (unsigned b : bottom) used[b] = true;
            for (unsigned x = 1; x <= n; ++x)
                if (!used[x]) rest.push_back(x);
            for (const auto& ranks : rank_fillings) {
                std::vector<std::vector<unsigned>> rows = ranks;
                for (auto& row : rows)
                    for (auto& x : row) x = rest[x - 1];
                out.emplace_back(type, bottom, std::move(rows));
            }
            return;
        }
        for (unsigned x = next; x <= n; ++x) {
            bottom.push_back(x);
            self(self, x + 1);
            bottom.pop_back();
        }
    };
    rec(rec, 2);
    return out;
}

// Per-letter g-indexes of a tableau together with their product.
struct GIndexVector {
    std::vector<unsigned> g;  // g[v-1] is the index of letter v

    BigInt product() const {
        BigInt r = 1;
        for (unsigned v : g) r *= BigInt(v);
        return r;
    }
};

// Shape of the restriction of t to the letters <= v.
inline Partition restriction_shape(const Tableau& t, unsigned v) {
    std::vector<unsigned> parts;
    for (const auto& row : t.rows()) {
        unsigned len = 0;
        for (unsigned x : row)
            if (x <= v) ++len;
        if (len == 0) break;
        parts.push_back(len);
    }
    return Partition(std::move(parts));
}

// Top shape of the restriction of z to the letters <= v.
inline Partition restriction_top_shape(const KTableau& z, unsigned v) {
    std::vector<unsigned> parts;
    for (const auto& row : z.top_rows()) {
        unsigned len = 0;
        for (unsigned x : row)
            if (x <= v) ++len;
        if (len == 0) break;
        parts.push_back(len);
    }
    return Partition(std::move(parts));
}

// g-index of a standard Young tableau. For letter v in column j of its
// restriction to [v], with lambda(v) the restricted shape padded to v slots,
//   g(v) = 1 + #{slots of lambda(v) equal to j-1}.
inline GIndexVector g_index(const Tableau& t) {
    unsigned n = t.size();
    GIndexVector out;
    out.g.assign(n, 1);
    std::vector<unsigned> len(t.rows().size(), 0);  // restricted row lengths
    unsigned nonzero_rows = 0;
    for (unsigned v = 1; v <= n; ++v) {
        auto [r, c] = t.position(v);
        if (len[r] == 0) ++nonzero_rows;
        ++len[r];
        unsigned j = c + 1;
        unsigned count = 0;
        if (j == 1) {
            count = v - nonzero_rows;  // zero-valued padding slots
        } else {
            for (unsigned rr = 0; rr < len.size(); ++rr)
                if (len[rr] == j - 1) ++count;
        }
        out.g[v - 1] = 1 + count;
    }
    return out;
}

// g-index of a k-Young tableau. Bottom letters have g(v) = 1; a top letter in
// column j of the restriction counts the slots of the restricted top shape
// (padded to v-1) that equal j-1, plus one.
inline GIndexVector g_index_k(const KTableau& z) {
    unsigned n = z.size();
    GIndexVector out;
    out.g.assign(n, 1);
    std::vector<unsigned> len(z.top_rows().size(), 0);
    unsigned nonzero_rows = 0;
    unsigned bottom_seen = 0;
    for (unsigned v = 1; v <= n; ++v) {
        if (z.in_bottom(v)) {
            ++bottom_seen;
            continue;
        }
        auto [r, c] = z.top_position(v);
        if (len[r] == 0) ++nonzero_rows;
        ++len[r];
        unsigned j = c + 1;
        unsigned count = 0;
        if (j == 1) {
            count = (v - 1) - nonzero_rows;
        } else {
            for (unsigned rr = 0; rr < len.size(); ++rr)
                if (len[rr] == j - 1) ++count;
        }
        out.g[v - 1] = 1 + count;
    }
    return out;
}

inline BigInt g_product(const Tableau& t) { return g_index(t).product(); }
inline BigInt g_product(const KTableau& z) { return g_index_k(z).product(); }

// Sum of G_Z over all k-Young tableaux of the given type.
inline BigInt g_sum_over_type(const TypeKMu& type) {
    BigInt sum = 0;
    for (const auto& z : ktableaux_of(type)) sum += g_product(z);
    return sum;
}

// rho: sort the letters of each column (the bottom box belongs to its column)
// to obtain a standard Young tableau.
inline Tableau rho(const KTableau& z) {
    unsigned width = std::max(z.k(), z.mu().part(0));
    Partition conj = z.mu().conjugate();
    std::vector<std::vector<unsigned>> cols(width);
    for (unsigned j = 0; j < width; ++j) {
        if (j < z.k()) cols[j].push_back(z.bottom()[j]);
        for (unsigned r = 0; r < conj.part(j); ++r) cols[j].push_back(z.top_rows()[r][j]);
        std::sort(cols[j].begin(), cols[j].end());
    }
    std::vector<std::vector<unsigned>> rows;
    for (unsigned r = 0;; ++r) {
        std::vector<unsigned> row;
        for (unsigned j = 0; j < width && r < cols[j].size(); ++j) row.push_back(cols[j][r]);
        if (row.empty()) break;
        rows.push_back(std::move(row));
    }
    return Tableau(std::move(rows));
}

// rho^{-1}(T): every k-Young tableau whose column letter sets match T's,
// found by exhaustively redistributing each column between one bottom box
// (columns 1..k only) and the sorted top boxes.
inline std::vector<KTableau> rho_fiber(const Tableau& t) {
    unsigned n = t.size();
    Partition heights = t.shape().conjugate();
    unsigned width = t.shape().part(0);
    std::vector<std::vector<unsigned>> cols(width);
    for (unsigned j = 0; j < width; ++j)
        for (unsigned r = 0; r < heights.part(j); ++r) cols[j].push_back(t.rows()[r][j]);

    std::vector<KTableau> out;
    for (unsigned k = 1; k <= width; ++k) {
        if (k < width && heights.part(k - 1) <= heights.part(k)) continue;
        std::vector<unsigned> bottom(k, 0);
        auto rec = [&](auto&& self, unsigned j) -> void {
            if (j == k) {
                std::vector<std::vector<unsigned>> top_cols(width);
                for (unsigned jj = 0; jj < width; ++jj) {
                    for (unsigned x : cols[jj])
                        if (jj >= k || x != bottom[jj]) top_cols[jj].push_back(x);
                }
                std::vector<std::vector<unsigned>> rows;
                std::vector<unsigned> parts;
                for (unsigned r = 0;; ++r) {
                    std::vector<unsigned> row;
                    for (unsigned jj = 0; jj < width && r < top_cols[jj].size(); ++jj)
                        row.push_back(top_cols[jj][r]);
                    if (row.empty()) break;
                    for (std::size_t c = 0; c + 1 < row.size(); ++c)
                        if (row[c] >= row[c + 1]) return;  // top rows must increase
                    parts.push_back(static_cast<unsigned>(row.size()));
                    rows.push_back(std::move(row));
                }
                TypeKMu type(n, k, Partition(std::move(parts)));
                out.emplace_back(std::move(type), bottom, std::move(rows));
                return;
            }
            for (unsigned x : cols[j]) {
                if (j == 0 && x != 1) continue;
                if (j > 0 && x <= bottom[j - 1]) continue;
                bottom[j] = x;
                self(self, j + 1);
            }
        };
        rec(rec, 0);
    }
    return out;
}

// The four-way split of rho^{-1}(T) behind the fiber identity,
// classified by the position of the maximal letter n. beta is the length of
// the top row containing n.
struct GammaDecomposition {
    std::vector<KTableau> gamma1;  // n in the top, k == beta - 1
    std::vector<KTableau> gamma2;  // n at the end of the bottom row, k-1 in mu
    std::vector<KTableau> gamma3;  // n in the top, k != beta - 1
    std::vector<KTableau> gamma4;  // n at the end of the bottom row, k-1 not in mu
};

inline GammaDecomposition gamma_decompose_fiber(const Tableau& t) {
    GammaDecomposition out;
    unsigned n = t.size();
    for (auto& z : rho_fiber(t)) {
        if (z.in_bottom(n)) {
            bool has = z.k() >= 2 && z.mu().multiplicity(z.k() - 1) > 0;
            (has ? out.gamma2 : out.gamma4).push_back(std::move(z));
        } else {
            auto [r, c] = z.top_position(n);
            unsigned beta = z.mu().part(r);
            (z.k() == beta - 1 ? out.gamma1 : out.gamma3).push_back(std::move(z));
        }
    }
    return out;
}

}  // namespace gindex
