#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gindex/diffpoly.hpp"
#include "gindex/expansion.hpp"
#include "gindex/grammars.hpp"
#include "gindex/inversions.hpp"
#include "gindex/tableaux.hpp"
#include "gindex/unipoly.hpp"

namespace gindex {

using ordered_json = nlohmann::ordered_json;

// Integers are emitted as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise.
inline ordered_json json_int(const BigInt& v) {
    if (v.fits_int64()) return v.to_int64();
    return v.to_string();
}

inline ordered_json json_rational(const Rational& v) {
    if (v.is_integer()) return json_int(v.num());
    return v.to_string();
}

inline ordered_json to_json(const Partition& p) {
    ordered_json a = ordered_json::array();
    for (unsigned part : p.parts()) a.push_back(part);
    return a;
}

inline ordered_json to_json(const TypeKMu& t) {
    return ordered_json{{"k", t.k}, {"mu", to_json(t.mu)}};
}

inline ordered_json to_json(const InvSeq& e) {
    ordered_json a = ordered_json::array();
    for (unsigned v : e.e) a.push_back(v);
    return a;
}

inline ordered_json to_json(const UniPoly& p) {
    ordered_json a = ordered_json::array();
    for (const auto& c : p.coeffs()) a.push_back(json_rational(c));
    return a;
}

inline ordered_json to_json(const Tableau& t) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : t.rows()) {
        ordered_json r = ordered_json::array();
        for (unsigned x : row) r.push_back(x);
        rows.push_back(std::move(r));
    }
    return ordered_json{{"shape", to_json(t.shape())}, {"rows", std::move(rows)}};
}

inline ordered_json to_json(const KTableau& z) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : z.top_rows()) {
        ordered_json r = ordered_json::array();
        for (unsigned x : row) r.push_back(x);
        rows.push_back(std::move(r));
    }
    ordered_json bottom = ordered_json::array();
    for (unsigned x : z.bottom()) bottom.push_back(x);
    return ordered_json{{"k", z.k()},
                        {"mu", to_json(z.mu())},
                        {"bottom", std::move(bottom)},
                        {"rows", std::move(rows)}};
}

inline ordered_json to_json(const MPoly& p) {
    ordered_json a = ordered_json::array();
    for (const auto& [e, c] : p.terms()) {
        ordered_json exps = ordered_json::object();
        for (const auto& [name, pow] : e) exps[name] = pow;
        a.push_back(ordered_json::array({json_int(c), std::move(exps)}));
    }
    return a;
}

// {"n": n, "slices": {"1": [[coeff, {"0": a_0, "1": a_1, ...}], ...], ...}}
inline ordered_json expansion_to_json(const Expansion& e) {
    ordered_json slices = ordered_json::object();
    for (unsigned k : e.body.f_indices()) {
        ordered_json terms = ordered_json::array();
        for (const auto& [m, c] : e.body.terms()) {
            if (m.f_index != k) continue;
            ordered_json exps = ordered_json::object();
            if (m.c0 > 0) exps["0"] = m.c0;
            for (std::size_t i = m.mu.size(); i-- > 0;) {
                std::size_t begin = i;
                while (begin > 0 && m.mu[begin - 1] == m.mu[i]) --begin;
                exps[std::to_string(m.mu[i])] = static_cast<unsigned>(i - begin + 1);
                i = begin;
            }
            terms.push_back(ordered_json::array({json_int(c), std::move(exps)}));
        }
        slices[std::to_string(k)] = std::move(terms);
    }
    return ordered_json{{"n", e.n}, {"slices", std::move(slices)}};
}

namespace detail {

inline std::string pad_cell(unsigned v, std::size_t width) {
    std::string s = std::to_string(v);
    return std::string(width - s.size(), ' ') + s;
}

inline std::size_t cell_width(unsigned n) { return std::to_string(n).size(); }

}  // namespace detail

// Rows are printed top row first so the picture matches the bottom-up row
// numbering.
inline std::string render_tableau(const Tableau& t) {
    std::size_t w = detail::cell_width(t.size());
    std::string out;
    for (std::size_t r = t.rows().size(); r-- > 0;) {
        for (std::size_t c = 0; c < t.rows()[r].size(); ++c) {
            if (c) out += " ";
            out += detail::pad_cell(t.rows()[r][c], w);
        }
        out += "\n";
    }
    return out;
}

// The bottom row is set off by a rule.
inline std::string render_tableau(const KTableau& z) {
    std::size_t w = detail::cell_width(z.size());
    std::string out;
    for (std::size_t r = z.top_rows().size(); r-- > 0;) {
        for (std::size_t c = 0; c < z.top_rows()[r].size(); ++c) {
            if (c) out += " ";
            out += detail::pad_cell(z.top_rows()[r][c], w);
        }
        out += "\n";
    }
    std::size_t width = std::max<std::size_t>(z.k(), z.mu().part(0));
    out += std::string(width * (w + 1) - 1, '-') + "\n";
    for (std::size_t c = 0; c < z.bottom().size(); ++c) {
        if (c) out += " ";
        out += detail::pad_cell(z.bottom()[c], w);
    }
    out += "\n";
    return out;
}

inline std::string render_g_vector(const GIndexVector& g) {
    std::string out = "g = (";
    for (std::size_t i = 0; i < g.g.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(g.g[i]);
    }
    out += "), G = " + g.product().to_string();
    return out;
}

// OEIS-style b-file lines "i v", one coefficient per line. Each row of the
// triangle contributes its coefficients from the lowest nonzero power to the
// degree; the index runs from 1 across the whole listing.
inline std::string render_bfile(const std::vector<UniPoly>& rows) {
    std::string out;
    long long index = 1;
    for (const auto& p : rows) {
        if (p.is_zero()) {
            out += std::to_string(index++) + " 0\n";
            continue;
        }
        std::size_t lo = 0;
        while (p.coeff(lo).is_zero()) ++lo;
        for (std::size_t i = lo; i < p.coeffs().size(); ++i) {
            out += std::to_string(index++) + " " + p.coeff(i).to_string() + "\n";
        }
    }
    return out;
}

// LaTeX in the style of the expansion table rows.
inline std::string expansion_to_latex(const Expansion& e) {
    std::string out = "(cD)^{" + std::to_string(e.n) + "}f &= ";
    bool first_slice = true;
    for (unsigned k : e.body.f_indices()) {
        if (!first_slice) out += " + ";
        first_slice = false;
        out += "(";
        bool first = true;
        for (const auto& [m, c] : e.body.terms()) {
            if (m.f_index != k) continue;
            if (!first) out += " + ";
            first = false;
            out += detail::monomial_string(m, c, /*latex=*/true);
        }
        out += ") \\mathbf{f}_" + (k >= 10 ? "{" + std::to_string(k) + "}" : std::to_string(k));
    }
    return out;
}

}  // namespace gindex
