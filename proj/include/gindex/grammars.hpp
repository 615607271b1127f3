#pragma once

#include <cctype>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gindex/tableaux.hpp"
#include "gindex/unipoly.hpp"

namespace gindex {

// Multivariate polynomial with integer coefficients over interned letters.
// Exponent maps are sorted by letter, so the representation is canonical.
class MPoly {
public:
    using Exponents = std::map<std::string, unsigned>;
    using Terms = std::map<Exponents, BigInt>;

    MPoly() = default;

    static MPoly constant(BigInt c) {
        MPoly p;
        if (!c.is_zero()) p.terms_[Exponents{}] = std::move(c);
        return p;
    }

    static MPoly letter(const std::string& name) {
        MPoly p;
        p.terms_[Exponents{{name, 1}}] = 1;
        return p;
    }

    static MPoly monomial(Exponents e, BigInt c) {
        MPoly p;
        if (!c.is_zero()) {
            for (auto it = e.begin(); it != e.end();)
                it = it->second == 0 ? e.erase(it) : std::next(it);
            p.terms_[std::move(e)] = std::move(c);
        }
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents& e, const BigInt& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::set<std::string> letters() const {
        std::set<std::string> out;
        for (const auto& [e, c] : terms_)
            for (const auto& [name, pow] : e) out.insert(name);
        return out;
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        MPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend MPoly operator-(const MPoly& a, const MPoly& b) {
        MPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e = ea;
                for (const auto& [name, pow] : eb) e[name] += pow;
                r.add_term(e, ca * cb);
            }
        return r;
    }

    friend MPoly operator*(const BigInt& c, const MPoly& p) {
        MPoly r;
        if (c.is_zero()) return r;
        for (const auto& [e, q] : p.terms_) r.terms_[e] = c * q;
        return r;
    }

    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    friend bool operator==(const MPoly& a, const MPoly& b) = default;

    MPoly pow(unsigned e) const {
        MPoly r = constant(1), base = *this;
        while (e != 0) {
            if (e & 1u) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    // sets one letter to 1
    MPoly substitute_one(const std::string& name) const {
        MPoly r;
        for (const auto& [e, c] : terms_) {
            Exponents reduced = e;
            reduced.erase(name);
            r.add_term(reduced, c);
        }
        return r;
    }

    // view a polynomial in a single letter as a UniPoly
    UniPoly to_unipoly(const std::string& name) const {
        std::vector<Rational> coeffs;
        for (const auto& [e, c] : terms_) {
            unsigned pow = 0;
            for (const auto& [n2, p2] : e) {
                if (n2 != name) throw invalid_input_error("MPoly: not univariate in " + name);
                pow = p2;
            }
            if (coeffs.size() <= pow) coeffs.resize(pow + 1, Rational(0));
            coeffs[pow] += Rational(c);
        }
        return UniPoly(std::move(coeffs));
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            BigInt a = c;
            if (out.empty()) {
                if (a.is_negative()) {
                    out += "-";
                    a = -a;
                }
            } else {
                out += a.is_negative() ? " - " : " + ";
                if (a.is_negative()) a = -a;
            }
            std::string term;
            if (!(a == BigInt(1)) || e.empty()) term = a.to_string();
            for (const auto& [name, pow] : e) {
                if (!term.empty()) term += " ";
                term += name;
                if (pow > 1) term += "^" + std::to_string(pow);
            }
            out += term;
        }
        return out;
    }

private:
    Terms terms_;
};

// Context-free grammar in Chen's sense: a substitution rule for each letter.
class Grammar {
public:
    explicit Grammar(std::map<std::string, MPoly> rules) : rules_(std::move(rules)) {
        for (const auto& [name, rhs] : rules_)
            for (const auto& used : rhs.letters())
                if (!rules_.count(used))
                    throw invalid_input_error("Grammar: rule uses unknown letter " + used);
    }

    // Parses the tiny rule DSL, e.g. "x -> x*y; y -> y". Rules are separated
    // by ';' or newlines; right-hand sides support +, -, *, ^, coefficients
    // and parentheses.
    static Grammar parse(const std::string& text);

    const std::map<std::string, MPoly>& rules() const { return rules_; }

    const MPoly& rule(const std::string& name) const {
        auto it = rules_.find(name);
        if (it == rules_.end())
            throw invalid_input_error("Grammar: no rule for letter " + name);
        return it->second;
    }

    bool has_letter(const std::string& name) const { return rules_.count(name) != 0; }

private:
    std::map<std::string, MPoly> rules_;
};

// The formal derivative D_G: the unique derivation extending the rules.
inline MPoly derive(const Grammar& g, const MPoly& p) {
    MPoly out;
    for (const auto& [e, c] : p.terms()) {
        for (const auto& [name, pow] : e) {
            if (!g.has_letter(name))
                throw invalid_input_error("derive: letter not in grammar: " + name);
            MPoly::Exponents rest = e;
            if (pow == 1)
                rest.erase(name);
            else
                rest[name] = pow - 1;
            out += (c * BigInt(pow)) * (MPoly::monomial(rest, 1) * g.rule(name));
        }
    }
    return out;
}

inline MPoly derive_n(const Grammar& g, MPoly p, unsigned n) {
    for (unsigned i = 0; i < n; ++i) p = derive(g, p);
    return p;
}

// (u * D_G)^n applied to p
inline MPoly u_dg_power(const Grammar& g, const MPoly& u, MPoly p, unsigned n) {
    for (unsigned i = 0; i < n; ++i) p = u * derive(g, p);
    return p;
}

// Dumont's grammar for the Eulerian numbers:
//   G = {x -> y, y -> y},   (x D_G)^n (y) = sum_i <n,i> x^{n+1-i} y^i.
inline MPoly dumont_eulerian(unsigned n) {
    Grammar g({{"x", MPoly::letter("y")}, {"y", MPoly::letter("y")}});
    return u_dg_power(g, MPoly::letter("x"), MPoly::letter("y"), n);
}

// The two Andre-polynomial grammars:
//   G1 = {x -> xy, y -> x},  D_{G1}^n(x)
//   G2 = {x -> y,  y -> 1},  (x D_{G2})^n(x)
// both equal sum_i S(n,i) x^i y^{n+2-2i}.
inline std::pair<MPoly, MPoly> andre_grammars(unsigned n) {
    Grammar g1({{"x", MPoly::letter("x") * MPoly::letter("y")}, {"y", MPoly::letter("x")}});
    Grammar g2({{"x", MPoly::letter("y")}, {"y", MPoly::constant(1)}});
    return {derive_n(g1, MPoly::letter("x"), n),
            u_dg_power(g2, MPoly::letter("x"), MPoly::letter("x"), n)};
}

// Structural expansion of (u D_G)^n applied to `target`:
//   sum over types (k,mu) of n of (sum_Z G_Z) u u_{mu_1}...u_{mu_{n-1}} D_G^k
// with u_i = D_G^i(u), checked against direct iteration.
inline bool u_dg_expansion_check(const Grammar& g, const MPoly& u, const MPoly& target,
                                 unsigned n) {
    MPoly direct = u_dg_power(g, u, target, n);

    std::vector<MPoly> u_pows{u};   // u_i = D_G^i(u)
    std::vector<MPoly> d_target{target};
    for (unsigned i = 1; i <= n; ++i) {
        u_pows.push_back(derive(g, u_pows.back()));
        d_target.push_back(derive(g, d_target.back()));
    }

    MPoly sum;
    for (const auto& t : types_of(n)) {
        BigInt weight = g_sum_over_type(t);
        MPoly factor = u;
        for (unsigned i = 0; i < t.slot_multiplicity(0); ++i) factor *= u;
        for (unsigned part : t.mu.parts()) factor *= u_pows[part];
        sum += weight * (factor * d_target[t.k]);
    }
    return direct == sum;
}

namespace detail {

struct DslParser {
    const std::string& text;
    std::size_t pos = 0;

    explicit DslParser(const std::string& t) : text(t) {}

    void skip_space() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }

    bool eat(char c) {
        skip_space();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    bool peek_factor() {
        skip_space();
        if (pos >= text.size()) return false;
        char c = text[pos];
        return std::isalpha(static_cast<unsigned char>(c)) != 0 ||
               std::isdigit(static_cast<unsigned char>(c)) != 0 || c == '(';
    }

    std::string ident() {
        skip_space();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) != 0 || text[pos] == '_'))
            ++pos;
        if (start == pos) throw invalid_input_error("grammar DSL: identifier expected");
        return text.substr(start, pos - start);
    }

    BigInt integer() {
        skip_space();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])) != 0)
            ++pos;
        if (start == pos) throw invalid_input_error("grammar DSL: integer expected");
        return BigInt(text.substr(start, pos - start));
    }

    MPoly parse_expr() {
        MPoly r = parse_term();
        while (true) {
            if (eat('+'))
                r += parse_term();
            else if (eat('-'))
                r -= parse_term();
            else
                return r;
        }
    }

    MPoly parse_term() {
        MPoly r = parse_factor();
        while (true) {
            if (eat('*')) {
                r *= parse_factor();
            } else if (peek_factor()) {
                r *= parse_factor();  // juxtaposition, e.g. "2x" or "x y"
            } else {
                return r;
            }
        }
    }

    MPoly parse_factor() {
        skip_space();
        if (pos >= text.size()) throw invalid_input_error("grammar DSL: factor expected");
        char c = text[pos];
        if (c == '-') {
            ++pos;
            return BigInt(-1) * parse_factor();
        }
        MPoly base;
        if (c == '(') {
            ++pos;
            base = parse_expr();
            if (!eat(')')) throw invalid_input_error("grammar DSL: expected )");
        } else if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            base = MPoly::constant(integer());
        } else {
            base = MPoly::letter(ident());
        }
        if (eat('^')) {
            BigInt e = integer();
            base = base.pow(static_cast<unsigned>(e.to_int64()));
        }
        return base;
    }
};

}  // namespace detail

inline Grammar Grammar::parse(const std::string& text) {
    std::map<std::string, MPoly> rules;
    std::size_t start = 0;
    auto flush = [&](const std::string& chunk) {
        bool blank = true;
        for (char c : chunk)
            if (c != ' ' && c != '\t') blank = false;
        if (blank) return;
        std::size_t arrow = chunk.find("->");
        if (arrow == std::string::npos)
            throw invalid_input_error("grammar DSL: rule must contain ->");
        detail::DslParser lhs(chunk);
        std::string name = lhs.ident();
        lhs.skip_space();
        if (lhs.pos != arrow) throw invalid_input_error("grammar DSL: bad rule head");
        std::string rhs_text = chunk.substr(arrow + 2);
        detail::DslParser rhs(rhs_text);
        MPoly p = rhs.parse_expr();
        rhs.skip_space();
        if (rhs.pos != rhs_text.size())
            throw invalid_input_error("grammar DSL: trailing input in rule for " + name);
        if (!rules.emplace(name, std::move(p)).second)
            throw invalid_input_error("grammar DSL: duplicate rule for " + name);
    };
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ';' || text[i] == '\n') {
            flush(text.substr(start, i - start));
            start = i + 1;
        }
    }
    return Grammar(std::move(rules));
}

}  // namespace gindex
