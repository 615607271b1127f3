#include <catch2/catch.hpp>

#include <random>

#include "gindex/families.hpp"
#include "gindex/grammars.hpp"

using namespace gindex;


TEST_CASE("DSL parse and the worked derivative example", "[grammars]") {
    Grammar g = Grammar::parse("x -> x*y; y -> y");
    MPoly x = MPoly::letter("x"), y = MPoly::letter("y");
    CHECK(derive(g, x) == x * y);
    CHECK(derive_n(g, x, 2) == x * y * y + x * y);
    CHECK(derive(g, MPoly::constant(5)) == MPoly());
    CHECK(derive(g, MPoly()) == MPoly());
}

TEST_CASE("DSL parse handles coefficients, powers and signs", "[grammars]") {
    Grammar g = Grammar::parse("x -> 2x^2 + 3*y; y -> y - x");
    MPoly x = MPoly::letter("x"), y = MPoly::letter("y");
    CHECK(g.rule("x") == BigInt(2) * (x * x) + BigInt(3) * y);
    CHECK(g.rule("y") == y - x);
    CHECK_THROWS_AS(Grammar::parse("x -> x*y"), invalid_input_error);       // y unknown
    CHECK_THROWS_AS(Grammar::parse("x + y"), invalid_input_error);          // no arrow
    CHECK_THROWS_AS(Grammar::parse("x -> y; x -> y; y -> y"), invalid_input_error);
}

TEST_CASE("derive rejects letters outside the grammar", "[grammars]") {
    Grammar g = Grammar::parse("x -> x");
    CHECK_THROWS_AS(derive(g, MPoly::letter("z")), invalid_input_error);
}

TEST_CASE("Leibniz rule and linearity on random polynomials", "[grammars]") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> coeff(-3, 3), expo(0, 2), terms(1, 3);
    Grammar g = Grammar::parse("x -> x*y; y -> y + x^2; z -> 1 + z");
    auto random_mpoly = [&] {
        MPoly p;
        for (int t = terms(rng); t > 0; --t) {
            MPoly::Exponents e;
            for (const char* name : {"x", "y", "z"}) {
                int pw = expo(rng);
                if (pw > 0) e[name] = static_cast<unsigned>(pw);
            }
            p += MPoly::monomial(e, coeff(rng));
        }
        return p;
    };
    for (int i = 0; i < 50; ++i) {
        MPoly p = random_mpoly(), q = random_mpoly();
        CHECK(derive(g, p * q) == derive(g, p) * q + p * derive(g, q));
        CHECK(derive(g, p + q) == derive(g, p) + derive(g, q));
    }
}

TEST_CASE("Dumont grammar gives the Eulerian numbers", "[grammars]") {
    MPoly x = MPoly::letter("x"), y = MPoly::letter("y");
    CHECK(dumont_eulerian(1) == x * y);
    CHECK(dumont_eulerian(3) ==
          x.pow(3) * y + BigInt(4) * (x.pow(2) * y.pow(2)) + x * y.pow(3));
    for (unsigned n = 1; n <= 7; ++n) CHECK(eulerian_grammar(n) == eulerian(n));
}

TEST_CASE("the two Andre grammars agree and produce S_n", "[grammars]") {
    MPoly x = MPoly::letter("x"), y = MPoly::letter("y");
    auto [g1_1, g2_1] = andre_grammars(1);
    CHECK(g1_1 == x * y);
    CHECK(g2_1 == x * y);
    auto [g1_3, g2_3] = andre_grammars(3);
    CHECK(g1_3 == x * y.pow(3) + BigInt(4) * (x.pow(2) * y));
    for (unsigned n = 1; n <= 7; ++n) {
        auto [a, b] = andre_grammars(n);
        CHECK(a == b);
        auto [sa, sb] = andre_grammar_slices(n);
        CHECK(sa == andre(n));
        CHECK(sb == andre(n));
    }
}

TEST_CASE("structural (u D_G)^n expansion: worked grammars", "[grammars]") {
    Grammar dumont = Grammar::parse("x -> y; y -> y");
    for (unsigned n = 1; n <= 5; ++n)
        CHECK(u_dg_expansion_check(dumont, MPoly::letter("x"), MPoly::letter("y"), n));

    Grammar g2 = Grammar::parse("x -> y; y -> 1");
    for (unsigned n = 1; n <= 5; ++n)
        CHECK(u_dg_expansion_check(g2, MPoly::letter("x"), MPoly::letter("x"), n));
}

TEST_CASE("under G2 only types with parts <= 2 contribute", "[grammars]") {
    // u_i = D^i(x) vanishes for i >= 3, so restricting the structural sum to
    // types with parts <= 2 loses nothing
    Grammar g2 = Grammar::parse("x -> y; y -> 1");
    MPoly u = MPoly::letter("x");
    CHECK(derive_n(g2, u, 3) == MPoly());
    for (unsigned n = 2; n <= 6; ++n) {
        MPoly direct = u_dg_power(g2, u, u, n);
        std::vector<MPoly> u_pows{u};
        std::vector<MPoly> d_target{u};
        for (unsigned i = 1; i <= n; ++i) {
            u_pows.push_back(derive(g2, u_pows.back()));
            d_target.push_back(derive(g2, d_target.back()));
        }
        MPoly restricted;
        for (const auto& t : types_of(n)) {
            if (t.mu.part(0) > 2) continue;
            MPoly factor = u;
            for (unsigned i = 0; i < t.slot_multiplicity(0); ++i) factor *= u;
            for (unsigned part : t.mu.parts()) factor *= u_pows[part];
            restricted += g_sum_over_type(t) * (factor * d_target[t.k]);
        }
        CHECK(restricted == direct);
    }
}

TEST_CASE("structural expansion on random small grammars", "[grammars]") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<int> coeff(1, 3), expo(0, 2), nterms(1, 2), nletters(1, 3);
    const std::vector<std::string> names{"x", "y", "z"};
    for (int trial = 0; trial < 20; ++trial) {
        unsigned letters = static_cast<unsigned>(nletters(rng));
        std::map<std::string, MPoly> rules;
        for (unsigned l = 0; l < letters; ++l) {
            MPoly rhs;
            for (int t = nterms(rng); t > 0; --t) {
                MPoly::Exponents e;
                unsigned total = 0;
                for (unsigned l2 = 0; l2 < letters && total < 2; ++l2) {
                    unsigned pw = static_cast<unsigned>(expo(rng));
                    pw = std::min(pw, 2 - total);
                    if (pw > 0) e[names[l2]] = pw;
                    total += pw;
                }
                rhs += MPoly::monomial(e, coeff(rng));
            }
            rules[names[l]] = rhs;
        }
        Grammar g(std::move(rules));
        std::uniform_int_distribution<unsigned> pick(0, letters - 1);
        MPoly u = MPoly::letter(names[pick(rng)]);
        MPoly target = MPoly::letter(names[pick(rng)]);
        for (unsigned n = 1; n <= 4; ++n) CHECK(u_dg_expansion_check(g, u, target, n));
    }
}

TEST_CASE("MPoly rendering", "[grammars]") {
    MPoly x = MPoly::letter("x"), y = MPoly::letter("y");
    // terms are listed in the canonical exponent-map order
    CHECK((x.pow(3) * y + BigInt(4) * (x.pow(2) * y.pow(2))).to_string() ==
          "4 x^2 y^2 + x^3 y");
    CHECK(MPoly().to_string() == "0");
    CHECK((MPoly::constant(2) - x).to_string() == "2 - x");
}

