#include <catch2/catch.hpp>

#include "gindex/render.hpp"

using namespace gindex;

TEST_CASE("JSON forms of the combinatorial objects", "[render]") {
    CHECK(to_json(TypeKMu(7, 3, Partition({2, 1, 1}))).dump() ==
          R"({"k":3,"mu":[2,1,1]})");
    CHECK(to_json(InvSeq({0, 0, 1, 0, 4})).dump() == "[0,0,1,0,4]");
    CHECK(to_json(Partition({3, 2})).dump() == "[3,2]");

    Tableau t({{1, 2}, {3}});
    CHECK(to_json(t).dump() == R"({"shape":[2,1],"rows":[[1,2],[3]]})");

    KTableau z(TypeKMu(3, 2, Partition({1})), {1, 3}, {{2}});
    CHECK(to_json(z).dump() == R"({"k":2,"mu":[1],"bottom":[1,3],"rows":[[2]]})");
}

TEST_CASE("JSON integers fall back to strings beyond 64 bits", "[render]") {
    CHECK(json_int(BigInt(896)).dump() == "896");
    CHECK(json_int(factorial(25)).dump() == "\"15511210043330985984000000\"");
    CHECK(json_rational(Rational(BigInt(1), BigInt(3))).dump() == "\"1/3\"");
}

TEST_CASE("expansion JSON groups exponent maps by slice", "[render]") {
    ordered_json doc = expansion_to_json(expand_recurrence(3));
    CHECK(doc["n"] == 3);
    // f_1 slice: c c1^2 + c^2 c2
    CHECK(doc["slices"]["1"].dump() == R"([[1,{"0":1,"1":2}],[1,{"0":2,"2":1}]])");
    CHECK(doc["slices"]["3"].dump() == R"([[1,{"0":3}]])");
}

TEST_CASE("MPoly JSON", "[render]") {
    MPoly p = MPoly::letter("x").pow(2) * MPoly::letter("y") + MPoly::constant(3);
    CHECK(to_json(p).dump() == R"([[3,{}],[1,{"x":2,"y":1}]])");
}

TEST_CASE("tableau pictures print top row first with the bottom rule", "[render]") {
    KTableau z(TypeKMu(7, 2, Partition({3, 2})), {1, 5}, {{2, 3, 7}, {4, 6}});
    CHECK(render_tableau(z) == "4 6\n2 3 7\n-----\n1 5\n");
    Tableau t({{1, 3, 7}, {2, 5}, {4, 6}});
    CHECK(render_tableau(t) == "4 6\n2 5\n1 3 7\n");
}

TEST_CASE("b-file listing spans the nonzero coefficients", "[render]") {
    UniPoly a{Rational(0), Rational(1), Rational(4), Rational(1)};
    UniPoly b{Rational(2)};
    CHECK(render_bfile({a, b}) == "1 1\n2 4\n3 1\n4 2\n");
}

TEST_CASE("expansion latex row", "[render]") {
    CHECK(expansion_to_latex(expand_recurrence(2)) ==
          "(cD)^{2}f &= (c c_1) \\mathbf{f}_1 + (c^2) \\mathbf{f}_2");
}
