#include <catch2/catch.hpp>

#include <set>

#include "gindex/families.hpp"
#include "gindex/inversions.hpp"
#include "gindex/partitions.hpp"

using namespace gindex;


namespace {

// brute-force oracle: weakly decreasing positive tuples summing to n
unsigned count_partitions_brute(unsigned n) {
    unsigned count = 0;
    auto rec = [&](auto&& self, unsigned rest, unsigned max_part) -> void {
        if (rest == 0) {
            ++count;
            return;
        }
        for (unsigned p = 1; p <= std::min(rest, max_part); ++p) self(self, rest - p, p);
    };
    rec(rec, n, n == 0 ? 1 : n);
    return count;
}

}  // namespace

TEST_CASE("partitions_of: counts and reverse-lexicographic order", "[combinat]") {
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(0)[0] == Partition());
    CHECK(partitions_of(1).size() == 1);
    CHECK(partitions_of(1)[0] == Partition({1}));
    for (unsigned n = 0; n <= 9; ++n)
        CHECK(partitions_of(n).size() == count_partitions_brute(n));

    auto p4 = partitions_of(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0] == Partition({4}));
    CHECK(p4[1] == Partition({3, 1}));
    CHECK(p4[2] == Partition({2, 2}));
    CHECK(p4[3] == Partition({2, 1, 1}));
    CHECK(p4[4] == Partition({1, 1, 1, 1}));
}

TEST_CASE("Partition invariants and helpers", "[combinat]") {
    Partition p({3, 2, 2});
    CHECK(p.weight() == 7);
    CHECK(p.length() == 3);
    CHECK(p.multiplicity(2) == 2);
    CHECK(p.conjugate() == Partition({3, 3, 1}));
    CHECK(p.parts_factorial() == BigInt(6 * 2 * 2));
    CHECK(Partition({2, 1, 0, 0}) == Partition({2, 1}));  // trailing zeros stripped
    CHECK_THROWS_AS(Partition({1, 2}), invalid_input_error);
}

TEST_CASE("types_of lists the four types of n = 3", "[combinat]") {
    auto t3 = types_of(3);
    REQUIRE(t3.size() == 4);
    CHECK(t3[0] == TypeKMu(3, 3, Partition()));
    CHECK(t3[1] == TypeKMu(3, 2, Partition({1})));
    CHECK(t3[2] == TypeKMu(3, 1, Partition({2})));
    CHECK(t3[3] == TypeKMu(3, 1, Partition({1, 1})));

    CHECK(types_of(1).size() == 1);
    CHECK(types_of(1)[0] == TypeKMu(1, 1, Partition()));
    CHECK(types_of(4).size() == 7);
}

TEST_CASE("TypeKMu slot multiplicities count the zero padding", "[combinat]") {
    TypeKMu t(9, 4, Partition({2, 2, 1}));
    CHECK(t.padded_slots() == 8);
    CHECK(t.slot_multiplicity(0) == 5);
    CHECK(t.slot_multiplicity(1) == 1);
    CHECK(t.slot_multiplicity(2) == 2);
    CHECK(t.slot_multiplicity(3) == 0);
    CHECK_THROWS_AS(TypeKMu(3, 2, Partition({2})), invalid_input_error);
}

TEST_CASE("inv_seqs: small cases, explicitly", "[combinat]") {
    auto i2 = inv_seqs(2);
    REQUIRE(i2.size() == 2);
    CHECK(i2[0] == InvSeq({0, 0}));
    CHECK(i2[1] == InvSeq({0, 1}));

    auto i3 = inv_seqs(3);
    REQUIRE(i3.size() == 6);
    CHECK(i3[0] == InvSeq({0, 0, 0}));
    CHECK(i3[1] == InvSeq({0, 0, 1}));
    CHECK(i3[2] == InvSeq({0, 0, 2}));
    CHECK(i3[3] == InvSeq({0, 1, 0}));
    CHECK(i3[4] == InvSeq({0, 1, 1}));
    CHECK(i3[5] == InvSeq({0, 1, 2}));

    CHECK(inv_seqs(1) == std::vector<InvSeq>{InvSeq({0})});

    for (unsigned n = 1; n <= 8; ++n) {
        BigInt count = 0;
        for_each_inv_seq(n, [&](const std::vector<unsigned>&) { count += 1; });
        CHECK(count == factorial(n));
    }
}

TEST_CASE("type_of_seq: a worked length-9 example and edge cases", "[combinat]") {
    InvSeq e({0, 0, 1, 0, 4, 2, 4, 0, 1});
    TypeKMu t = type_of_seq(e);
    CHECK(t.k == 4);
    CHECK(t.mu == Partition({2, 2, 1}));

    CHECK(type_of_seq(InvSeq({0, 0, 0, 0})) == TypeKMu(4, 4, Partition()));
    CHECK(type_of_seq(InvSeq({0, 1, 2})) == TypeKMu(3, 1, Partition({1, 1})));
}

TEST_CASE("fiber sizes of the type map sum to n!", "[combinat]") {
    for (unsigned n = 1; n <= 7; ++n) {
        std::map<std::pair<unsigned, std::vector<unsigned>>, BigInt> bins;
        for_each_inv_seq(n, [&](const std::vector<unsigned>& e) {
            TypeKMu t = type_of_seq(InvSeq(e));
            bins[{t.k, t.mu.parts()}] += 1;
        });
        CHECK(bins.size() == types_of(n).size());
        BigInt total = 0;
        for (auto& [key, v] : bins) total += v;
        CHECK(total == factorial(n));
    }
}

TEST_CASE("psi: examples and bijectivity", "[combinat]") {
    CHECK(psi({1, 2, 3, 4}) == InvSeq({0, 0, 0, 0}));
    CHECK(psi({3, 2, 1}) == InvSeq({0, 1, 2}));

    for (unsigned n = 1; n <= 7; ++n) {
        std::set<std::vector<unsigned>> images;
        for_each_permutation(n, [&](const std::vector<unsigned>& pi) {
            images.insert(psi(pi).e);
        });
        CHECK(images.size() == static_cast<std::size_t>(factorial(n).to_int64()));
    }
}

TEST_CASE("asc_s: all-zero sequence has no ascents", "[combinat]") {
    SInvSeq z({1, 2, 3}, {0, 0, 0});
    CHECK(asc_s(z) == 0);
}

TEST_CASE("asc_s generating polynomial for s = (1,2,...,n) is A_n(x)/x", "[combinat]") {
    for (unsigned n = 1; n <= 6; ++n) {
        std::vector<unsigned> s(n);
        for (unsigned i = 0; i < n; ++i) s[i] = i + 1;
        CHECK(s_ascent_poly(s) == eulerian_classic(n));
    }
    std::vector<unsigned> s3{1, 2, 3};
    CHECK(s_ascent_poly(s3) == UniPoly{Rational(1), Rational(4), Rational(1)});
}

TEST_CASE("asc_s generating polynomial for s = (1,3,5) is the 1/2-Eulerian polynomial", "[combinat]") {
    CHECK(s_ascent_poly({1, 3, 5}) == one_over_k(3, 2));
    for (unsigned n = 1; n <= 5; ++n) {
        for (unsigned k = 1; k <= 3; ++k) CHECK(one_over_k_s_inversion(n, k) == one_over_k(n, k));
    }
}

TEST_CASE("inv_seqs enforces the enumeration cap", "[combinat]") {
    CHECK_THROWS_AS(inv_seqs(11), size_limit_error);
}

