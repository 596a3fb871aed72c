#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qovar/minimality.hpp"

using namespace qovar;

TEST_CASE("rank of trivial families") {
    Catalog cat = Catalog::build(2);
    Poly f = cat.at(kGroundForm);
    CHECK(rank_over_rationals({}) == 0);
    CHECK(rank_over_rationals({f, f.scaled(FieldElem(2))}) == 1);
    CHECK(rank_over_rationals({f, Poly()}) == 1);
    CHECK_THROWS(rank_over_rationals({f, f * f}));
}

TEST_CASE("product enumeration examples") {
    Catalog cat = Catalog::build(3);
    CHECK(enumerate_products(2, {2, 2, 0, 0}, cat).empty());
    auto p3 = enumerate_products(3, {1, 1, 1, 1}, cat);
    REQUIRE(p3.size() == 1);  // exactly f * B_0000
    CHECK(p3[0] == cat.at(kGroundForm) * cat.at(CovariantSymbol::parse("B_0000")));
    auto p4 = enumerate_products(4, {0, 0, 0, 0}, cat);
    REQUIRE(p4.size() == 1);  // exactly B_0000^2
    Poly b0 = cat.at(CovariantSymbol::parse("B_0000"));
    CHECK(p4[0] == b0 * b0);
}

TEST_CASE("rank cross-checks the dimension formula") {
    Catalog cat = Catalog::build(3);
    Poly f = cat.at(kGroundForm);
    Poly fb = f * cat.at(CovariantSymbol::parse("B_0000"));
    Poly c1 = cat.at(CovariantSymbol::parse("C^1_1111"));
    Poly c2 = cat.at(CovariantSymbol::parse("C^2_1111"));
    CHECK(rank_over_rationals({fb, c1, c2}) == 3);
}

TEST_CASE("verify_table at degree 4") {
    Catalog cat = Catalog::build(4);
    HilbertSeries hs(4);
    auto reports = verify_table(4, cat, hs);
    bool saw_inv4 = false, saw_2200 = false;
    for (const RankReport& r : reports) {
        CHECK(r.new_needed == r.expected_new);
        CHECK(r.full_rank_ok);
        CHECK(r.new_supplied == r.new_needed);
        if (r.d == 4 && r.mu == std::array<int, 4>{0, 0, 0, 0}) {
            saw_inv4 = true;
            CHECK(r.dim == 3);
            CHECK(r.reducible_rank == 1);
            CHECK(r.new_needed == 2);
        }
        if (r.d == 2 && r.mu == std::array<int, 4>{2, 2, 0, 0}) {
            saw_2200 = true;
            CHECK(r.dim == 1);
            CHECK(r.reducible_rank == 0);
        }
    }
    CHECK(saw_inv4);
    CHECK(saw_2200);
    // permutation consistency of a representative pair
    RankReport a, b;
    for (const RankReport& r : reports) {
        if (r.d == 4 && r.mu == std::array<int, 4>{2, 2, 0, 0}) a = r;
        if (r.d == 4 && r.mu == std::array<int, 4>{0, 0, 2, 2}) b = r;
    }
    CHECK(a.dim == b.dim);
    CHECK(a.reducible_rank == b.reducible_rank);
    CHECK(a.new_needed == b.new_needed);
}
