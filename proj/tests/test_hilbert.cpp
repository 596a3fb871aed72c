#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qovar/hilbert.hpp"

using namespace qovar;

TEST_CASE("characters of small symmetric powers") {
    HilbertSeries hs(4);
    CHECK(hs.character_of_symmetric_power(0).size() == 1);
    const LaurentPoly& h1 = hs.character_of_symmetric_power(1);
    CHECK(h1.size() == 16);
    for (const auto& [k, c] : h1) CHECK(c == 1);
    // evaluation at u = 1 gives dim S^2(H) = 136
    long long tot = 0;
    for (const auto& [k, c] : hs.character_of_symmetric_power(2)) tot += c;
    CHECK(tot == 136);
    // invariance under u_i -> 1/u_i
    for (const auto& [k, c] : hs.character_of_symmetric_power(3)) {
        LaurentExp inv;
        for (int s = 0; s < 4; ++s) inv.e[s] = -k.e[s];
        auto it = hs.character_of_symmetric_power(3).find(inv);
        REQUIRE(it != hs.character_of_symmetric_power(3).end());
        CHECK(it->second == c);
    }
}

TEST_CASE("covariant dimensions") {
    HilbertSeries hs(6);
    CHECK(hs.covariant_dimension(1, {1, 1, 1, 1}) == 1);
    CHECK(hs.covariant_dimension(2, {0, 0, 0, 0}) == 1);
    CHECK(hs.covariant_dimension(2, {2, 2, 0, 0}) == 1);
    CHECK(hs.covariant_dimension(3, {1, 1, 1, 1}) == 3);
    CHECK(hs.covariant_dimension(4, {0, 0, 0, 0}) == 3);
    CHECK(hs.covariant_dimension(4, {2, 2, 0, 0}) == 2);
    CHECK(hs.covariant_dimension(5, {3, 1, 1, 1}) == 4);
    CHECK(hs.covariant_dimension(6, {2, 2, 2, 2}) == 13);
    CHECK(hs.covariant_dimension(6, {6, 6, 6, 6}) == 1);
    CHECK(hs.covariant_dimension(2, {1, 1, 1, 1}) == 0);
    // nonnegativity across a degree
    for (const auto& [mu, c] : hs.nonzero_types(5)) CHECK(c > 0);
}

TEST_CASE("invariant series") {
    HilbertSeries hs(8);
    CHECK(hs.invariant_series() == std::vector<long long>{1, 0, 1, 0, 3, 0, 4, 0, 7});
}

TEST_CASE("diagonal series") {
    HilbertSeries hs(3);
    CHECK(hs.diagonal_coefficient(0) == std::map<int, long long>{{0, 1}});
    CHECK(hs.diagonal_coefficient(1) == std::map<int, long long>{{4, 1}});
    CHECK(hs.diagonal_coefficient(2) == std::map<int, long long>{{0, 1}, {4, 6}, {8, 1}});
    CHECK(hs.diagonal_coefficient(3) ==
          std::map<int, long long>{{4, 3}, {6, 4}, {8, 6}, {12, 1}});
}

TEST_CASE("consistency sum against dim S^d(H)") {
    HilbertSeries hs(8);
    long long binom = 1;
    for (int d = 0; d <= 8; ++d) {
        if (d) binom = binom * (15 + d) / d;
        long long tot = 0;
        for (const auto& [mu, c] : hs.nonzero_types(d)) {
            long long w = 1;
            for (int m : mu) w *= m + 1;
            tot += c * w;
        }
        CHECK(tot == binom);
    }
}

TEST_CASE("printed P/Q mismatch report") {
    HilbertSeries hs(8);
    auto mism = compare_with_printed_pq(hs, 8);
    CHECK(mism.size() == 16);
    CHECK(mism.front() == PQMismatch{4, 0, 3, 2});
    // the full frozen report
    std::vector<PQMismatch> expect = {
        {4, 0, 3, 2},   {5, 4, 6, 5},    {6, 0, 4, 3},    {6, 4, 34, 28},
        {6, 8, 85, 84}, {7, 4, 11, 8},   {7, 6, 36, 32},  {7, 8, 82, 76},
        {7, 12, 123, 122}, {8, 0, 7, 4}, {8, 4, 64, 48},  {8, 6, 64, 56},
        {8, 8, 210, 188}, {8, 10, 192, 188}, {8, 12, 300, 294}, {8, 16, 208, 207}};
    CHECK(mism == expect);
    // degree <= 3 cells all match
    auto small = compare_with_printed_pq(HilbertSeries(3), 3);
    CHECK(small.empty());
}

TEST_CASE("krull dimension") {
    KrullReport kr = krull_report();
    CHECK(kr.krull == 12);
    CHECK(kr.q_multiplicity == 12);
    // the printed numerator is antisymmetric under (t,u) -> (1/t,1/u), so it
    // vanishes at t=1; order exactly 1
    CHECK(kr.printed_p_at_one == 0);
    CHECK(kr.printed_p_multiplicity == 1);
    const auto& P = printed_diagonal_numerator();
    for (const auto& [d, pol] : P)
        for (const auto& [k, c] : pol) {
            auto itd = P.find(20 - d);
            REQUIRE(itd != P.end());
            auto itk = itd->second.find(20 - k);
            REQUIRE(itk != itd->second.end());
            CHECK(itk->second == -c);
        }
}
