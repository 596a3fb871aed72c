#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qovar/rational.hpp"

using qovar::Rational;

TEST_CASE("construction reduces and normalizes the sign") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-2, 4).str() == "-1/2");
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational(-2, -4).str() == "1/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(42).str() == "42");
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("arithmetic basics") {
    Rational a(1, 2), b(1, 3);
    CHECK((a + b).str() == "5/6");
    CHECK((a - b).str() == "1/6");
    CHECK((a * b).str() == "1/6");
    CHECK((a / b).str() == "3/2");
    CHECK((a + (-a)).is_zero());
    CHECK((b * b.inverse()).is_one());
    CHECK_THROWS(Rational(0).inverse());
    CHECK_THROWS(a / Rational(0));
}

TEST_CASE("overflow promotes to the big representation and back") {
    Rational big(1);
    Rational two62(1LL << 62);
    for (int i = 0; i < 4; ++i) big *= two62;  // 2^248
    CHECK(big.str() == mpz_class(mpz_class(1) << 248).get_str());
    Rational back = big;
    for (int i = 0; i < 4; ++i) back /= two62;
    CHECK(back.is_one());
    // mixed small/big arithmetic demotes when it fits
    Rational x = big + Rational(1);
    CHECK((x - big).is_one());
}

TEST_CASE("parse round-trips") {
    for (const char* s : {"0", "1", "-1", "5/3", "-22/7", "123456789123456789123456789"}) {
        CHECK(Rational::parse(s).str() == s);
    }
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("x"));
    CHECK_THROWS(Rational::parse(""));
}

TEST_CASE("randomized agreement with GMP") {
    std::mt19937_64 rng(12345);
    auto rnd = [&]() {
        std::uniform_int_distribution<long long> num(-1000000, 1000000);
        std::uniform_int_distribution<long long> den(1, 1000000);
        return std::pair{num(rng), den(rng)};
    };
    for (int iter = 0; iter < 2000; ++iter) {
        auto [an, ad] = rnd();
        auto [bn, bd] = rnd();
        Rational a(an, ad), b(bn, bd);
        mpq_class qa(static_cast<long>(an), static_cast<long>(ad));
        mpq_class qb(static_cast<long>(bn), static_cast<long>(bd));
        qa.canonicalize();
        qb.canonicalize();
        CHECK((a + b).to_mpq() == mpq_class(qa + qb));
        CHECK((a - b).to_mpq() == mpq_class(qa - qb));
        CHECK((a * b).to_mpq() == mpq_class(qa * qb));
        if (!b.is_zero()) CHECK((a / b).to_mpq() == mpq_class(qa / qb));
        CHECK((a < b) == (qa < qb));
        CHECK((a == b) == (qa == qb));
    }
}

TEST_CASE("big-path randomized agreement") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long long> num(-1000, 1000);
    Rational huge = Rational(1LL << 62) * Rational(1LL << 62);
    for (int iter = 0; iter < 300; ++iter) {
        Rational a = Rational(num(rng), 1 + (iter % 7)) * huge;
        Rational b(num(rng), 3 + (iter % 11));
        mpq_class qa = a.to_mpq(), qb = b.to_mpq();
        CHECK((a + b).to_mpq() == mpq_class(qa + qb));
        CHECK((a * b).to_mpq() == mpq_class(qa * qb));
        if (!b.is_zero()) CHECK((a / b).to_mpq() == mpq_class(qa / qb));
    }
}
