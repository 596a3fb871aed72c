#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qovar/field.hpp"

using qovar::FieldElem;
using qovar::Rational;

namespace {

FieldElem rnd_elem(std::mt19937_64& rng, bool allow_ext = true) {
    std::uniform_int_distribution<long long> num(-20, 20);
    std::uniform_int_distribution<long long> den(1, 9);
    auto r = [&]() { return Rational(num(rng), den(rng)); };
    if (!allow_ext) return FieldElem(r());
    return FieldElem(r(), r(), r(), r());
}

}  // namespace

TEST_CASE("defining relations") {
    FieldElem I = FieldElem::i(), R = FieldElem::sqrt2();
    CHECK(I * I == FieldElem(-1));
    CHECK(R * R == FieldElem(2));
    // (I*R/2)^2 = I^2 R^2 / 4 = -1/2
    FieldElem ir2 = I * R * FieldElem(Rational(1, 2));
    CHECK(ir2 * ir2 == FieldElem(Rational(-1, 2)));
}

TEST_CASE("inverses") {
    CHECK(FieldElem(1).inverse() == FieldElem(1));
    CHECK(FieldElem::i().inverse() == -FieldElem::i());
    FieldElem onePlusR = FieldElem(1) + FieldElem::sqrt2();
    CHECK(onePlusR.inverse() == FieldElem::sqrt2() - FieldElem(1));
    CHECK_THROWS(FieldElem().inverse());
}

TEST_CASE("field axioms on random elements") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        FieldElem a = rnd_elem(rng), b = rnd_elem(rng), c = rnd_elem(rng);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == FieldElem(1));
            CHECK(a.inverse().inverse() == a);
        }
    }
}

TEST_CASE("the rational subalgebra is closed") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        FieldElem a = rnd_elem(rng, false), b = rnd_elem(rng, false);
        CHECK((a * b).is_rational());
        CHECK((a + b).is_rational());
        CHECK((a * b).rat() == a.rat() * b.rat());
    }
}

TEST_CASE("rendering and parsing") {
    CHECK(FieldElem(Rational(3, 2)).str() == "3/2");
    FieldElem e(Rational(1, 2), Rational(-3), Rational(), Rational(1, 4));
    CHECK(e.str() == "(1/2 - 3*I + 1/4*I*R)");
    CHECK(FieldElem::parse(e.str()) == e);
    CHECK(FieldElem::parse("(1*I)") == FieldElem::i());
    CHECK(FieldElem::parse("-5/3") == FieldElem(Rational(-5, 3)));
    std::mt19937_64 rng(23);
    for (int i = 0; i < 200; ++i) {
        FieldElem x = rnd_elem(rng);
        CHECK(FieldElem::parse(x.str()) == x);
    }
}
