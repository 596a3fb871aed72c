#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qovar/normalforms.hpp"

using namespace qovar;

TEST_CASE("states as polynomials") {
    CHECK(normal_form_names().size() == 9);
    CHECK(state("L_0_7+1bar") == Poly::parse("1*x2*y2*z2*t1 + 1*x2*y2*z1*t2 + 1*x2*y1*z2*t2 + 1*x1*y1*z1*t1"));
    CHECK(state("L_0_3+1bar_0_3+1bar") == Poly::parse("1*x1*y2*z2*t2 + 1*x1*y1*z1*t1"));
    CHECK_THROWS(state("nope"));
    // L_ab3 carries i/sqrt(2) = I*R/2 on four kets
    Poly lab3 = state("L_ab3");
    FieldElem irt2(Rational(), Rational(), Rational(), Rational(1, 2));
    Monomial ket0001;
    ket0001.e[indet::var(0, 0)] = 1;
    ket0001.e[indet::var(1, 0)] = 1;
    ket0001.e[indet::var(2, 0)] = 1;
    ket0001.e[indet::var(3, 1)] = 1;
    CHECK(lab3.coefficient_of(ket0001) == irt2);
}

TEST_CASE("H is 1 on the GHZ-like two-ket state and a^2-ish on L forms") {
    Catalog cat = Catalog::build(2);
    // on L_a2b2 with its two unit kets plus parameters the hyperdeterminant
    // stays a polynomial in a, b; sanity: nonzero
    CHECK_FALSE(evaluate_covariant(cat, "H", "L_a2b2").is_zero());
    // the degenerate forms kill it
    for (const char* nm : {"L_0_5+3bar", "L_0_7+1bar", "L_0_3+1bar_0_3+1bar"})
        CHECK(evaluate_covariant(cat, "H", nm).is_zero());
}

TEST_CASE("displayed separation values via the catalog") {
    Catalog cat = Catalog::build(4);
    CHECK(evaluate_covariant(cat, "D_2200", "L_0_5+3bar").is_zero());
    CHECK(evaluate_covariant(cat, "D_2200", "L_0_7+1bar") == Poly::parse("-16*x2^2*y1*y2"));
    // the printed -16x2^2 z1 z2 value is the biquadratic-pair separator
    Poly bxz = cat.resolve("b_xz");
    Poly sep = transvectant(bxz, bxz, {1, 0, 1, 0});
    CHECK(evaluate_on(sep, "L_0_7+1bar") == Poly::parse("-16*x2^2*z1*z2"));
}

TEST_CASE("vandermonde of squares") {
    Poly V = vandermonde_sq();
    // a = b kills it
    std::array<const Poly*, indet::kCount> sub{};
    Poly pb = Poly::indet(indet::param(1));
    sub[indet::param(0)] = &pb;
    CHECK(V.substitute(sub).is_zero());
    // numeric specialization V(0,1,4,9) = 4320
    std::array<Poly, 4> vals = {Poly::constant(FieldElem(0)), Poly::constant(FieldElem(1)),
                                Poly::constant(FieldElem(2)), Poly::constant(FieldElem(3))};
    std::array<const Poly*, indet::kCount> num{};
    for (int p = 0; p < 4; ++p) num[indet::param(p)] = &vals[p];
    CHECK(V.substitute(num) == Poly::constant(FieldElem(4320)));
    // depends only on squares: a -> -a is invisible
    Poly minus_a = -Poly::indet(indet::param(0));
    std::array<const Poly*, indet::kCount> flip{};
    flip[indet::param(0)] = &minus_a;
    CHECK(V.substitute(flip) == V);
}

TEST_CASE("evaluation commutes with specialization of the recipes") {
    // building a transvectant of specialized forms equals specializing the
    // generic covariant: a cheap independent route for evaluations
    Catalog cat = Catalog::build(2);
    Poly fG = state("G_abcd");
    Poly b2200_G = transvectant(fG, fG, {0, 0, 1, 1});
    CHECK(b2200_G == evaluate_covariant(cat, "B_2200", "G_abcd"));
}
