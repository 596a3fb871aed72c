#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qovar/catalog.hpp"
#include "qovar/transvect.hpp"

using namespace qovar;

namespace {

Poly swap_x(const Poly& p) {
    // x1 <-> x2 together with a[0jkl] <-> a[1jkl]
    std::array<Poly, indet::kCount> imgs;
    std::array<const Poly*, indet::kCount> sub{};
    for (int i = 0; i < 8; ++i) {
        imgs[i] = Poly::indet(8 + i);
        imgs[8 + i] = Poly::indet(i);
        sub[i] = &imgs[i];
        sub[8 + i] = &imgs[8 + i];
    }
    imgs[indet::var(0, 0)] = Poly::indet(indet::var(0, 1));
    imgs[indet::var(0, 1)] = Poly::indet(indet::var(0, 0));
    sub[indet::var(0, 0)] = &imgs[indet::var(0, 0)];
    sub[indet::var(0, 1)] = &imgs[indet::var(0, 1)];
    return p.substitute(sub);
}

}  // namespace

TEST_CASE("zeroth transvectant is the plain product") {
    Poly f = ground_form();
    CHECK(transvectant(f, f, {0, 0, 0, 0}) == f * f);
    CHECK(omega_power_pair(f, f, 0, 0) == f * f);
}

TEST_CASE("single determinant examples") {
    Poly x1 = Poly::indet(indet::var(0, 0)), x2 = Poly::indet(indet::var(0, 1));
    Poly y1 = Poly::indet(indet::var(1, 0)), y2 = Poly::indet(indet::var(1, 1));
    CHECK(omega_power_pair(x1, x2, 0, 1) == Poly::constant(FieldElem(1)));
    CHECK(transvectant(x1 * y1, x2 * y2, {1, 1, 0, 0}) == Poly::constant(FieldElem(1)));
}

TEST_CASE("odd total order annihilates (f,f)") {
    Poly f = ground_form();
    for (TransvectantIndex e : {TransvectantIndex{1, 0, 0, 0}, {1, 1, 1, 0}, {0, 0, 1, 0}}) {
        CHECK(transvectant(f, f, e).is_zero());
        CHECK(oracle_transvectant(f, f, e).is_zero());
    }
}

TEST_CASE("hyperdeterminant of the two-ket state") {
    Poly f = ground_form();
    std::array<Poly, indet::kCount> vals;
    std::array<const Poly*, indet::kCount> sub{};
    Poly one = Poly::constant(FieldElem(1)), zero;
    for (int i = 0; i < 16; ++i) sub[i] = (i == 0 || i == 15) ? &one : &zero;
    Poly fs = f.substitute(sub);
    CHECK(transvectant(fs, fs, {1, 1, 1, 1}) == Poly::constant(FieldElem(2)));
}

TEST_CASE("degree law and symmetry law") {
    Catalog cat = Catalog::build(3);
    Poly f = cat.at(kGroundForm);
    for (const auto& [sym, p] : cat.entries()) {
        if (sym.degree() > 2) continue;
        for (TransvectantIndex e : {TransvectantIndex{1, 0, 0, 0}, {0, 1, 1, 0}, {1, 1, 1, 1}, {2, 0, 0, 0}}) {
            Poly t = transvectant(f, p, e);
            int tot = e[0] + e[1] + e[2] + e[3];
            CHECK(transvectant(p, f, e) == (tot % 2 ? -t : t));
            if (t.is_zero()) continue;
            auto md = t.multidegree();
            REQUIRE(md.has_value());
            CHECK(md->d == 1 + sym.degree());
            for (int s = 0; s < 4; ++s) CHECK(md->mu[s] == 1 + sym.sub[s] - 2 * e[s]);
        }
    }
}

TEST_CASE("single-slot omega is antisymmetric in the tensor factors") {
    Catalog cat = Catalog::build(2);
    Poly f = cat.at(kGroundForm);
    Poly b = cat.at(CovariantSymbol::parse("B_2200"));
    Poly w = omega_power_pair(f, b, 0, 1);
    CHECK_FALSE(w.is_zero());
    CHECK(omega_power_pair(b, f, 0, 1) == -w);
    CHECK(w == oracle_transvectant(f, b, {1, 0, 0, 0}));
    // on identical factors the merged single-slot omega cancels
    CHECK(omega_power_pair(f, f, 0, 1).is_zero());
}

TEST_CASE("out-of-range index gives zero") {
    Poly f = ground_form();
    CHECK(transvectant(f, f, {3, 0, 0, 0}).is_zero());
    CHECK(oracle_transvectant(f, f, {3, 0, 0, 0}).is_zero());
}

TEST_CASE("production transvectant equals the primed-variable oracle") {
    Catalog cat = Catalog::build(3);
    Poly f = cat.at(kGroundForm);
    std::vector<Poly> ops = {f, cat.at(CovariantSymbol::parse("B_2200")),
                             cat.at(CovariantSymbol::parse("B_0000")),
                             cat.at(CovariantSymbol::parse("C_3111"))};
    std::vector<TransvectantIndex> idxs = {{1, 0, 0, 0}, {1, 1, 0, 0}, {0, 1, 0, 1},
                                           {1, 1, 1, 1}, {2, 0, 0, 0}, {2, 1, 1, 0}};
    for (const Poly& a : ops)
        for (const Poly& b : ops)
            for (const auto& e : idxs) CHECK(transvectant(a, b, e) == oracle_transvectant(a, b, e));
}

TEST_CASE("x-swap equivariance up to (-1)^e1") {
    Catalog cat = Catalog::build(3);
    Poly f = cat.at(kGroundForm);
    for (const char* name : {"B_2200", "B_0220", "C^1_1111"}) {
        Poly g = cat.at(CovariantSymbol::parse(name));
        for (TransvectantIndex e : {TransvectantIndex{1, 0, 0, 0}, {1, 1, 0, 0}, {0, 1, 0, 0}}) {
            Poly lhs = transvectant(swap_x(f), swap_x(g), e);
            Poly rhs = swap_x(transvectant(f, g, e));
            CHECK(lhs == (e[0] % 2 ? -rhs : rhs));
        }
    }
}
