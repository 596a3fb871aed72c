#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "qovar/catalog.hpp"

using namespace qovar;

TEST_CASE("symbol parsing and rendering") {
    CHECK(CovariantSymbol::parse("B_0000").str() == "B_0000");
    CHECK(CovariantSymbol::parse("D^1_2220").str() == "D^1_2220");
    CHECK(CovariantSymbol::parse("D^1_2220").degree() == 4);
    CHECK(CovariantSymbol::parse("f") == kGroundForm);
    CHECK_THROWS(CovariantSymbol::parse("X_000"));
    CHECK_THROWS(CovariantSymbol::parse("B0000"));
}

TEST_CASE("recipe table shape") {
    const auto& rs = recipes();
    CHECK(rs.size() == 169);
    // dependency order and the degree law hold row by row
    for (const auto& r : rs) {
        CHECK(r.right.degree() < r.symbol.degree());
        for (int s = 0; s < 4; ++s)
            CHECK(r.symbol.sub[s] == 1 + r.right.sub[s] - 2 * r.index[s]);
    }
}

TEST_CASE("catalog to degree 2") {
    Catalog cat = Catalog::build(2);
    CHECK(cat.entries().size() == 8);  // f plus the seven degree-2 covariants
    CHECK(cat.at(CovariantSymbol::parse("B_0000")).nterms() == 8);
    CHECK(cat.at(CovariantSymbol::parse("B_2200")).nterms() == 32);
    auto md = cat.at(CovariantSymbol::parse("B_2200")).multidegree();
    REQUIRE(md.has_value());
    CHECK(md->mu == std::array<int, 4>{2, 2, 0, 0});
}

TEST_CASE("catalog to degree 5: counts and term-count anchors") {
    Catalog cat = Catalog::build(5);
    CHECK(cat.entries().size() == 1 + 7 + 6 + 20 + 13);
    CHECK(cat.check_counts().empty());
    CHECK(cat.at(CovariantSymbol::parse("C^1_1111")).nterms() == 224);
    CHECK(cat.at(CovariantSymbol::parse("C_3111")).nterms() == 304);
    CHECK(cat.at(CovariantSymbol::parse("D^1_0000")).nterms() == 60);
    CHECK(cat.at(CovariantSymbol::parse("E_1111")).nterms() == 1328);
    // integrality: integer coefficients everywhere
    for (const auto& [sym, poly] : cat.entries())
        for (const Term& t : poly.terms()) {
            CHECK(t.c.is_rational());
            CHECK(t.c.rat().is_integer());
        }
}

TEST_CASE("sources") {
    Catalog cat = Catalog::build(2);
    Poly f = cat.at(kGroundForm);
    CHECK(source(f) == Poly::indet(indet::form_coeff(0, 0, 0, 0)));
    Poly b0 = cat.at(CovariantSymbol::parse("B_0000"));
    CHECK(source(b0) == b0);
}

TEST_CASE("aliases") {
    Catalog cat = Catalog::build(2);
    Poly H = cat.resolve("H");
    CHECK(H.scaled(FieldElem(2)) == cat.at(CovariantSymbol::parse("B_0000")));
    Poly bzt = cat.resolve("b_zt");
    CHECK(bzt.scaled(FieldElem(2)) - cat.at(CovariantSymbol::parse("B_0022")) == Poly());
    CHECK_THROWS(cat.resolve("nonsense"));
}

TEST_CASE("cache round-trip equals fresh build") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "qovar-test-cache";
    fs::remove_all(dir);
    Catalog fresh = Catalog::build(4, dir.string());
    REQUIRE(fs::exists(dir / "degree-4.cov"));
    REQUIRE(fs::exists(dir / "index.txt"));
    Catalog warm = Catalog::build(4, dir.string());
    CHECK(fresh.entries().size() == warm.entries().size());
    for (const auto& [sym, poly] : fresh.entries()) CHECK(warm.at(sym) == poly);
    // single-entry load through the index
    auto one = cache_load_entry(dir.string(), CovariantSymbol::parse("D_4000"));
    REQUIRE(one.has_value());
    CHECK(*one == fresh.at(CovariantSymbol::parse("D_4000")));
    CHECK_FALSE(cache_load_entry(dir.string(), CovariantSymbol::parse("L_6000")).has_value());
    fs::remove_all(dir);
}
