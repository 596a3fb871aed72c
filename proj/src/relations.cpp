#include "qovar/relations.hpp"

#include <algorithm>

#include "qovar/normalforms.hpp"
#include "qovar/transvect.hpp"

namespace qovar {

namespace {

int label_weight(int alpha) {
    return ((alpha >> 3) & 1) + ((alpha >> 2) & 1) + ((alpha >> 1) & 1) + (alpha & 1);
}

}  // namespace

Poly associated_form() {
    Poly f = ground_form();
    std::array<Poly, 8> images;
    // v1 -> a0000 v1 - a_killer v2,  v2 -> a0000 v2 per slot
    const int killer[4] = {indet::form_coeff(1, 0, 0, 0), indet::form_coeff(0, 1, 0, 0),
                           indet::form_coeff(0, 0, 1, 0), indet::form_coeff(0, 0, 0, 1)};
    Poly a0 = Poly::indet(indet::form_coeff(0, 0, 0, 0));
    for (int s = 0; s < 4; ++s) {
        Poly v1 = Poly::indet(indet::var(s, 0));
        Poly v2 = Poly::indet(indet::var(s, 1));
        images[2 * s] = a0 * v1 - Poly::indet(killer[s]) * v2;
        images[2 * s + 1] = a0 * v2;
    }
    std::array<const Poly*, indet::kCount> sub{};
    for (int v = 0; v < 8; ++v) sub[indet::kVar + v] = &images[v];
    return f.substitute(sub);
}

SourceTable sources_table() {
    Poly F = associated_form();
    SourceTable out;
    for (int alpha = 0; alpha < 16; ++alpha) {
        Monomial vm = Monomial::one();
        for (int s = 0; s < 4; ++s) {
            int comp = (alpha >> (3 - s)) & 1;
            vm.e[indet::var(s, comp)] = 1;
        }
        Poly coeff = F.coefficient_extract(vm);
        if (coeff.is_zero()) {
            out.entries[alpha] = coeff;
            continue;
        }
        // divide by the maximal power of a[0000]
        int a0 = indet::form_coeff(0, 0, 0, 0);
        int minpow = 255;
        for (const Term& t : coeff.terms()) minpow = std::min<int>(minpow, t.m.e[a0]);
        if (minpow != 5 - label_weight(alpha))
            throw Error("sources_table: a[0000] power " + std::to_string(minpow) +
                        " at label " + std::to_string(alpha) + ", expected " +
                        std::to_string(5 - label_weight(alpha)));
        out.entries[alpha] = coeff.exact_divide(Poly::monomial(Monomial::of(a0, minpow)));
    }
    return out;
}

std::array<Poly, 16> source_covariants(const Catalog& cat) {
    std::array<Poly, 16> out;
    Poly f = cat.at(kGroundForm);
    Poly H = cat.resolve("H");
    auto b = [&](const char* n) { return cat.resolve(n); };
    auto C = [&](const char* n) { return cat.resolve(n).scaled(FieldElem(Rational(1, 2))); };
    out[0b0000] = Poly::constant(FieldElem(1));
    out[0b0011] = b("b_xy");
    out[0b0101] = b("b_xz");
    out[0b0110] = b("b_xt");
    out[0b1001] = b("b_yz");
    out[0b1010] = b("b_yt");
    out[0b1100] = b("b_zt");
    out[0b0111] = C("C_3111");
    out[0b1011] = C("C_1311");
    out[0b1101] = C("C_1131");
    out[0b1110] = C("C_1113");
    out[0b1111] = H * f * f - b("b_xy") * b("b_zt") - b("b_xz") * b("b_yt") - b("b_xt") * b("b_yz");
    return out;
}

RationalExpression rationalize(const Catalog& cat, const CovariantSymbol& sym) {
    Poly src = source(cat.at(sym));
    RationalExpression out;
    int minshift = 0;
    std::vector<std::pair<Rational, std::vector<int>>> raw;
    std::vector<int> shifts;
    for (const Term& t : src.terms()) {
        std::vector<int> labels;
        int shift = 0;
        bool dead = false;
        for (int alpha = 0; alpha < 16; ++alpha) {
            int e = t.m.e[alpha];
            if (!e) continue;
            int w = label_weight(alpha);
            if (w == 1) {  // the four vanishing table entries
                dead = true;
                break;
            }
            // a_0000 maps to C_0000 * f = f itself
            if (alpha != 0)
                for (int i = 0; i < e; ++i) labels.push_back(alpha);
            shift += e * (1 - w);
        }
        if (dead) continue;
        if (!t.c.is_rational()) throw Error("rationalize: non-rational source coefficient");
        raw.push_back({t.c.rat(), std::move(labels)});
        shifts.push_back(shift);
        minshift = std::min(minshift, shift);
    }
    out.fpower = -minshift;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        RationalExpression::NumTerm nt;
        nt.coeff = raw[i].first;
        nt.labels = raw[i].second;
        std::sort(nt.labels.begin(), nt.labels.end());
        nt.fpow = shifts[i] + out.fpower;
        out.numerator.push_back(std::move(nt));
    }
    return out;
}

bool verify_rationalize(const Catalog& cat, const CovariantSymbol& sym) {
    RationalExpression ex = rationalize(cat, sym);
    auto calpha = source_covariants(cat);
    Poly f = cat.at(kGroundForm);
    Poly lhs = cat.at(sym) * f.pow(ex.fpower);
    Poly rhs;
    for (const auto& nt : ex.numerator) {
        Poly term = Poly::constant(FieldElem(nt.coeff)) * f.pow(nt.fpow);
        for (int alpha : nt.labels) term = term * calpha[alpha];
        rhs += term;
    }
    return lhs == rhs;
}

bool verify_syzygy(const Catalog& cat, const Syzygy& s) {
    Poly total;
    for (const auto& [coeff, factors] : s.combination) {
        Poly term = Poly::constant(FieldElem(coeff));
        for (const std::string& name : factors) term = term * cat.resolve(name);
        total += term;
    }
    return total.is_zero();
}

const std::vector<Syzygy>& builtin_syzygies() {
    static const std::vector<Syzygy> table = [] {
        std::vector<Syzygy> out;
        Rational one(1);
        // associated-form syzygy for D_4000 (the printed constant 4 holds in
        // the half-normalized units; over the tabulated covariants it is 16)
        out.push_back({"f^2*D_4000 + C_3111^2 + 16*b_xy*b_xz*b_xt",
                       {{one, {"f", "f", "D_4000"}},
                        {one, {"C_3111", "C_3111"}},
                        {Rational(16), {"b_xy", "b_xz", "b_xt"}}}});
        // first degree-6 relation
        out.push_back({"D^2_0000*f^2 + 2*D^1_0000*f^2 - 6*B_2200*B_0022*B_0000 "
                       "+ 6*B_2020*B_0202*B_0000 - 3*D_2200*B_0022 - 3*D_0022*B_2200 "
                       "+ 3*D_0220*B_2002 + 3*D_2002*B_0220 - C^2_1111^2 - 2*C^1_1111*C^2_1111",
                       {{one, {"D^2_0000", "f", "f"}},
                        {Rational(2), {"D^1_0000", "f", "f"}},
                        {Rational(-6), {"B_2200", "B_0022", "B_0000"}},
                        {Rational(6), {"B_2020", "B_0202", "B_0000"}},
                        {Rational(-3), {"D_2200", "B_0022"}},
                        {Rational(-3), {"D_0022", "B_2200"}},
                        {Rational(3), {"D_0220", "B_2002"}},
                        {Rational(3), {"D_2002", "B_0220"}},
                        {Rational(-1), {"C^2_1111", "C^2_1111"}},
                        {Rational(-2), {"C^1_1111", "C^2_1111"}}}});
        // second degree-6 relation
        out.push_back({"C^1_1111^2 + 3*D^1_0000*f^2 - 18*B_2200*B_0022*B_0000 "
                       "+ 18*B_2020*B_0202*B_0000 - 6*D_2200*B_0022 - 6*D_0022*B_2200 "
                       "- 6*D_2020*B_0202 + 3*D_0202*B_2020 + 3*D_0220*B_2002 "
                       "+ 3*D_2002*B_0220 - 2*C^2_1111^2 - 2*C^1_1111*C^2_1111",
                       {{one, {"C^1_1111", "C^1_1111"}},
                        {Rational(3), {"D^1_0000", "f", "f"}},
                        {Rational(-18), {"B_2200", "B_0022", "B_0000"}},
                        {Rational(18), {"B_2020", "B_0202", "B_0000"}},
                        {Rational(-6), {"D_2200", "B_0022"}},
                        {Rational(-6), {"D_0022", "B_2200"}},
                        {Rational(-6), {"D_2020", "B_0202"}},
                        {Rational(3), {"D_0202", "B_2020"}},
                        {Rational(3), {"D_0220", "B_2002"}},
                        {Rational(3), {"D_2002", "B_0220"}},
                        {Rational(-2), {"C^2_1111", "C^2_1111"}},
                        {Rational(-2), {"C^1_1111", "C^2_1111"}}}});
        return out;
    }();
    return table;
}

const Syzygy& corrupted_control() {
    static const Syzygy s{"f^2*D_4000 + C_3111^2 (corrupted control)",
                          {{Rational(1), {"f", "f", "D_4000"}}, {Rational(1), {"C_3111", "C_3111"}}}};
    return s;
}

SeparationReport separation_report(const Catalog& cat) {
    SeparationReport rep;
    Poly f = cat.at(kGroundForm);
    Poly quad = transvectant(f, cat.resolve("b_xy"), {1, 1, 0, 0});
    Poly bxz = cat.resolve("b_xz");
    Poly biquad = transvectant(bxz, bxz, {1, 0, 1, 0});

    const char* formnames[3] = {"L_0_5+3bar", "L_0_7+1bar", "L_0_3+1bar_0_3+1bar"};
    for (const char* name : formnames) {
        SeparationRow row;
        row.form = name;
        row.invariants_vanish = true;
        for (const char* inv : {"B_0000", "D^1_0000", "D^2_0000", "F_0000"})
            row.invariants_vanish &= evaluate_covariant(cat, inv, name).is_zero();
        row.quadrilinear = evaluate_on(quad, name);
        row.biquadratic = evaluate_on(biquad, name);
        row.c3111 = evaluate_covariant(cat, "C_3111", name);
        row.d2200 = evaluate_covariant(cat, "D_2200", name);
        rep.rows.push_back(std::move(row));
    }
    rep.signature_ok = !rep.rows[0].quadrilinear.is_zero() && rep.rows[0].biquadratic.is_zero() &&
                       !rep.rows[1].quadrilinear.is_zero() && !rep.rows[1].biquadratic.is_zero() &&
                       rep.rows[2].quadrilinear.is_zero() && rep.rows[2].biquadratic.is_zero();
    return rep;
}

}  // namespace qovar
