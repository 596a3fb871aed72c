#include "qovar/normalforms.hpp"

namespace qovar {

namespace {

Poly param(int p) { return Poly::indet(indet::param(p)); }

Poly half(const Poly& p) { return p.scaled(FieldElem(Rational(1, 2))); }

// i/sqrt(2) = I*R/2
FieldElem i_over_sqrt2() { return FieldElem(Rational(), Rational(), Rational(), Rational(1, 2)); }

int ket(const char* s) {
    return indet::form_coeff(s[0] - '0', s[1] - '0', s[2] - '0', s[3] - '0');
}

struct Forms {
    std::vector<std::string> names;
    std::map<std::string, std::array<Poly, 16>> assign;

    void add(const std::string& name, const std::vector<std::pair<const char*, Poly>>& kets) {
        std::array<Poly, 16> a;
        for (const auto& [k, v] : kets) a[ket(k)] = v;
        names.push_back(name);
        assign[name] = std::move(a);
    }
};

const Forms& forms() {
    static const Forms table = [] {
        Forms t;
        Poly pa = param(0), pb = param(1), pc = param(2), pd = param(3);
        Poly one = Poly::constant(FieldElem(1));
        Poly irt2 = Poly::constant(i_over_sqrt2());
        Poly iu = Poly::constant(FieldElem::i());

        Poly apd = half(pa + pd), amd = half(pa - pd);
        Poly bpc = half(pb + pc), bmc = half(pb - pc);
        t.add("G_abcd", {{"0000", apd}, {"1111", apd}, {"0011", amd}, {"1100", amd},
                         {"0101", bpc}, {"1010", bpc}, {"0110", bmc}, {"1001", bmc}});

        Poly apb = half(pa + pb), amb = half(pa - pb);
        t.add("L_abc2", {{"0000", apb}, {"1111", apb}, {"0011", amb}, {"1100", amb},
                         {"0101", pc}, {"1010", pc}, {"0110", one}});

        t.add("L_a2b2", {{"0000", pa}, {"1111", pa}, {"0101", pb}, {"1010", pb},
                         {"0110", one}, {"0011", one}});

        t.add("L_ab3", {{"0000", pa}, {"1111", pa}, {"0101", apb}, {"1010", apb},
                        {"0110", amb}, {"1001", amb},
                        {"0001", irt2}, {"0010", irt2}, {"0111", irt2}, {"1011", irt2}});

        t.add("L_a4", {{"0000", pa}, {"0101", pa}, {"1010", pa}, {"1111", pa},
                       {"0001", iu}, {"0110", one}, {"1011", -iu}});

        t.add("L_a2_0_3+1bar", {{"0000", pa}, {"1111", pa}, {"0011", one}, {"0101", one},
                                {"0110", one}});

        t.add("L_0_5+3bar", {{"0000", one}, {"0101", one}, {"1000", one}, {"1110", one}});

        t.add("L_0_7+1bar", {{"0000", one}, {"1011", one}, {"1101", one}, {"1110", one}});

        t.add("L_0_3+1bar_0_3+1bar", {{"0000", one}, {"0111", one}});
        return t;
    }();
    return table;
}

}  // namespace

const std::vector<std::string>& normal_form_names() { return forms().names; }

std::array<Poly, 16> normal_form_assignment(const std::string& name) {
    auto it = forms().assign.find(name);
    if (it == forms().assign.end()) throw Error("unknown normal form '" + name + "'");
    return it->second;
}

Poly evaluate_on(const Poly& covariant, const std::string& name) {
    auto assign = normal_form_assignment(name);
    std::array<const Poly*, indet::kCount> sub{};
    for (int i = 0; i < 16; ++i) sub[i] = &assign[i];
    return covariant.substitute(sub);
}

Poly state(const std::string& name) { return evaluate_on(ground_form(), name); }

Poly evaluate_covariant(const Catalog& cat, const std::string& symbol_or_alias,
                        const std::string& name) {
    return evaluate_on(cat.resolve(symbol_or_alias), name);
}

Poly vandermonde_sq() {
    auto sq = [](int p) { return Poly::indet(indet::param(p)) * Poly::indet(indet::param(p)); };
    Poly a2 = sq(0), b2 = sq(1), c2 = sq(2), d2 = sq(3);
    Poly v = Poly::constant(FieldElem(1));
    const std::pair<const Poly*, const Poly*> factors[] = {
        {&b2, &a2}, {&c2, &a2}, {&d2, &a2}, {&c2, &b2}, {&d2, &b2}, {&d2, &c2}};
    for (auto [hi, lo] : factors) v = v * (*hi - *lo);
    return v;
}

}  // namespace qovar
