#include "qovar/transvect.hpp"

#include <cstring>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qovar {

namespace {

long long binom(int n, int k) {
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// derivative pattern of one operand: order[v] in each of the 8 components
struct DerivOrders {
    std::array<int, 8> ord{};
};

// applies the falling-factorial derivative directly to a term; returns false
// if it dies
bool derive_term(const Monomial& m, const FieldElem& c, const DerivOrders& d, Monomial& mo,
                 FieldElem& co) {
    mo = m;
    long long scale = 1;
    for (int v = 0; v < 8; ++v) {
        int k = d.ord[v];
        if (!k) continue;
        int e = mo.e[indet::kVar + v];
        if (e < k) return false;
        for (int i = 0; i < k; ++i) scale *= (e - i);
        mo.e[indet::kVar + v] = static_cast<std::uint8_t>(e - k);
    }
    co = c * FieldElem(scale);
    return true;
}

struct Combo {
    DerivOrders df, dg;
    long long coeff;
};

std::vector<Combo> combos_for(const TransvectantIndex& e) {
    std::vector<Combo> out;
    std::array<int, 4> j{};
    while (true) {
        Combo c;
        c.coeff = 1;
        for (int s = 0; s < 4; ++s) {
            c.coeff *= ((j[s] & 1) ? -1 : 1) * binom(e[s], j[s]);
            c.df.ord[2 * s] = e[s] - j[s];
            c.df.ord[2 * s + 1] = j[s];
            c.dg.ord[2 * s] = j[s];
            c.dg.ord[2 * s + 1] = e[s] - j[s];
        }
        out.push_back(c);
        int s = 0;
        while (s < 4 && j[s] == e[s]) j[s++] = 0;
        if (s == 4) break;
        ++j[s];
    }
    return out;
}

Poly transvectant_core(const Poly& small, const Poly& big, const TransvectantIndex& e,
                       bool swapped) {
    // small/big may be (f,g) or (g,f); each operand always receives its own
    // derivative pattern, so the orientation of the result is unchanged
    auto combos = combos_for(e);
    std::vector<std::vector<Term>> small_parts(combos.size());
    for (std::size_t ci = 0; ci < combos.size(); ++ci) {
        const DerivOrders& d = swapped ? combos[ci].dg : combos[ci].df;
        for (const Term& t : small.terms()) {
            Monomial mo;
            FieldElem co;
            if (derive_term(t.m, t.c, d, mo, co)) small_parts[ci].push_back({mo, std::move(co)});
        }
    }

    auto run_range = [&](std::size_t lo, std::size_t hi, TermAccumulator& acc) {
        for (std::size_t i = lo; i < hi; ++i) {
            const Term& tg = big.terms()[i];
            for (std::size_t ci = 0; ci < combos.size(); ++ci) {
                Monomial mg;
                FieldElem cg;
                const DerivOrders& d = swapped ? combos[ci].df : combos[ci].dg;
                if (!derive_term(tg.m, tg.c, d, mg, cg)) continue;
                cg *= FieldElem(combos[ci].coeff);
                for (const Term& tf : small_parts[ci]) acc.add(tf.m.mul(mg), tf.c * cg);
            }
        }
    };

#ifdef _OPENMP
    if (big.nterms() > 4096 && omp_get_max_threads() > 1 && !omp_in_parallel()) {
        int nt = omp_get_max_threads();
        std::vector<TermAccumulator> accs;
        accs.reserve(nt);
        for (int i = 0; i < nt; ++i) accs.emplace_back(big.nterms() / nt + 16);
#pragma omp parallel num_threads(nt)
        {
            int id = omp_get_thread_num();
            std::size_t n = big.nterms();
            std::size_t lo = n * id / nt, hi = n * (id + 1) / nt;
            run_range(lo, hi, accs[id]);
        }
        for (int i = 1; i < nt; ++i) accs[0].merge(std::move(accs[i]));
        return accs[0].take();
    }
#endif
    TermAccumulator acc(big.nterms() + 16);
    run_range(0, big.nterms(), acc);
    return acc.take();
}

}  // namespace

Poly transvectant(const Poly& f, const Poly& g, const TransvectantIndex& e) {
    if (f.is_zero() || g.is_zero()) return Poly();
    // materialize the smaller operand's derivatives, stream the larger
    if (f.nterms() <= g.nterms()) return transvectant_core(f, g, e, false);
    return transvectant_core(g, f, e, true);
}

Poly omega_power_pair(const Poly& f, const Poly& g, int slot, int k) {
    TransvectantIndex e{};
    e[slot] = k;
    return transvectant(f, g, e);
}

// --- primed-variable oracle ------------------------------------------------

namespace {

// doubled universe: 20 slots of a/params shared + 16 primed components.
// Layout: [0..15] a, [16..23] primed x'1..t'2, [24..31] doubled x''1..t''2,
// [32..35] params.
struct XMono {
    std::array<std::uint8_t, 36> e{};
    bool operator==(const XMono& o) const { return std::memcmp(e.data(), o.e.data(), 36) == 0; }
};

struct XMonoHash {
    std::size_t operator()(const XMono& m) const {
        std::uint64_t h = 1469598103934665603ULL;
        for (auto b : m.e) {
            h ^= b;
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

using XPoly = std::unordered_map<XMono, FieldElem, XMonoHash>;

void xadd(XPoly& p, const XMono& m, const FieldElem& c) {
    auto [it, fresh] = p.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

XPoly embed(const Poly& p, int var_base) {
    XPoly out;
    for (const Term& t : p.terms()) {
        XMono m;
        for (int v = 0; v < 16; ++v) m.e[v] = t.m.e[v];
        for (int v = 0; v < 8; ++v) m.e[var_base + v] = t.m.e[indet::kVar + v];
        for (int v = 0; v < 4; ++v) m.e[32 + v] = t.m.e[indet::kParam + v];
        xadd(out, m, t.c);
    }
    return out;
}

XPoly xderiv(const XPoly& p, int v) {
    XPoly out;
    out.reserve(p.size());
    for (const auto& [m, c] : p) {
        int e = m.e[v];
        if (!e) continue;
        XMono m2 = m;
        m2.e[v] = static_cast<std::uint8_t>(e - 1);
        xadd(out, m2, c * FieldElem(e));
    }
    return out;
}

XPoly xmul(const XPoly& a, const XPoly& b) {
    XPoly out;
    out.reserve(a.size() * b.size());
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            XMono m;
            for (int i = 0; i < 36; ++i) m.e[i] = static_cast<std::uint8_t>(ma.e[i] + mb.e[i]);
            xadd(out, m, ca * cb);
        }
    return out;
}

}  // namespace

namespace {

XPoly omega_once(const XPoly& prod, int s) {
    int p1 = 16 + 2 * s, p2 = 16 + 2 * s + 1;
    int q1 = 24 + 2 * s, q2 = 24 + 2 * s + 1;
    XPoly t1 = xderiv(xderiv(prod, p1), q2);
    XPoly t2 = xderiv(xderiv(prod, p2), q1);
    for (const auto& [m, c] : t2) xadd(t1, m, -c);
    return t1;
}

Poly trace(const XPoly& prod) {
    TermAccumulator acc(prod.size());
    for (const auto& [m, c] : prod) {
        Monomial out;
        for (int v = 0; v < 16; ++v) out.e[v] = m.e[v];
        for (int v = 0; v < 8; ++v)
            out.e[indet::kVar + v] = static_cast<std::uint8_t>(m.e[16 + v] + m.e[24 + v]);
        for (int v = 0; v < 4; ++v) out.e[indet::kParam + v] = m.e[32 + v];
        acc.add(out, c);
    }
    return acc.take();
}

void oracle_walk(const XPoly& cur, int slot, TransvectantIndex e, int budget,
                 std::vector<std::pair<TransvectantIndex, Poly>>& out) {
    if (slot == 4) {
        out.push_back({e, trace(cur)});
        return;
    }
    XPoly p = cur;
    for (int k = 0;; ++k) {
        e[slot] = k;
        oracle_walk(p, slot + 1, e, budget - k, out);
        if (k == budget) break;
        p = omega_once(p, slot);
        if (p.empty()) {
            // all deeper indices in this slot stay zero
            for (int k2 = k + 1; k2 <= budget; ++k2) {
                e[slot] = k2;
                oracle_walk(p, slot + 1, e, budget - k2, out);
            }
            break;
        }
    }
}

}  // namespace

std::vector<std::pair<TransvectantIndex, Poly>> oracle_transvectant_all(const Poly& f,
                                                                        const Poly& g,
                                                                        int esum_max) {
    std::vector<std::pair<TransvectantIndex, Poly>> out;
    XPoly prod = xmul(embed(f, 16), embed(g, 24));
    oracle_walk(prod, 0, {0, 0, 0, 0}, esum_max, out);
    return out;
}

Poly oracle_transvectant(const Poly& f, const Poly& g, const TransvectantIndex& e) {
    // Omega_s = d/dx'_1 d/dx''_2 - d/dx'_2 d/dx''_1 applied e_s times, then tr
    XPoly prod = xmul(embed(f, 16), embed(g, 24));
    for (int s = 0; s < 4; ++s)
        for (int rep = 0; rep < e[s]; ++rep) prod = omega_once(prod, s);
    return trace(prod);
}

}  // namespace qovar
