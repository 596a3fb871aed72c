#include "qovar/minimality.hpp"

#include <algorithm>
#include <gmpxx.h>

namespace qovar {

namespace {

struct Gen {
    CovariantSymbol sym;
    const Poly* poly;
    int d;
    std::array<int, 4> mu;
};

void enumerate_rec(const std::vector<Gen>& gens, std::size_t start, int dleft,
                   std::array<int, 4> muleft, int nfactors, Poly acc, std::vector<Poly>& out) {
    if (dleft == 0) {
        bool exact = muleft == std::array<int, 4>{0, 0, 0, 0};
        if (exact && nfactors >= 2) out.push_back(std::move(acc));
        return;
    }
    for (std::size_t i = start; i < gens.size(); ++i) {
        const Gen& g = gens[i];
        if (g.d > dleft) continue;
        bool fits = true;
        std::array<int, 4> mu2 = muleft;
        for (int s = 0; s < 4; ++s) {
            mu2[s] -= g.mu[s];
            if (mu2[s] < 0) fits = false;
        }
        if (!fits) continue;
        enumerate_rec(gens, i, dleft - g.d, mu2, nfactors + 1, acc * *g.poly, out);
    }
}

}  // namespace

std::vector<Poly> enumerate_products(int d, const std::array<int, 4>& mu, const Catalog& cat) {
    std::vector<Gen> gens;
    for (const auto& [sym, poly] : cat.entries()) {
        if (sym.degree() >= d) continue;
        gens.push_back({sym, &poly, sym.degree(), sym.sub});
    }
    std::vector<Poly> out;
    enumerate_rec(gens, 0, d, mu, 0, Poly::constant(FieldElem(1)), out);
    return out;
}

int rank_over_rationals(const std::vector<Poly>& polys) {
    std::vector<const Poly*> live;
    std::optional<MultiDegree> md;
    for (const Poly& p : polys) {
        if (p.is_zero()) continue;
        auto m = p.multidegree();
        if (!m) throw Error("rank: inhomogeneous polynomial");
        if (md && !(*m == *md)) throw Error("rank: mixed multidegrees");
        md = m;
        live.push_back(&p);
    }
    if (live.empty()) return 0;

    // column index: union of monomials
    std::vector<Monomial> cols;
    for (const Poly* p : live)
        for (const Term& t : p->terms()) cols.push_back(t.m);
    std::sort(cols.begin(), cols.end(), mono_less);
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    std::size_t m = cols.size();

    auto col_of = [&](const Monomial& mo) {
        return std::lower_bound(cols.begin(), cols.end(), mo, mono_less) - cols.begin();
    };

    // integer matrix: scale each row by the lcm of its denominators
    std::vector<std::vector<mpz_class>> rows;
    for (const Poly* p : live) {
        mpz_class lcm = 1;
        for (const Term& t : p->terms()) {
            if (!t.c.is_rational()) throw Error("rank: non-rational coefficient");
            mpq_class q = t.c.rat().to_mpq();
            mpz_class den = q.get_den();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
            lcm = lcm / g * den;
        }
        std::vector<mpz_class> row(m, mpz_class(0));
        for (const Term& t : p->terms()) {
            mpq_class q = t.c.rat().to_mpq();
            row[col_of(t.m)] = q.get_num() * (lcm / q.get_den());
        }
        rows.push_back(std::move(row));
    }

    // fraction-free elimination, pivot of minimal absolute value
    std::size_t n = rows.size();
    int rank = 0;
    mpz_class prev = 1;
    std::size_t col = 0;
    for (std::size_t r = 0; r < n && col < m; ++col) {
        std::size_t best = n;
        for (std::size_t i = r; i < n; ++i) {
            if (rows[i][col] == 0) continue;
            if (best == n || mpz_cmpabs(rows[i][col].get_mpz_t(), rows[best][col].get_mpz_t()) < 0)
                best = i;
        }
        if (best == n) continue;
        std::swap(rows[r], rows[best]);
        const mpz_class pivot = rows[r][col];
        for (std::size_t i = r + 1; i < n; ++i) {
            for (std::size_t j = col + 1; j < m; ++j)
                rows[i][j] = (rows[i][j] * pivot - rows[i][col] * rows[r][j]) / prev;
            rows[i][col] = 0;
        }
        prev = pivot;
        ++rank;
        ++r;
    }
    return rank;
}

std::vector<RankReport> verify_table(int dmax, const Catalog& cat, const HilbertSeries& hs) {
    if (cat.dmax() < dmax) throw Error("verify_table: catalog not built far enough");
    if (hs.tmax() < dmax) throw Error("verify_table: series not built far enough");

    // tabulated new-generator counts by (d, sorted mu)
    std::map<std::pair<int, std::array<int, 4>>, int> expected;
    for (const CountRow& row : expected_counts())
        for (int d = 1; d <= 12; ++d)
            if (row.per_degree[d - 1]) expected[{d, row.lambda}] = row.per_degree[d - 1];

    std::vector<std::pair<int, std::array<int, 4>>> cells;
    for (int d = 1; d <= dmax; ++d)
        for (const auto& [mu, dim] : hs.nonzero_types(d)) cells.push_back({d, mu});

    std::vector<RankReport> reports(cells.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(cells.size()); ++i) {
        auto [d, mu] = cells[i];
        RankReport rep;
        rep.d = d;
        rep.mu = mu;
        rep.dim = hs.covariant_dimension(d, mu);
        std::vector<Poly> prods = enumerate_products(d, mu, cat);
        rep.reducible_rank = rank_over_rationals(prods);
        rep.new_needed = rep.dim - rep.reducible_rank;
        for (const auto& [sym, poly] : cat.entries())
            if (sym.degree() == d && sym.sub == mu) {
                ++rep.new_supplied;
                prods.push_back(poly);
            }
        rep.full_rank_ok = rank_over_rationals(prods) == rep.dim;
        std::array<int, 4> lam = mu;
        std::sort(lam.begin(), lam.end(), std::greater<int>());
        auto it = expected.find({d, lam});
        rep.expected_new = it == expected.end() ? 0 : it->second;
        reports[i] = std::move(rep);
    }
    return reports;
}

}  // namespace qovar
