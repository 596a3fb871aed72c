#pragma once

#include <array>
#include <vector>

#include "qovar/catalog.hpp"
#include "qovar/hilbert.hpp"

namespace qovar {

struct RankReport {
    int d = 0;
    std::array<int, 4> mu{};
    long long dim = 0;          // c_{d;mu}
    int reducible_rank = 0;     // rank of products of lower-degree generators
    long long new_needed = 0;   // dim - reducible_rank
    int new_supplied = 0;       // catalog generators at (d, mu)
    bool full_rank_ok = false;  // products + generators span the whole space
    long long expected_new = 0; // tabulated value (0 where the table is blank)
};

// all products of >= 2 catalog generators of degree < d whose total
// multidegree is exactly (d; mu), in a deterministic order
std::vector<Poly> enumerate_products(int d, const std::array<int, 4>& mu, const Catalog& cat);

// exact rank over Q of the coefficient-vector matrix (fraction-free
// elimination on an integer-scaled matrix); all inputs must share one
// multidegree
int rank_over_rationals(const std::vector<Poly>& polys);

// one report per (d <= dmax, mu) with c_{d;mu} > 0
std::vector<RankReport> verify_table(int dmax, const Catalog& cat, const HilbertSeries& hs);

}  // namespace qovar
