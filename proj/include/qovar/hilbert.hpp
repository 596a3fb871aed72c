#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "qovar/error.hpp"

namespace qovar {

// Finitely supported Laurent polynomial in u1..u4 with int64 coefficients.
struct LaurentExp {
    std::array<int, 4> e{};
    bool operator==(const LaurentExp&) const = default;
    bool operator<(const LaurentExp& o) const { return e < o.e; }
};

struct LaurentExpHash {
    std::size_t operator()(const LaurentExp& k) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (int v : k.e) {
            h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

using LaurentPoly = std::unordered_map<LaurentExp, long long, LaurentExpHash>;

// Per-degree characters of the symmetric powers S^d(H): the coefficient of
// t^d in prod_{alpha in {-1,1}^4} (1 - u^alpha t)^(-1), exact integers.
class HilbertSeries {
public:
    explicit HilbertSeries(int tmax);

    int tmax() const { return tmax_; }
    const LaurentPoly& character_of_symmetric_power(int d) const;

    // c_{d;mu}: dimension of the space of covariants of degree d, type mu
    long long covariant_dimension(int d, const std::array<int, 4>& mu) const;

    // coefficient of t^d of h(t,u,u,u,u): map u-power -> coefficient
    std::map<int, long long> diagonal_coefficient(int d) const;

    // c_{d;(0,0,0,0)} for d = 0..tmax
    std::vector<long long> invariant_series() const;

    // all mu with c_{d;mu} > 0, with the dimensions
    std::map<std::array<int, 4>, long long> nonzero_types(int d) const;

private:
    int tmax_;
    std::vector<LaurentPoly> chars_;
};

// one cell where the printed diagonal P/Q disagrees with the truncated series
struct PQMismatch {
    int d;
    int upow;
    long long series_value;
    long long printed_value;
    bool operator==(const PQMismatch&) const = default;
};

// expands the printed P/Q as a t-series and diffs it against the truncation
std::vector<PQMismatch> compare_with_printed_pq(const HilbertSeries& hs, int tmax);

struct KrullReport {
    int q_multiplicity;          // (1-t)-multiplicity of Q(u=t), counted per factor
    int printed_p_multiplicity;  // (1-t)-multiplicity of the printed P(t,t)
    long long printed_p_at_one;  // P(1,1)
    int krull;                   // pole order of the true diagonal series
};

// Pole order of h(t,...,t) at t=1.  The denominator count gives 12; the
// printed numerator's own vanishing at t=1 comes from its transcription
// defects (the same data fails the coefficient diff, see
// compare_with_printed_pq) and is reported, not subtracted.
KrullReport krull_report();
inline int krull_dimension() { return krull_report().krull; }

// printed diagonal numerator as {t-degree -> {u-power -> coeff}} and the
// denominator factor list {(t-exp, u-exp)}
const std::map<int, std::map<int, long long>>& printed_diagonal_numerator();
const std::vector<std::pair<int, int>>& printed_diagonal_denominator();

}  // namespace qovar
