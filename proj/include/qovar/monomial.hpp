#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <string>

#include "qovar/error.hpp"

namespace qovar {

// The fixed indeterminate universe, in the canonical total order:
//   a[0000] < a[0001] < ... < a[1111]  (indices 0..15, index = 8i+4j+2k+l)
//   < x1 < x2 < y1 < y2 < z1 < z2 < t1 < t2   (indices 16..23)
//   < a < b < c < d                           (parameters, indices 24..27)
namespace indet {

constexpr int kCount = 28;
constexpr int kFormCoeff = 0;   // first a[ijkl]
constexpr int kVar = 16;        // first variable component (x1)
constexpr int kParam = 24;      // first parameter

constexpr int form_coeff(int i, int j, int k, int l) { return 8 * i + 4 * j + 2 * k + l; }
// slot: 0..3 for x,y,z,t; comp: 0 or 1 for the two components
constexpr int var(int slot, int comp) { return kVar + 2 * slot + comp; }
constexpr int param(int p) { return kParam + p; }

constexpr bool is_form_coeff(int v) { return v < kVar; }
constexpr bool is_var(int v) { return v >= kVar && v < kParam; }
constexpr bool is_param(int v) { return v >= kParam && v < kCount; }

std::string name(int v);
// parses "a[ijkl]", "x1".."t2", "a".."d"; throws on anything else
int from_name(const std::string& s);

}  // namespace indet

// Exponent vector over the 28-indeterminate universe, packed into 32 bytes.
struct Monomial {
    alignas(8) std::array<std::uint8_t, 32> e{};

    static Monomial one() { return Monomial{}; }
    static Monomial of(int v, int exp = 1) {
        Monomial m;
        m.e[v] = static_cast<std::uint8_t>(exp);
        return m;
    }

    bool is_one() const {
        for (int i = 0; i < indet::kCount; ++i)
            if (e[i]) return false;
        return true;
    }

    int deg() const {
        int s = 0;
        for (int i = 0; i < indet::kCount; ++i) s += e[i];
        return s;
    }

    Monomial mul(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < indet::kCount; ++i) {
            int v = e[i] + o.e[i];
            if (v > 255) throw Error("monomial: exponent overflow");
            r.e[i] = static_cast<std::uint8_t>(v);
        }
        return r;
    }

    bool divides(const Monomial& o) const {
        for (int i = 0; i < indet::kCount; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }

    // componentwise o/this; requires divides(o)
    Monomial divide_into(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < indet::kCount; ++i) r.e[i] = static_cast<std::uint8_t>(o.e[i] - e[i]);
        return r;
    }

    bool operator==(const Monomial& o) const { return std::memcmp(e.data(), o.e.data(), 32) == 0; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    std::size_t hash() const {
        std::uint64_t w[4];
        std::memcpy(w, e.data(), 32);
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (std::uint64_t x : w) {
            h ^= x;
            h *= 0xff51afd7ed558ccdULL;
            h ^= h >> 33;
        }
        return static_cast<std::size_t>(h);
    }
};

// Graded-lex over the fixed order: total degree first, then the exponent of
// the largest indeterminate (d, index 27) decides, downwards.
inline int mono_cmp(const Monomial& a, const Monomial& b) {
    int da = a.deg(), db = b.deg();
    if (da != db) return da < db ? -1 : 1;
    for (int i = indet::kCount - 1; i >= 0; --i) {
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    }
    return 0;
}

inline bool mono_less(const Monomial& a, const Monomial& b) { return mono_cmp(a, b) < 0; }

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace qovar
