#pragma once

#include <array>
#include <string>

#include "qovar/error.hpp"
#include "qovar/transvect.hpp"

namespace qovar {

// Tabulated covariant name: letter A..L (the degree in the form
// coefficients), four variable-degree subscripts, and an optional tag
// distinguishing covariants of equal degrees.  Rendered "D^1_2220",
// "B_0000", ... with tag 0 meaning no tag.
struct CovariantSymbol {
    char letter = 'A';
    std::array<int, 4> sub{};
    int tag = 0;

    int degree() const { return letter - 'A' + 1; }

    std::string str() const;
    static CovariantSymbol parse(const std::string& s);

    bool operator==(const CovariantSymbol&) const = default;
    bool operator<(const CovariantSymbol& o) const {
        if (letter != o.letter) return letter < o.letter;
        if (sub != o.sub) return sub < o.sub;
        return tag < o.tag;
    }
};

inline const CovariantSymbol kGroundForm{'A', {1, 1, 1, 1}, 0};

struct CovariantRecipe {
    CovariantSymbol symbol;
    CovariantSymbol right;  // the left operand is always the ground form
    TransvectantIndex index;
};

// All 169 tabulated recipes beyond the ground form, in dependency order.
const std::vector<CovariantRecipe>& recipes();

// Generator-count table: rows are sorted variable-degree types, columns the
// degree in the form coefficients; value = generators per subscript
// permutation.
struct CountRow {
    std::array<int, 4> lambda;       // nonincreasing
    std::array<int, 12> per_degree;  // index d-1
};
const std::vector<CountRow>& expected_counts();

}  // namespace qovar
