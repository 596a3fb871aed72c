#pragma once

#include <array>
#include <string>
#include <vector>

#include "qovar/catalog.hpp"

namespace qovar {

// the ground form after the coefficient-dependent slot substitutions;
// every term has degree 5 in the form coefficients
Poly associated_form();

// the 16 semi-invariants c_alpha: coefficient of x_{i+1}y_{j+1}z_{k+1}t_{l+1}
// in the associated form divided by the maximal power of a[0000], asserted
// equal to 5-(i+j+k+l) for the nonzero entries
struct SourceTable {
    std::array<Poly, 16> entries;  // label = 8i+4j+2k+l
};
SourceTable sources_table();

// the covariants whose sources are the table entries, expressed through the
// catalog: 1, four zeros, the six b_uv, +1/2 C_3111 and friends, and the
// quartic combination at label 1111
std::array<Poly, 16> source_covariants(const Catalog& cat);

// a formal rational combination of products of catalog entries / aliases;
// factor name "f" is the ground form
struct Syzygy {
    std::string description;
    std::vector<std::pair<Rational, std::vector<std::string>>> combination;
};

// expands the combination against the catalog; true iff identically zero
bool verify_syzygy(const Catalog& cat, const Syzygy& s);

// the bundled identities: the associated-form syzygy for D_4000 and the two
// degree-6 relations, plus a deliberately corrupted control (last entry,
// expected to fail)
const std::vector<Syzygy>& builtin_syzygies();
const Syzygy& corrupted_control();

// rationalize: substitute a_ijkl -> C_ijkl f^(1-i-j-k-l) in the source of a
// covariant and clear denominators.  numerator terms are (coefficient,
// multiset of labels alpha, extra f-power).
struct RationalExpression {
    struct NumTerm {
        Rational coeff;
        std::vector<int> labels;  // alpha labels, each 0..15, sorted
        int fpow;                 // nonnegative power of f in the numerator term
    };
    std::vector<NumTerm> numerator;
    int fpower;  // identity: f^fpower * covariant = sum of numerator terms
};
RationalExpression rationalize(const Catalog& cat, const CovariantSymbol& sym);
// expands the identity f^fpower * sym - numerator = 0 exactly
bool verify_rationalize(const Catalog& cat, const CovariantSymbol& sym);

// separation of the three degenerate normal forms
struct SeparationRow {
    std::string form;
    bool invariants_vanish;   // B_0000, D^1_0000, D^2_0000, F_0000 all zero
    Poly quadrilinear;        // (f, b_xy)^{1100} = 1/2 C^1_1111 on the form
    Poly biquadratic;         // (b_xz, b_xz)^{1010} on the form
    Poly c3111;               // catalog C_3111 on the form
    Poly d2200;               // catalog D_2200 on the form
};
struct SeparationReport {
    std::vector<SeparationRow> rows;
    bool signature_ok;  // (!=0,0), (!=0,!=0), (0,0) on the separator pair
};
SeparationReport separation_report(const Catalog& cat);

}  // namespace qovar
