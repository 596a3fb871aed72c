#pragma once

#include <array>
#include <string>
#include <vector>

#include "qovar/catalog.hpp"

namespace qovar {

// The nine parametric normal forms, keyed by name:
//   G_abcd, L_abc2, L_a2b2, L_ab3, L_a4, L_a2_0_3+1bar, L_0_5+3bar,
//   L_0_7+1bar, L_0_3+1bar_0_3+1bar
// Coefficients are polynomials in the parameters a..d over Q(i,sqrt 2).
const std::vector<std::string>& normal_form_names();

// values assigned to the 16 form coefficients (index = 8i+4j+2k+l)
std::array<Poly, 16> normal_form_assignment(const std::string& name);

// the ground form with the assignment substituted
Poly state(const std::string& name);

// substitute the assignment into an arbitrary covariant
Poly evaluate_on(const Poly& covariant, const std::string& name);

// catalog symbol or alias, evaluated on the named form
Poly evaluate_covariant(const Catalog& cat, const std::string& symbol_or_alias,
                        const std::string& name);

// V(a^2,b^2,c^2,d^2) = (b^2-a^2)(c^2-a^2)(d^2-a^2)(c^2-b^2)(d^2-b^2)(d^2-c^2)
Poly vandermonde_sq();

}  // namespace qovar
