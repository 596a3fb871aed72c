#pragma once

#include <array>

#include "qovar/poly.hpp"

namespace qovar {

// Index vector (e1,e2,e3,e4) of a multiple transvectant, one entry per
// variable slot x,y,z,t.
using TransvectantIndex = std::array<int, 4>;

// Multiple transvectant tr Omega_1^e1 ... Omega_4^e4 f(x',..) g(x'',..),
// unnormalized (no binomial prefactors).  Out-of-range indices give 0.
// Expanded per slot as
//   Omega^k = sum_j (-1)^j C(k,j) (d1^{k-j} d2^j (x) d1^j d2^{k-j}),
// with f in the primed (first) determinant column.
Poly transvectant(const Poly& f, const Poly& g, const TransvectantIndex& e);

// single-slot k-fold Omega applied to f (x) g and merged back; slot 0..3
Poly omega_power_pair(const Poly& f, const Poly& g, int slot, int k);

// Literal primed-variable implementation on a private doubled universe,
// kept as the serial reference for the production kernel.
Poly oracle_transvectant(const Poly& f, const Poly& g, const TransvectantIndex& e);

// every (e, tr Omega^e f' g'') with e1+..+e4 <= esum_max, sharing the Omega
// applications along the enumeration; same results as oracle_transvectant
std::vector<std::pair<TransvectantIndex, Poly>> oracle_transvectant_all(const Poly& f,
                                                                        const Poly& g,
                                                                        int esum_max);

}  // namespace qovar
