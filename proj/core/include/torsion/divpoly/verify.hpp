#pragma once

#include <cstdint>

#include "torsion/divpoly/divpoly.hpp"
#include "torsion/report.hpp"

namespace torsion {

// deg f_n = n^2 - 1 and deg F_n = D(n), both monic in x; no b8 left; leading
// coefficient of the psi body is n (odd n) or n/2 (even n).
Report verify_degrees(DivPolyTable& table, unsigned n_max);

// f_m | f_n exactly for all m | n <= n_max; F_m, F_n coprime (nonzero
// resultant in x) at the curve y^2 = x^3 - x and at five random nonsingular
// rational specializations.
Report verify_lattice(DivPolyTable& table, unsigned n_max, std::uint64_t seed = 20240607);

// f_n = prod_{d | n, d > 1} F_d^(2 / I(d)) as an exact polynomial identity.
Report verify_product_formula(DivPolyTable& table, unsigned n_max);

// The elliptic-net identity
//   psi_{m+n} psi_{m-n} psi_r^2 = psi_{m+r} psi_{m-r} psi_n^2 - psi_{n+r} psi_{n-r} psi_m^2
// for all 1 <= r < n < m with m + n <= n_max: symbolically while m + n <=
// symbolic_max, and exactly at three random rational points otherwise.
Report verify_psi_identities(DivPolyTable& table, unsigned n_max, unsigned symbolic_max = 8,
                             std::uint64_t seed = 20240607);

// True when univariate a, b (in var, rational coefficients) have no common
// root. Decided modulo large primes, falling back to an exact resultant.
bool coprime_univariate(const MPoly& a, const MPoly& b, Sym var);

}  // namespace torsion
