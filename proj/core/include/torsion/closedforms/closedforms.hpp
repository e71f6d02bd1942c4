#pragma once

#include <map>
#include <nlohmann/json.hpp>

#include "torsion/closedforms/jordan.hpp"
#include "torsion/divpoly/divpoly.hpp"
#include "torsion/report.hpp"

namespace torsion {

// Degree and leading coefficients of f_n and F_n from the closed formulas.
// C_{r,s,t} is the coefficient of b2^r b4^s b6^t x^(D - r - 2s - 3t) in F_n,
// c_{r,s,t} the same in f_n with d in place of D.
struct ClosedFormEval {
  unsigned long n = 0;
  BigInt d, D;
  unsigned I = 1;
  Rat c100, c010, c001;
  Rat C100, C010, C001, C020, C011, C002, C030;
  std::map<unsigned, BigInt> J;  // k in {1, 2, 3, 4, 6, 8, 10, 12}

  nlohmann::json to_json() const;
};

ClosedFormEval closed_forms(unsigned long n);

// The c-coefficients of f_n as polynomials in n (also meaningful at n = 1).
Rat c100_of(const Rat& n);
Rat c010_of(const Rat& n);
Rat c001_of(const Rat& n);

// Exact comparison of the closed forms with coefficients extracted from the
// table's f_n and F_n for 2 <= n <= n_max. The table needs b-weight >= 6.
Report verify_against_polys(DivPolyTable& table, unsigned n_max);

// The two index-doubling recurrences for t = d, c100, c010, c001 at every n
// with 2n + 1 <= n_max (resp. 2n <= n_max).
Report recurrence_identities(unsigned n_max);

// Collisions of n -> (D, C020/C010^2, C011/(C010 C001), C002/C001^2) and of D
// alone for 2 <= n <= n_max.
Report injectivity_probe(unsigned n_max);

// Coefficients of psi_n (odd n, b2 = 0, b8 eliminated):
// psi_n = sum c~_{s,t} b4^s b6^t x^((n^2-1)/2 - 2s - 3t).
struct McKeeTable {
  unsigned n = 0;
  std::map<std::pair<unsigned, unsigned>, Rat> entries;
  Rat at(unsigned s, unsigned t) const;
};

// Fills the table by the recurrence in increasing 2s + 3t, seeded with
// c~_{0,0} = n and zero for negative indices. Throws invalid_argument for
// even n.
McKeeTable mckee_coeffs(unsigned n);
// Same table read off a psi_n body.
McKeeTable mckee_from_psi(unsigned n, const MPoly& body);
// Recurrence table equals the coefficients of the short-model psi_n for odd
// 3 <= n <= n_max.
Report verify_mckee(DivPolyTable& short_table, unsigned n_max);

}  // namespace torsion
