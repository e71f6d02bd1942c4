#pragma once

#include <vector>

#include "torsion/exactpoly/mpoly.hpp"

namespace torsion {

// Exact quotient p / q. Throws NotDivisible (carrying the leading monomial of
// the first remainder term) when q does not divide p, DivisionByZero when q = 0.
MPoly divexact(const MPoly& p, const MPoly& q);

// r with r*r = p and positive grlex-leading coefficient. Throws NotASquare.
MPoly sqrt_exact(const MPoly& p);

struct PseudoRemainder {
  MPoly rem;
  // lc_var(q)^exponent; unit * p == rem (mod q) in var.
  MPoly unit;
  unsigned exponent = 0;
};

// Classical pseudo-division: multiplies p by lc_var(q)^(deg p - deg q + 1).
PseudoRemainder pseudo_rem(const MPoly& p, const MPoly& q, Sym var);

using PolyMatrix = std::vector<std::vector<MPoly>>;

// Sylvester matrix with the deg_var(q) rows of p first, leading coefficients
// on the left.
PolyMatrix sylvester_matrix(const MPoly& p, const MPoly& q, Sym var);

// Fraction-free (Bareiss) determinant.
MPoly bareiss_determinant(PolyMatrix m);

// res_var(p, q) = det(sylvester_matrix(p, q, var)), computed by Bareiss
// elimination. res_x(x - a, x - b) = a - b.
MPoly resultant(const MPoly& p, const MPoly& q, Sym var);

// Same value by the subresultant pseudo-remainder sequence.
MPoly resultant_subresultant(const MPoly& p, const MPoly& q, Sym var);

// Greatest common divisor over Q, normalized to coprime integer coefficients
// with positive grlex-leading coefficient. gcd(0, 0) = 0.
MPoly gcd(const MPoly& a, const MPoly& b);

// gcd of the coefficients of p viewed as a polynomial in var.
MPoly content_in(const MPoly& p, Sym var);
MPoly primitive_part_in(const MPoly& p, Sym var);

}  // namespace torsion
