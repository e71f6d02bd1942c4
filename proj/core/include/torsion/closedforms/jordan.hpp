#pragma once

#include "torsion/closedforms/factor.hpp"

namespace torsion {

// J_k(n) = n^k prod_{p | n} (1 - p^-k).
BigInt jordan(unsigned k, const BigInt& n);
BigInt jordan(unsigned k, unsigned long n);

// 2 for n = 2, otherwise 1.
unsigned I_factor(unsigned long n);

// Degree of the primitive division polynomial: J_2(n) I(n) / 2.
BigInt D_of(unsigned long n);

// Degree of the normalized division polynomial: n^2 - 1.
BigInt d_of(unsigned long n);

}  // namespace torsion
