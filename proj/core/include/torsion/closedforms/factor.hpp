#pragma once

#include <cstdint>
#include <vector>

#include "torsion/exactpoly/rat.hpp"

namespace torsion {

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;
};

// Prime factorization of n >= 1, primes ascending. Trial division up to 10^6,
// then Pollard rho (Brent) with probable-prime tests on the cofactors.
std::vector<PrimePower> factorize(const BigInt& n);

}  // namespace torsion
