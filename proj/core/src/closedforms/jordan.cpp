#include "torsion/closedforms/jordan.hpp"

#include <stdexcept>

namespace torsion {

BigInt jordan(unsigned k, const BigInt& n) {
  if (k < 1 || n < 1) throw std::invalid_argument("jordan needs k >= 1 and n >= 1");
  BigInt result = 1;
  for (const auto& [p, e] : factorize(n)) {
    BigInt pk, pk1;
    mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), k);
    mpz_pow_ui(pk1.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(k) * (e - 1));
    result *= (pk - 1) * pk1;
  }
  return result;
}

BigInt jordan(unsigned k, unsigned long n) { return jordan(k, BigInt(n)); }

unsigned I_factor(unsigned long n) { return n == 2 ? 2 : 1; }

BigInt D_of(unsigned long n) {
  if (n < 2) throw std::invalid_argument("D(n) needs n >= 2");
  return jordan(2, n) * I_factor(n) / 2;
}

BigInt d_of(unsigned long n) { return BigInt(n) * n - 1; }

}  // namespace torsion
