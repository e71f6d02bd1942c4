#include "torsion/closedforms/factor.hpp"

#include <algorithm>
#include <stdexcept>

namespace torsion {

namespace {

constexpr unsigned long kTrialLimit = 1000000;

bool is_probable_prime(const BigInt& n) { return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0; }

// Brent's variant of Pollard rho; returns a nontrivial factor of composite n.
BigInt rho(const BigInt& n) {
  for (unsigned long c = 1;; ++c) {
    BigInt y = 2, x, ys, q = 1, g = 1;
    const BigInt cc = c;
    auto step = [&](BigInt& v) {
      v = v * v + cc;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    unsigned long r = 1;
    const unsigned long m = 128;
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          step(y);
          BigInt d = x - y;
          q = q * abs(d);
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        step(ys);
        BigInt d = x - ys;
        d = abs(d);
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(const BigInt& n, std::vector<BigInt>& primes) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    primes.push_back(n);
    return;
  }
  BigInt s;
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
    split(s, primes);
    split(s, primes);
    return;
  }
  const BigInt d = rho(n);
  split(d, primes);
  split(n / d, primes);
}

}  // namespace

std::vector<PrimePower> factorize(const BigInt& n_in) {
  if (n_in < 1) throw std::invalid_argument("factorize needs n >= 1");
  BigInt n = n_in;
  std::vector<PrimePower> out;
  auto take = [&](unsigned long p) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p) == 0) return;
    PrimePower pp{BigInt(p), 0};
    while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++pp.exponent;
    }
    out.push_back(pp);
  };
  take(2);
  for (unsigned long p = 3; p <= kTrialLimit; p += 2) {
    if (n == 1) break;
    if (mpz_cmp_ui(n.get_mpz_t(), p * p) < 0) break;  // n is now prime
    take(p);
  }
  if (n == 1) return out;
  std::vector<BigInt> primes;
  split(n, primes);
  std::sort(primes.begin(), primes.end());
  for (const auto& p : primes) {
    if (!out.empty() && out.back().prime == p) {
      ++out.back().exponent;
    } else {
      out.push_back({p, 1});
    }
  }
  return out;
}

}  // namespace torsion
