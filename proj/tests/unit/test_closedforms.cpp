#include <random>

#include "doctest.h"
#include "torsion/closedforms/closedforms.hpp"

using namespace torsion;

TEST_CASE("Jordan totient values") {
  for (unsigned k = 1; k <= 6; ++k) CHECK(jordan(k, 1UL) == 1);
  CHECK(jordan(2, 15UL) == 192);
  CHECK(jordan(2, 16UL) == 192);
  CHECK(jordan(3, 28268UL) == BigInt("19764446869440"));
  CHECK(jordan(3, 28710UL) == BigInt("19764446869440"));
  CHECK(jordan(1, 15UL) == 8);
  CHECK(jordan(1, 16UL) == 8);
}

TEST_CASE("Jordan totient is multiplicative") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<unsigned long> d(1, 5000);
  for (int i = 0; i < 200; ++i) {
    const unsigned long m = d(rng), n = d(rng);
    BigInt g;
    mpz_gcd_ui(g.get_mpz_t(), BigInt(m).get_mpz_t(), n);
    if (g != 1) continue;
    for (unsigned k : {1U, 2U, 4U}) CHECK(jordan(k, m * n) == jordan(k, m) * jordan(k, n));
  }
}

TEST_CASE("divisor sums of J_k") {
  for (unsigned long n = 1; n <= 10000; n += (n < 300 ? 1 : 37)) {
    for (unsigned k = 1; k <= 3; ++k) {
      BigInt sum = 0;
      for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        sum += jordan(k, d);
        if (d * d != n) sum += jordan(k, n / d);
      }
      BigInt nk;
      mpz_ui_pow_ui(nk.get_mpz_t(), n, k);
      CHECK(sum == nk);
    }
  }
}

TEST_CASE("factorization") {
  const auto f = factorize(BigInt("600851475143"));
  REQUIRE(f.size() == 4);
  CHECK(f[0].prime == 71);
  CHECK(f[3].prime == 6857);
  const auto g = factorize(BigInt("1000000016000000063"));  // (10^9 + 7)(10^9 + 9)
  REQUIRE(g.size() == 2);
  CHECK(g[0].prime == 1000000007);
}

TEST_CASE("closed forms at n = 2, 3, 5, 6") {
  const auto c2 = closed_forms(2);
  CHECK(c2.D == 3);
  CHECK(c2.C100 == Rat(1, 4));
  CHECK(c2.C010 == Rat(1, 2));
  CHECK(c2.C001 == Rat(1, 4));
  CHECK(c2.C020 == 0);
  const auto c3 = closed_forms(3);
  CHECK(c3.C100 == Rat(1, 3));
  CHECK(c3.C010 == 1);
  CHECK(c3.C001 == 1);
  CHECK(c3.C020 == Rat(-1) / 12);
  CHECK(c3.C002 == 0);
  CHECK(closed_forms(5).D == 12);
  CHECK(closed_forms(6).D == 12);
}

TEST_CASE("C100 = D/12") {
  for (unsigned long n = 2; n <= 1000; ++n) {
    const auto c = closed_forms(n);
    CHECK(c.C100 == Rat(c.D) / 12);
  }
}

TEST_CASE("closed forms match extracted coefficients") {
  DivPolyTable w(Model::truncated(6));
  CHECK(verify_against_polys(w, 16).passed());
  DivPolyTable g;
  CHECK(verify_against_polys(g, 6).passed());
}

TEST_CASE("recurrences") {
  CHECK(c100_of(Rat(6)) == Rat(35, 12));
  const auto r = recurrence_identities(20);
  CHECK(r.passed());
}

TEST_CASE("injectivity probe") {
  const auto r = injectivity_probe(100);
  CHECK(r.passed());
  const auto t5 = closed_forms(5), t6 = closed_forms(6);
  CHECK(t5.D == t6.D);
  CHECK((t5.C020 / (t5.C010 * t5.C010) != t6.C020 / (t6.C010 * t6.C010) ||
         t5.C011 / (t5.C010 * t5.C001) != t6.C011 / (t6.C010 * t6.C001) ||
         t5.C002 / (t5.C001 * t5.C001) != t6.C002 / (t6.C001 * t6.C001)));
}

TEST_CASE("McKee tables") {
  const auto m3 = mckee_coeffs(3);
  CHECK(m3.at(0, 0) == 3);
  CHECK(m3.at(1, 0) == 3);
  CHECK(m3.at(0, 1) == 3);
  CHECK(m3.at(2, 0) == Rat(-1, 4));
  CHECK_THROWS_AS(mckee_coeffs(4), std::invalid_argument);
  for (unsigned n = 3; n <= 21; n += 2) CHECK(mckee_coeffs(n).at(0, 0) == n);
  DivPolyTable s(Model::short_form());
  CHECK(mckee_coeffs(5).entries == mckee_from_psi(5, s.psi_body(5)).entries);
  CHECK(verify_mckee(s, 15).passed());
}
