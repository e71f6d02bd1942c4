#include <random>

#include "doctest.h"
#include "torsion/numroots/roots.hpp"

using namespace torsion;

namespace {

MPoly P(const char* s) { return MPoly::parse(s); }

BigFloat tol(long bits_exponent, mpfr_prec_t prec) { return pow2(bits_exponent, prec); }

}  // namespace

TEST_CASE("BigFloat basics") {
  const BigFloat a(Rat(1, 3), 200);
  CHECK(abs(a * BigFloat(3, 200) - BigFloat(1, 200)) < tol(-195, 200));
  const BigFloat b = BigFloat::from_decimal(a.to_decimal(), 200);
  CHECK(a == b);
  CHECK_THROWS_AS(BigFloat::from_decimal("1.2.3", 64), ParseError);
}

TEST_CASE("BigC json round trip") {
  const BigC z = BigC::root_of_unity(1, 5, 300);
  const BigC w = bigc_from_json(to_json(z));
  CHECK(w.precision() == 300);
  CHECK(w.re() == z.re());
  CHECK(w.im() == z.im());
  CHECK(abs(z.pow(5) - BigC(Rat(1), 300)) < tol(-290, 300));
  CHECK(abs(sqrt(BigC(Rat(-4), 100)) - BigC(Rat(0), Rat(2), 100)) < tol(-95, 100));
}

TEST_CASE("x^2 + 1") {
  const auto rs = roots_univariate(P("x^2 + 1"), 128);
  REQUIRE(rs.roots.size() == 2);
  CHECK(rs.source_degree == 2);
  CHECK(abs(rs.roots[0] - BigC(Rat(0), Rat(-1), 128)) < tol(-120, 128));
  CHECK(abs(rs.roots[1] - BigC(Rat(0), Rat(1), 128)) < tol(-120, 128));
}

TEST_CASE("x^3 - 2 has one real root") {
  const mpfr_prec_t prec = 256;
  const auto rs = roots_univariate(P("x^3 + -2"), prec);
  REQUIRE(rs.roots.size() == 3);
  int real = 0;
  for (const auto& r : rs.roots) {
    if (abs(r.im()) < tol(-200, prec)) {
      ++real;
      const BigC v = r.pow(3) - BigC(Rat(2), prec);
      CHECK(abs(v) < tol(-static_cast<long>(prec) + 8, prec));
      CHECK(r.re() > BigFloat(1, prec));
      CHECK(r.re() < BigFloat(2, prec));
    }
  }
  CHECK(real == 1);
  CHECK(rs.residual_bound < Rat(1, 1) / Rat(mpz_class(1) << 240));
}

TEST_CASE("P24 has 24 nondegenerate roots") {
  const MPoly p24 =
      P("32*u^24 + 1369*u^20 + 18812*u^16 + 90646*u^12 + 18812*u^8 + 1369*u^4 + 32");
  const auto rs = roots_univariate(p24, 384);
  REQUIRE(rs.roots.size() == 24);
  for (const auto& r : rs.roots) {
    const BigC u4 = r.pow(4);
    CHECK(abs(u4) > BigFloat(Rat(1, 100), 384));
    CHECK(abs(u4 - BigC(Rat(1), 384)) > BigFloat(Rat(1, 100), 384));
  }
}

TEST_CASE("zero roots are exact") {
  const auto rs = roots_univariate(P("x^5 + -x"), 128);
  REQUIRE(rs.roots.size() == 5);
  int zeros = 0;
  for (const auto& r : rs.roots) zeros += r.is_zero() ? 1 : 0;
  CHECK(zeros == 1);
}

TEST_CASE("roots re-expand to the input") {
  std::mt19937 rng(21);
  std::uniform_int_distribution<int> c(-20, 20);
  std::uniform_int_distribution<int> deg(1, 12);
  const mpfr_prec_t prec = 200;
  for (int trial = 0; trial < 20; ++trial) {
    const int d = deg(rng);
    std::vector<Rat> cs(d + 1);
    for (auto& v : cs) v = c(rng);
    cs[d] = 1 + std::abs(c(rng));
    std::vector<Term> ts;
    for (int k = 0; k <= d; ++k) {
      if (cs[k] != 0) ts.push_back({Monomial::of(Sym::x, k), cs[k]});
    }
    const MPoly p = MPoly::from_terms(ts);
    if (p.degree(Sym::x) == 0) continue;
    const auto rs = roots_univariate(p, prec);
    REQUIRE(rs.roots.size() == static_cast<std::size_t>(d));
    // prod (x - r) times the leading coefficient.
    std::vector<BigC> prod{BigC(cs[d], prec)};
    for (const auto& r : rs.roots) {
      std::vector<BigC> next(prod.size() + 1, BigC(prec));
      for (std::size_t k = 0; k < prod.size(); ++k) {
        next[k + 1] += prod[k];
        next[k] -= prod[k] * r;
      }
      prod = std::move(next);
    }
    for (int k = 0; k <= d; ++k) {
      CHECK(abs(prod[k] - BigC(cs[k], prec)) < tol(-static_cast<long>(prec) / 2, prec));
    }
  }
}

TEST_CASE("doubling the precision shrinks the residual bound") {
  const MPoly p = P("3*x^7 + -5*x^3 + x + 11");
  const auto a = roots_univariate(p, 128);
  const auto b = roots_univariate(p, 256);
  CHECK(b.residual_bound * 2 <= a.residual_bound);
}

TEST_CASE("eval_complex") {
  const BigC i = BigC::i(128);
  CHECK(abs(eval_complex(P("x^2 + 1"), {{Sym::x, i}}, 128)) < tol(-120, 128));
  const BigC v = eval_complex(P("b2"), {{Sym::b2, BigC(Rat(7, 2), 128)}}, 128);
  CHECK(v.re() == BigFloat(Rat(7, 2), 128));
  CHECK_THROWS_AS(eval_complex(P("x*u"), {{Sym::x, i}}, 64), std::invalid_argument);
}
