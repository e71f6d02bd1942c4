#include <random>

#include "doctest.h"
#include "torsion/error.hpp"
#include "torsion/exactpoly/algorithms.hpp"
#include "torsion/exactpoly/ratfunc.hpp"

using namespace torsion;

namespace {

MPoly P(const char* s) { return MPoly::parse(s); }

MPoly random_poly(std::mt19937& rng, std::initializer_list<Sym> syms, unsigned max_deg, int terms) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<unsigned> exp(0, max_deg);
  std::vector<Term> ts;
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    for (Sym s : syms) m.set(s, exp(rng));
    ts.push_back({m, Rat(coeff(rng))});
  }
  return MPoly::from_terms(std::move(ts));
}

}  // namespace

TEST_CASE("canonical text format") {
  const MPoly p = P("3*x^4 + b2*x^3 + 3*b4*x^2 + 3*b6*x + b8");
  CHECK(p.to_string() == "3*x^4 + b2*x^3 + 3*b4*x^2 + 3*b6*x + b8");
  CHECK(MPoly().to_string() == "0");
  CHECK(P("-b4").to_string() == "-b4");
  CHECK(P("x^4 + 1/3*b2*x^3 + b4*x^2 + b6*x + 1/12*b2*b6 + -1/12*b4^2").to_string() ==
        "x^4 + 1/3*b2*x^3 + b4*x^2 + b6*x + 1/12*b2*b6 + -1/12*b4^2");
  CHECK_THROWS_AS(P("3*q^2"), ParseError);
  CHECK_THROWS_AS(P("3*x^"), ParseError);
}

TEST_CASE("parse and print round trip on random polynomials") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    MPoly p = random_poly(rng, {Sym::x, Sym::b2, Sym::delta, Sym::u}, 4, 6);
    p *= Rat(1, 1 + i % 5);
    CHECK(MPoly::parse(p.to_string()) == p);
    CHECK(MPoly::parse(p.to_string()).to_string() == p.to_string());
  }
}

TEST_CASE("arithmetic") {
  CHECK(P("x + 1") * P("x + -1") == P("x^2 + -1"));
  CHECK(P("x + 1") + MPoly() == P("x + 1"));
  CHECK(P("x + 1").pow(0) == MPoly(1));
  CHECK(P("x + 1").pow(3) == P("x^3 + 3*x^2 + 3*x + 1"));
}

TEST_CASE("psi2 squared via the curve equation") {
  // (2y + a1 x + a3)^2 with y^2 replaced by the right-hand side of the curve.
  MPoly sq = P("2*y + a1*x + a3").pow(2);
  const MPoly rhs = P("x^3 + a2*x^2 + a4*x + a6 + -a1*x*y + -a3*y");
  const auto cs = coefficients_in(sq, Sym::y);
  MPoly reduced = cs[0] + cs[1] * P("y") + cs[2] * rhs;
  const std::map<Sym, MPoly> b = {};
  const MPoly b2 = P("a1^2 + 4*a2"), b4 = P("2*a4 + a1*a3"), b6 = P("a3^2 + 4*a6");
  CHECK(reduced == P("4*x^3") + b2 * P("x^2") + MPoly(2) * b4 * P("x") + b6);
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(11);
  for (int i = 0; i < 50; ++i) {
    const MPoly a = random_poly(rng, {Sym::x, Sym::b4, Sym::v}, 3, 4);
    const MPoly b = random_poly(rng, {Sym::x, Sym::b4, Sym::v}, 3, 4);
    const MPoly c = random_poly(rng, {Sym::x, Sym::b4, Sym::v}, 3, 4);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK(a - a == MPoly());
  }
}

TEST_CASE("exact division") {
  CHECK(divexact(P("x^2 + -1"), P("x + -1")) == P("x + 1"));
  CHECK_THROWS_AS(divexact(P("x^2 + 1"), P("x + -1")), NotDivisible);
  try {
    divexact(P("x^2 + 1"), P("x + -1"));
  } catch (const NotDivisible& e) {
    CHECK(!e.offending_monomial().empty());
  }
  CHECK_THROWS_AS(divexact(P("x"), MPoly()), DivisionByZero);
  std::mt19937 rng(3);
  for (int i = 0; i < 60; ++i) {
    const MPoly p = random_poly(rng, {Sym::x, Sym::b2, Sym::b6}, 3, 5);
    MPoly q = random_poly(rng, {Sym::x, Sym::b2, Sym::b6}, 2, 3);
    if (q.is_zero()) continue;
    CHECK(divexact(p * q, q) == p);
  }
}

TEST_CASE("exact square root") {
  CHECK(sqrt_exact(P("x^2 + 2*x + 1")) == P("x + 1"));
  CHECK_THROWS_AS(sqrt_exact(P("x + 1")), NotASquare);
  CHECK_THROWS_AS(sqrt_exact(P("x^2 + 2")), NotASquare);
  std::mt19937 rng(5);
  for (int i = 0; i < 60; ++i) {
    const MPoly p = random_poly(rng, {Sym::x, Sym::b4, Sym::delta}, 3, 4);
    if (p.is_zero()) continue;
    const MPoly r = sqrt_exact(p * p);
    CHECK(r.leading().coeff > 0);
    CHECK((r == p || r == -p));
  }
}

TEST_CASE("pseudo remainder") {
  auto pr = pseudo_rem(P("x^2 + 1"), P("2*x + -2"), Sym::x);
  CHECK(pr.rem == MPoly(8));
  CHECK(pr.unit == MPoly(4));
  CHECK(pr.exponent == 2);
  pr = pseudo_rem(P("delta^2"), P("delta"), Sym::delta);
  CHECK(pr.rem == MPoly());
  CHECK(pr.unit == MPoly(1));
  CHECK_THROWS_AS(pseudo_rem(P("x^2"), P("b2"), Sym::x), std::invalid_argument);

  std::mt19937 rng(9);
  for (int i = 0; i < 40; ++i) {
    const MPoly p = random_poly(rng, {Sym::delta, Sym::u, Sym::v}, 4, 6);
    MPoly q = random_poly(rng, {Sym::delta, Sym::u}, 2, 4);
    if (q.degree(Sym::delta) == 0) continue;
    const auto r = pseudo_rem(p, q, Sym::delta);
    CHECK(r.rem.degree(Sym::delta) < q.degree(Sym::delta));
    // unit*p - rem is a multiple of q: its pseudo-remainder vanishes with unit 1 factors.
    const MPoly diff = r.unit * p - r.rem;
    CHECK(pseudo_rem(diff, q, Sym::delta).rem.is_zero());
  }
}

TEST_CASE("resultants") {
  CHECK(resultant(P("x^2 + 1"), P("x + -1"), Sym::x) == MPoly(2));
  CHECK(resultant(P("x + -a1"), P("x + -a3"), Sym::x) == P("a1 + -a3"));
  CHECK(resultant_subresultant(P("x^2 + 1"), P("x + -1"), Sym::x) == MPoly(2));
  CHECK(resultant_subresultant(P("x + -a1"), P("x + -a3"), Sym::x) == P("a1 + -a3"));

  std::mt19937 rng(13);
  for (int i = 0; i < 25; ++i) {
    const MPoly a = random_poly(rng, {Sym::x, Sym::u}, 3, 4);
    const MPoly b = random_poly(rng, {Sym::x, Sym::u}, 3, 4);
    const MPoly c = random_poly(rng, {Sym::x, Sym::u}, 2, 3);
    if (a.degree(Sym::x) == 0 || b.degree(Sym::x) == 0 || c.degree(Sym::x) == 0) continue;
    // Planted common factor.
    CHECK(resultant(a * c, b * c, Sym::x).is_zero());
    CHECK(resultant_subresultant(a * c, b * c, Sym::x).is_zero());
    // Both routes agree.
    CHECK(resultant(a, b, Sym::x) == resultant_subresultant(a, b, Sym::x));
    if (gcd(a, b).degree(Sym::x) == 0) CHECK(!resultant(a, b, Sym::x).is_zero());
  }
}

TEST_CASE("gcd") {
  CHECK(gcd(P("x^2 + -1"), P("x^2 + 2*x + 1")) == P("x + 1"));
  CHECK(gcd(P("6*x*u"), P("4*x^2")) == P("x"));
  CHECK(gcd(P("x + u"), P("x + -u")) == MPoly(1));
}

TEST_CASE("coefficient extraction") {
  const MPoly psi3 = P("3*x^4 + b2*x^3 + 3*b4*x^2 + 3*b6*x + b8");
  CHECK(coeff(psi3, {{Sym::b4, 1}, {Sym::x, 2}}) == MPoly(3));
  CHECK(coeff(P("x^2 + 1"), {{Sym::x, 5}}) == MPoly());
  CHECK(coeff(psi3, {{Sym::x, 3}}) == P("b2"));
}

TEST_CASE("rational functions and substitution") {
  const RatFunc f(P("x^2 + -1"), P("2*x + -2"));
  CHECK(f.num() == P("1/2*x + 1/2"));
  CHECK(f.den() == MPoly(1));
  CHECK(f.is_polynomial());
  const RatFunc g(P("1"), P("delta"));
  CHECK((g + g).to_string() == "(2)/(delta)");
  CHECK(RatFunc::parse((g + g).to_string()) == g + g);
  CHECK_THROWS_AS(RatFunc(P("x"), MPoly()), DivisionByZero);

  const MPoly psi3 = P("3*x^4 + b2*x^3 + 3*b4*x^2 + 3*b6*x + b8");
  const RatFunc r = substitute(psi3, {{Sym::b8, RatFunc(P("1/4*b2*b6 + -1/4*b4^2"))}});
  CHECK(r.is_polynomial());
  CHECK(r.num() == P("3*x^4 + b2*x^3 + 3*b4*x^2 + 3*b6*x + 1/4*b2*b6 + -1/4*b4^2"));
  CHECK(substitute(psi3, {}).num() == psi3);
  CHECK_THROWS_AS(substitute(RatFunc(P("1"), P("x")), {{Sym::x, RatFunc(0L)}}), DivisionByZero);
  const RatFunc h = substitute(P("x^2 + x"), {{Sym::x, g}});
  CHECK(h == RatFunc(P("delta + 1"), P("delta^2")));
}
