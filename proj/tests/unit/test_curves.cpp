#include <random>

#include "doctest.h"
#include "torsion/curves/weierstrass.hpp"
#include "torsion/divpoly/divpoly.hpp"
#include "torsion/error.hpp"

using namespace torsion;

namespace {

Rat value(const RatFunc& f) { return f.constant_value(); }

RatFunc Q(long a, long b = 1) { return RatFunc(Rat(a) / b); }

}  // namespace

TEST_CASE("y^2 = x^3 - x") {
  const auto c = WeierstrassCurve::from_rationals(0, 0, 0, -1, 0);
  const auto q = standard_quantities(c);
  CHECK(value(q.b2) == 0);
  CHECK(value(q.b4) == -2);
  CHECK(value(q.b6) == 0);
  CHECK(value(q.b8) == -1);
  CHECK(value(q.c4) == 48);
  CHECK(value(q.c6) == 0);
  CHECK(value(q.disc) == 64);
  CHECK(value(q.j) == 1728);
}

TEST_CASE("y^2 = x^3 + 1") {
  const auto q = standard_quantities(WeierstrassCurve::from_rationals(0, 0, 0, 0, 1));
  CHECK(value(q.b2) == 0);
  CHECK(value(q.b4) == 0);
  CHECK(value(q.b6) == 4);
  CHECK(value(q.b8) == 0);
  CHECK(value(q.c4) == 0);
  CHECK(value(q.c6) == -864);
  CHECK(value(q.disc) == -432);
  CHECK(value(q.j) == 0);
}

TEST_CASE("y^2 = x^3 is singular") {
  CHECK_THROWS_AS(WeierstrassCurve::from_rationals(0, 0, 0, 0, 0), SingularCurve);
}

TEST_CASE("symbolic curves defer the singularity check") {
  const RatFunc zero;
  const WeierstrassCurve c(zero, zero, zero, zero, RatFunc::parse("lambda"));
  CHECK(c.is_symbolic());
  CHECK(c.singular_locus().contains(Sym::lambda));
  CHECK_THROWS_AS(c.specialize({{Sym::lambda, RatFunc(0L)}}), SingularCurve);
  const auto s = c.specialize({{Sym::lambda, Q(1)}});
  CHECK(!s.is_symbolic());
  CHECK(value(standard_quantities(s).b6) == 4);
}

TEST_CASE("invariant relations on random rational curves") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 7);
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    std::array<Rat, 5> a;
    for (auto& v : a) v = Rat(num(rng)) / den(rng);
    std::optional<WeierstrassCurve> c;
    try {
      c.emplace(WeierstrassCurve::from_rationals(a[0], a[1], a[2], a[3], a[4]));
    } catch (const SingularCurve&) {
      continue;
    }
    const auto q = standard_quantities(*c);
    const Rat b2 = value(q.b2), b4 = value(q.b4), b6 = value(q.b6), b8 = value(q.b8);
    const Rat c4 = value(q.c4), c6 = value(q.c6), d = value(q.disc);
    CHECK(4 * b8 == b2 * b6 - b4 * b4);
    CHECK(1728 * d == c4 * c4 * c4 - c6 * c6);
    ++checked;
  }
  CHECK(checked > 900);
}

TEST_CASE("completing the square keeps the torsion images") {
  // y^2 + x y + y = x^3 - x; y -> y - (x + 1)/2 gives y^2 = x^3 + x^2/4 - x/2 + 1/4.
  const auto c1 = WeierstrassCurve::from_rationals(1, 0, 1, -1, 0);
  const auto c2 = WeierstrassCurve::from_rationals(0, Rat(1, 4), 0, Rat(-1, 2), Rat(1, 4));
  CHECK(torsion_image_equal(c1, c2));
  CHECK(torsion_image_equal(c1, c1));
  CHECK(!torsion_image_equal(WeierstrassCurve::from_rationals(0, 0, 0, -1, 0),
                             WeierstrassCurve::from_rationals(0, 0, 0, 0, 1)));

  DivPolyTable table(Model::generic());
  auto specialize = [](const MPoly& p, const WeierstrassCurve& c) {
    const auto q = standard_quantities(c);
    return evaluate(p, {{Sym::b2, value(q.b2)}, {Sym::b4, value(q.b4)}, {Sym::b6, value(q.b6)}});
  };
  for (unsigned n = 2; n <= 5; ++n) CHECK(specialize(table.F(n), c1) == specialize(table.F(n), c2));
}

TEST_CASE("curve json round trip") {
  const auto c = WeierstrassCurve::from_rationals(1, Rat(-1, 3), 0, 7, Rat(2, 5));
  const auto d = WeierstrassCurve::from_json(c.to_json());
  CHECK(d.to_json() == c.to_json());
  CHECK(torsion_image_equal(c, d));
}
