#include "doctest.h"
#include "torsion/closedforms/jordan.hpp"
#include "torsion/error.hpp"
#include "torsion/families/families.hpp"

using namespace torsion;

namespace {

MPoly P(const char* s) { return MPoly::parse(s); }

}  // namespace

TEST_CASE("Hesse 2-torsion") {
  const auto set = hesse_two_torsion(0, 128);
  CHECK(set.defining_poly == P("x^3 + -4"));
  REQUIRE(set.values.size() == 3);
  int real = 0;
  for (const auto& v : set.values) {
    if (abs(v.approx.im()) < pow2(-100, 128)) {
      ++real;
      CHECK(abs(v.approx.re() * v.approx.re() * v.approx.re() - BigFloat(4, 128)) < pow2(-100, 128));
    }
  }
  CHECK(real == 1);
  CHECK(hesse_two_torsion(Rat(1, 2), 64).defining_poly == P("x^3 + 3/2*x^2 + -4"));
  CHECK_THROWS_AS(hesse_two_torsion(1, 64), SingularParameter);
  CHECK(hesse_projection(Rat(7, 5), 1, -1, 0) == Rat(7, 5));
}

TEST_CASE("E_delta data") {
  const auto d = edelta_data(2);
  REQUIRE(d.two_torsion.values.size() == 3);
  CHECK(d.two_torsion.values[0].exact->first == -2);
  CHECK(d.two_torsion.values[1].exact->first == Rat(1, 2));
  CHECK(d.two_torsion.values[2].exact->first == Rat(-1, 2));
  CHECK(d.three_torsion_quartic == P("x^4 + 4*x^3 + -x + -1"));
  CHECK(d.four_torsion.values.size() == 6);
  CHECK(d.four_torsion.infinity_count() == 1);
  CHECK_THROWS_AS(edelta_data(1), SingularParameter);
  CHECK_THROWS_AS(edelta_data(-1), SingularParameter);
  CHECK_THROWS_AS(edelta_data(0), SingularParameter);
  const RatFunc q = edelta_three_torsion_quartic() * RatFunc(P("delta"));
  CHECK(q.num() == edelta_primitive(3));
}

TEST_CASE("nonsingular model of E_delta") {
  const auto ns = edelta_ns();
  CHECK(ns.curve.a1().is_zero());
  CHECK(ns.curve.a3().is_zero());
  CHECK(ns.curve.a6().is_zero());
  const RatFunc m = RatFunc::parse("(delta^4 + 2*delta^2 + 1)/(4*delta^2)");
  CHECK(ns.curve.a4() == m);
  CHECK(ns.curve.a2() == -(RatFunc(1L) + m));
  const auto at2 = ns.curve.specialize({{Sym::delta, RatFunc(2L)}});
  CHECK(at2.a4().constant_value() == Rat(25, 16));
  CHECK(substitute(ns.X, {{Sym::x, RatFunc::parse("(1)/(delta)")}}).is_zero());
}

TEST_CASE("pulled-back primitive division polynomials") {
  CHECK(edelta_primitive(3) == edelta_primitive_reference(3));
  CHECK(edelta_primitive(5) == edelta_primitive_reference(5));
  CHECK(edelta_primitive(3) == P("2*x^3*delta^2 + x^4*delta + -delta + -2*x"));
  CHECK(edelta_primitive(4) == P("x^5 + -x"));
  CHECK(edelta_primitive(2) == P("delta^2*x^3 + delta^3*x^2 + -x + -delta"));
  for (unsigned n = 2; n <= 6; ++n) {
    const MPoly F = edelta_primitive(n);
    CHECK(rational_content(F) == 1);
    CHECK(F.leading().coeff > 0);
    CHECK(D_of(n) == F.degree(Sym::x) + (n % 4 == 0 ? 1 : 0));
  }
}

TEST_CASE("torsion sets and symmetry at rational delta") {
  const auto s4 = edelta_torsion_xset(4, 3, 128);
  CHECK(s4.values.size() == 6);
  CHECK(s4.infinity_count() == 1);
  CHECK(edelta_checks(2, 192).passed());
  CHECK(edelta_checks(Rat(5, 3), 192).passed());
}

TEST_CASE("Klein family") {
  CHECK_THROWS_AS(klein_check(1, 0, 128), SingularParameter);
  for (auto [s, t] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{1, 2}}) {
    const auto r = klein_check(s, t, 256);
    CHECK(r.passed());
  }
  const auto a = klein_cross_ratio(2, 1, 128).first;
  const auto b = klein_cross_ratio(3, 1, 128).first;
  CHECK(abs(a - b) > BigFloat(1, 128));
  CHECK(abs(a.re() - BigFloat::from_decimal("6.3137767414994532", 128)) < pow10(-12, 128));
  CHECK(abs(b.re() - BigFloat::from_decimal("3.7050307677496985", 128)) < pow10(-12, 128));
}
