#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "torsion/curves/weierstrass.hpp"
#include "torsion/divpoly/divpoly.hpp"
#include "torsion/numroots/bigc.hpp"
#include "torsion/report.hpp"

namespace torsion {

// A point of P^1: infinity, or a complex number with an exact Gaussian
// rational value when one is known.
struct ProjectiveValue {
  bool infinity = false;
  std::optional<std::pair<Rat, Rat>> exact;  // (re, im)
  BigC approx;

  static ProjectiveValue at_infinity(mpfr_prec_t prec);
  static ProjectiveValue gaussian(const Rat& re, const Rat& im, mpfr_prec_t prec);
  static ProjectiveValue numeric(BigC z);
  nlohmann::json to_json() const;
  std::string to_string() const;
};

// Projective x-images of nonzero n-torsion: the roots of defining_poly, plus
// infinity once for each degree missing relative to the expected count.
struct TorsionXSet {
  unsigned n = 0;
  std::vector<ProjectiveValue> values;
  MPoly defining_poly;

  std::size_t infinity_count() const;
  nlohmann::json to_json() const;
};

// Hesse family x^3 + y^3 + z^3 = 3 lambda x y z with origin (1 : -1 : 0).
// Roots of x^3 + 3 lambda x^2 - 4. Throws SingularParameter when lambda^3 = 1.
TorsionXSet hesse_two_torsion(const Rat& lambda, mpfr_prec_t prec);
// (z^2 - 3 lambda x y) / (x^2 - x y + y^2). Throws DivisionByZero.
Rat hesse_projection(const Rat& lambda, const Rat& x, const Rat& y, const Rat& z);

// Quartic family y^2 = x^4 - (delta^2 + 1/delta^2) x^2 + 1 with origin (delta, 0).
struct EdeltaData {
  TorsionXSet two_torsion;         // {-delta, 1/delta, -1/delta}
  MPoly three_torsion_quartic;     // x^4 + 2 delta x^3 - (2/delta) x - 1
  TorsionXSet four_torsion;        // {0, inf, 1, -1, i, -i}
};
// Throws SingularParameter when delta^4 is 0 or 1.
EdeltaData edelta_data(const Rat& delta, mpfr_prec_t prec = 128);
// The quartic above with delta symbolic.
RatFunc edelta_three_torsion_quartic();

// Y^2 = X (X - 1) (X - m), m = (delta + 1/delta)^2 / 4, with the map from E_delta.
struct EdeltaNs {
  WeierstrassCurve curve;
  RatFunc X;  // (delta^2 + 1)(delta x - 1) / (2 delta (x - delta))
  RatFunc Y;  // (delta^4 - 1) y / (4 delta (x - delta)^2)
};
EdeltaNs edelta_ns();

// F_n of the nonsingular model pulled back to E_delta: integer coefficients in
// x and delta, primitive as a polynomial in x, coprime integer coefficients and
// positive grlex-leading coefficient. Uses the given generic table.
MPoly edelta_primitive(unsigned n, DivPolyTable& generic_table);
// Same, with a process-wide generic table.
MPoly edelta_primitive(unsigned n);

// Published closed forms of F~_3 and F~_5 (n = 3 or 5), for cross-checking.
MPoly edelta_primitive_reference(unsigned n);

// Roots of F~_n(x, delta) at a rational delta, with infinity filling the
// degree deficit up to D(n).
TorsionXSet edelta_torsion_xset(unsigned n, const Rat& delta, mpfr_prec_t prec);

// Degree accounting for 2 <= n <= 6, the {0, +-1, +-i} root set of F~_4 and the
// images -a, 1/a, -1/a of F~_3 roots among F~_6 roots, at a rational delta.
Report edelta_checks(const Rat& delta, mpfr_prec_t prec);

// Klein's family y^2 = x^3 - 3 A(s,t) x + 2 B(s,t).
WeierstrassCurve klein_curve(const Rat& s, const Rat& t);
// The twelve displayed 5-torsion x-values, order: x_inf^+, x_inf^-, x_k^+ and
// x_k^- for k = 0..4.
std::vector<BigC> klein_x_values(const Rat& s, const Rat& t, mpfr_prec_t prec);
// Cross ratio from (x_inf^+, x_0^-, x_0^+, x_inf^-) and from the closed formula.
std::pair<BigC, BigC> klein_cross_ratio(const Rat& s, const Rat& t, mpfr_prec_t prec);
// Roots of F_5 against the displayed values, and both cross ratios.
// Throws SingularParameter at singular (s, t).
Report klein_check(const Rat& s, const Rat& t, mpfr_prec_t prec);

}  // namespace torsion
