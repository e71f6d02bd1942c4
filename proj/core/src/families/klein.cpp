#include <algorithm>

#include "torsion/divpoly/divpoly.hpp"
#include "torsion/error.hpp"
#include "torsion/families/families.hpp"
#include "torsion/numroots/roots.hpp"

namespace torsion {

namespace {

Rat pw(const Rat& a, unsigned e) {
  Rat r = 1;
  for (unsigned k = 0; k < e; ++k) r *= a;
  return r;
}

// s^i t^j
Rat st(const Rat& s, const Rat& t, unsigned i, unsigned j) { return pw(s, i) * pw(t, j); }

Rat klein_A(const Rat& s, const Rat& t) {
  return st(s, t, 20, 0) + 228 * st(s, t, 15, 5) + 494 * st(s, t, 10, 10) - 228 * st(s, t, 5, 15) +
         st(s, t, 0, 20);
}

Rat klein_B(const Rat& s, const Rat& t) {
  return st(s, t, 30, 0) - 522 * st(s, t, 25, 5) - 10005 * st(s, t, 20, 10) - 10005 * st(s, t, 10, 20) +
         522 * st(s, t, 5, 25) + st(s, t, 0, 30);
}

BigC c(const Rat& r, mpfr_prec_t prec) { return BigC(r, prec); }

}  // namespace

WeierstrassCurve klein_curve(const Rat& s, const Rat& t) {
  const Rat A = klein_A(s, t), B = klein_B(s, t);
  if (A * A * A == B * B) throw SingularParameter("Klein family is singular at this (s, t)");
  return WeierstrassCurve::from_rationals(0, 0, 0, Rat(-3 * A), Rat(2 * B));
}

std::vector<BigC> klein_x_values(const Rat& s, const Rat& t, mpfr_prec_t prec) {
  const BigC w = BigC::root_of_unity(1, 5, prec);
  const BigC w4 = w.pow(4);
  const BigC one = c(1, prec);
  const BigC r5 = c(2, prec) * (w + w4) + one;
  const BigC inv = r5.inverse();
  const BigC six = c(6, prec) * inv;
  const BigC sixty_six = c(66, prec) * inv;
  const BigC s10 = c(st(s, t, 10, 0), prec), s5t5 = c(st(s, t, 5, 5), prec), t10 = c(st(s, t, 0, 10), prec);
  const BigC five = c(5, prec);

  std::vector<BigC> out;
  out.push_back(-((five + six) * s10 - sixty_six * s5t5 + (five - six) * t10));
  out.push_back(-((five - six) * s10 + sixty_six * s5t5 + (five + six) * t10));
  const Rat p0 = st(s, t, 10, 0) + 30 * st(s, t, 5, 5) + st(s, t, 0, 10);
  const Rat p1 = 12 * st(s, t, 9, 1) + 24 * st(s, t, 4, 6);
  const Rat p2 = 24 * st(s, t, 8, 2) - 12 * st(s, t, 3, 7);
  const Rat p3 = 36 * st(s, t, 7, 3) + 12 * st(s, t, 2, 8);
  const Rat p4 = 60 * st(s, t, 6, 4);
  const Rat m0 = st(s, t, 10, 0) - 30 * st(s, t, 5, 5) + st(s, t, 0, 10);
  const Rat m1 = 24 * st(s, t, 6, 4) - 12 * st(s, t, 1, 9);
  const Rat m2 = 12 * st(s, t, 7, 3) + 24 * st(s, t, 2, 8);
  const Rat m3 = 12 * st(s, t, 8, 2) - 36 * st(s, t, 3, 7);
  const Rat m4 = 60 * st(s, t, 4, 6);
  std::vector<BigC> plus, minus;
  for (long k = 0; k < 5; ++k) {
    const BigC wk = BigC::root_of_unity(k, 5, prec);
    const BigC wk2 = wk * wk, wk3 = wk2 * wk, wk4 = wk3 * wk;
    plus.push_back(c(p0, prec) + c(p1, prec) * wk + c(p2, prec) * wk2 + c(p3, prec) * wk3 + c(p4, prec) * wk4);
    minus.push_back(c(m0, prec) + c(m1, prec) * wk + c(m2, prec) * wk2 + c(m3, prec) * wk3 + c(m4, prec) * wk4);
  }
  out.insert(out.end(), plus.begin(), plus.end());
  out.insert(out.end(), minus.begin(), minus.end());
  return out;
}

std::pair<BigC, BigC> klein_cross_ratio(const Rat& s, const Rat& t, mpfr_prec_t prec) {
  const auto x = klein_x_values(s, t, prec);
  const BigC &inf_p = x[0], &inf_m = x[1], &zero_p = x[2], &zero_m = x[7];
  const BigC from_points = (inf_p - zero_m) * (zero_p - inf_m) / ((inf_p - inf_m) * (zero_p - zero_m));

  const BigC w = BigC::root_of_unity(1, 5, prec);
  const BigC r5 = c(2, prec) * (w + w.pow(4)) + c(1, prec);
  const BigC half = c(Rat(1, 2), prec);
  const BigC a = (c(3, prec) - r5) * half, b = (c(3, prec) + r5) * half;
  const BigC S = c(s, prec), T = c(t, prec);
  const BigC num = (S * S - S * T + a * T * T) * (S * S + b * S * T + b * T * T);
  const BigC den = r5 * S * T * (S * S - S * T - T * T);
  return {from_points, num / den};
}

Report klein_check(const Rat& s, const Rat& t, mpfr_prec_t prec) {
  const WeierstrassCurve curve = klein_curve(s, t);
  static DivPolyTable table(Model::short_form());
  const MPoly F5 = evaluate(table.F(5), {{Sym::b4, Rat(-6 * klein_A(s, t))}, {Sym::b6, Rat(8 * klein_B(s, t))}});
  const auto roots = roots_univariate(F5, prec).roots;
  const auto shown = klein_x_values(s, t, prec);

  Report rep("klein(" + s.get_str() + "," + t.get_str() + ")");
  rep.data["curve"] = curve.to_json();
  rep.add("F5 has 12 roots", roots.size() == 12, std::to_string(roots.size()));

  // Greedy nearest matching; relative error against the displayed value.
  std::vector<bool> used(roots.size(), false);
  BigFloat worst(0, prec);
  const BigFloat one(1, prec);
  for (const BigC& x : shown) {
    std::size_t best = roots.size();
    BigFloat best_d(prec);
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (used[i]) continue;
      const BigFloat d = abs(roots[i] - x);
      if (best == roots.size() || d < best_d) {
        best = i;
        best_d = d;
      }
    }
    if (best == roots.size()) {
      worst = BigFloat(1, prec);
      break;
    }
    used[best] = true;
    worst = max(worst, best_d / max(one, abs(x)));
  }
  const BigFloat tol = pow10(-static_cast<long>(prec) / 4, prec);
  rep.add("roots of F5 match the twelve displayed values", worst < tol, "worst relative gap " + worst.to_decimal(6));

  const auto [cr_points, cr_formula] = klein_cross_ratio(s, t, prec);
  const BigFloat gap = abs(cr_points - cr_formula) / max(one, abs(cr_formula));
  rep.add("cross ratio from points equals the closed formula", gap < tol, "gap " + gap.to_decimal(6));
  rep.data["cross_ratio"] = to_json(cr_points);
  rep.data["cross_ratio_decimal"] = cr_points.to_string();
  rep.data["worst_match"] = worst.to_decimal(6);
  return rep;
}

}  // namespace torsion
