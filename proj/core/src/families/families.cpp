#include "torsion/families/families.hpp"

#include <algorithm>
#include <map>

#include "torsion/closedforms/jordan.hpp"
#include "torsion/error.hpp"
#include "torsion/exactpoly/algorithms.hpp"
#include "torsion/numroots/roots.hpp"

namespace torsion {

namespace {

MPoly P(const char* s) { return MPoly::parse(s); }

RatFunc R(const char* s) { return RatFunc::parse(s); }

TorsionXSet from_roots(unsigned n, MPoly poly, unsigned expected, mpfr_prec_t prec) {
  TorsionXSet set;
  set.n = n;
  const unsigned deg = poly.total_degree();
  for (auto& r : roots_univariate(poly, prec).roots) set.values.push_back(ProjectiveValue::numeric(std::move(r)));
  for (unsigned k = deg; k < expected; ++k) set.values.push_back(ProjectiveValue::at_infinity(prec));
  set.defining_poly = std::move(poly);
  return set;
}

void require_edelta(const Rat& delta) {
  Rat d4 = delta * delta * delta * delta;
  if (d4 == 0 || d4 == 1) throw SingularParameter("E_delta needs delta^4 != 0, 1");
}

}  // namespace

ProjectiveValue ProjectiveValue::at_infinity(mpfr_prec_t prec) {
  ProjectiveValue v;
  v.infinity = true;
  v.approx = BigC(prec);
  return v;
}

ProjectiveValue ProjectiveValue::gaussian(const Rat& re, const Rat& im, mpfr_prec_t prec) {
  ProjectiveValue v;
  v.exact = std::make_pair(re, im);
  v.approx = BigC(re, im, prec);
  return v;
}

ProjectiveValue ProjectiveValue::numeric(BigC z) {
  ProjectiveValue v;
  v.approx = std::move(z);
  return v;
}

nlohmann::json ProjectiveValue::to_json() const {
  if (infinity) return "inf";
  if (exact) return {{"re", exact->first.get_str()}, {"im", exact->second.get_str()}};
  return torsion::to_json(approx);
}

std::string ProjectiveValue::to_string() const {
  if (infinity) return "inf";
  if (exact) {
    if (exact->second == 0) return exact->first.get_str();
    std::string im = exact->second == 1 ? "i" : exact->second == -1 ? "-i" : exact->second.get_str() + "*i";
    if (exact->first == 0) return im;
    return exact->first.get_str() + (exact->second > 0 ? "+" : "") + im;
  }
  return approx.to_string();
}

std::size_t TorsionXSet::infinity_count() const {
  return static_cast<std::size_t>(std::count_if(values.begin(), values.end(),
                                                [](const ProjectiveValue& v) { return v.infinity; }));
}

nlohmann::json TorsionXSet::to_json() const {
  auto vals = nlohmann::json::array();
  for (const auto& v : values) vals.push_back(v.to_json());
  return {{"n", n}, {"defining_poly", defining_poly.to_string()}, {"values", vals}};
}

TorsionXSet hesse_two_torsion(const Rat& lambda, mpfr_prec_t prec) {
  if (lambda * lambda * lambda == 1) throw SingularParameter("Hesse family needs lambda^3 != 1");
  MPoly poly = P("x^3 + -4") + P("x^2") * Rat(3 * lambda);
  return from_roots(2, std::move(poly), 3, prec);
}

Rat hesse_projection(const Rat& lambda, const Rat& x, const Rat& y, const Rat& z) {
  const Rat den = x * x - x * y + y * y;
  if (den == 0) throw DivisionByZero("projection undefined at this point");
  return Rat(z * z - 3 * lambda * x * y) / den;
}

RatFunc edelta_three_torsion_quartic() { return R("(delta*x^4 + 2*delta^2*x^3 + -2*x + -delta)/(delta)"); }

EdeltaData edelta_data(const Rat& delta, mpfr_prec_t prec) {
  require_edelta(delta);
  EdeltaData d;
  d.two_torsion.n = 2;
  const Rat inv = 1 / delta;
  for (const Rat& r : {Rat(-delta), inv, Rat(-inv)}) d.two_torsion.values.push_back(ProjectiveValue::gaussian(r, 0, prec));
  d.two_torsion.defining_poly = (P("x") + MPoly(delta)) * (P("x^2") - MPoly(Rat(inv * inv)));
  d.three_torsion_quartic = P("x^4 + -1") + P("x^3") * Rat(2 * delta) + P("x") * Rat(-2 * inv);
  d.four_torsion.n = 4;
  d.four_torsion.values.push_back(ProjectiveValue::gaussian(0, 0, prec));
  d.four_torsion.values.push_back(ProjectiveValue::at_infinity(prec));
  for (const auto& [re, im] : std::vector<std::pair<int, int>>{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
    d.four_torsion.values.push_back(ProjectiveValue::gaussian(re, im, prec));
  }
  d.four_torsion.defining_poly = P("x^5 + -x");
  return d;
}

EdeltaNs edelta_ns() {
  const RatFunc m = R("(delta^4 + 2*delta^2 + 1)/(4*delta^2)");
  const RatFunc zero;
  return {WeierstrassCurve(zero, -(RatFunc(1L) + m), zero, m, zero),
          R("(delta^3*x + delta*x + -delta^2 + -1)/(2*delta*x + -2*delta^2)"),
          R("(delta^4*y + -y)/(4*delta*x^2 + -8*delta^2*x + 4*delta^3)")};
}

MPoly edelta_primitive(unsigned n, DivPolyTable& generic_table) {
  if (n < 2) throw std::invalid_argument("edelta_primitive needs n >= 2");
  if (generic_table.model() != Model::generic()) throw std::invalid_argument("edelta_primitive needs the generic table");
  // b2 = B2 / delta^2, b4 = B4 / delta^2, b6 = 0; X = N / Dn.
  const MPoly F = evaluate(generic_table.F(n), Sym::b6, Rat(0));
  const MPoly N = P("delta^3*x + delta*x + -delta^2 + -1");
  const MPoly Dn = P("2*delta*x + -2*delta^2");
  const MPoly B2 = P("-delta^4 + -6*delta^2 + -1");
  const MPoly B4 = P("1/2*delta^4 + delta^2 + 1/2");
  const unsigned D = F.degree(Sym::x);

  std::vector<MPoly> pN{MPoly(1)}, pD{MPoly(1)}, pB2{MPoly(1)}, pB4{MPoly(1)};
  for (unsigned k = 1; k <= D; ++k) {
    pN.push_back(pN.back() * N);
    pD.push_back(pD.back() * Dn);
    pB2.push_back(pB2.back() * B2);
    pB4.push_back(pB4.back() * B4);
  }
  // Coefficient of X^i as a polynomial in delta, scaled by delta^(2D).
  std::vector<MPoly> G(D + 1);
  for (const auto& t : F.terms()) {
    const unsigned i = t.mono[Sym::x], j = t.mono[Sym::b2], k = t.mono[Sym::b4];
    G[i] += (pB2[j] * pB4[k]).shifted(Monomial::of(Sym::delta, 2 * D - 2 * j - 2 * k)) * t.coeff;
  }
  MPoly out;
  for (unsigned i = 0; i <= D; ++i) {
    if (!G[i].is_zero()) out += pN[i] * pD[D - i] * G[i];
  }
  return primitive_integer_part(primitive_part_in(out, Sym::x));
}

MPoly edelta_primitive_reference(unsigned n) {
  if (n == 3) return P("2*x^3*delta^2") + P("x^4 + -1") * P("delta") + P("-2*x");
  if (n == 5) {
    return P("8*x^5*delta^6") + P("-4*x^6") * P("x^4 + -1") * P("delta^5") +
           P("-2*x^3") * P("x^8 + 6*x^4 + 5") * P("delta^4") + P("x^12 + 5*x^8 + -5*x^4 + -1") * P("delta^3") +
           P("2*x") * P("5*x^8 + 6*x^4 + 1") * P("delta^2") + P("-4*x^2") * P("x^4 + -1") * P("delta") +
           P("-8*x^7");
  }
  throw std::invalid_argument("reference forms exist for n = 3 and 5 only");
}

MPoly edelta_primitive(unsigned n) {
  static DivPolyTable table(Model::generic());
  return edelta_primitive(n, table);
}

TorsionXSet edelta_torsion_xset(unsigned n, const Rat& delta, mpfr_prec_t prec) {
  require_edelta(delta);
  MPoly poly = evaluate(edelta_primitive(n), Sym::delta, delta);
  const BigInt D = D_of(n);
  return from_roots(n, std::move(poly), static_cast<unsigned>(D.get_ui()), prec);
}

}  // namespace torsion

namespace torsion {

namespace {

// |p(z)| / sum |c| |z|^k, the backward error of z as a root.
BigFloat relative_residual(const MPoly& p, const BigC& z, mpfr_prec_t prec) {
  BigFloat scale(0, prec);
  const BigFloat az = abs(z);
  for (const auto& t : p.terms()) {
    BigFloat term = abs(BigFloat(t.coeff, prec));
    for (unsigned k = 0; k < t.mono[Sym::x]; ++k) term = term * az;
    scale = scale + term;
  }
  return abs(eval_complex(p, {{Sym::x, z}}, prec)) / scale;
}

}  // namespace

Report edelta_checks(const Rat& delta, mpfr_prec_t prec) {
  require_edelta(delta);
  Report rep("edelta");
  const EdeltaData data = edelta_data(delta, prec);
  const MPoly dpoly = MPoly(delta);

  const MPoly F2 = evaluate(edelta_primitive(2), Sym::delta, delta);
  rep.add("F~2 vanishes exactly on {-delta, 1/delta, -1/delta}",
          primitive_integer_part(F2) == primitive_integer_part(data.two_torsion.defining_poly));
  const MPoly F3 = edelta_primitive(3);
  const RatFunc q = edelta_three_torsion_quartic() * RatFunc(P("delta"));
  rep.add("delta * (x^4 + 2 delta x^3 - (2/delta) x - 1) = F~3", q.is_polynomial() && q.num() == F3);
  rep.add("F~4 = x (x^4 - 1)", edelta_primitive(4) == data.four_torsion.defining_poly);

  for (unsigned n = 2; n <= 6; ++n) {
    const TorsionXSet set = edelta_torsion_xset(n, delta, prec);
    const std::size_t expected_inf = n % 4 == 0 ? 1 : 0;
    const bool ok = set.values.size() == D_of(n) && set.infinity_count() == expected_inf;
    rep.add("F~" + std::to_string(n) + " accounts for D(n) projective values", ok,
            "degree " + std::to_string(set.defining_poly.total_degree()) + ", infinity x" +
                std::to_string(set.infinity_count()));
  }

  // Translation by 2-torsion sends 3-torsion to 6-torsion.
  const MPoly F6 = evaluate(edelta_primitive(6), Sym::delta, delta);
  const BigFloat tol = pow2(-static_cast<long>(prec) / 2, prec);
  BigFloat worst(0, prec);
  for (const auto& a : roots_univariate(evaluate(F3, Sym::delta, delta), prec).roots) {
    for (const BigC& b : {-a, a.inverse(), -a.inverse()}) worst = max(worst, relative_residual(F6, b, prec));
  }
  rep.add("-a, 1/a, -1/a are roots of F~6 for each root a of F~3", worst < tol,
          "worst relative residual " + worst.to_decimal(6));
  return rep;
}

}  // namespace torsion
