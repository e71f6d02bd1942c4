#include <cmath>
#include <future>

#include "torsion/error.hpp"
#include "torsion/intersect14/intersect14.hpp"
#include "torsion/numroots/roots.hpp"

namespace torsion {

namespace {

constexpr mpfr_prec_t kGuardBits = 64;

struct Primitives {
  MPoly F3, F5, F6, F10;
};

const Primitives& primitives() {
  static const Primitives p{edelta_primitive(3), edelta_primitive(5), edelta_primitive(6), edelta_primitive(10)};
  return p;
}

// |p(a)| / sum |c| prod |a_s|^e.
BigFloat relative_residual(const MPoly& p, const std::map<Sym, BigC>& a, mpfr_prec_t prec) {
  std::map<Sym, BigFloat> mod;
  for (const auto& [s, z] : a) mod.emplace(s, abs(z.with_precision(prec)));
  BigFloat scale(0, prec);
  for (const auto& t : p.terms()) {
    BigFloat term = abs(BigFloat(t.coeff, prec));
    for (const auto& [s, m] : mod) {
      for (unsigned k = 0; k < t.mono[s]; ++k) term = term * m;
    }
    scale = scale + term;
  }
  if (scale == BigFloat(0, prec)) return scale;
  return abs(eval_complex(p, a, prec)) / scale;
}

BigFloat rel_gap(const BigC& a, const BigC& b) {
  const mpfr_prec_t prec = std::max(a.precision(), b.precision());
  return abs(a - b) / max(BigFloat(1, prec), abs(b));
}

std::pair<BigC, BigC> delta_pair(const BigC& u, mpfr_prec_t prec) {
  const BigC one(Rat(1), prec);
  const BigC u3 = u.pow(3), u4 = u.pow(4);
  const BigC b = u4 - one;
  const BigC disc = sqrt(b * b + BigC(Rat(16), prec) * u4);
  const BigC den = BigC(Rat(4), prec) * u3;
  return {(-b + disc) / den, (-b - disc) / den};
}

std::vector<ProjectiveValue> fourteen_points(const BigC& u, const BigC& v, mpfr_prec_t prec) {
  std::vector<ProjectiveValue> pts;
  pts.push_back(ProjectiveValue::gaussian(0, 0, prec));
  pts.push_back(ProjectiveValue::at_infinity(prec));
  pts.push_back(ProjectiveValue::gaussian(1, 0, prec));
  pts.push_back(ProjectiveValue::gaussian(-1, 0, prec));
  pts.push_back(ProjectiveValue::gaussian(0, 1, prec));
  pts.push_back(ProjectiveValue::gaussian(0, -1, prec));
  for (const BigC* z : {&u, &v}) {
    const BigC inv = z->inverse();
    for (const BigC& w : {*z, -*z, inv, -inv}) pts.push_back(ProjectiveValue::numeric(w.with_precision(prec)));
  }
  return pts;
}

struct Measured {
  BigFloat worst;
  std::string where;
};

// Membership residuals: F~3 at u, F~6 at -u, 1/u, -1/u, F~5 at v, F~10 at -v, 1/v, -1/v.
Measured membership(const BigC& u, const BigC& v, const BigC& d1, const BigC& d2, mpfr_prec_t prec) {
  const auto& F = primitives();
  Measured m{BigFloat(0, prec), ""};
  auto check = [&](const MPoly& p, const char* name, const BigC& x, const BigC& d, const char* dn) {
    const BigFloat r = relative_residual(p, {{Sym::x, x}, {Sym::delta, d}}, prec);
    if (m.where.empty() || r > m.worst) {
      m.worst = r;
      m.where = std::string(name) + " at " + dn;
    }
  };
  const BigC ui = u.inverse(), vi = v.inverse();
  for (const auto& [d, dn] : {std::pair<const BigC&, const char*>{d1, "delta1"}, {d2, "delta2"}}) {
    check(F.F3, "F~3(u)", u, d, dn);
    check(F.F6, "F~6(-u)", -u, d, dn);
    check(F.F6, "F~6(1/u)", ui, d, dn);
    check(F.F6, "F~6(-1/u)", -ui, d, dn);
    check(F.F5, "F~5(v)", v, d, dn);
    check(F.F10, "F~10(-v)", -v, d, dn);
    check(F.F10, "F~10(1/v)", vi, d, dn);
    check(F.F10, "F~10(-1/v)", -vi, d, dn);
  }
  return m;
}

BigFloat min_separation(const std::vector<BigC>& zs, mpfr_prec_t prec) {
  BigFloat best = pow2(1000, prec);
  for (std::size_t i = 0; i < zs.size(); ++i) {
    for (std::size_t j = i + 1; j < zs.size(); ++j) best = std::min(best, abs(zs[i] - zs[j]));
  }
  return best;
}

IntersectionCertificate build_from_roots(unsigned root_index, const std::vector<BigC>& u_roots, mpfr_prec_t prec) {
  if (root_index >= u_roots.size()) throw std::out_of_range("root index must be below 24");
  const mpfr_prec_t work = prec + kGuardBits;
  const auto& rs = symbolic_stage().remainder;
  const BigC u = u_roots[root_index].with_precision(work);

  const BigFloat sep = pow2(-static_cast<long>(prec) / 8, work);
  const BigC one(Rat(1), work);
  const BigC u4 = u.pow(4);
  if (abs(u4) < sep || abs(u4 - one) < sep || abs(u4 * u4 + BigC(Rat(14), work) * u4 + one) < sep) {
    throw DegenerateRoot("u^4 in {0, 1} or u^8 + 14 u^4 + 1 = 0 at root " + std::to_string(root_index));
  }

  std::vector<BigC> coeffs;
  for (const auto& c : coefficients_in(rs.C0, Sym::v)) coeffs.push_back(eval_complex(c, {{Sym::u, u}}, work));
  const auto v_roots = roots_complex(coeffs, work).roots;
  const BigFloat tol = certificate_tolerance(prec);
  std::size_t best = v_roots.size();
  BigFloat best_r(work);
  for (std::size_t i = 0; i < v_roots.size(); ++i) {
    const BigFloat r = relative_residual(rs.C1, {{Sym::u, u}, {Sym::v, v_roots[i]}}, work);
    if (best == v_roots.size() || r < best_r) {
      best = i;
      best_r = r;
    }
  }
  if (best == v_roots.size() || !(best_r < tol)) {
    throw NoCommonRoot("no root of C0(u, v) makes C1 vanish at root " + std::to_string(root_index));
  }

  IntersectionCertificate cert;
  cert.root_index = root_index;
  cert.precision_bits = prec;
  cert.u = u.with_precision(prec);
  cert.v = v_roots[best].with_precision(prec);
  const auto [d1, d2] = delta_pair(u, work);
  cert.delta1 = d1.with_precision(prec);
  cert.delta2 = d2.with_precision(prec);
  cert.points = fourteen_points(cert.u, cert.v, prec);

  const Measured m = membership(cert.u.with_precision(work), cert.v.with_precision(work), cert.delta1.with_precision(work),
                                cert.delta2.with_precision(work), work);
  if (!(m.worst < tol)) throw VerificationFailed("residual too large: " + m.where, m.worst.to_decimal(6));
  cert.residual_max = upper_rat(BigFloat(m.worst, 64));
  return cert;
}

std::vector<BigC> p24_roots(mpfr_prec_t prec) {
  return roots_univariate(symbolic_stage().resultant.P24, prec + kGuardBits).roots;
}

[[noreturn]] void fail(const std::string& what, const BigFloat& worst) {
  throw VerificationFailed("certificate rejected: " + what, worst.to_decimal(6));
}

}  // namespace

BigFloat certificate_tolerance(mpfr_prec_t prec) {
  const double digits = static_cast<double>(prec) * std::log10(2.0);
  return pow10(-static_cast<long>(std::floor(0.6 * digits)), prec + kGuardBits);
}

nlohmann::json IntersectionCertificate::to_json() const {
  auto pts = nlohmann::json::array();
  for (const auto& p : points) pts.push_back(p.to_json());
  return {{"root_index", root_index},
          {"u", torsion::to_json(u)},
          {"v", torsion::to_json(v)},
          {"delta1", torsion::to_json(delta1)},
          {"delta2", torsion::to_json(delta2)},
          {"points", pts},
          {"residual_max", BigFloat(residual_max, 64).to_decimal(8)},
          {"precision_bits", precision_bits}};
}

IntersectionCertificate IntersectionCertificate::from_json(const nlohmann::json& j) {
  try {
    IntersectionCertificate c;
    c.root_index = j.value("root_index", 0U);
    c.precision_bits = j.at("precision_bits").get<mpfr_prec_t>();
    c.u = bigc_from_json(j.at("u"));
    c.v = bigc_from_json(j.at("v"));
    c.delta1 = bigc_from_json(j.at("delta1"));
    c.delta2 = bigc_from_json(j.at("delta2"));
    for (const auto& p : j.at("points")) {
      if (p.is_string() && p.get<std::string>() == "inf") {
        c.points.push_back(ProjectiveValue::at_infinity(c.precision_bits));
      } else if (p.contains("prec")) {
        c.points.push_back(ProjectiveValue::numeric(bigc_from_json(p)));
      } else {
        c.points.push_back(ProjectiveValue::gaussian(Rat(p.at("re").get<std::string>()),
                                                     Rat(p.at("im").get<std::string>()), c.precision_bits));
      }
    }
    c.residual_max = BigFloat::from_decimal(j.at("residual_max").get<std::string>(), 64).to_rat();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  }
}

IntersectionCertificate build_certificate(unsigned root_index, mpfr_prec_t precision_bits) {
  return build_from_roots(root_index, p24_roots(precision_bits), precision_bits);
}

std::vector<IntersectionCertificate> build_all_certificates(mpfr_prec_t precision_bits) {
  primitives();
  const auto roots = p24_roots(precision_bits);
  std::vector<std::future<IntersectionCertificate>> jobs;
  for (unsigned k = 0; k < roots.size(); ++k) {
    jobs.push_back(std::async(std::launch::async, [&roots, k, precision_bits] {
      return build_from_roots(k, roots, precision_bits);
    }));
  }
  std::vector<IntersectionCertificate> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

Report verify_certificate(const IntersectionCertificate& cert) {
  const mpfr_prec_t prec = 2 * cert.precision_bits;
  const BigFloat tol = certificate_tolerance(cert.precision_bits);
  const BigFloat sep = pow2(-static_cast<long>(cert.precision_bits) / 8, prec);
  const auto& sym = symbolic_stage();
  const BigC u = cert.u.with_precision(prec), v = cert.v.with_precision(prec);
  const BigC d1 = cert.delta1.with_precision(prec), d2 = cert.delta2.with_precision(prec);
  Report rep("certificate " + std::to_string(cert.root_index));

  const BigFloat r_u = relative_residual(sym.resultant.P24, {{Sym::u, u}}, prec);
  if (!(r_u < tol)) fail("u is not a root of P24", r_u);
  rep.add("u is a root of P24", true, r_u.to_decimal(6));

  const BigFloat r_c = max(relative_residual(sym.remainder.C0, {{Sym::u, u}, {Sym::v, v}}, prec),
                           relative_residual(sym.remainder.C1, {{Sym::u, u}, {Sym::v, v}}, prec));
  if (!(r_c < tol)) fail("(u, v) is not a common zero of C0 and C1", r_c);
  rep.add("(u, v) is a common zero of C0 and C1", true, r_c.to_decimal(6));

  const Measured m = membership(u, v, d1, d2, prec);
  if (!(m.worst < tol)) fail("membership residual " + m.where, m.worst);
  rep.add("u, v and their images lie on both curves", true, m.worst.to_decimal(6));

  const BigC one(Rat(1), prec);
  const BigC u2 = u * u, u3 = u2 * u;
  const BigFloat vieta = max(rel_gap(d1 * d2, -(u2.inverse())),
                             rel_gap(d1 + d2, -((u3 * u - one) / (BigC(Rat(2), prec) * u3))));
  if (!(vieta < tol)) fail("delta1, delta2 are not the roots of F~3(u, delta)", vieta);
  rep.add("delta1 delta2 = -1/u^2 and delta1 + delta2 = -(u^4 - 1)/(2 u^3)", true, vieta.to_decimal(6));

  const BigC d2i = d2.inverse();
  BigFloat from_d1 = abs(d1 - d2);
  for (const BigC& w : {-d2, d2i, -d2i}) from_d1 = std::min(from_d1, abs(d1 - w), [](auto& a, auto& b) { return a < b; });
  if (!(from_d1 > sep)) fail("delta1 is +-delta2^(+-1)", from_d1);
  rep.add("delta1 is not +-delta2^(+-1)", true, from_d1.to_decimal(6));

  const auto expected = fourteen_points(u, v, prec);
  BigFloat mismatch(0, prec);
  bool shape = cert.points.size() == expected.size();
  for (std::size_t i = 0; shape && i < expected.size(); ++i) {
    if (expected[i].infinity != cert.points[i].infinity) {
      shape = false;
    } else if (!expected[i].infinity) {
      mismatch = max(mismatch, rel_gap(cert.points[i].approx.with_precision(prec), expected[i].approx));
    }
  }
  if (!shape || !(mismatch < tol)) fail("listed points differ from those implied by u and v", mismatch);
  std::vector<BigC> finite;
  for (const auto& p : expected) {
    if (!p.infinity) finite.push_back(p.approx);
  }
  const BigFloat gap = min_separation(finite, prec);
  if (!(gap > sep)) fail("points are not pairwise distinct", gap);
  rep.add("14 pairwise distinct points", true, "min separation " + gap.to_decimal(6));

  const BigC d1i = d1.inverse();
  BigFloat cross = abs(-d1 - (-d2));
  for (const BigC& a : {-d1, d1i, -d1i}) {
    for (const BigC& b : {-d2, d2i, -d2i}) cross = std::min(cross, abs(a - b));
  }
  if (!(cross > sep)) fail("2-torsion images of the two curves overlap", cross);
  rep.add("2-torsion images of the two curves are disjoint", true, "min gap " + cross.to_decimal(6));

  rep.data = {{"precision_bits", prec}, {"worst_residual", max(max(r_u, r_c), max(m.worst, vieta)).to_decimal(6)}};
  return rep;
}

}  // namespace torsion
