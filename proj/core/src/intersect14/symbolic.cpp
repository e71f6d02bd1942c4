#include <mutex>

#include "torsion/error.hpp"
#include "torsion/exactpoly/algorithms.hpp"
#include "torsion/intersect14/intersect14.hpp"

namespace torsion {

namespace {

MPoly P(const char* s) { return MPoly::parse(s); }

struct Normalized {
  MPoly poly;
  MPoly scale;
};

// Strips monomial and integer content; scale * poly reproduces the input.
Normalized normalize(const MPoly& p) {
  if (p.is_zero()) return {p, MPoly(1)};
  const Monomial m = monomial_content(p);
  MPoly r = primitive_integer_part(divide_by_monomial(p, m));
  const Rat c = p.leading().coeff / r.leading().coeff;
  return {std::move(r), MPoly::monomial(c, m)};
}

std::size_t differing_terms(const MPoly& a, const MPoly& b) { return (a - b).terms().size(); }

}  // namespace

MPoly reference_C0() {
  static const MPoly p = P(
      "u^15*v^10 + -u^14*v^11 + -u^13*v^12 + u^16*v^5 + -u^15*v^6 + -22*u^14*v^7 + -5*u^13*v^8 + "
      "20*u^12*v^9 + 5*u^11*v^10 + -2*u^10*v^11 + u^9*v^12 + -5*u^14*v^3 + 5*u^13*v^4 + 32*u^12*v^5 + "
      "-5*u^11*v^6 + -12*u^10*v^7 + 5*u^9*v^8 + -5*u^7*v^10 + -u^6*v^11 + u^13 + 4*u^12*v + "
      "-10*u^10*v^3 + -5*u^9*v^4 + -2*u^8*v^5 + 5*u^7*v^6 + -6*u^6*v^7 + -u^3*v^10 + -u^9 + "
      "-5*u^6*v^3 + 8*u^4*v^5 + u^3*v^6 + v^5");
  return p;
}

MPoly reference_C1() {
  static const MPoly p = P(
      "u^19*v^10 + -u^18*v^11 + -u^17*v^12 + u^20*v^5 + -u^19*v^6 + -6*u^18*v^7 + -5*u^17*v^8 + "
      "20*u^16*v^9 + 8*u^15*v^10 + -5*u^14*v^11 + -2*u^13*v^12 + -5*u^18*v^3 + 5*u^17*v^4 + "
      "35*u^16*v^5 + 8*u^15*v^6 + -30*u^14*v^7 + -10*u^13*v^8 + -20*u^12*v^9 + -2*u^11*v^10 + "
      "5*u^10*v^11 + -u^9*v^12 + u^17 + 4*u^16*v + -16*u^15*v^2 + -25*u^14*v^3 + 10*u^13*v^4 + "
      "-14*u^12*v^5 + 2*u^11*v^6 + 30*u^10*v^7 + -5*u^9*v^8 + 8*u^7*v^10 + u^6*v^11 + 2*u^13 + "
      "-4*u^12*v + 25*u^10*v^3 + 5*u^9*v^4 + -10*u^8*v^5 + -8*u^7*v^6 + 6*u^6*v^7 + u^3*v^10 + "
      "u^9 + 5*u^6*v^3 + -11*u^4*v^5 + -u^3*v^6 + -v^5");
  return p;
}

MPoly reference_P24() {
  static const MPoly p = P("32*u^24 + 1369*u^20 + 18812*u^16 + 90646*u^12 + 18812*u^8 + 1369*u^4 + 32");
  return p;
}

nlohmann::json RemainderSystem::to_json() const {
  return {{"C0", C0.to_string()},
          {"C1", C1.to_string()},
          {"unit", unit.to_string()},
          {"unit_exponent", unit_exponent},
          {"scale_C0", scale_C0.to_string()},
          {"scale_C1", scale_C1.to_string()}};
}

RemainderSystem build_remainder_system() {
  const MPoly F5 = compose(edelta_primitive(5), {{Sym::x, P("v")}});
  const MPoly F3 = compose(edelta_primitive(3), {{Sym::x, P("u")}});
  const PseudoRemainder pr = pseudo_rem(F5, F3, Sym::delta);
  const auto cs = coefficients_in(pr.rem, Sym::delta);

  RemainderSystem rs;
  rs.unit = pr.unit;
  rs.unit_exponent = pr.exponent;
  rs.raw_C0 = cs.empty() ? MPoly() : cs[0];
  rs.raw_C1 = cs.size() > 1 ? cs[1] : MPoly();
  auto n0 = normalize(rs.raw_C0);
  auto n1 = normalize(rs.raw_C1);
  rs.C0 = std::move(n0.poly);
  rs.scale_C0 = std::move(n0.scale);
  rs.C1 = std::move(n1.poly);
  rs.scale_C1 = std::move(n1.scale);

  if (cs.size() > 2) throw ReferenceMismatch("remainder has degree > 1 in delta");
  if (rs.C0 != reference_C0()) {
    throw ReferenceMismatch("C0 differs from the reference in " + std::to_string(differing_terms(rs.C0, reference_C0())) +
                            " terms");
  }
  if (rs.C1 != reference_C1()) {
    throw ReferenceMismatch("C1 differs from the reference in " + std::to_string(differing_terms(rs.C1, reference_C1())) +
                            " terms");
  }
  return rs;
}

bool remainder_identity_holds(const RemainderSystem& rs) {
  const MPoly F5 = compose(edelta_primitive(5), {{Sym::x, P("v")}});
  const MPoly F3 = compose(edelta_primitive(3), {{Sym::x, P("u")}});
  const MPoly lhs = rs.unit * F5 - (rs.raw_C1 * P("delta") + rs.raw_C0);
  try {
    divexact(lhs, F3);
    return rs.scale_C0 * rs.C0 == rs.raw_C0 && rs.scale_C1 * rs.C1 == rs.raw_C1;
  } catch (const NotDivisible&) {
    return false;
  }
}

nlohmann::json ResultantCertificate::to_json() const {
  return {{"cofactor_sign", cofactor_sign},
          {"power_of_two", power_of_two},
          {"u_power", u_power},
          {"quartic_power", quartic_power},
          {"P24", P24.to_string()},
          {"sign_matches_reference", sign_matches_reference},
          {"full_resultant_terms", full_resultant.terms().size()},
          {"full_resultant_degree", full_resultant.degree(Sym::u)}};
}

ResultantCertificate build_resultant_certificate(const RemainderSystem& rs) {
  ResultantCertificate rc;
  rc.full_resultant = resultant(rs.C0, rs.C1, Sym::v);
  if (rc.full_resultant.is_zero()) throw ReferenceMismatch("resultant vanishes identically");

  const Monomial m = monomial_content(rc.full_resultant);
  rc.u_power = m[Sym::u];
  MPoly rest = divide_by_monomial(rc.full_resultant, m);
  const MPoly quartic = P("u^4 + -1");
  while (rest.degree(Sym::u) >= 4) {
    try {
      rest = divexact(rest, quartic);
      ++rc.quartic_power;
    } catch (const NotDivisible&) {
      break;
    }
  }
  rc.P24 = primitive_integer_part(rest);
  const Rat c = rest.leading().coeff / rc.P24.leading().coeff;
  rc.cofactor_sign = c < 0 ? -1 : 1;
  const Rat ac = abs(c);
  if (ac.get_den() != 1 || mpz_popcount(ac.get_num_mpz_t()) != 1) {
    throw ReferenceMismatch("constant factor " + c.get_str() + " is not a signed power of two");
  }
  rc.power_of_two = static_cast<unsigned>(mpz_scan1(ac.get_num_mpz_t(), 0));
  rc.sign_matches_reference = rc.cofactor_sign == -1;

  if (rc.P24 != reference_P24()) throw ReferenceMismatch("degree-24 factor differs from the reference");
  if (rc.u_power != 204 || rc.quartic_power != 36 || rc.power_of_two != 48) {
    throw ReferenceMismatch("cofactor 2^" + std::to_string(rc.power_of_two) + " u^" + std::to_string(rc.u_power) +
                            " (u^4 - 1)^" + std::to_string(rc.quartic_power) + " differs from the reference");
  }
  return rc;
}

const SymbolicStage& symbolic_stage() {
  static const SymbolicStage stage = [] {
    SymbolicStage s;
    s.remainder = build_remainder_system();
    s.resultant = build_resultant_certificate(s.remainder);
    return s;
  }();
  return stage;
}

}  // namespace torsion
