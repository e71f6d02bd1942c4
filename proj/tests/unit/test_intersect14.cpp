#include "doctest.h"
#include "torsion/error.hpp"
#include "torsion/exactpoly/algorithms.hpp"
#include "torsion/intersect14/intersect14.hpp"

using namespace torsion;

TEST_CASE("remainder system") {
  const auto& rs = symbolic_stage().remainder;
  CHECK(rs.C0 == reference_C0());
  CHECK(rs.C1 == reference_C1());
  CHECK(coeff(rs.C0, {{Sym::u, 15}, {Sym::v, 10}}) == MPoly(1));
  CHECK(coeff(rs.C0, {{Sym::u, 0}, {Sym::v, 5}}) == MPoly(1));
  CHECK(coeff(rs.C1, {{Sym::u, 20}, {Sym::v, 5}}) == MPoly(1));
  CHECK(coeff(rs.C1, {{Sym::u, 0}, {Sym::v, 5}}) == MPoly(-1));
  CHECK(rs.unit == MPoly::parse("2*u^3").pow(rs.unit_exponent));
  CHECK(!rs.raw_C0.contains(Sym::delta));
  CHECK(remainder_identity_holds(rs));
  CHECK(rational_content(rs.C0) == 1);
  CHECK(rational_content(rs.C1) == 1);
}

TEST_CASE("resultant factorization") {
  const auto& rc = symbolic_stage().resultant;
  CHECK(rc.u_power == 204);
  CHECK(rc.quartic_power == 36);
  CHECK(rc.power_of_two == 48);
  CHECK(rc.cofactor_sign == -1);
  CHECK(rc.P24 == reference_P24());
  CHECK(rc.P24.degree(Sym::u) == 24);
  CHECK(coeff(rc.P24, {{Sym::u, 12}}) == MPoly(90646));
  for (unsigned k = 0; k <= 24; ++k) CHECK(coeff(rc.P24, {{Sym::u, k}}) == coeff(rc.P24, {{Sym::u, 24 - k}}));
  MPoly rebuilt = MPoly::parse("-u^204") * MPoly::parse("u^4 + -1").pow(36) * rc.P24;
  rebuilt *= Rat(BigInt(1) << 48);
  CHECK(rebuilt == rc.full_resultant);
}

TEST_CASE("one certificate") {
  const auto cert = build_certificate(5, 384);
  CHECK(cert.points.size() == 14);
  CHECK(cert.residual_max < Rat(1) / Rat(BigInt("1" + std::string(100, '0'))));
  const BigC prod = cert.delta1 * cert.delta2;
  const BigC target = -((cert.u * cert.u).inverse());
  CHECK(abs(prod - target) < pow2(-300, 384));
  const auto rep = verify_certificate(cert);
  CHECK(rep.passed());

  const auto back = IntersectionCertificate::from_json(cert.to_json());
  CHECK(back.to_json() == cert.to_json());
  CHECK(verify_certificate(back).passed());

  build_certificate(5, 192);
  CHECK(build_certificate(5, 384).to_json().dump() == cert.to_json().dump());

  auto bad = cert;
  bad.u = bad.u + BigC(Rat(1) / Rat(BigInt("10000000000")), 384);
  CHECK_THROWS_AS(verify_certificate(bad), VerificationFailed);
  CHECK_THROWS_AS(build_certificate(24, 128), std::out_of_range);
}

TEST_CASE("all 24 roots") {
  const auto all = build_all_certificates(384);
  REQUIRE(all.size() == 24);
  for (const auto& c : all) CHECK(verify_certificate(c).passed());
}
