#pragma once

#include <nlohmann/json.hpp>

#include <vector>

#include "torsion/families/families.hpp"
#include "torsion/numroots/bigc.hpp"
#include "torsion/report.hpp"

namespace torsion {

// Published forms of the remainder coefficients and the degree-24 factor.
MPoly reference_C0();
MPoly reference_C1();
MPoly reference_P24();

// Pseudo-division of F~5(v, delta) by F~3(u, delta) in delta:
// unit * F~5 = Q * F~3 + raw_C1 * delta + raw_C0, and C_i = raw_C_i / scale_i
// with coprime integer coefficients and positive leading coefficient.
struct RemainderSystem {
  MPoly C0, C1;
  MPoly unit;  // (2 u^3)^unit_exponent
  unsigned unit_exponent = 0;
  MPoly raw_C0, raw_C1;
  MPoly scale_C0, scale_C1;

  nlohmann::json to_json() const;
};

// Throws ReferenceMismatch when C0 or C1 differs from the published form.
RemainderSystem build_remainder_system();
// unit * F~5 - (raw_C1 delta + raw_C0) divided exactly by F~3.
bool remainder_identity_holds(const RemainderSystem& rs);

// res_v(C0, C1) = sign * 2^power_of_two * u^u_power * (u^4 - 1)^quartic_power * P24.
struct ResultantCertificate {
  MPoly full_resultant;
  int cofactor_sign = 1;
  unsigned power_of_two = 0;
  unsigned u_power = 0;
  unsigned quartic_power = 0;
  MPoly P24;
  // False when only the overall sign disagrees with the published display.
  bool sign_matches_reference = true;

  nlohmann::json to_json() const;
};

// Throws ReferenceMismatch on any deviation beyond the overall sign.
ResultantCertificate build_resultant_certificate(const RemainderSystem& rs);

struct SymbolicStage {
  RemainderSystem remainder;
  ResultantCertificate resultant;
};
// Computed once per process.
const SymbolicStage& symbolic_stage();

// 14 common projective x-values of E_delta1 and E_delta2.
struct IntersectionCertificate {
  unsigned root_index = 0;
  BigC u, v, delta1, delta2;
  std::vector<ProjectiveValue> points;
  Rat residual_max;
  mpfr_prec_t precision_bits = 0;

  nlohmann::json to_json() const;
  static IntersectionCertificate from_json(const nlohmann::json& j);
};

// Acceptance threshold 10^(-0.6 * decimal digits of prec).
BigFloat certificate_tolerance(mpfr_prec_t prec);

// root_index in [0, 24) into the roots of P24 sorted by (re, im).
// Throws DegenerateRoot or NoCommonRoot.
IntersectionCertificate build_certificate(unsigned root_index, mpfr_prec_t precision_bits);
// All 24, computed concurrently.
std::vector<IntersectionCertificate> build_all_certificates(mpfr_prec_t precision_bits);

// Re-evaluates everything at twice the stored precision. Throws
// VerificationFailed carrying the worst residual.
Report verify_certificate(const IntersectionCertificate& cert);

}  // namespace torsion
