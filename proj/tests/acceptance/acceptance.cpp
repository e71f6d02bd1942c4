// One line per acceptance criterion; exit status is the number of failures.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <string>

#include <unistd.h>

#include "commands.hpp"
#include "torsion/closedforms/closedforms.hpp"
#include "torsion/divpoly/verify.hpp"
#include "torsion/error.hpp"
#include "torsion/families/families.hpp"
#include "torsion/intersect14/intersect14.hpp"
#include "torsion/totientlab/totientlab.hpp"

using namespace torsion;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

Outcome from_report(const Report& r) {
  if (r.passed()) return {true, std::to_string(r.checks.size()) + " checks"};
  for (const auto& c : r.checks) {
    if (!c.passed) return {false, c.name + (c.detail.empty() ? "" : ": " + c.detail)};
  }
  return {false, "failed"};
}

Outcome both(Outcome a, const Outcome& b) {
  if (!a.ok) return a;
  if (!b.ok) return b;
  return {true, a.detail + ", " + b.detail};
}

const std::filesystem::path& scratch_cache() {
  static const std::filesystem::path dir = [] {
    auto p = std::filesystem::temp_directory_path() / ("torsion-acceptance-" + std::to_string(::getpid()));
    std::filesystem::remove_all(p);
    return p;
  }();
  return dir;
}

Outcome psi_initial() {
  DivPolyTable g(Model::generic(), std::nullopt);
  const bool ok = g.psi(1).to_string() == "1" && g.psi(2).to_string() == "psi2" &&
                  g.psi(3).to_string() == "3*x^4 + b2*x^3 + 3*b4*x^2 + 3*b6*x + b8" &&
                  g.psi(4).to_string() ==
                      "psi2*(2*x^6 + b2*x^5 + 5*b4*x^4 + 10*b6*x^3 + 10*b8*x^2 + b2*b8*x + -b4*b6*x + b4*b8 + -b6^2)";
  return {ok, ok ? "psi1..psi4 verbatim" : "display mismatch"};
}

Outcome closed_form_coefficients() {
  DivPolyTable w(Model::truncated(6), std::nullopt);
  return from_report(verify_against_polys(w, 16));
}

Outcome degrees() {
  DivPolyTable s(Model::short_form(), std::nullopt);
  DivPolyTable g(Model::generic(), std::nullopt);
  Outcome o = both(from_report(verify_degrees(s, 20)), from_report(verify_degrees(g, 8)));
  const auto t0 = std::chrono::steady_clock::now();
  const auto d = D_collision_scan(70);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  using V = std::vector<std::uint32_t>;
  const bool lists = d.find(12) && d.find(12)->members == V{5, 6} && d.find(576) &&
                     d.find(576)->members == V{35, 40, 42} && d.find(1440) &&
                     d.find(1440)->members == V{55, 57, 62, 66};
  return both(o, {lists && secs < 1.0, "D scan " + std::to_string(d.classes.size()) + " classes"});
}

Outcome lattice() {
  DivPolyTable s(Model::short_form(), scratch_cache());
  DivPolyTable g(Model::generic(), scratch_cache());
  Outcome o = both(from_report(verify_lattice(s, 20)), from_report(verify_lattice(g, 8)));
  return both(o, both(from_report(verify_psi_identities(s, 20)), from_report(verify_psi_identities(g, 10))));
}

Outcome mckee() {
  DivPolyTable s(Model::short_form(), scratch_cache());
  return from_report(verify_mckee(s, 21));
}

Outcome recurrences() { return from_report(recurrence_identities(20)); }

Outcome injectivity() { return from_report(injectivity_probe(500)); }

Outcome totient() {
  using V = std::vector<std::uint32_t>;
  const auto j1 = collision_scan(1, 20);
  const auto j2 = collision_scan(2, 16);
  const auto j3 = collision_scan(3, 30000);
  bool ok = j1.find(8) && j1.contains({15, 16}) && j2.find(192) && j2.contains({15, 16});
  ok = ok && j3.classes.size() == 1 && j3.classes[0].value == BigInt("19764446869440") &&
       j3.classes[0].members == V{28268, 28710};
  ok = ok && collision_scan(4, 100000).classes.empty();
  if (!ok) return {false, "collision values"};
  return from_report(prop20_scan(Prop20Part::A, 1000000));
}

Outcome symbolic() {
  try {
    const auto& s = symbolic_stage();
    const auto& r = s.resultant;
    const bool ok = remainder_identity_holds(s.remainder) && r.power_of_two == 48 && r.u_power == 204 &&
                    r.quartic_power == 36 && r.P24 == reference_P24();
    return {ok, "unit " + s.remainder.unit.to_string()};
  } catch (const ReferenceMismatch& e) {
    return {false, e.what()};
  }
}

Outcome numeric() {
  const mpfr_prec_t prec = 384;
  const Rat bound = Rat(1) / Rat(BigInt("1" + std::string(100, '0')));
  const BigFloat vieta_tol = pow10(-100, prec);
  std::size_t good = 0;
  const auto certs = build_all_certificates(prec);
  for (const auto& c : certs) {
    try {
      verify_certificate(c);
    } catch (const VerificationFailed& e) {
      return {false, "root " + std::to_string(c.root_index) + ": " + e.what()};
    }
    if (c.points.size() == 14 && c.residual_max < bound &&
        abs(c.delta1 * c.delta2 + (c.u * c.u).inverse()) < vieta_tol) {
      ++good;
    }
  }
  return {good == 24 && certs.size() == 24, std::to_string(good) + "/24 roots"};
}

Outcome families() {
  const mpfr_prec_t prec = 384;
  if (edelta_primitive(3) != edelta_primitive_reference(3) || edelta_primitive(5) != edelta_primitive_reference(5)) {
    return {false, "F~3 or F~5 differs"};
  }
  // F~4 = x^5 - x: roots 0, +-1, +-i and one point at infinity
  const auto set = edelta_torsion_xset(4, 2, prec);
  if (set.infinity_count() != 1 || set.values.size() != 6) return {false, "F~4 root count"};
  const BigFloat eps = pow10(-100, prec);
  const std::vector<BigC> expect = {BigC(Rat(0), prec), BigC(Rat(1), prec), BigC(Rat(-1), prec), BigC(Rat(0), Rat(1), prec),
                                    BigC(Rat(0), Rat(-1), prec)};
  std::vector<bool> used(expect.size(), false);
  for (const auto& v : set.values) {
    if (v.infinity) continue;
    bool hit = false;
    for (std::size_t i = 0; i < expect.size() && !hit; ++i) {
      if (!used[i] && abs(v.approx - expect[i]) < eps) used[i] = hit = true;
    }
    if (!hit) return {false, "F~4 root " + v.to_string()};
  }
  const BigFloat tol = pow10(-40, prec);
  for (const auto& [s, t] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{1, 2}}) {
    const Report k = klein_check(s, t, prec);
    if (!k.passed()) return from_report(k);
    if (!(BigFloat::from_decimal(k.data.at("worst_match").get<std::string>(), prec) < tol)) {
      return {false, k.title + " root match"};
    }
  }
  const BigC a = klein_cross_ratio(2, 1, prec).first, b = klein_cross_ratio(3, 1, prec).first;
  return {abs(a - b) > pow10(-3, prec), "cross ratios " + a.to_string(8) + ", " + b.to_string(8)};
}

Outcome determinism() {
  cli::VerifyAllOptions opt;
  cli::Config plain;
  const std::string a = cli::verify_all(plain, opt).to_json().dump();
  cli::Config cached;
  cached.cache_dir = scratch_cache() / "determinism";
  const std::string c = cli::verify_all(cached, opt).to_json().dump();  // cold
  const std::string d = cli::verify_all(cached, opt).to_json().dump();  // warm
  const bool ok = a == c && a == d;
  return {ok, ok ? std::to_string(a.size()) + " bytes, 3 runs identical" : "reports differ"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"psi initial values", 1, psi_initial},
      {"closed-form coefficients n <= 16", 120, closed_form_coefficients},
      {"degrees n <= 20 and D collisions to 70", 60, degrees},
      {"divisibility lattice and psi identities n <= 20", 60, lattice},
      {"McKee tables odd n <= 21", 0, mckee},
      {"recurrence identities n <= 20", 0, recurrences},
      {"injectivity probe n <= 500", 0, injectivity},
      {"totient collisions and prime-power scan", 30, totient},
      {"symbolic remainder system and resultant", 300, symbolic},
      {"24 numeric certificates at 384 bits", 120, numeric},
      {"curve families", 0, families},
      {"verify-all determinism with and without cache", 0, determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && secs > c.limit_s) {
      o.ok = false;
      o.detail += " (over " + std::to_string(static_cast<int>(c.limit_s)) + " s)";
    }
    std::printf("%s %2zu  %-50s %7.2fs  %s\n", o.ok ? "PASS" : "FAIL", i + 1, c.name, secs, o.detail.c_str());
    std::fflush(stdout);
    failures += o.ok ? 0 : 1;
  }
  std::filesystem::remove_all(scratch_cache());
  return failures;
}
