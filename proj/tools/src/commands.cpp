#include "commands.hpp"

#include <ostream>
#include <stdexcept>

#include "torsion/closedforms/closedforms.hpp"
#include "torsion/divpoly/verify.hpp"
#include "torsion/error.hpp"
#include "torsion/families/families.hpp"
#include "torsion/intersect14/intersect14.hpp"
#include "torsion/totientlab/totientlab.hpp"

namespace torsion::cli {

namespace {

Model parse_model(const std::string& name) {
  if (name == "generic") return Model::generic();
  if (name == "short") return Model::short_form();
  if (name.rfind("weight", 0) == 0) {
    const std::string w = name.substr(6);
    if (!w.empty() && w.find_first_not_of("0123456789") == std::string::npos) {
      return Model::truncated(static_cast<unsigned>(std::stoul(w)));
    }
  }
  throw std::invalid_argument("unknown model '" + name + "' (generic, short, weight<k>)");
}

Report psi_displays(DivPolyTable& g) {
  Report r("psi-displays");
  r.add("psi1 = 1", g.psi(1).to_string() == "1");
  r.add("psi2 displayed as psi2", g.psi(2).to_string() == "psi2");
  r.add("psi3 display", g.psi(3).to_string() == "3*x^4 + b2*x^3 + 3*b4*x^2 + 3*b6*x + b8");
  r.add("psi4 display",
        g.psi(4).to_string() ==
            "psi2*(2*x^6 + b2*x^5 + 5*b4*x^4 + 10*b6*x^3 + 10*b8*x^2 + b2*b8*x + -b4*b6*x + b4*b8 + -b6^2)");
  return r;
}

Report totient_checks() {
  Report r("totient");
  const auto j1 = collision_scan(1, 20);
  r.add("J1(15) = J1(16) = 8", j1.find(8) != nullptr && j1.contains({15, 16}));
  const auto j2 = collision_scan(2, 16);
  r.add("J2(15) = J2(16) = 192", j2.find(192) != nullptr && j2.contains({15, 16}));
  const auto j3 = collision_scan(3, 30000);
  r.add("J3(28268) = J3(28710) = 19764446869440",
        j3.classes.size() == 1 && j3.classes[0].value == BigInt("19764446869440") &&
            j3.classes[0].members == std::vector<std::uint32_t>{28268, 28710});
  r.add("no J4 collision up to 10^5", collision_scan(4, 100000).classes.empty());
  const auto d = D_collision_scan(70);
  r.add("D(5) = D(6) = 12", d.find(12) && d.find(12)->members == std::vector<std::uint32_t>{5, 6});
  r.add("D(35) = D(40) = D(42) = 576",
        d.find(576) && d.find(576)->members == std::vector<std::uint32_t>{35, 40, 42});
  r.add("D(55) = D(57) = D(62) = D(66) = 1440",
        d.find(1440) && d.find(1440)->members == std::vector<std::uint32_t>{55, 57, 62, 66});
  r.merge(prop20_scan(Prop20Part::A, 1000000));
  r.merge(prop20_scan(Prop20Part::B, 10000));
  r.merge(prop20_scan(Prop20Part::C, 10000));
  return r;
}

Report family_checks(mpfr_prec_t prec) {
  Report r("families");
  r.add("F~3 equals the published form", edelta_primitive(3) == edelta_primitive_reference(3));
  r.add("F~5 equals the published form", edelta_primitive(5) == edelta_primitive_reference(5));
  r.merge(edelta_checks(2, prec));
  r.merge(edelta_checks(Rat(-3, 7), prec));
  const BigFloat tol = pow10(-40, prec);
  for (const auto& [s, t] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{1, 2}}) {
    const Report k = klein_check(s, t, prec);
    r.merge(k);
    const BigFloat worst = BigFloat::from_decimal(k.data.at("worst_match").get<std::string>(), prec);
    r.add(k.title + " root match within 1e-40", worst < tol);
  }
  bool singular = false;
  try {
    klein_check(1, 0, prec);
  } catch (const SingularParameter&) {
    singular = true;
  }
  r.add("klein(1,0) is singular", singular);
  const BigC a = klein_cross_ratio(2, 1, prec).first, b = klein_cross_ratio(3, 1, prec).first;
  r.add("cross ratio differs between (2,1) and (3,1)", abs(a - b) > BigFloat(Rat(1, 1000), prec),
        a.to_string(12) + " vs " + b.to_string(12));
  return r;
}

Report intersect_checks(mpfr_prec_t prec, bool certificates) {
  Report r("intersect14");
  try {
    const auto& s = symbolic_stage();
    r.add("C0, C1 equal the published forms", true, "unit " + s.remainder.unit.to_string());
    r.add("remainder identity", remainder_identity_holds(s.remainder));
    const auto& rc = s.resultant;
    r.add("resultant = -2^48 u^204 (u^4 - 1)^36 P24",
          rc.power_of_two == 48 && rc.u_power == 204 && rc.quartic_power == 36 && rc.P24 == reference_P24(),
          "sign " + std::to_string(rc.cofactor_sign));
  } catch (const ReferenceMismatch& e) {
    r.add("symbolic stage", false, e.what());
    return r;
  }
  if (!certificates) return r;
  const Rat bound = Rat(1) / Rat(BigInt("1" + std::string(100, '0')));
  const auto certs = build_all_certificates(prec);
  for (const auto& c : certs) {
    const std::string name = "root " + std::to_string(c.root_index);
    try {
      verify_certificate(c);
      const bool vieta = abs(c.delta1 * c.delta2 + (c.u * c.u).inverse()) < pow10(-100, prec);
      r.add(name + " certificate", c.points.size() == 14 && c.residual_max < bound && vieta);
    } catch (const VerificationFailed& e) {
      r.add(name + " certificate", false, std::string(e.what()) + " " + e.worst_residual());
    }
  }
  return r;
}

}  // namespace

Config make_config(mpfr_prec_t prec, const std::string& cache, bool no_cache, bool json) {
  if (prec < 64) throw std::invalid_argument("--prec must be at least 64");
  Config cfg;
  cfg.precision_bits = prec;
  cfg.json = json;
  if (!no_cache) cfg.cache_dir = cache.empty() ? default_cache_dir() : std::filesystem::path(cache);
  return cfg;
}

DivPolyTable make_table(const Config& cfg, const std::string& model) {
  return DivPolyTable(parse_model(model), cfg.cache_dir);
}

Report verify_all(const Config& cfg, const VerifyAllOptions& opt) {
  Report all("verify-all");
  DivPolyTable generic(Model::generic(), cfg.cache_dir);
  DivPolyTable short_table(Model::short_form(), cfg.cache_dir);
  DivPolyTable weight6(Model::truncated(6), cfg.cache_dir);

  all.merge(psi_displays(generic));
  all.merge(verify_degrees(generic, opt.generic_nmax));
  all.merge(verify_degrees(short_table, opt.nmax));
  all.merge(verify_lattice(generic, std::min(opt.generic_nmax, 8U)));
  all.merge(verify_lattice(short_table, opt.nmax));
  all.merge(verify_product_formula(short_table, opt.nmax));
  all.merge(verify_psi_identities(generic, opt.generic_nmax));
  all.merge(verify_psi_identities(short_table, opt.nmax));
  all.merge(verify_against_polys(weight6, 16));
  all.merge(verify_against_polys(generic, 6));
  all.merge(recurrence_identities(opt.nmax));
  all.merge(injectivity_probe(500));
  all.merge(verify_mckee(short_table, opt.nmax % 2 == 1 ? opt.nmax : opt.nmax + 1));
  all.merge(totient_checks());
  all.merge(family_checks(cfg.precision_bits));
  all.merge(intersect_checks(cfg.precision_bits, opt.certificates));
  return all;
}

int emit(std::ostream& out, const Report& r, const Config& cfg) {
  if (cfg.json) {
    out << r.to_json().dump(2) << '\n';
  } else {
    out << r.to_text();
  }
  return r.passed() ? kOk : kMismatch;
}

}  // namespace torsion::cli
