#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "torsion/closedforms/closedforms.hpp"
#include "torsion/divpoly/verify.hpp"
#include "torsion/error.hpp"
#include "torsion/families/families.hpp"
#include "torsion/intersect14/intersect14.hpp"
#include "torsion/numroots/roots.hpp"
#include "torsion/totientlab/totientlab.hpp"

using namespace torsion;
using namespace torsion::cli;

namespace {

struct Flags {
  long prec = 384;
  std::string cache;
  bool no_cache = false;
  bool json = false;
};

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << '\n'; }

int print_collisions(const CollisionReport& r, const Config& cfg, const std::string& csv) {
  if (!csv.empty()) {
    std::ofstream out(csv);
    if (!out) throw std::runtime_error("cannot write " + csv);
    out << r.to_csv();
  }
  if (cfg.json) {
    print_json(r.to_json());
  } else {
    std::cout << r.to_table();
  }
  return kOk;
}

nlohmann::json xset_json(const TorsionXSet& s) { return s.to_json(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Division polynomials, torsion images and the 14-point intersection"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Flags flags;
  app.add_option("--prec", flags.prec, "Working precision in bits")->capture_default_str();
  app.add_option("--cache", flags.cache, "Cache directory (default: $TORSION_CACHE_DIR or ~/.cache/torsion)");
  app.add_flag("--no-cache", flags.no_cache, "Disable the polynomial cache");
  app.add_flag("--json", flags.json, "JSON output");

  int code = kOk;
  std::function<int(const Config&)> action;

  // divpoly {psi,f,F} N
  auto* divpoly = app.add_subcommand("divpoly", "Division polynomials psi_n, f_n, F_n");
  divpoly->require_subcommand(1);
  std::string model = "generic";
  unsigned n = 0;
  divpoly->add_option("--model", model, "generic, short or weight<k>")->capture_default_str();
  for (const char* kind : {"psi", "f", "F"}) {
    auto* sub = divpoly->add_subcommand(kind, std::string("Print ") + kind + "_n");
    sub->add_option("n,--n", n, "Index")->required()->check(CLI::PositiveNumber);
    sub->callback([&, kind = std::string(kind)] {
      action = [&, kind](const Config& cfg) {
        DivPolyTable t = make_table(cfg, model);
        std::string text;
        if (kind == "psi") {
          text = t.psi(n).to_string();
        } else if (kind == "f") {
          text = t.f(n).to_string();
        } else {
          text = t.F(n).to_string();
        }
        if (cfg.json) {
          print_json({{"kind", kind}, {"n", n}, {"model", t.model().name()}, {"poly", text}});
        } else {
          std::cout << text << '\n';
        }
        return kOk;
      };
    });
  }

  // closedform --n N
  auto* closedform = app.add_subcommand("closedform", "Closed-form degree and leading coefficients");
  closedform->add_option("n,--n", n, "Index >= 2")->required()->check(CLI::Range(2U, 1000000000U));
  closedform->callback([&] {
    action = [&](const Config&) {
      print_json(closed_forms(n).to_json());
      return kOk;
    };
  });

  // verify {closedforms,lattice,recurrences,mckee}
  auto* verify = app.add_subcommand("verify", "Exact verification reports");
  verify->require_subcommand(1);
  unsigned nmax = 0;
  auto vsub = [&](const char* name, const char* help, unsigned default_nmax, auto fn) {
    auto* sub = verify->add_subcommand(name, help);
    sub->add_option("--nmax", nmax, "Largest index")->default_val(default_nmax)->check(CLI::Range(2U, 60U));
    if (std::string(name) == "lattice") sub->add_option("--model", model, "generic, short or weight<k>");
    sub->callback([&, default_nmax, fn] {
      action = [&, default_nmax, fn](const Config& cfg) {
        return emit(std::cout, fn(cfg, nmax == 0 ? default_nmax : nmax), cfg);
      };
    });
  };
  vsub("closedforms", "Closed forms against extracted coefficients", 16, [&](const Config& cfg, unsigned m) {
    DivPolyTable t(Model::truncated(6), cfg.cache_dir);
    return verify_against_polys(t, m);
  });
  vsub("lattice", "Degrees, divisibility lattice, product formula, psi identities", 20,
       [&](const Config& cfg, unsigned m) {
         DivPolyTable t = make_table(cfg, model == "generic" && m > 10 ? "short" : model);
         Report r("lattice");
         r.merge(verify_degrees(t, m));
         r.merge(verify_lattice(t, m));
         r.merge(verify_product_formula(t, m));
         r.merge(verify_psi_identities(t, m));
         return r;
       });
  vsub("recurrences", "Index-doubling recurrences", 20, [](const Config&, unsigned m) { return recurrence_identities(m); });
  vsub("mckee", "McKee coefficient recurrence for odd n", 21, [](const Config& cfg, unsigned m) {
    DivPolyTable t(Model::short_form(), cfg.cache_dir);
    return verify_mckee(t, m);
  });

  // totient {collide,dcollide,prop20}
  auto* totient = app.add_subcommand("totient", "Jordan totient scans");
  totient->require_subcommand(1);
  unsigned k = 1;
  std::uint32_t bound = 0;
  std::string part, csv;
  auto* collide = totient->add_subcommand("collide", "Collision classes of J_k");
  collide->add_option("--k", k, "Order")->required()->check(CLI::Range(1U, 64U));
  collide->add_option("--bound", bound, "Scan 1..bound")->required()->check(CLI::Range(2U, 100000000U));
  collide->add_option("--csv", csv, "Also write the classes as CSV");
  collide->callback([&] {
    action = [&](const Config& cfg) { return print_collisions(collision_scan(k, bound), cfg, csv); };
  });
  auto* dcollide = totient->add_subcommand("dcollide", "Collision classes of D(n)");
  dcollide->add_option("--bound", bound, "Scan 2..bound")->required()->check(CLI::Range(2U, 100000000U));
  dcollide->add_option("--csv", csv, "Also write the classes as CSV");
  dcollide->callback([&] {
    action = [&](const Config& cfg) { return print_collisions(D_collision_scan(bound), cfg, csv); };
  });
  auto* prop20 = totient->add_subcommand("prop20", "Finite scans for prime powers (A), semiprimes (B), pairs (C)");
  prop20->add_option("--part", part, "A, B or C")->required()->check(CLI::IsMember({"A", "B", "C", "a", "b", "c"}));
  prop20->add_option("--bound", bound, "Scan bound")->required()->check(CLI::Range(10U, 100000000U));
  prop20->callback([&] {
    action = [&](const Config& cfg) { return emit(std::cout, prop20_scan(parse_prop20_part(part), bound), cfg); };
  });

  // family {edelta-F,hesse,klein-check}
  auto* family = app.add_subcommand("family", "Explicit curve families");
  family->require_subcommand(1);
  std::string s_text = "2", t_text = "1", lambda_text = "0", delta_text;
  auto* edelta = family->add_subcommand("edelta-F", "F~_n(x, delta) of the quartic family");
  edelta->add_option("n,--n", n, "Index >= 2")->required()->check(CLI::Range(2U, 64U));
  edelta->add_option("--delta", delta_text, "Also list the roots at this rational delta");
  edelta->callback([&] {
    action = [&](const Config& cfg) {
      const MPoly F = edelta_primitive(n);
      nlohmann::json j = {{"n", n}, {"poly", F.to_string()}};
      if (!delta_text.empty()) j["torsion_x"] = xset_json(edelta_torsion_xset(n, parse_rat(delta_text), cfg.precision_bits));
      if (cfg.json) {
        print_json(j);
      } else {
        std::cout << F.to_string() << '\n';
        if (j.contains("torsion_x")) {
          for (const auto& v : edelta_torsion_xset(n, parse_rat(delta_text), cfg.precision_bits).values) {
            std::cout << "  " << v.to_string() << '\n';
          }
        }
      }
      return kOk;
    };
  });
  auto* hesse = family->add_subcommand("hesse", "2-torsion images of the Hesse family");
  hesse->add_option("--lambda", lambda_text, "Rational lambda with lambda^3 != 1")->capture_default_str();
  hesse->callback([&] {
    action = [&](const Config& cfg) {
      const Rat lambda = parse_rat(lambda_text);
      const auto set = hesse_two_torsion(lambda, cfg.precision_bits);
      if (cfg.json) {
        auto j = xset_json(set);
        j["origin_image"] = hesse_projection(lambda, 1, -1, 0).get_str();
        print_json(j);
      } else {
        std::cout << set.defining_poly.to_string() << '\n';
        for (const auto& v : set.values) std::cout << "  " << v.to_string() << '\n';
      }
      return kOk;
    };
  });
  auto* klein = family->add_subcommand("klein-check", "5-torsion of Klein's family against the closed forms");
  klein->add_option("--s", s_text, "Rational s")->capture_default_str();
  klein->add_option("--t", t_text, "Rational t")->capture_default_str();
  klein->callback([&] {
    action = [&](const Config& cfg) {
      return emit(std::cout, klein_check(parse_rat(s_text), parse_rat(t_text), cfg.precision_bits), cfg);
    };
  });

  // intersect14 {symbolic,build,verify}
  auto* inter = app.add_subcommand("intersect14", "The 14-point intersection");
  inter->require_subcommand(1);
  unsigned root = 0;
  std::string file;
  inter->add_subcommand("symbolic", "Remainder system and resultant factorization")->callback([&] {
    action = [&](const Config&) {
      const auto& s = symbolic_stage();
      nlohmann::json j = {{"remainder", s.remainder.to_json()}, {"resultant", s.resultant.to_json()}};
      print_json(j);
      return kOk;
    };
  });
  auto* build = inter->add_subcommand("build", "Numeric certificate for one root of P24");
  build->add_option("--root", root, "Root index 0..23")->check(CLI::Range(0U, 23U))->capture_default_str();
  build->add_option("--file", file, "Write the certificate here instead of stdout");
  build->callback([&] {
    action = [&](const Config& cfg) {
      const auto cert = build_certificate(root, cfg.precision_bits);
      if (file.empty()) {
        print_json(cert.to_json());
      } else {
        std::ofstream out(file);
        if (!out) throw std::runtime_error("cannot write " + file);
        out << cert.to_json().dump(2) << '\n';
      }
      return kOk;
    };
  });
  auto* iverify = inter->add_subcommand("verify", "Re-verify a certificate at doubled precision");
  iverify->add_option("--file", file, "Certificate JSON")->required()->check(CLI::ExistingFile);
  iverify->callback([&] {
    action = [&](const Config& cfg) {
      std::ifstream in(file);
      nlohmann::json j;
      try {
        in >> j;
      } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("not JSON: ") + e.what());
      }
      return emit(std::cout, verify_certificate(IntersectionCertificate::from_json(j)), cfg);
    };
  });

  // verify-all
  VerifyAllOptions vopt;
  auto* vall = app.add_subcommand("verify-all", "Run every reproduction check");
  vall->add_option("--nmax", vopt.nmax, "Largest index for the short model")->capture_default_str()->check(CLI::Range(4U, 40U));
  vall->callback([&] { action = [&](const Config& cfg) { return emit(std::cout, verify_all(cfg, vopt), cfg); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    const Config cfg = make_config(flags.prec, flags.cache, flags.no_cache, flags.json);
    code = action ? action(cfg) : kUsage;
  } catch (const ReferenceMismatch& e) {
    std::cerr << "mismatch: " << e.what() << '\n';
    return kMismatch;
  } catch (const VerificationFailed& e) {
    std::cerr << "verification failed: " << e.what() << " (worst residual " << e.worst_residual() << ")\n";
    return kMismatch;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const SingularParameter& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kOperational;
  }
  return code;
}
