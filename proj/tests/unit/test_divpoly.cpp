#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "torsion/closedforms/jordan.hpp"
#include "torsion/divpoly/divpoly.hpp"
#include "torsion/divpoly/verify.hpp"
#include "torsion/exactpoly/algorithms.hpp"

using namespace torsion;

namespace {

MPoly P(const char* s) { return MPoly::parse(s); }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("displayed psi_n") {
  DivPolyTable t;
  CHECK(t.psi(1).to_string() == "1");
  CHECK(t.psi(2).to_string() == "psi2");
  CHECK(t.psi(3).to_string() == "3*x^4 + b2*x^3 + 3*b4*x^2 + 3*b6*x + b8");
  CHECK(t.psi(4).to_string() ==
        "psi2*(2*x^6 + b2*x^5 + 5*b4*x^4 + 10*b6*x^3 + 10*b8*x^2 + b2*b8*x + -b4*b6*x + b4*b8 + -b6^2)");
  CHECK(t.psi(4).has_psi2_factor);
  CHECK(!t.psi(5).has_psi2_factor);
  CHECK(!t.psi(5).body.contains(Sym::b8));
}

TEST_CASE("f_n and F_n") {
  DivPolyTable t;
  CHECK(t.f(2) == P("x^3 + 1/4*b2*x^2 + 1/2*b4*x + 1/4*b6"));
  CHECK(t.F(2) == t.f(2));
  const MPoly F3 = P("x^4 + 1/3*b2*x^3 + b4*x^2 + b6*x + 1/12*b2*b6 + -1/12*b4^2");
  CHECK(t.F(3) == F3);
  CHECK(t.f(3) == F3 * F3);
  CHECK(t.f(3).degree(Sym::x) == 8);
  CHECK(t.F(5).degree(Sym::x) == 12);
  CHECK(t.F(6).degree(Sym::x) == 12);
  for (unsigned n = 2; n <= 8; ++n) {
    CHECK(t.f(n).degree(Sym::x) == n * n - 1);
    CHECK(D_of(n) == t.F(n).degree(Sym::x));
    CHECK(!t.f(n).contains(Sym::b8));
  }
}

TEST_CASE("short and truncated models agree with the generic one") {
  DivPolyTable g, s(Model::short_form()), w(Model::truncated(6));
  for (unsigned n = 2; n <= 7; ++n) {
    CHECK(s.F(n) == evaluate(g.F(n), Sym::b2, Rat(0)));
    CHECK(w.F(n) == Model::truncated(6).apply(g.F(n)));
    CHECK(w.psi_body(n) == Model::truncated(6).apply(g.psi_body(n)));
  }
}

TEST_CASE("verification reports") {
  DivPolyTable t(Model::short_form());
  CHECK(verify_degrees(t, 12).passed());
  CHECK(verify_lattice(t, 12).passed());
  CHECK(verify_product_formula(t, 12).passed());
  CHECK(verify_psi_identities(t, 12).passed());
  DivPolyTable g;
  CHECK(verify_lattice(g, 6).passed());
  CHECK(verify_psi_identities(g, 8).passed());
}

TEST_CASE("lattice examples") {
  DivPolyTable t;
  CHECK_NOTHROW(divexact(t.f(4), t.f(2)));
  CHECK(divexact(t.f(3), t.f(3)) == MPoly(1));
  const auto at = [](const MPoly& p) { return evaluate(p, {{Sym::b2, 0}, {Sym::b4, -4}, {Sym::b6, 0}}); };
  CHECK(coprime_univariate(at(t.F(2)), at(t.F(3)), Sym::x));
  CHECK(!resultant(at(t.F(2)), at(t.F(3)), Sym::x).is_zero());
  CHECK(!coprime_univariate(at(t.f(2)), at(t.f(4)), Sym::x));
}

TEST_CASE("disk cache is byte-identical to recomputation") {
  const auto dir = std::filesystem::temp_directory_path() / "torsion-test-cache";
  std::filesystem::remove_all(dir);
  std::string first, second;
  {
    DivPolyTable t(Model::short_form(), dir);
    REQUIRE(t.cache_file().has_value());
    for (unsigned n = 2; n <= 9; ++n) first += t.F(n).to_string() + "\n";
  }
  const std::string file = slurp(dir / "divpoly-short.tsv");
  CHECK(!file.empty());
  {
    DivPolyTable t(Model::short_form(), dir);
    for (unsigned n = 2; n <= 9; ++n) second += t.F(n).to_string() + "\n";
    CHECK(t.cache_hits() > 0);
  }
  CHECK(first == second);
  CHECK(slurp(dir / "divpoly-short.tsv") == file);
  std::string fresh;
  DivPolyTable nocache(Model::short_form());
  for (unsigned n = 2; n <= 9; ++n) fresh += nocache.F(n).to_string() + "\n";
  CHECK(fresh == first);
  std::filesystem::remove_all(dir);
}
