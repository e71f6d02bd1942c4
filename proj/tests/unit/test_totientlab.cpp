#include "doctest.h"
#include "torsion/closedforms/jordan.hpp"
#include "torsion/totientlab/totientlab.hpp"

using namespace torsion;

TEST_CASE("sieve agrees with factorization") {
  const TotientSieve s(3000);
  for (unsigned k : {1U, 2U, 3U}) {
    const auto J = s.jordan_table(k);
    for (std::uint32_t n = 1; n <= 3000; ++n) CHECK(J[n] == jordan(k, static_cast<unsigned long>(n)));
  }
  CHECK(s.omega(1) == 0);
  CHECK(s.omega(360) == 3);
  CHECK(TotientSieve::valuation(360, 2) == 3);
  CHECK(s.is_prime_power(49));
  CHECK(!s.is_prime_power(12));
}

TEST_CASE("J1 collisions up to 20") {
  const auto r = collision_scan(1, 20);
  const auto* c = r.find(8);
  REQUIRE(c != nullptr);
  CHECK(r.contains({15, 16}));
  CHECK(c->members.front() == 15);
  for (std::size_t i = 1; i < r.classes.size(); ++i) CHECK(r.classes[i - 1].value < r.classes[i].value);
}

TEST_CASE("smallest J3 pair") {
  const auto r = collision_scan(3, 30000);
  REQUIRE(r.classes.size() == 1);
  CHECK(r.classes[0].value == BigInt("19764446869440"));
  CHECK(r.classes[0].members == std::vector<std::uint32_t>{28268, 28710});
}

TEST_CASE("no J4 collisions up to 10^5") { CHECK(collision_scan(4, 100000).classes.empty()); }

TEST_CASE("D collisions") {
  const auto r = D_collision_scan(70);
  CHECK(r.find(12)->members == std::vector<std::uint32_t>{5, 6});
  CHECK(r.find(576)->members == std::vector<std::uint32_t>{35, 40, 42});
  CHECK(r.find(1440)->members == std::vector<std::uint32_t>{55, 57, 62, 66});
  CHECK(D_collision_scan(4).classes.empty());
  CHECK(D_collision_scan(2).classes.empty());
}

TEST_CASE("reports are deterministic") {
  CHECK(collision_scan(2, 5000).to_json().dump() == collision_scan(2, 5000).to_json().dump());
  const auto r = D_collision_scan(20);
  CHECK(r.to_csv().rfind("value,members\n12,5 6\n", 0) == 0);
  CHECK(prop20_scan(Prop20Part::C, 2000).to_json() == prop20_scan(Prop20Part::C, 2000).to_json());
}

TEST_CASE("prime power, semiprime and general scans") {
  CHECK(jordan(2, 7UL) == 48);
  CHECK(jordan(2, 8UL) == 48);
  const auto a = prop20_scan(Prop20Part::A, 100000);
  CHECK(a.passed());
  REQUIRE(a.data["classes"].size() == 1);
  CHECK(a.data["classes"][0]["members"] == nlohmann::json({7, 8}));
  CHECK(prop20_scan(Prop20Part::B, 10000).passed());
  CHECK(prop20_scan(Prop20Part::C, 10000).passed());
  CHECK(parse_prop20_part("b") == Prop20Part::B);
  CHECK_THROWS_AS(parse_prop20_part("D"), std::invalid_argument);
  CHECK_THROWS_AS(prop20_scan(Prop20Part::A, 5), std::invalid_argument);
}
