#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "torsion/exactpoly/rat.hpp"
#include "torsion/report.hpp"

namespace torsion {

// Smallest-prime-factor table for 1..bound, built once by a linear sieve and
// read-only afterwards.
class TotientSieve {
 public:
  explicit TotientSieve(std::uint32_t bound);

  std::uint32_t bound() const noexcept { return bound_; }
  std::uint32_t spf(std::uint32_t n) const { return spf_[n]; }
  // Largest power of spf(n) dividing n.
  std::uint32_t spf_power(std::uint32_t n) const { return spp_[n]; }
  bool is_prime_power(std::uint32_t n) const { return n > 1 && spp_[n] == n; }
  const std::vector<std::uint32_t>& primes() const noexcept { return primes_; }

  // J_k(n) for n in [0, bound]; entry 0 is unused (0).
  std::vector<BigInt> jordan_table(unsigned k) const;
  // Number of distinct prime factors.
  unsigned omega(std::uint32_t n) const;
  // Exponent of the prime p in n.
  static unsigned valuation(std::uint32_t n, std::uint32_t p);

 private:
  std::uint32_t bound_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> spp_;
  std::vector<std::uint32_t> primes_;
};

struct CollisionClass {
  BigInt value;
  std::vector<std::uint32_t> members;  // ascending
};

struct CollisionReport {
  std::string function;  // "J1", "J2", ... or "D"
  unsigned k = 0;        // 0 for D
  std::uint32_t bound = 0;
  std::vector<CollisionClass> classes;  // ascending by value, only sizes >= 2

  // Class with the given value, or nullptr.
  const CollisionClass* find(const BigInt& value) const;
  bool contains(const std::vector<std::uint32_t>& members) const;

  nlohmann::json to_json() const;
  std::string to_table() const;
  // Header "value,members"; members separated by spaces.
  std::string to_csv() const;
};

// Every collision class of J_k(n), 1 <= n <= bound. Each class is re-verified
// against J_k computed from a factorization; a mismatch throws std::logic_error.
CollisionReport collision_scan(unsigned k, std::uint32_t bound);

// Collision classes of D(n) = J_2(n) I(n) / 2 for 2 <= n <= bound.
CollisionReport D_collision_scan(std::uint32_t bound);

enum class Prop20Part { A, B, C };
Prop20Part parse_prop20_part(const std::string& s);

// Finite scans of the statements about J_2, J_4, J_6 on prime powers (A),
// products of two distinct primes (B) and general pairs (C).
Report prop20_scan(Prop20Part part, std::uint32_t bound);

}  // namespace torsion
