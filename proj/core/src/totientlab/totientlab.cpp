#include "torsion/totientlab/totientlab.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "torsion/closedforms/jordan.hpp"

namespace torsion {

namespace {

struct BigIntHash {
  std::size_t operator()(const BigInt& v) const noexcept {
    const mpz_srcptr z = v.get_mpz_t();
    std::size_t h = std::hash<int>{}(z->_mp_size);
    const std::size_t n = mpz_size(z);
    for (std::size_t i = 0; i < n; ++i) {
      h ^= std::hash<mp_limb_t>{}(mpz_getlimbn(z, i)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

struct TupleHash {
  std::size_t operator()(const std::vector<BigInt>& vs) const noexcept {
    std::size_t h = 0;
    for (const auto& v : vs) h ^= BigIntHash{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

template <class Key, class Hash>
std::vector<std::pair<Key, std::vector<std::uint32_t>>> group(
    const std::vector<std::pair<std::uint32_t, Key>>& entries) {
  std::unordered_map<Key, std::vector<std::uint32_t>, Hash> by;
  by.reserve(entries.size());
  for (const auto& [n, key] : entries) by[key].push_back(n);
  std::vector<std::pair<Key, std::vector<std::uint32_t>>> out;
  for (auto& [key, ns] : by) {
    if (ns.size() < 2) continue;
    std::sort(ns.begin(), ns.end());
    out.emplace_back(key, std::move(ns));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::string join(const std::vector<std::uint32_t>& ns, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(ns[i]);
  }
  return s;
}

CollisionReport scan(unsigned k, std::uint32_t bound, bool degree) {
  if (bound < 2) throw std::invalid_argument("scan bound must be >= 2");
  const TotientSieve sieve(bound);
  const auto J = sieve.jordan_table(degree ? 2 : k);
  std::vector<std::pair<std::uint32_t, BigInt>> entries;
  entries.reserve(bound);
  for (std::uint32_t n = degree ? 2 : 1; n <= bound; ++n) {
    entries.emplace_back(n, n == 2 && degree ? BigInt(J[n]) : BigInt(degree ? J[n] / 2 : J[n]));
  }
  CollisionReport rep;
  rep.function = degree ? "D" : "J" + std::to_string(k);
  rep.k = degree ? 0 : k;
  rep.bound = bound;
  for (auto& [value, ns] : group<BigInt, BigIntHash>(entries)) {
    for (auto n : ns) {
      const BigInt check = degree ? D_of(n) : jordan(k, static_cast<unsigned long>(n));
      if (check != value) {
        throw std::logic_error("sieve disagrees with factorization at n = " + std::to_string(n));
      }
    }
    rep.classes.push_back({value, std::move(ns)});
  }
  return rep;
}

nlohmann::json classes_json(const std::vector<std::pair<std::vector<BigInt>, std::vector<std::uint32_t>>>& cs) {
  auto arr = nlohmann::json::array();
  for (const auto& [key, ns] : cs) {
    auto vals = nlohmann::json::array();
    for (const auto& v : key) vals.push_back(v.get_str());
    arr.push_back({{"values", vals}, {"members", ns}});
  }
  return arr;
}

}  // namespace

TotientSieve::TotientSieve(std::uint32_t bound) : bound_(bound), spf_(bound + 1, 0), spp_(bound + 1, 0) {
  if (bound >= 1) spp_[1] = 1;
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::uint32_t>(i);
      spp_[i] = static_cast<std::uint32_t>(i);
      primes_.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : primes_) {
      const std::uint64_t m = i * p;
      if (p > spf_[i] || m > bound) break;
      spf_[m] = p;
      spp_[m] = p == spf_[i] ? spp_[i] * p : p;
    }
  }
}

std::vector<BigInt> TotientSieve::jordan_table(unsigned k) const {
  if (k < 1) throw std::invalid_argument("jordan needs k >= 1");
  std::vector<BigInt> J(bound_ + 1);
  if (bound_ >= 1) J[1] = 1;
  for (std::uint32_t n = 2; n <= bound_; ++n) {
    const std::uint32_t q = spp_[n];
    if (q != n) {
      J[n] = J[q] * J[n / q];
    } else if (spf_[n] == n) {
      mpz_ui_pow_ui(J[n].get_mpz_t(), n, k);
      J[n] -= 1;
    } else {
      BigInt pk;
      mpz_ui_pow_ui(pk.get_mpz_t(), spf_[n], k);
      J[n] = J[n / spf_[n]] * pk;
    }
  }
  return J;
}

unsigned TotientSieve::omega(std::uint32_t n) const {
  unsigned w = 0;
  while (n > 1) {
    n /= spp_[n];
    ++w;
  }
  return w;
}

unsigned TotientSieve::valuation(std::uint32_t n, std::uint32_t p) {
  unsigned e = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

const CollisionClass* CollisionReport::find(const BigInt& value) const {
  for (const auto& c : classes) {
    if (c.value == value) return &c;
  }
  return nullptr;
}

bool CollisionReport::contains(const std::vector<std::uint32_t>& members) const {
  for (const auto& c : classes) {
    if (std::includes(c.members.begin(), c.members.end(), members.begin(), members.end())) return true;
  }
  return false;
}

nlohmann::json CollisionReport::to_json() const {
  auto arr = nlohmann::json::array();
  for (const auto& c : classes) arr.push_back({{"value", c.value.get_str()}, {"members", c.members}});
  return {{"function", function}, {"k", k}, {"bound", bound}, {"classes", arr}};
}

std::string CollisionReport::to_table() const {
  std::ostringstream out;
  out << function << " collisions for n <= " << bound << ": " << classes.size() << " classes\n";
  std::size_t w = 5;
  for (const auto& c : classes) w = std::max(w, c.value.get_str().size());
  for (const auto& c : classes) {
    const std::string v = c.value.get_str();
    out << std::string(w - v.size(), ' ') << v << "  " << join(c.members, ", ") << '\n';
  }
  return out.str();
}

std::string CollisionReport::to_csv() const {
  std::string s = "value,members\n";
  for (const auto& c : classes) s += c.value.get_str() + "," + join(c.members, " ") + "\n";
  return s;
}

CollisionReport collision_scan(unsigned k, std::uint32_t bound) {
  if (k < 1) throw std::invalid_argument("collision scan needs k >= 1");
  return scan(k, bound, false);
}

CollisionReport D_collision_scan(std::uint32_t bound) { return scan(2, bound, true); }

Prop20Part parse_prop20_part(const std::string& s) {
  if (s == "A" || s == "a") return Prop20Part::A;
  if (s == "B" || s == "b") return Prop20Part::B;
  if (s == "C" || s == "c") return Prop20Part::C;
  throw std::invalid_argument("part must be A, B or C");
}

Report prop20_scan(Prop20Part part, std::uint32_t bound) {
  if (bound < 10) throw std::invalid_argument("prop20 scan needs bound >= 10");
  const TotientSieve sieve(bound);
  using Entries = std::vector<std::pair<std::uint32_t, std::vector<BigInt>>>;
  Entries entries;
  std::vector<std::vector<BigInt>> tables;

  switch (part) {
    case Prop20Part::A: {
      Report rep("prop20-A");
      tables.push_back(sieve.jordan_table(2));
      for (std::uint32_t n = 2; n <= bound; ++n) {
        if (sieve.is_prime_power(n)) entries.push_back({n, {tables[0][n]}});
      }
      const auto cs = group<std::vector<BigInt>, TupleHash>(entries);
      rep.data = {{"bound", bound}, {"prime_powers", entries.size()}, {"classes", classes_json(cs)}};
      const bool only_7_8 = cs.size() == 1 && cs[0].second == std::vector<std::uint32_t>{7, 8};
      rep.add("J2 collisions among distinct prime powers are exactly {7, 8}", only_7_8,
              std::to_string(cs.size()) + " classes among " + std::to_string(entries.size()) +
                  " prime powers");
      rep.add("J2(7) = J2(8) = 48", jordan(2, 7UL) == 48 && jordan(2, 8UL) == 48 &&
                                         tables[0][7] == 48 && tables[0][8] == 48);
      return rep;
    }
    case Prop20Part::B: {
      Report rep("prop20-B");
      tables.push_back(sieve.jordan_table(2));
      tables.push_back(sieve.jordan_table(4));
      for (std::uint32_t n = 6; n <= bound; ++n) {
        const std::uint32_t p = sieve.spf(n);
        const std::uint32_t q = n / p;
        if (q > p && sieve.spf(q) == q) entries.push_back({n, {tables[0][n], tables[1][n]}});
      }
      const auto cs = group<std::vector<BigInt>, TupleHash>(entries);
      rep.data = {{"bound", bound}, {"semiprimes", entries.size()}, {"classes", classes_json(cs)}};
      rep.add("equal J2 and J4 on p1 p2 forces p1 p2 = q1 q2", cs.empty(),
              std::to_string(cs.size()) + " nontrivial classes among " + std::to_string(entries.size()) +
                  " semiprimes");
      return rep;
    }
    case Prop20Part::C: {
      Report rep("prop20-C");
      for (unsigned k : {2U, 4U, 6U}) tables.push_back(sieve.jordan_table(k));
      for (std::uint32_t n = 1; n <= bound; ++n) {
        entries.push_back({n, {tables[0][n], tables[1][n], tables[2][n]}});
      }
      const auto cs = group<std::vector<BigInt>, TupleHash>(entries);
      std::size_t violations = 0;
      for (const auto& [key, ns] : cs) {
        for (std::size_t i = 1; i < ns.size(); ++i) {
          const bool same = TotientSieve::valuation(ns[i], 2) == TotientSieve::valuation(ns[0], 2) &&
                            TotientSieve::valuation(ns[i], 3) == TotientSieve::valuation(ns[0], 3) &&
                            sieve.omega(ns[i]) == sieve.omega(ns[0]);
          if (!same) ++violations;
        }
      }
      rep.data = {{"bound", bound}, {"classes", classes_json(cs)}, {"violations", violations}};
      rep.add("equal (J2, J4, J6) implies equal v2, v3 and omega", violations == 0,
              std::to_string(cs.size()) + " classes with equal (J2, J4, J6)");
      return rep;
    }
  }
  throw std::invalid_argument("unknown part");
}

}  // namespace torsion
