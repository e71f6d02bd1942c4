#include "torsion/divpoly/verify.hpp"

#include <random>

#include "torsion/closedforms/jordan.hpp"
#include "torsion/curves/weierstrass.hpp"
#include "torsion/error.hpp"
#include "torsion/exactpoly/algorithms.hpp"

namespace torsion {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e > 0) {
    if (e & 1U) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1U;
  }
  return r;
}

u64 mod_of(const BigInt& z, u64 p) {
  BigInt r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

// Coefficients mod p, lowest first; false when a denominator vanishes mod p.
bool reduce(const MPoly& a, Sym var, u64 p, std::vector<u64>& out) {
  out.assign(a.degree(var) + 1, 0);
  for (const auto& t : a.terms()) {
    const u64 den = mod_of(t.coeff.get_den(), p);
    if (den == 0) return false;
    out[t.mono[var]] = mulmod(mod_of(t.coeff.get_num(), p), powmod(den, p - 2, p), p);
  }
  return true;
}

void trim(std::vector<u64>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::size_t gcd_degree(std::vector<u64> a, std::vector<u64> b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a <- a mod b
    const u64 inv = powmod(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
      const u64 q = mulmod(a.back(), inv, p);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) {
        a[i + shift] = (a[i + shift] + p - mulmod(q, b[i], p)) % p;
      }
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

std::vector<u64> large_primes() {
  std::vector<u64> out;
  BigInt p = BigInt(1) << 62;
  for (int i = 0; i < 3; ++i) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    out.push_back(p.get_ui());
  }
  return out;
}

Rat random_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 7);
  Rat r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

struct BValues {
  Rat b2, b4, b6;
  std::string to_string() const {
    return "(b2,b4,b6)=(" + torsion::to_string(b2) + "," + torsion::to_string(b4) + "," +
           torsion::to_string(b6) + ")";
  }
};

bool nonsingular(const BValues& b) {
  try {
    standard_quantities(WeierstrassCurve::from_b(RatFunc(b.b2), RatFunc(b.b4), RatFunc(b.b6)));
    return true;
  } catch (const SingularCurve&) {
    return false;
  }
}

MPoly specialize(const MPoly& p, const BValues& b) {
  return evaluate(p, {{Sym::b2, b.b2}, {Sym::b4, b.b4}, {Sym::b6, b.b6}});
}

}  // namespace

bool coprime_univariate(const MPoly& a, const MPoly& b, Sym var) {
  static const std::vector<u64> primes = large_primes();
  const unsigned da = a.degree(var), db = b.degree(var);
  for (u64 p : primes) {
    std::vector<u64> ra, rb;
    if (!reduce(a, var, p, ra) || !reduce(b, var, p, rb)) continue;
    // Leading coefficients must survive, or the degree drop could hide a root.
    if (ra.back() == 0 || rb.back() == 0) continue;
    if (gcd_degree(ra, rb, p) == 0) return true;
  }
  if (da == 0 || db == 0) return !a.is_zero() && !b.is_zero();
  return !resultant_subresultant(a, b, var).is_zero();
}

Report verify_degrees(DivPolyTable& table, unsigned n_max) {
  Report r{"degrees"};
  for (unsigned n = 2; n <= n_max; ++n) {
    const MPoly f = table.f(n);
    const MPoly F = table.F(n);
    const unsigned long d = static_cast<unsigned long>(n) * n - 1;
    const BigInt D = D_of(n);
    const bool f_ok = f.degree(Sym::x) == d && f.leading().mono == Monomial::of(Sym::x, d) &&
                      f.leading().coeff == 1 && !f.contains(Sym::b8);
    const bool F_ok = BigInt(F.degree(Sym::x)) == D && F.leading().mono.degree() == F.degree(Sym::x) &&
                      F.leading().coeff == 1 && !F.contains(Sym::b8);
    r.add("f" + std::to_string(n), f_ok, "deg " + std::to_string(f.degree(Sym::x)) + ", expected " + std::to_string(d));
    r.add("F" + std::to_string(n), F_ok,
          "deg " + std::to_string(F.degree(Sym::x)) + ", expected D(n)=" + to_string(D));
    const MPoly body = table.psi_body(n);
    const Rat lead = n % 2 == 1 ? Rat(n) : Rat(n) / 2;
    r.add("psi" + std::to_string(n) + "-leading", body.leading().coeff == lead &&
                                                      body.leading().mono.degree() == body.degree(Sym::x));
  }
  return r;
}

Report verify_lattice(DivPolyTable& table, unsigned n_max, std::uint64_t seed) {
  Report r{"lattice"};
  for (unsigned n = 2; n <= n_max; ++n) {
    const MPoly fn = table.f(n);
    for (unsigned m = 2; m <= n; ++m) {
      if (n % m != 0) continue;
      bool ok = true;
      std::string detail;
      try {
        const MPoly q = divexact(fn, table.f(m));
        ok = q * table.f(m) == fn;
      } catch (const NotDivisible& e) {
        ok = false;
        detail = "remainder at " + e.offending_monomial();
      }
      r.add("f" + std::to_string(m) + "|f" + std::to_string(n), ok, detail);
    }
  }

  std::vector<BValues> specs;
  const bool short_form = table.model().kind() == Model::Kind::short_form;
  specs.push_back({Rat(0), Rat(-4), Rat(0)});
  std::mt19937_64 rng(seed);
  while (specs.size() < 6) {
    BValues b{short_form ? Rat(0) : random_rat(rng), random_rat(rng), random_rat(rng)};
    if (nonsingular(b)) specs.push_back(b);
  }
  for (const auto& b : specs) {
    std::vector<MPoly> Fs(n_max + 1);
    for (unsigned n = 2; n <= n_max; ++n) Fs[n] = specialize(table.F(n), b);
    unsigned bad = 0;
    std::string first_bad;
    for (unsigned n = 3; n <= n_max; ++n) {
      for (unsigned m = 2; m < n; ++m) {
        if (!coprime_univariate(Fs[m], Fs[n], Sym::x)) {
          if (bad++ == 0) first_bad = "F" + std::to_string(m) + ",F" + std::to_string(n);
        }
      }
    }
    r.add("coprime at " + b.to_string(), bad == 0, bad == 0 ? "" : "common root in " + first_bad);
  }
  return r;
}

Report verify_product_formula(DivPolyTable& table, unsigned n_max) {
  Report r{"product-formula"};
  for (unsigned n = 2; n <= n_max; ++n) {
    MPoly prod(1);
    for (unsigned d = 2; d <= n; ++d) {
      if (n % d != 0) continue;
      const MPoly Fd = table.F(d);
      prod = table.model().mul(prod, d == 2 ? Fd : table.model().mul(Fd, Fd));
    }
    r.add("f" + std::to_string(n), prod == table.f(n));
  }
  return r;
}

Report verify_psi_identities(DivPolyTable& table, unsigned n_max, unsigned symbolic_max,
                             std::uint64_t seed) {
  Report r{"psi-identities"};
  const Model& model = table.model();
  if (model.kind() == Model::Kind::truncated) {
    r.add("skipped for truncated model", true);
    return r;
  }
  const MPoly P = model.apply(psi2_squared());

  // Symbolic: bodies with every psi_2^2 written out as P.
  unsigned sym_checked = 0, sym_failed = 0;
  for (unsigned m = 3; m <= n_max; ++m) {
    for (unsigned n = 2; n < m && m + n <= std::min(n_max, symbolic_max); ++n) {
      for (unsigned k = 1; k < n; ++k) {
        auto term = [&](unsigned a, unsigned b, unsigned c) {
          const unsigned e = (a % 2 == 0) + (b % 2 == 0) + 2 * (c % 2 == 0);
          MPoly t = model.mul(model.mul(table.psi_body(a), table.psi_body(b)),
                              model.mul(table.psi_body(c), table.psi_body(c)));
          for (unsigned i = 0; i < e / 2; ++i) t = model.mul(t, P);
          return t;
        };
        const MPoly lhs = term(m + n, m - n, k);
        const MPoly rhs = term(m + k, m - k, n) - term(n + k, n - k, m);
        ++sym_checked;
        if (lhs != rhs) ++sym_failed;
      }
    }
  }
  r.add("symbolic net identity (" + std::to_string(sym_checked) + " triples)", sym_failed == 0);

  std::mt19937_64 rng(seed);
  const bool short_form = model.kind() == Model::Kind::short_form;
  for (int pt = 0; pt < 3; ++pt) {
    const std::map<Sym, Rat> at = {{Sym::x, random_rat(rng)},
                                   {Sym::b2, short_form ? Rat(0) : random_rat(rng)},
                                   {Sym::b4, random_rat(rng)},
                                   {Sym::b6, random_rat(rng)}};
    std::vector<Rat> B(n_max + 1);
    for (unsigned k = 1; k <= n_max; ++k) B[k] = evaluate(table.psi_body(k), at).constant_term();
    const Rat Pv = evaluate(P, at).constant_term();
    auto term = [&](unsigned a, unsigned b, unsigned c) {
      const unsigned e = (a % 2 == 0) + (b % 2 == 0) + 2 * (c % 2 == 0);
      Rat t = B[a] * B[b] * B[c] * B[c];
      for (unsigned i = 0; i < e / 2; ++i) t *= Pv;
      return t;
    };
    unsigned checked = 0, failed = 0;
    for (unsigned m = 3; m <= n_max; ++m) {
      for (unsigned n = 2; n < m && m + n <= n_max; ++n) {
        for (unsigned k = 1; k < n; ++k) {
          ++checked;
          if (term(m + n, m - n, k) != term(m + k, m - k, n) - term(n + k, n - k, m)) ++failed;
        }
      }
    }
    r.add("net identity at point " + std::to_string(pt + 1) + " (" + std::to_string(checked) + " triples)",
          failed == 0);
  }
  return r;
}

}  // namespace torsion
