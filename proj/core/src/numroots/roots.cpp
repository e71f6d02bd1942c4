#include "torsion/numroots/roots.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace torsion {

namespace {

constexpr mpfr_prec_t kIterationGuard = 64;
constexpr mpfr_prec_t kResidualGuard = 64;

// log2 |z| as a double; -inf for zero.
double log2_abs(const BigFloat& z) {
  if (z.is_zero()) return -INFINITY;
  long e = 0;
  const double m = mpfr_get_d_2exp(&e, z.get(), MPFR_RNDN);
  return std::log2(std::fabs(m)) + static_cast<double>(e);
}

// Value and derivative of sum coeffs[k] z^k, plus sum |coeffs[k]| |z|^k.
struct Horner {
  BigC value;
  BigC derivative;
  BigFloat magnitude;
};

Horner horner(const std::vector<BigC>& coeffs, const BigC& z, const std::vector<BigFloat>& abs_coeffs) {
  const mpfr_prec_t p = z.precision();
  Horner h{BigC(p), BigC(p), BigFloat(p)};
  const BigFloat az = abs(z);
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    h.derivative *= z;
    h.derivative += h.value;
    h.value *= z;
    h.value += coeffs[k];
    h.magnitude *= az;
    h.magnitude += abs_coeffs[k];
  }
  return h;
}

std::vector<BigFloat> magnitudes(const std::vector<BigC>& coeffs) {
  std::vector<BigFloat> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back(abs(c));
  return out;
}

// Fujiwara bound on the root moduli, as log2.
double fujiwara_log2(const std::vector<BigC>& coeffs) {
  const std::size_t n = coeffs.size() - 1;
  const double lead = log2_abs(abs(coeffs[n]));
  double best = -INFINITY;
  for (std::size_t k = 0; k < n; ++k) {
    double l = log2_abs(abs(coeffs[k])) - lead;
    if (k == 0) l -= 1.0;
    best = std::max(best, l / static_cast<double>(n - k));
  }
  return best + 1.0;
}

BigFloat from_log2(double l, mpfr_prec_t prec) {
  const double whole = std::floor(l);
  BigFloat r(prec);
  mpfr_set_d(r.get(), std::exp2(l - whole), MPFR_RNDN);
  return r * pow2(static_cast<long>(whole), prec);
}

RootSet solve(std::vector<BigC> coeffs, mpfr_prec_t prec) {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  if (coeffs.size() < 2) throw std::invalid_argument("root finding needs a nonconstant polynomial");
  const unsigned degree = static_cast<unsigned>(coeffs.size() - 1);
  const mpfr_prec_t work = prec + kIterationGuard;

  std::size_t zeros = 0;
  while (coeffs[zeros].is_zero()) ++zeros;
  std::vector<BigC> q;
  for (std::size_t k = zeros; k < coeffs.size(); ++k) q.push_back(coeffs[k].with_precision(work));
  const std::size_t n = q.size() - 1;
  const auto abs_q = magnitudes(q);

  std::vector<BigC> z;
  if (n > 0) {
    // Perturbed circle around the centroid of the roots.
    const BigC centre = -(q[n - 1] / (q[n] * BigFloat(static_cast<long>(n), work)));
    const BigFloat radius = from_log2(fujiwara_log2(q), work);
    for (std::size_t k = 0; k < n; ++k) {
      BigFloat theta = BigFloat::pi(work) * BigFloat(static_cast<long>(4 * k + 1), work) /
                       BigFloat(static_cast<long>(2 * n), work);
      theta += BigFloat(Rat(1, 7), work);
      z.push_back(centre + BigC::polar(radius, theta));
    }
  }

  const BigFloat eps = pow2(-static_cast<long>(work) + 2, work);
  const BigFloat eval_tol = eps * BigFloat(static_cast<long>(4 * n + 4), work);
  std::vector<bool> done(n, false);
  int sweeps = 0;
  bool converged = n == 0;
  while (!converged && sweeps < kMaxAberthSweeps) {
    ++sweeps;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      Horner h = horner(q, z[i], abs_q);
      if (abs(h.value) <= eval_tol * h.magnitude) {
        done[i] = true;
        continue;
      }
      if (h.derivative.is_zero()) {
        z[i] += BigC(BigFloat(eps), BigFloat(eps));
        continue;
      }
      const BigC w = h.value / h.derivative;
      BigC repulsion(work);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        BigC diff = z[i] - z[j];
        if (diff.is_zero()) continue;
        repulsion += diff.inverse();
      }
      BigC denom = BigC(Rat(1), work) - w * repulsion;
      const BigC corr = denom.is_zero() ? w : w / denom;
      z[i] -= corr;
      const BigFloat scale = max(abs(z[i]), pow2(-static_cast<long>(work) / 2, work));
      if (abs(corr) <= eps * scale) done[i] = true;
    }
    converged = std::all_of(done.begin(), done.end(), [](bool b) { return b; });
  }

  RootSet rs;
  rs.source_degree = degree;
  for (std::size_t k = 0; k < zeros; ++k) rs.roots.emplace_back(prec);
  for (auto& r : z) rs.roots.push_back(r.with_precision(prec));
  std::sort(rs.roots.begin(), rs.roots.end(), complex_less);

  // Residual against the full polynomial at extra precision, plus a bound on
  // the rounding error of that evaluation.
  const mpfr_prec_t rp = prec + kResidualGuard;
  std::vector<BigC> full;
  for (const auto& c : coeffs) full.push_back(c.with_precision(rp));
  const auto abs_full = magnitudes(full);
  BigFloat worst(rp);
  for (const auto& r : rs.roots) {
    Horner h = horner(full, r.with_precision(rp), abs_full);
    BigFloat bound = abs(h.value) + h.magnitude * pow2(-static_cast<long>(rp) + 8, rp);
    worst = max(worst, bound);
  }
  rs.residual_bound = upper_rat(worst);

  if (!converged) {
    throw NonConvergence("Aberth iteration did not converge in " + std::to_string(kMaxAberthSweeps) +
                             " sweeps (degree " + std::to_string(degree) + ")",
                         std::move(rs));
  }
  return rs;
}

}  // namespace

Rat upper_rat(const BigFloat& z) {
  if (z.is_zero()) return Rat(0);
  // Round to 64 bits toward +inf so the rational stays small.
  BigFloat r(64);
  mpfr_abs(r.get(), z.get(), MPFR_RNDU);
  mpfr_prec_round(r.get(), 64, MPFR_RNDU);
  return r.to_rat();
}

bool complex_less(const BigC& a, const BigC& b) {
  const mpfr_prec_t p = std::min(a.precision(), b.precision());
  const long drop = -static_cast<long>(3 * p / 4);
  auto differ = [&](const BigFloat& x, const BigFloat& y) {
    const BigFloat scale = max(BigFloat(1, p), max(abs(x), abs(y)));
    return abs(x - y) > scale * pow2(drop, p);
  };
  if (differ(a.re(), b.re())) return a.re() < b.re();
  if (differ(a.im(), b.im())) return a.im() < b.im();
  return false;
}

RootSet roots_complex(std::span<const BigC> coeffs, mpfr_prec_t precision_bits) {
  return solve(std::vector<BigC>(coeffs.begin(), coeffs.end()), precision_bits);
}

RootSet roots_univariate(const MPoly& p, mpfr_prec_t precision_bits) {
  const auto syms = p.symbols();
  if (syms.size() != 1) throw std::invalid_argument("roots_univariate needs exactly one symbol");
  const auto cs = coefficients_in(p, syms.front());
  // Exact coefficients rounded well below the residual guard.
  const mpfr_prec_t cp = precision_bits + kResidualGuard + 64;
  std::vector<BigC> coeffs;
  for (const auto& c : cs) coeffs.emplace_back(c.constant_term(), cp);
  return solve(std::move(coeffs), precision_bits);
}

BigC eval_complex(const MPoly& p, const std::map<Sym, BigC>& assignment, mpfr_prec_t precision_bits) {
  const mpfr_prec_t work =
      precision_bits + 32 + static_cast<mpfr_prec_t>(std::bit_width(p.size() + 1));
  std::map<Sym, std::vector<BigC>> powers;
  for (Sym s : p.symbols()) {
    const auto it = assignment.find(s);
    if (it == assignment.end()) {
      throw std::invalid_argument("no value for symbol " + std::string(name(s)));
    }
    std::vector<BigC> pw{BigC(Rat(1), work)};
    const BigC base = it->second.with_precision(work);
    const unsigned d = p.degree(s);
    for (unsigned k = 1; k <= d; ++k) pw.push_back(pw.back() * base);
    powers.emplace(s, std::move(pw));
  }
  BigC sum(work);
  for (const auto& t : p.terms()) {
    BigC term(t.coeff, work);
    for (const auto& [s, pw] : powers) {
      const unsigned e = t.mono[s];
      if (e > 0) term *= pw[e];
    }
    sum += term;
  }
  return sum.with_precision(precision_bits);
}

}  // namespace torsion
