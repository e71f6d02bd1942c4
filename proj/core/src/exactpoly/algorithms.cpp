#include "torsion/exactpoly/algorithms.hpp"

#include <map>
#include <queue>

#include "torsion/error.hpp"

namespace torsion {

namespace {

struct HeapEntry {
  Monomial mono;
  std::size_t quotient_index;
  std::size_t divisor_index;
  bool operator<(const HeapEntry& o) const { return mono < o.mono; }
};

struct IntTerm {
  Monomial mono;
  BigInt coeff;
};

// p = scale * (integer terms with gcd 1 and positive leading coefficient).
std::vector<IntTerm> integer_part(const MPoly& p, Rat& scale) {
  scale = rational_content(p);
  if (p.leading().coeff < 0) scale = -scale;
  const Rat inv = 1 / scale;
  std::vector<IntTerm> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    const Rat c = t.coeff * inv;
    out.push_back({t.mono, c.get_num()});
  }
  return out;
}

MPoly from_integer_terms(std::vector<IntTerm>& terms, const Rat& scale) {
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) out.push_back({t.mono, Rat(t.coeff) * scale});
  return MPoly::from_sorted_terms(std::move(out));
}

}  // namespace

MPoly divexact(const MPoly& p, const MPoly& q) {
  if (q.is_zero()) throw DivisionByZero("divexact by zero polynomial");
  if (p.is_zero()) return MPoly{};
  const Monomial& lm = q.leading().mono;

  if (q.size() == 1) {
    const Rat inv_lc = 1 / q.leading().coeff;
    std::vector<Term> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
      if (!lm.divides(t.mono)) throw NotDivisible("exact division failed", t.mono.to_string());
      out.push_back({t.mono / lm, t.coeff * inv_lc});
    }
    return MPoly::from_sorted_terms(std::move(out));
  }

  // By Gauss's lemma the quotient of an integer polynomial by a primitive one
  // is integral, so the whole division runs over Z.
  Rat sp, sq;
  const auto f = integer_part(p, sp);
  const auto g = integer_part(q, sq);
  const BigInt& lc = g.front().coeff;

  std::vector<IntTerm> quotient;
  std::priority_queue<HeapEntry> heap;
  std::size_t k = 0;
  BigInt c, r;
  while (k < f.size() || !heap.empty()) {
    Monomial m;
    if (heap.empty() || (k < f.size() && f[k].mono > heap.top().mono)) {
      m = f[k].mono;
    } else {
      m = heap.top().mono;
    }
    c = 0;
    if (k < f.size() && f[k].mono == m) c = f[k++].coeff;
    while (!heap.empty() && heap.top().mono == m) {
      HeapEntry e = heap.top();
      heap.pop();
      mpz_submul(c.get_mpz_t(), quotient[e.quotient_index].coeff.get_mpz_t(),
                 g[e.divisor_index].coeff.get_mpz_t());
      if (e.divisor_index + 1 < g.size()) {
        heap.push({quotient[e.quotient_index].mono * g[e.divisor_index + 1].mono, e.quotient_index,
                   e.divisor_index + 1});
      }
    }
    if (c == 0) continue;
    if (!lm.divides(m)) throw NotDivisible("exact division failed", m.to_string());
    mpz_fdiv_qr(c.get_mpz_t(), r.get_mpz_t(), c.get_mpz_t(), lc.get_mpz_t());
    if (r != 0) throw NotDivisible("exact division failed", m.to_string());
    quotient.push_back({m / lm, c});
    heap.push({quotient.back().mono * g[1].mono, quotient.size() - 1, 1});
  }
  return from_integer_terms(quotient, sp / sq);
}

MPoly sqrt_exact(const MPoly& p) {
  if (p.is_zero()) return MPoly{};
  Rat scale;
  const auto f = integer_part(p, scale);
  Rat root_scale;
  if (scale < 0 || !rat_sqrt(scale, root_scale)) {
    throw NotASquare("content is not a square: " + to_string(scale));
  }
  const IntTerm& lead = f.front();
  Monomial root_mono;
  for (Sym s : kAllSyms) {
    const unsigned e = lead.mono[s];
    if (e % 2 != 0) throw NotASquare("leading monomial is not a square: " + lead.mono.to_string());
    root_mono.set(s, e / 2);
  }
  if (mpz_perfect_square_p(lead.coeff.get_mpz_t()) == 0) {
    throw NotASquare("leading coefficient is not a square: " + to_string(lead.coeff));
  }
  BigInt root_coeff;
  mpz_sqrt(root_coeff.get_mpz_t(), lead.coeff.get_mpz_t());
  std::vector<IntTerm> root{{root_mono, root_coeff}};
  const BigInt two_lc = 2 * root_coeff;

  // Pending contributions of the partial root's square beyond the lead term.
  std::map<Monomial, BigInt, std::greater<>> pending;
  std::size_t k = 1;
  BigInt c, r;
  while (k < f.size() || !pending.empty()) {
    Monomial m;
    if (pending.empty() || (k < f.size() && f[k].mono > pending.begin()->first)) {
      m = f[k].mono;
      c = f[k++].coeff;
    } else {
      m = pending.begin()->first;
      c = -pending.begin()->second;
      pending.erase(pending.begin());
      if (k < f.size() && f[k].mono == m) c += f[k++].coeff;
    }
    if (c == 0) continue;
    // Every root term s has s*lead >= (last root term)^2 = last term of p.
    if (!root_mono.divides(m) || m < f.back().mono) {
      throw NotASquare("unmatched monomial " + m.to_string());
    }
    mpz_fdiv_qr(c.get_mpz_t(), r.get_mpz_t(), c.get_mpz_t(), two_lc.get_mpz_t());
    if (r != 0) throw NotASquare("unmatched coefficient at " + m.to_string());
    IntTerm t{m / root_mono, c};
    for (std::size_t i = 1; i < root.size(); ++i) {
      auto& slot = pending[t.mono * root[i].mono];
      mpz_addmul(slot.get_mpz_t(), t.coeff.get_mpz_t(), root[i].coeff.get_mpz_t());
      mpz_addmul(slot.get_mpz_t(), t.coeff.get_mpz_t(), root[i].coeff.get_mpz_t());
    }
    auto& sq = pending[t.mono * t.mono];
    mpz_addmul(sq.get_mpz_t(), t.coeff.get_mpz_t(), t.coeff.get_mpz_t());
    root.push_back(std::move(t));
    // Cancelled entries must not keep the loop alive.
    while (!pending.empty() && pending.begin()->second == 0) pending.erase(pending.begin());
  }
  for (const auto& [m, v] : pending) {
    if (v != 0) throw NotASquare("unmatched monomial " + m.to_string());
  }
  return from_integer_terms(root, root_scale);
}

PseudoRemainder pseudo_rem(const MPoly& p, const MPoly& q, Sym var) {
  const unsigned n = q.degree(var);
  if (q.is_zero() || n == 0) throw std::invalid_argument("pseudo_rem: divisor has degree 0 in variable");
  const unsigned m = p.degree(var);
  const MPoly lc = leading_coefficient_in(q, var);
  if (p.is_zero() || m < n) return {p, MPoly(1), 0};

  std::vector<MPoly> r = coefficients_in(p, var);
  const std::vector<MPoly> qc = coefficients_in(q, var);
  for (unsigned d = m + 1; d-- > n;) {
    const MPoly lead = r[d];
    for (unsigned i = 0; i < d; ++i) r[i] *= lc;
    if (!lead.is_zero()) {
      const unsigned shift = d - n;
      for (unsigned i = 0; i < n; ++i) r[i + shift] -= lead * qc[i];
    }
    r[d] = MPoly{};
  }
  r.resize(n);
  const unsigned e = m - n + 1;
  return {from_coefficients(r, var), lc.pow(e), e};
}

}  // namespace torsion
