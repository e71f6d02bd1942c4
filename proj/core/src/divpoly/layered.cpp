#include <stdexcept>
#include <vector>

#include "torsion/divpoly/divpoly.hpp"
#include "torsion/exactpoly/algorithms.hpp"

namespace torsion {

unsigned b_weight(const Monomial& m) noexcept {
  return m[Sym::b2] + 2 * m[Sym::b4] + 3 * m[Sym::b6] + 4 * m[Sym::b8];
}

namespace {

std::vector<MPoly> split_layers(const MPoly& p, unsigned max_weight) {
  std::vector<std::vector<Term>> buckets(max_weight + 1);
  for (const auto& t : p.terms()) {
    const unsigned w = b_weight(t.mono);
    if (w <= max_weight) buckets[w].push_back(t);
  }
  std::vector<MPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(MPoly::from_sorted_terms(std::move(b)));
  return out;
}

MPoly join_layers(const std::vector<MPoly>& layers) {
  std::vector<Term> all;
  for (const auto& l : layers) all.insert(all.end(), l.terms().begin(), l.terms().end());
  return MPoly::from_terms(std::move(all));
}

}  // namespace

MPoly layered_divexact(const MPoly& p, const MPoly& q, unsigned max_weight) {
  const auto pl = split_layers(p, max_weight);
  const auto ql = split_layers(q, max_weight);
  if (ql[0].size() != 1) throw std::invalid_argument("layered division needs a monomial weight-0 part");
  std::vector<MPoly> r(max_weight + 1);
  for (unsigned w = 0; w <= max_weight; ++w) {
    MPoly t = pl[w];
    for (unsigned i = 1; i <= w; ++i) {
      if (!ql[i].is_zero() && !r[w - i].is_zero()) t -= r[w - i] * ql[i];
    }
    r[w] = divexact(t, ql[0]);
  }
  return join_layers(r);
}

MPoly layered_sqrt(const MPoly& p, unsigned max_weight) {
  const auto pl = split_layers(p, max_weight);
  if (pl[0].size() != 1) throw std::invalid_argument("layered square root needs a monomial weight-0 part");
  std::vector<MPoly> r(max_weight + 1);
  r[0] = sqrt_exact(pl[0]);
  const MPoly twice = r[0] * Rat(2);
  for (unsigned w = 1; w <= max_weight; ++w) {
    MPoly t = pl[w];
    for (unsigned i = 1; i < w; ++i) {
      if (!r[i].is_zero() && !r[w - i].is_zero()) t -= r[i] * r[w - i];
    }
    r[w] = divexact(t, twice);
  }
  return join_layers(r);
}

}  // namespace torsion
