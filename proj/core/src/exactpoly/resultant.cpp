#include <utility>

#include "torsion/error.hpp"
#include "torsion/exactpoly/algorithms.hpp"

namespace torsion {

PolyMatrix sylvester_matrix(const MPoly& p, const MPoly& q, Sym var) {
  const unsigned m = p.degree(var);
  const unsigned n = q.degree(var);
  const unsigned size = m + n;
  const auto pc = coefficients_in(p, var);
  const auto qc = coefficients_in(q, var);
  PolyMatrix s(size, std::vector<MPoly>(size));
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned k = 0; k <= m; ++k) s[i][i + k] = pc[m - k];
  }
  for (unsigned i = 0; i < m; ++i) {
    for (unsigned k = 0; k <= n; ++k) s[n + i][i + k] = qc[n - k];
  }
  return s;
}

MPoly bareiss_determinant(PolyMatrix a) {
  const std::size_t size = a.size();
  if (size == 0) return MPoly(1);
  bool negate = false;
  MPoly prev(1);
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < size && a[r][k].is_zero()) ++r;
      if (r == size) return MPoly{};
      std::swap(a[k], a[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        MPoly num = a[k][k] * a[i][j];
        if (!a[i][k].is_zero() && !a[k][j].is_zero()) num -= a[i][k] * a[k][j];
        a[i][j] = divexact(num, prev);
      }
      a[i][k] = MPoly{};
    }
    prev = a[k][k];
  }
  MPoly det = a[size - 1][size - 1];
  return negate ? -det : det;
}

namespace {

// Resultant when one argument has degree zero in var.
MPoly degenerate_resultant(const MPoly& p, const MPoly& q, Sym var) {
  const unsigned m = p.degree(var);
  const unsigned n = q.degree(var);
  if (m == 0) return p.pow(n);
  return q.pow(m);
}

}  // namespace

MPoly resultant(const MPoly& p, const MPoly& q, Sym var) {
  if (p.is_zero() || q.is_zero()) return MPoly{};
  if (p.degree(var) == 0 || q.degree(var) == 0) return degenerate_resultant(p, q, var);
  return bareiss_determinant(sylvester_matrix(p, q, var));
}

MPoly resultant_subresultant(const MPoly& p, const MPoly& q, Sym var) {
  if (p.is_zero() || q.is_zero()) return MPoly{};
  if (p.degree(var) == 0 || q.degree(var) == 0) return degenerate_resultant(p, q, var);

  MPoly a = p;
  MPoly b = q;
  int sign = 1;
  if (a.degree(var) < b.degree(var)) {
    if (a.degree(var) % 2 == 1 && b.degree(var) % 2 == 1) sign = -sign;
    std::swap(a, b);
  }
  // Factor out rational contents; the resultant is bihomogeneous.
  const Rat ca = rational_content(a);
  const Rat cb = rational_content(b);
  a *= Rat(1 / ca);
  b *= Rat(1 / cb);
  MPoly scale(1);
  {
    Rat t = 1;
    for (unsigned i = 0; i < b.degree(var); ++i) t *= ca;
    for (unsigned i = 0; i < a.degree(var); ++i) t *= cb;
    scale = MPoly(t);
  }

  MPoly g(1);
  MPoly h(1);
  while (true) {
    const unsigned da = a.degree(var);
    const unsigned db = b.degree(var);
    const unsigned delta = da - db;
    if (da % 2 == 1 && db % 2 == 1) sign = -sign;
    MPoly r = pseudo_rem(a, b, var).rem;
    a = std::move(b);
    if (r.is_zero()) return MPoly{};
    b = divexact(r, g * h.pow(delta));
    g = leading_coefficient_in(a, var);
    // h <- h^(1 - delta) * g^delta
    if (delta == 0) {
      // h unchanged up to the g^0 factor.
    } else {
      h = divexact(g.pow(delta), h.pow(delta - 1));
    }
    if (b.degree(var) == 0) break;
  }
  const unsigned da = a.degree(var);
  // h <- h^(1 - deg a) * lc(b)^deg a, with b now a constant in var.
  MPoly last = divexact(b.pow(da), h.pow(da - 1));
  MPoly res = scale * last;
  return sign < 0 ? -res : res;
}

}  // namespace torsion
