#include <optional>
#include <utility>

#include "torsion/exactpoly/algorithms.hpp"

namespace torsion {

namespace {

std::optional<Sym> main_variable(const MPoly& a, const MPoly& b) {
  for (Sym s : kAllSyms) {
    if (a.contains(s) || b.contains(s)) return s;
  }
  return std::nullopt;
}

}  // namespace

MPoly content_in(const MPoly& p, Sym var) {
  MPoly g;
  for (const auto& c : coefficients_in(p, var)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

MPoly primitive_part_in(const MPoly& p, Sym var) {
  if (p.is_zero()) return p;
  return divexact(p, content_in(p, var));
}

MPoly gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return primitive_integer_part(b);
  if (b.is_zero()) return primitive_integer_part(a);
  if (a.is_constant() || b.is_constant()) return MPoly(1);

  const Monomial mono = monomial_content(a).gcd(monomial_content(b));
  const MPoly a0 = divide_by_monomial(a, monomial_content(a));
  const MPoly b0 = divide_by_monomial(b, monomial_content(b));
  const MPoly mono_part = MPoly::monomial(Rat(1), mono);
  if (a0.is_constant() || b0.is_constant()) return mono_part;

  const Sym var = *main_variable(a0, b0);
  if (!a0.contains(var)) return primitive_integer_part(mono_part * gcd(a0, content_in(b0, var)));
  if (!b0.contains(var)) return primitive_integer_part(mono_part * gcd(b0, content_in(a0, var)));

  const MPoly ca = content_in(a0, var);
  const MPoly cb = content_in(b0, var);
  const MPoly content = gcd(ca, cb);
  MPoly pa = divexact(a0, ca);
  MPoly pb = divexact(b0, cb);
  if (pa.degree(var) < pb.degree(var)) std::swap(pa, pb);
  // Primitive pseudo-remainder sequence.
  while (true) {
    MPoly r = pseudo_rem(pa, pb, var).rem;
    pa = std::move(pb);
    if (r.is_zero()) break;
    if (r.degree(var) == 0) {
      pa = MPoly(1);
      break;
    }
    pb = primitive_part_in(r, var);
  }
  return primitive_integer_part(mono_part * content * primitive_part_in(pa, var));
}

}  // namespace torsion
