#include <stdexcept>

#include "torsion/closedforms/closedforms.hpp"

namespace torsion {

Rat McKeeTable::at(unsigned s, unsigned t) const {
  const auto it = entries.find({s, t});
  return it == entries.end() ? Rat(0) : it->second;
}

McKeeTable mckee_coeffs(unsigned n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("the McKee recurrence needs odd n >= 3");
  McKeeTable tab;
  tab.n = n;
  const unsigned top = (n * n - 1) / 2;
  const Rat N2 = Rat(n) * n;
  auto c = [&](long s, long t) { return s < 0 || t < 0 ? Rat(0) : tab.at(s, t); };
  tab.entries[{0, 0}] = Rat(n);
  for (unsigned w = 1; w <= top; ++w) {
    for (unsigned t = 0; 3 * t <= w; ++t) {
      if ((w - 3 * t) % 2 != 0) continue;
      const unsigned s = (w - 3 * t) / 2;
      const Rat W(w);
      const long S = s, T = t;
      Rat rhs = Rat(1, 2) * ((N2 + 3) / 2 - W) * (N2 / 6 - 1 + W) * c(S - 1, T) -
                Rat(1, 4) * ((N2 + 5) / 2 - W) * ((N2 + 3) / 2 - W) * c(S, T - 1) +
                Rat(3, 2) * Rat(S + 1) * N2 * c(S + 1, T - 1) - Rat(2, 3) * Rat(T + 1) * N2 * c(S - 2, T + 1);
      const Rat value = rhs / (W * (W + Rat(1, 2)));
      if (value != 0) tab.entries[{s, t}] = value;
    }
  }
  return tab;
}

McKeeTable mckee_from_psi(unsigned n, const MPoly& body) {
  McKeeTable tab;
  tab.n = n;
  for (const auto& term : body.terms()) {
    if (term.mono[Sym::b2] != 0 || term.mono[Sym::b8] != 0) {
      throw std::invalid_argument("psi body must be free of b2 and b8");
    }
    tab.entries[{term.mono[Sym::b4], term.mono[Sym::b6]}] = term.coeff;
  }
  return tab;
}

Report verify_mckee(DivPolyTable& short_table, unsigned n_max) {
  if (short_table.model().kind() != Model::Kind::short_form) {
    throw std::invalid_argument("McKee verification needs the short model");
  }
  Report r("mckee");
  for (unsigned n = 3; n <= n_max; n += 2) {
    const McKeeTable rec = mckee_coeffs(n);
    const McKeeTable direct = mckee_from_psi(n, short_table.psi_body(n));
    const bool same = rec.entries == direct.entries;
    r.add("n=" + std::to_string(n) + " (" + std::to_string(direct.entries.size()) + " entries)",
          same && rec.at(0, 0) == Rat(n));
  }
  return r;
}

}  // namespace torsion
