#include "torsion/closedforms/closedforms.hpp"

#include <stdexcept>

namespace torsion {

namespace {

Rat q(long a, long b) {
  Rat r(a, b);
  r.canonicalize();
  return r;
}

// Shared sub-expressions of the coefficient formulas.
struct Parts {
  Rat A;  // J4/120 + J2/24
  Rat B;  // J6/840 + J2/60
  Rat C;  // J8/16800 + J4/600 + 5 J2/672
};

}  // namespace

Rat c100_of(const Rat& n) { return (n * n - 1) / 12; }

Rat c010_of(const Rat& n) { return (n * n - 1) * (n * n + 6) / 60; }

Rat c001_of(const Rat& n) {
  const Rat n2 = n * n;
  return (n2 - 1) * (n2 * n2 + n2 + 15) / 420;
}

ClosedFormEval closed_forms(unsigned long n) {
  if (n < 2) throw std::invalid_argument("closed forms need n >= 2");
  ClosedFormEval e;
  e.n = n;
  for (unsigned k : {1U, 2U, 3U, 4U, 6U, 8U, 10U, 12U}) e.J[k] = jordan(k, n);
  e.I = I_factor(n);
  e.d = d_of(n);
  e.D = e.J[2] * e.I / 2;
  const Rat N(n);
  e.c100 = c100_of(N);
  e.c010 = c010_of(N);
  e.c001 = c001_of(N);

  const Rat I(e.I);
  const Rat J2(e.J[2]), J4(e.J[4]), J6(e.J[6]), J8(e.J[8]), J10(e.J[10]), J12(e.J[12]);
  const Parts p{J4 * q(1, 120) + J2 * q(1, 24), J6 * q(1, 840) + J2 * q(1, 60),
                J8 * q(1, 16800) + J4 * q(1, 600) + J2 * q(5, 672)};
  e.C100 = J2 * I / 24;
  e.C010 = p.A * I;
  e.C001 = p.B * I;
  e.C020 = -p.C * I + p.A * p.A * I * I / 2;
  e.C011 = -(J10 * q(1, 92400) + J6 * q(1, 2800) + J4 * q(1, 1680) + J2 * q(1, 150)) * I +
           p.A * p.B * I * I;
  e.C002 = -(J12 * q(1, 1345344) + J6 * q(1, 7840) + J2 * q(1, 660)) * I + p.B * p.B * I * I / 2;
  e.C030 = (J12 * q(1, 2574000) + J8 * q(1, 42000) + J4 * q(17, 36000) + J2 * q(5, 2464)) * I -
           p.C * p.A * I * I + p.A * p.A * p.A * I * I * I / 6;
  return e;
}

nlohmann::json ClosedFormEval::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["d"] = to_string(d);
  j["D"] = to_string(D);
  j["I"] = I;
  j["c100"] = to_string(c100);
  j["c010"] = to_string(c010);
  j["c001"] = to_string(c001);
  j["C100"] = to_string(C100);
  j["C010"] = to_string(C010);
  j["C001"] = to_string(C001);
  j["C020"] = to_string(C020);
  j["C011"] = to_string(C011);
  j["C002"] = to_string(C002);
  j["C030"] = to_string(C030);
  nlohmann::json jk = nlohmann::json::object();
  for (const auto& [k, v] : J) jk[std::to_string(k)] = to_string(v);
  j["J"] = jk;
  return j;
}

}  // namespace torsion
