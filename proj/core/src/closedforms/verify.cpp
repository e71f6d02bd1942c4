#include <functional>
#include <map>

#include "torsion/closedforms/closedforms.hpp"

namespace torsion {

namespace {

Rat extract(const MPoly& p, unsigned r, unsigned s, unsigned t, const BigInt& degree) {
  const long e = degree.get_si() - static_cast<long>(r + 2 * s + 3 * t);
  if (e < 0) return Rat(0);
  const MPoly c = coeff(p, {{Sym::b2, r}, {Sym::b4, s}, {Sym::b6, t}, {Sym::x, static_cast<unsigned>(e)}});
  if (!c.is_constant()) throw std::logic_error("coefficient is not a constant");
  return c.constant_term();
}

}  // namespace

Report verify_against_polys(DivPolyTable& table, unsigned n_max) {
  Report r("closedforms");
  if (table.model().kind() == Model::Kind::truncated && table.model().max_weight() < 6) {
    throw std::invalid_argument("closed-form verification needs b-weight 6");
  }
  for (unsigned n = 2; n <= n_max; ++n) {
    const ClosedFormEval e = closed_forms(n);
    const MPoly f = table.f(n);
    const MPoly F = table.F(n);
    struct Item {
      const char* name;
      Rat formula;
      Rat extracted;
    };
    const bool has_b2 = table.model().kind() != Model::Kind::short_form;
    std::vector<Item> items = {
        {"C010", e.C010, extract(F, 0, 1, 0, e.D)}, {"C001", e.C001, extract(F, 0, 0, 1, e.D)},
        {"C020", e.C020, extract(F, 0, 2, 0, e.D)}, {"C011", e.C011, extract(F, 0, 1, 1, e.D)},
        {"C002", e.C002, extract(F, 0, 0, 2, e.D)}, {"C030", e.C030, extract(F, 0, 3, 0, e.D)},
        {"c010", e.c010, extract(f, 0, 1, 0, e.d)}, {"c001", e.c001, extract(f, 0, 0, 1, e.d)},
    };
    if (has_b2) {
      items.insert(items.begin(), {"C100", e.C100, extract(F, 1, 0, 0, e.D)});
      items.push_back({"c100", e.c100, extract(f, 1, 0, 0, e.d)});
    }
    std::string bad;
    for (const auto& it : items) {
      if (it.formula != it.extracted) {
        bad += std::string(bad.empty() ? "" : "; ") + it.name + " formula " + to_string(it.formula) +
               " extracted " + to_string(it.extracted);
      }
    }
    const bool degrees = BigInt(F.degree(Sym::x)) == e.D && BigInt(f.degree(Sym::x)) == e.d;
    if (!degrees) bad += std::string(bad.empty() ? "" : "; ") + "degree mismatch";
    r.add("n=" + std::to_string(n) + " (" + std::to_string(items.size()) + " coefficients)", bad.empty(), bad);
  }
  return r;
}

Report recurrence_identities(unsigned n_max) {
  Report r("recurrences");
  const std::vector<std::pair<const char*, std::function<Rat(const Rat&)>>> seqs = {
      {"d", [](const Rat& n) -> Rat { return n * n - 1; }},
      {"c100", c100_of},
      {"c010", c010_of},
      {"c001", c001_of},
  };
  for (const auto& [name, t] : seqs) {
    unsigned odd_checked = 0, even_checked = 0;
    std::string bad;
    for (unsigned k = 2; 2 * k + 1 <= n_max; ++k) {
      const Rat n(k);
      const Rat rhs = n * n * n * (n + 2) / (2 * n + 1) * (3 * t(n) + t(n + 2)) -
                      (n - 1) * (n + 1) * (n + 1) * (n + 1) / (2 * n + 1) * (t(n - 1) + 3 * t(n + 1));
      ++odd_checked;
      if (rhs != t(2 * n + 1) && bad.empty()) bad = "t(2n+1) fails at n=" + std::to_string(k);
    }
    for (unsigned k = 3; 2 * k <= n_max; ++k) {
      const Rat n(k);
      const Rat rhs = (n - 1) * (n - 1) * (n + 2) / 4 * (2 * t(n - 1) + t(n) + t(n + 2) - t(Rat(2))) -
                      (n - 2) * (n + 1) * (n + 1) / 4 * (t(n - 2) + t(n) + 2 * t(n + 1) - t(Rat(2)));
      ++even_checked;
      if (rhs != t(2 * n) && bad.empty()) bad = "t(2n) fails at n=" + std::to_string(k);
    }
    r.add(std::string(name) + " (" + std::to_string(odd_checked) + " odd, " + std::to_string(even_checked) +
              " even)",
          bad.empty(), bad);
  }
  return r;
}

Report injectivity_probe(unsigned n_max) {
  Report r("injectivity");
  std::map<std::string, std::vector<unsigned>> by_tuple;
  std::map<BigInt, std::vector<unsigned>> by_D;
  for (unsigned n = 2; n <= n_max; ++n) {
    const ClosedFormEval e = closed_forms(n);
    const std::string key = to_string(e.D) + "|" + to_string(e.C020 / (e.C010 * e.C010)) + "|" +
                            to_string(e.C011 / (e.C010 * e.C001)) + "|" + to_string(e.C002 / (e.C001 * e.C001));
    by_tuple[key].push_back(n);
    by_D[e.D].push_back(n);
  }
  nlohmann::json tuple_collisions = nlohmann::json::array();
  for (const auto& [key, ns] : by_tuple) {
    if (ns.size() > 1) tuple_collisions.push_back(ns);
  }
  nlohmann::json d_collisions = nlohmann::json::array();
  for (const auto& [D, ns] : by_D) {
    if (ns.size() > 1) d_collisions.push_back({{"D", to_string(D)}, {"n", ns}});
  }
  r.data["n_max"] = n_max;
  r.data["tuple_collisions"] = tuple_collisions;
  r.data["D_collision_classes"] = d_collisions.size();
  r.add("tuple collision-free for 2 <= n <= " + std::to_string(n_max), tuple_collisions.empty(),
        tuple_collisions.empty() ? "" : tuple_collisions.dump());
  if (n_max >= 6) {
    const bool d56 = closed_forms(5).D == closed_forms(6).D;
    r.add("D(5) = D(6) while the tuple separates 5 and 6", d56 && tuple_collisions.empty());
  }
  return r;
}

}  // namespace torsion
