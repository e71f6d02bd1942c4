#include "torsion/curves/weierstrass.hpp"

#include "torsion/error.hpp"

namespace torsion {

namespace {

struct BQuantities {
  RatFunc b2, b4, b6, b8;
};

BQuantities b_quantities(const std::array<RatFunc, 5>& a) {
  const auto& [a1, a2, a3, a4, a6] = a;
  BQuantities b;
  b.b2 = a1 * a1 + RatFunc(4L) * a2;
  b.b4 = RatFunc(2L) * a4 + a1 * a3;
  b.b6 = a3 * a3 + RatFunc(4L) * a6;
  b.b8 = a1 * a1 * a6 + RatFunc(4L) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  return b;
}

RatFunc discriminant(const BQuantities& b) {
  return -b.b2 * b.b2 * b.b8 - RatFunc(8L) * b.b4.pow(3) - RatFunc(27L) * b.b6 * b.b6 +
         RatFunc(9L) * b.b2 * b.b4 * b.b6;
}

}  // namespace

WeierstrassCurve::WeierstrassCurve(RatFunc a1, RatFunc a2, RatFunc a3, RatFunc a4, RatFunc a6)
    : a_{std::move(a1), std::move(a2), std::move(a3), std::move(a4), std::move(a6)} {
  const RatFunc d = discriminant(b_quantities(a_));
  if (d.is_zero()) throw SingularCurve("discriminant vanishes identically");
  locus_ = d.num();
}

WeierstrassCurve WeierstrassCurve::from_rationals(const Rat& a1, const Rat& a2, const Rat& a3,
                                                  const Rat& a4, const Rat& a6) {
  return WeierstrassCurve(RatFunc(a1), RatFunc(a2), RatFunc(a3), RatFunc(a4), RatFunc(a6));
}

WeierstrassCurve WeierstrassCurve::from_b(const RatFunc& b2, const RatFunc& b4, const RatFunc& b6) {
  return WeierstrassCurve(RatFunc(0L), b2 * RatFunc(Rat(1, 4)), RatFunc(0L), b4 * RatFunc(Rat(1, 2)),
                          b6 * RatFunc(Rat(1, 4)));
}

bool WeierstrassCurve::is_symbolic() const {
  for (const auto& a : a_) {
    if (!a.is_constant()) return true;
  }
  return false;
}

WeierstrassCurve WeierstrassCurve::specialize(const Assignment& values) const {
  std::array<RatFunc, 5> s;
  for (std::size_t k = 0; k < 5; ++k) s[k] = substitute(a_[k], values);
  return WeierstrassCurve(s[0], s[1], s[2], s[3], s[4]);
}

nlohmann::json WeierstrassCurve::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& a : a_) arr.push_back(a.to_string());
  return {{"a", arr}};
}

WeierstrassCurve WeierstrassCurve::from_json(const nlohmann::json& j) {
  if (!j.contains("a") || !j.at("a").is_array() || j.at("a").size() != 5) {
    throw ParseError("curve JSON needs five a-invariants");
  }
  std::array<RatFunc, 5> a;
  for (std::size_t k = 0; k < 5; ++k) a[k] = RatFunc::parse(j.at("a")[k].get<std::string>());
  return WeierstrassCurve(a[0], a[1], a[2], a[3], a[4]);
}

StandardQuantities standard_quantities(const WeierstrassCurve& c) {
  const BQuantities b = b_quantities({c.a1(), c.a2(), c.a3(), c.a4(), c.a6()});
  StandardQuantities q;
  q.b2 = b.b2;
  q.b4 = b.b4;
  q.b6 = b.b6;
  q.b8 = b.b8;
  q.c4 = b.b2 * b.b2 - RatFunc(24L) * b.b4;
  q.c6 = -b.b2.pow(3) + RatFunc(36L) * b.b2 * b.b4 - RatFunc(216L) * b.b6;
  q.disc = discriminant(b);
  if (q.disc.is_zero()) throw SingularCurve("discriminant is zero");
  q.j = q.c4.pow(3) / q.disc;
  return q;
}

bool torsion_image_equal(const WeierstrassCurve& c1, const WeierstrassCurve& c2) {
  const BQuantities p = b_quantities({c1.a1(), c1.a2(), c1.a3(), c1.a4(), c1.a6()});
  const BQuantities q = b_quantities({c2.a1(), c2.a2(), c2.a3(), c2.a4(), c2.a6()});
  return p.b2 == q.b2 && p.b4 == q.b4 && p.b6 == q.b6;
}

}  // namespace torsion
