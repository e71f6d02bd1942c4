#pragma once

#include <array>
#include <nlohmann/json.hpp>

#include "torsion/exactpoly/ratfunc.hpp"

namespace torsion {

struct StandardQuantities {
  RatFunc b2, b4, b6, b8, c4, c6, disc, j;
};

// y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6 over rationals or rational
// functions. Only the a-invariants are stored.
class WeierstrassCurve {
 public:
  // Throws SingularCurve when the discriminant is identically zero.
  WeierstrassCurve(RatFunc a1, RatFunc a2, RatFunc a3, RatFunc a4, RatFunc a6);
  static WeierstrassCurve from_rationals(const Rat& a1, const Rat& a2, const Rat& a3, const Rat& a4,
                                         const Rat& a6);
  // y^2 = x^3 + (b2/4) x^2 + (b4/2) x + b6/4.
  static WeierstrassCurve from_b(const RatFunc& b2, const RatFunc& b4, const RatFunc& b6);

  const RatFunc& a1() const noexcept { return a_[0]; }
  const RatFunc& a2() const noexcept { return a_[1]; }
  const RatFunc& a3() const noexcept { return a_[2]; }
  const RatFunc& a4() const noexcept { return a_[3]; }
  const RatFunc& a6() const noexcept { return a_[4]; }

  bool is_symbolic() const;
  // Numerator of the discriminant; its zero set is where a symbolic curve
  // degenerates. Constant for curves over Q.
  const MPoly& singular_locus() const noexcept { return locus_; }
  // Specializes parameters; throws SingularCurve if the result is singular.
  WeierstrassCurve specialize(const Assignment& values) const;

  nlohmann::json to_json() const;
  static WeierstrassCurve from_json(const nlohmann::json& j);

 private:
  std::array<RatFunc, 5> a_;
  MPoly locus_;
};

// Computes b2..b8, c4, c6, the discriminant and j. Throws SingularCurve when
// the discriminant vanishes.
StandardQuantities standard_quantities(const WeierstrassCurve& c);

// Equal b2, b4, b6: the curves have the same projective torsion images.
bool torsion_image_equal(const WeierstrassCurve& c1, const WeierstrassCurve& c2);

}  // namespace torsion
