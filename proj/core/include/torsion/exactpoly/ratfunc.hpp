#pragma once

#include <map>
#include <string>
#include <string_view>

#include "torsion/exactpoly/mpoly.hpp"

namespace torsion {

// Quotient of polynomials, kept in lowest terms: gcd(num, den) is constant and
// den is monic in the grlex order (den == 1 for polynomial values).
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  explicit RatFunc(MPoly num) : num_(std::move(num)), den_(1) {}
  explicit RatFunc(const Rat& c) : num_(c), den_(1) {}
  explicit RatFunc(long c) : RatFunc(Rat(c)) {}
  // Throws DivisionByZero when den is the zero polynomial.
  RatFunc(MPoly num, MPoly den);

  const MPoly& num() const noexcept { return num_; }
  const MPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.is_constant(); }
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
  Rat constant_value() const;

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  RatFunc pow(unsigned k) const;

  // "num" for polynomials, "(num)/(den)" otherwise.
  std::string to_string() const;
  static RatFunc parse(std::string_view text);

 private:
  MPoly num_;
  MPoly den_;
};

using Assignment = std::map<Sym, RatFunc>;

// Exact substitution of rational functions for symbols. Throws
// DivisionByZero when a resulting denominator vanishes identically.
RatFunc substitute(const MPoly& p, const Assignment& assignment);
RatFunc substitute(const RatFunc& f, const Assignment& assignment);

}  // namespace torsion
