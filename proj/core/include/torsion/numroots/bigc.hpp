#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "torsion/numroots/bigfloat.hpp"

namespace torsion {

// Arbitrary-precision complex number. Both parts carry the same working
// precision; operations never produce NaN or infinity (division by zero
// throws DivisionByZero).
class BigC {
 public:
  explicit BigC(mpfr_prec_t prec = 64) : re_(prec), im_(prec) {}
  BigC(BigFloat re, BigFloat im);
  BigC(const Rat& re, mpfr_prec_t prec) : re_(re, prec), im_(prec) {}
  BigC(const Rat& re, const Rat& im, mpfr_prec_t prec) : re_(re, prec), im_(im, prec) {}

  static BigC i(mpfr_prec_t prec);
  // exp(2*pi*i*k/n).
  static BigC root_of_unity(long k, long n, mpfr_prec_t prec);
  static BigC polar(const BigFloat& r, const BigFloat& theta);

  const BigFloat& re() const noexcept { return re_; }
  const BigFloat& im() const noexcept { return im_; }
  mpfr_prec_t precision() const noexcept { return re_.precision(); }
  BigC with_precision(mpfr_prec_t prec) const;
  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }

  BigC operator-() const { return BigC(-re_, -im_); }
  BigC& operator+=(const BigC& o);
  BigC& operator-=(const BigC& o);
  BigC& operator*=(const BigC& o);
  BigC& operator*=(const BigFloat& o);
  BigC& operator/=(const BigC& o);
  friend BigC operator+(BigC a, const BigC& b) { return a += b; }
  friend BigC operator-(BigC a, const BigC& b) { return a -= b; }
  friend BigC operator*(BigC a, const BigC& b) { return a *= b; }
  friend BigC operator*(BigC a, const BigFloat& b) { return a *= b; }
  friend BigC operator/(BigC a, const BigC& b) { return a /= b; }

  BigC conj() const { return BigC(re_, -im_); }
  BigC inverse() const;
  BigC pow(unsigned k) const;

  // "re + im*i" with the given number of significant digits.
  std::string to_string(std::size_t digits = 20) const;

 private:
  BigFloat re_;
  BigFloat im_;
};

BigFloat abs(const BigC& z);
// |z|^2
BigFloat norm(const BigC& z);
// Principal square root.
BigC sqrt(const BigC& z);
// |a - b|
BigFloat distance(const BigC& a, const BigC& b);

// {"re": decimal, "im": decimal, "prec": bits}; decimals round-trip exactly.
nlohmann::json to_json(const BigC& z);
BigC bigc_from_json(const nlohmann::json& j);

}  // namespace torsion
