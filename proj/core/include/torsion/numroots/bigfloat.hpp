#pragma once

#include <mpfr.h>

#include <string>
#include <string_view>

#include "torsion/exactpoly/rat.hpp"

namespace torsion {

// Owning wrapper around an mpfr_t. Every result is rounded to nearest at the
// larger of the operands' precisions.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 64);
  BigFloat(long v, mpfr_prec_t prec);
  BigFloat(const Rat& v, mpfr_prec_t prec);
  BigFloat(const BigFloat& o);
  BigFloat(const BigFloat& o, mpfr_prec_t prec);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  static BigFloat pi(mpfr_prec_t prec);
  // Parses a decimal string; throws ParseError on malformed input.
  static BigFloat from_decimal(std::string_view text, mpfr_prec_t prec);

  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(v_); }
  mpfr_srcptr get() const noexcept { return v_; }
  mpfr_ptr get() noexcept { return v_; }

  bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(v_) != 0; }
  int sign() const noexcept { return mpfr_sgn(v_); }
  // Binary exponent e with 0.5 <= |v| / 2^e < 1; very negative for zero.
  long exponent() const noexcept;
  double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }
  // Exact conversion of the stored binary value.
  Rat to_rat() const;

  // Decimal string with the given number of significant digits (0 = enough
  // digits to round-trip the working precision).
  std::string to_decimal(std::size_t digits = 0) const;

  BigFloat operator-() const;
  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);
  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }

  friend int compare(const BigFloat& a, const BigFloat& b) noexcept { return mpfr_cmp(a.v_, b.v_); }
  friend bool operator<(const BigFloat& a, const BigFloat& b) noexcept { return compare(a, b) < 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) noexcept { return compare(a, b) > 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) noexcept { return compare(a, b) <= 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) noexcept { return compare(a, b) >= 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) noexcept { return mpfr_equal_p(a.v_, b.v_) != 0; }

 private:
  mpfr_t v_;
};

BigFloat abs(const BigFloat& a);
BigFloat sqrt(const BigFloat& a);
BigFloat hypot(const BigFloat& a, const BigFloat& b);
BigFloat cos(const BigFloat& a);
BigFloat sin(const BigFloat& a);
BigFloat max(const BigFloat& a, const BigFloat& b);
// 2^e at the given precision.
BigFloat pow2(long e, mpfr_prec_t prec);
// 10^e at the given precision.
BigFloat pow10(long e, mpfr_prec_t prec);

}  // namespace torsion
