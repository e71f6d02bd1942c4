#include "torsion/numroots/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "torsion/error.hpp"

namespace torsion {

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long v, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const Rat& v, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, o.precision());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::pi(mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::from_decimal(std::string_view text, mpfr_prec_t prec) {
  BigFloat r(prec);
  const std::string s(text);
  if (s.empty() || mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0 || !r.is_finite()) {
    throw ParseError("bad decimal float: " + s);
  }
  return r;
}

long BigFloat::exponent() const noexcept {
  if (mpfr_zero_p(v_)) return -(1L << 40);
  return mpfr_get_exp(v_);
}

Rat BigFloat::to_rat() const {
  Rat r;
  mpfr_get_q(r.get_mpq_t(), v_);
  return r;
}

std::string BigFloat::to_decimal(std::size_t digits) const {
  if (mpfr_zero_p(v_)) return "0";
  if (digits == 0) digits = mpfr_get_str_ndigits(10, precision());
  mpfr_exp_t exp10 = 0;
  std::unique_ptr<char, void (*)(char*)> raw(mpfr_get_str(nullptr, &exp10, 10, digits, v_, MPFR_RNDN),
                                             mpfr_free_str);
  std::string mant(raw.get());
  std::string sign;
  if (!mant.empty() && mant[0] == '-') {
    sign = "-";
    mant.erase(0, 1);
  }
  // Scientific form d.ddddde<exp>, stable and parseable by mpfr_set_str.
  std::string out = sign + mant.substr(0, 1);
  if (mant.size() > 1) out += "." + mant.substr(1);
  out += "e" + std::to_string(static_cast<long>(exp10) - 1);
  return out;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

namespace {

void widen(BigFloat& a, const BigFloat& b) {
  if (b.precision() > a.precision()) mpfr_prec_round(a.get(), b.precision(), MPFR_RNDN);
}

}  // namespace

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  widen(*this, o);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
  widen(*this, o);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
  widen(*this, o);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
  widen(*this, o);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat abs(const BigFloat& a) {
  BigFloat r(a);
  mpfr_abs(r.get(), r.get(), MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_sqrt(r.get(), a.get(), MPFR_RNDN);
  return r;
}

BigFloat hypot(const BigFloat& a, const BigFloat& b) {
  BigFloat r(std::max(a.precision(), b.precision()));
  mpfr_hypot(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

BigFloat cos(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_cos(r.get(), a.get(), MPFR_RNDN);
  return r;
}

BigFloat sin(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_sin(r.get(), a.get(), MPFR_RNDN);
  return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

BigFloat pow2(long e, mpfr_prec_t prec) {
  BigFloat r(1, prec);
  mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
  return r;
}

BigFloat pow10(long e, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_ui_pow_ui(r.get(), 10, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
  if (e < 0) mpfr_ui_div(r.get(), 1, r.get(), MPFR_RNDN);
  return r;
}

}  // namespace torsion
