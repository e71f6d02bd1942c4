#include "torsion/numroots/bigc.hpp"

#include <algorithm>

#include "torsion/error.hpp"

namespace torsion {

BigC::BigC(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {
  const mpfr_prec_t p = std::max(re_.precision(), im_.precision());
  if (re_.precision() < p) re_ = BigFloat(re_, p);
  if (im_.precision() < p) im_ = BigFloat(im_, p);
}

BigC BigC::i(mpfr_prec_t prec) { return BigC(BigFloat(prec), BigFloat(1, prec)); }

BigC BigC::root_of_unity(long k, long n, mpfr_prec_t prec) {
  // Exact values on the axes keep symmetric inputs symmetric.
  const long r = ((k % n) + n) % n;
  if (r == 0) return BigC(Rat(1), prec);
  if (2 * r == n) return BigC(Rat(-1), prec);
  if (4 * r == n) return i(prec);
  if (4 * r == 3 * n) return -i(prec);
  BigFloat theta = BigFloat::pi(prec + 16) * BigFloat(2 * r, prec + 16) / BigFloat(n, prec + 16);
  BigC z = polar(BigFloat(1, prec + 16), theta);
  return z.with_precision(prec);
}

BigC BigC::polar(const BigFloat& r, const BigFloat& theta) {
  return BigC(r * cos(theta), r * sin(theta));
}

BigC BigC::with_precision(mpfr_prec_t prec) const {
  return BigC(BigFloat(re_, prec), BigFloat(im_, prec));
}

BigC& BigC::operator+=(const BigC& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

BigC& BigC::operator-=(const BigC& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

BigC& BigC::operator*=(const BigC& o) {
  BigFloat re = re_ * o.re_ - im_ * o.im_;
  BigFloat im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

BigC& BigC::operator*=(const BigFloat& o) {
  re_ *= o;
  im_ *= o;
  return *this;
}

BigC& BigC::operator/=(const BigC& o) { return *this *= o.inverse(); }

BigC BigC::inverse() const {
  if (is_zero()) throw DivisionByZero("complex division by zero");
  const BigFloat n = norm(*this);
  return BigC(re_ / n, -im_ / n);
}

BigC BigC::pow(unsigned k) const {
  BigC result(Rat(1), precision());
  BigC base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

std::string BigC::to_string(std::size_t digits) const {
  std::string im = im_.to_decimal(digits);
  if (!im.empty() && im[0] == '-') return re_.to_decimal(digits) + " - " + im.substr(1) + "*i";
  return re_.to_decimal(digits) + " + " + im + "*i";
}

BigFloat abs(const BigC& z) { return hypot(z.re(), z.im()); }

BigFloat norm(const BigC& z) { return z.re() * z.re() + z.im() * z.im(); }

BigC sqrt(const BigC& z) {
  const mpfr_prec_t p = z.precision();
  if (z.is_zero()) return BigC(p);
  const BigFloat r = abs(z);
  const BigFloat two(2, p);
  if (z.re().sign() >= 0) {
    BigFloat t = sqrt((r + z.re()) / two);
    BigFloat im = z.im() / (two * t);
    return BigC(std::move(t), std::move(im));
  }
  BigFloat t = sqrt((r - z.re()) / two);
  BigFloat re = abs(z.im()) / (two * t);
  if (z.im().sign() < 0) t = -t;
  return BigC(std::move(re), std::move(t));
}

BigFloat distance(const BigC& a, const BigC& b) { return abs(a - b); }

nlohmann::json to_json(const BigC& z) {
  return {{"re", z.re().to_decimal()}, {"im", z.im().to_decimal()}, {"prec", z.precision()}};
}

BigC bigc_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im") || !j.contains("prec")) {
    throw ParseError("complex value needs re, im and prec");
  }
  const auto prec = j.at("prec").get<long>();
  if (prec < 2) throw ParseError("bad precision in complex value");
  return BigC(BigFloat::from_decimal(j.at("re").get<std::string>(), prec),
              BigFloat::from_decimal(j.at("im").get<std::string>(), prec));
}

}  // namespace torsion
