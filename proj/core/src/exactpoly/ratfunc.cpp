#include "torsion/exactpoly/ratfunc.hpp"

#include "torsion/error.hpp"
#include "torsion/exactpoly/algorithms.hpp"

namespace torsion {

RatFunc::RatFunc(MPoly num, MPoly den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = MPoly(1);
    return;
  }
  if (!den.is_constant()) {
    const MPoly g = gcd(num, den);
    if (!g.is_constant()) {
      num = divexact(num, g);
      den = divexact(den, g);
    }
  }
  const Rat lc = den.leading().coeff;
  num_ = num * Rat(1 / lc);
  den_ = den * Rat(1 / lc);
}

Rat RatFunc::constant_value() const {
  if (!is_constant()) throw std::logic_error("rational function is not constant");
  return num_.constant_term() / den_.constant_term();
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_polynomial() && b.is_polynomial()) {
    RatFunc r;
    r.num_ = a.num_ * b.num_;
    return r;
  }
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw DivisionByZero("division by zero rational function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::pow(unsigned k) const {
  RatFunc r;
  r.num_ = num_.pow(k);
  r.den_ = den_.pow(k);
  return r;
}

std::string RatFunc::to_string() const {
  if (den_ == MPoly(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatFunc RatFunc::parse(std::string_view text) {
  if (!text.empty() && text.front() == '(') {
    const auto mid = text.find(")/(");
    if (mid == std::string_view::npos || text.back() != ')') {
      throw ParseError("bad rational function: " + std::string(text));
    }
    return RatFunc(MPoly::parse(text.substr(1, mid - 1)),
                   MPoly::parse(text.substr(mid + 3, text.size() - mid - 4)));
  }
  return RatFunc(MPoly::parse(text));
}

RatFunc substitute(const MPoly& p, const Assignment& assignment) {
  // Clear the denominators of every substituted symbol up to its degree in p:
  // p = sum c*m*prod (n_s/d_s)^k_s = [sum c*m*prod n_s^k_s d_s^(e_s-k_s)] / prod d_s^e_s
  struct Powers {
    std::vector<MPoly> num;
    std::vector<MPoly> den;
    unsigned degree = 0;
  };
  std::map<Sym, Powers> powers;
  MPoly total_den(1);
  for (const auto& [s, value] : assignment) {
    const unsigned d = p.degree(s);
    if (d == 0) continue;
    Powers pw;
    pw.degree = d;
    pw.num.emplace_back(1);
    pw.den.emplace_back(1);
    for (unsigned k = 1; k <= d; ++k) {
      pw.num.push_back(pw.num.back() * value.num());
      pw.den.push_back(pw.den.back() * value.den());
    }
    total_den *= pw.den.back();
    powers.emplace(s, std::move(pw));
  }
  MPoly num;
  for (const auto& t : p.terms()) {
    Monomial rest = t.mono;
    for (const auto& [s, pw] : powers) rest.set(s, 0);
    MPoly term = MPoly::monomial(t.coeff, rest);
    for (const auto& [s, pw] : powers) {
      const unsigned e = t.mono[s];
      if (e > 0) term *= pw.num[e];
      if (e < pw.degree) term *= pw.den[pw.degree - e];
    }
    num += term;
  }
  return RatFunc(std::move(num), std::move(total_den));
}

RatFunc substitute(const RatFunc& f, const Assignment& assignment) {
  const RatFunc n = substitute(f.num(), assignment);
  const RatFunc d = substitute(f.den(), assignment);
  if (d.is_zero()) throw DivisionByZero("denominator vanishes after substitution");
  return n / d;
}

}  // namespace torsion
