#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "torsion/exactpoly/rat.hpp"
#include "torsion/exactpoly/sym.hpp"

namespace torsion {

// Exponent vector over the closed symbol alphabet.
class Monomial {
 public:
  Monomial() = default;
  static Monomial of(Sym s, unsigned e = 1);

  unsigned operator[](Sym s) const noexcept { return exps_[index(s)]; }
  void set(Sym s, unsigned e);
  unsigned degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  // True when every exponent of *this is <= the matching exponent of other.
  bool divides(const Monomial& other) const noexcept;
  Monomial operator*(const Monomial& other) const;
  // Requires divides(other) to hold for (other, *this).
  Monomial operator/(const Monomial& other) const;
  Monomial pow(unsigned k) const;
  // Componentwise minimum.
  Monomial gcd(const Monomial& other) const noexcept;

  std::size_t hash() const noexcept;
  std::string to_string() const;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.exps_ == b.exps_;
  }
  // Graded lexicographic comparison under the Sym order.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept;

 private:
  std::array<std::uint16_t, kSymCount> exps_{};
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

struct Term {
  Monomial mono;
  Rat coeff;
};

// Sparse multivariate polynomial over Q. Terms are stored strictly descending
// in grlex order with nonzero coefficients; the zero polynomial has no terms.
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(const Rat& c);
  explicit MPoly(long c) : MPoly(Rat(c)) {}

  static MPoly var(Sym s, unsigned e = 1);
  static MPoly monomial(const Rat& c, const Monomial& m);
  // Accepts terms in any order, merges duplicates and drops zeros.
  static MPoly from_terms(std::vector<Term> terms);
  // Trusted constructor: terms already strictly descending with nonzero
  // coefficients.
  static MPoly from_sorted_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  // Constant term value (zero if absent).
  Rat constant_term() const;
  const Term& leading() const;

  unsigned degree(Sym s) const noexcept;
  unsigned total_degree() const noexcept;
  bool contains(Sym s) const noexcept;
  std::vector<Sym> symbols() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Rat& c);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rat& c) { return a *= c; }
  friend MPoly operator*(const Rat& c, MPoly a) { return a *= c; }
  friend bool operator==(const MPoly& a, const MPoly& b);

  MPoly pow(unsigned k) const;
  // Multiply every term by a monomial (order preserving).
  MPoly shifted(const Monomial& m) const;

  std::string to_string() const;
  static MPoly parse(std::string_view text);

 private:
  std::vector<Term> terms_;
};

using MonomialFilter = std::function<bool(const Monomial&)>;

// Product keeping only monomials accepted by keep (all when keep is empty).
MPoly multiply(const MPoly& a, const MPoly& b, const MonomialFilter& keep = {});
MPoly filter_terms(const MPoly& p, const MonomialFilter& keep);

// Coefficient of the partial monomial given by pattern, as a polynomial in the
// remaining symbols.
MPoly coeff(const MPoly& p, std::initializer_list<std::pair<Sym, unsigned>> pattern);
MPoly coeff(const MPoly& p, std::span<const std::pair<Sym, unsigned>> pattern);

// p viewed as a polynomial in var: result[k] is the coefficient of var^k.
std::vector<MPoly> coefficients_in(const MPoly& p, Sym var);
MPoly from_coefficients(std::span<const MPoly> coeffs, Sym var);
MPoly leading_coefficient_in(const MPoly& p, Sym var);

// Partial evaluation and composition.
MPoly evaluate(const MPoly& p, Sym s, const Rat& value);
MPoly evaluate(const MPoly& p, const std::map<Sym, Rat>& values);
MPoly compose(const MPoly& p, const std::map<Sym, MPoly>& values);

// Largest monomial dividing every term.
Monomial monomial_content(const MPoly& p);
MPoly divide_by_monomial(const MPoly& p, const Monomial& m);

// Positive rational c such that p / c has coprime integer coefficients.
Rat rational_content(const MPoly& p);
// p / content with the grlex-leading coefficient made positive; integer
// coefficients with gcd 1.
MPoly primitive_integer_part(const MPoly& p);

}  // namespace torsion
