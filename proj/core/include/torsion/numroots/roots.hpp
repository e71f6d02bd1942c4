#pragma once

#include <map>
#include <span>
#include <vector>

#include "torsion/error.hpp"
#include "torsion/exactpoly/mpoly.hpp"
#include "torsion/numroots/bigc.hpp"

namespace torsion {

struct RootSet {
  // Sorted by (real, imag), each part compared after rounding away the last
  // quarter of the working precision.
  std::vector<BigC> roots;
  // Upper bound on |p(r)| over the returned roots.
  Rat residual_bound;
  unsigned source_degree = 0;
};

// Thrown when the iteration cap is hit; carries the best iterate.
class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& what, RootSet best) : Error(what), best_(std::move(best)) {}
  const RootSet& best() const noexcept { return best_; }

 private:
  RootSet best_;
};

inline constexpr int kMaxAberthSweeps = 200;

// All complex roots of a univariate polynomial with exact coefficients, by
// Aberth-Ehrlich iteration. p must involve exactly one symbol.
RootSet roots_univariate(const MPoly& p, mpfr_prec_t precision_bits);

// Same for complex coefficients, lowest degree first. The residual bound is
// measured against these (already rounded) coefficients.
RootSet roots_complex(std::span<const BigC> coeffs, mpfr_prec_t precision_bits);

// Evaluates p at the assignment. Works with guard bits proportional to the
// term count and rounds the result to precision_bits.
BigC eval_complex(const MPoly& p, const std::map<Sym, BigC>& assignment, mpfr_prec_t precision_bits);

// Rounds |z| up to a rational.
Rat upper_rat(const BigFloat& z);

// Orders complex values by real part, then imaginary part, ignoring the last
// quarter of the bits of precision.
bool complex_less(const BigC& a, const BigC& b);

}  // namespace torsion
