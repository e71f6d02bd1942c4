#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "torsion/exactpoly/mpoly.hpp"

namespace torsion {

// Which slice of the generic division polynomials a table computes.
//  generic:   variables x, b2, b4, b6 (b8 eliminated beyond the displays).
//  short:     b2 = 0. Every curve is a translate x -> x - b2/12 of one of
//             these, so degrees and divisibility carry over.
//  truncated: only terms of b-weight <= max_weight, where b2, b4, b6, b8 weigh
//             1, 2, 3, 4. Exact for the top coefficients in x.
class Model {
 public:
  enum class Kind { generic, short_form, truncated };

  static Model generic() { return Model(Kind::generic, 0); }
  static Model short_form() { return Model(Kind::short_form, 0); }
  static Model truncated(unsigned max_weight) { return Model(Kind::truncated, max_weight); }

  Kind kind() const noexcept { return kind_; }
  unsigned max_weight() const noexcept { return max_weight_; }
  // "generic", "short", "weight<k>".
  std::string name() const;

  MPoly apply(const MPoly& p) const;
  // Product restricted to the model.
  MPoly mul(const MPoly& a, const MPoly& b) const;

  friend bool operator==(const Model&, const Model&) = default;

 private:
  Model(Kind k, unsigned w) : kind_(k), max_weight_(w) {}
  Kind kind_;
  unsigned max_weight_;
};

// b-weight of a monomial: deg b2 + 2 deg b4 + 3 deg b6 + 4 deg b8.
unsigned b_weight(const Monomial& m) noexcept;

// Substitutes b8 = (b2 b6 - b4^2) / 4.
MPoly eliminate_b8(const MPoly& p);

// psi_2^2 = 4x^3 + b2 x^2 + 2 b4 x + b6.
MPoly psi2_squared();

// psi_n = psi_2^e * body with e = 1 for even n, 0 for odd n.
struct PsiRep {
  unsigned n = 1;
  bool has_psi2_factor = false;
  MPoly body;
  // "body" for odd n, "psi2*(body)" for even n.
  std::string to_string() const;
};

// Memoized psi_n bodies, f_n and F_n for one model, optionally backed by an
// append-only cache file with lines "kind<TAB>n<TAB>poly". All accessors are
// safe to call concurrently; each entry is computed once.
class DivPolyTable {
 public:
  explicit DivPolyTable(Model model = Model::generic(),
                        std::optional<std::filesystem::path> cache_dir = std::nullopt);

  const Model& model() const noexcept { return model_; }

  // For n <= 4 the displayed forms (b8 kept); beyond, the b8-free bodies.
  PsiRep psi(unsigned n);
  // b8-free body of psi_n for every n.
  MPoly psi_body(unsigned n);
  // psi_n^2 / n^2 with b8 eliminated; monic of degree n^2 - 1 in x.
  MPoly f(unsigned n);
  // Primitive factor: F_2 = f_2, and for n > 2 the square root of
  // f_n / prod_{d | n, 1 < d < n} F_d^(2 / I(d)). Monic of degree D(n).
  MPoly F(unsigned n);

  std::size_t cache_hits() const;
  std::optional<std::filesystem::path> cache_file() const;

 private:
  MPoly body_locked(unsigned n);
  MPoly f_locked(unsigned n);
  MPoly F_locked(unsigned n);
  void load_cache();
  void store(const char* kind, unsigned n, const MPoly& p);

  Model model_;
  std::optional<std::filesystem::path> cache_file_;
  mutable std::mutex mu_;
  std::map<unsigned, MPoly> body_;
  std::map<unsigned, MPoly> f_;
  std::map<unsigned, MPoly> F_;
  std::size_t hits_ = 0;
  bool loaded_ = false;
};

// $TORSION_CACHE_DIR, else $XDG_CACHE_HOME/torsion, else ~/.cache/torsion.
std::filesystem::path default_cache_dir();

// Exact division and square root that only track terms of b-weight <= w.
// The divisor's (and the square's) weight-0 part must be a single term.
MPoly layered_divexact(const MPoly& p, const MPoly& q, unsigned max_weight);
MPoly layered_sqrt(const MPoly& p, unsigned max_weight);

}  // namespace torsion
