#include "torsion/exactpoly/rat.hpp"

#include <cctype>

#include "torsion/error.hpp"

namespace torsion {

std::string to_string(const BigInt& z) { return z.get_str(10); }

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str(10);
  return r.get_num().get_str(10) + "/" + r.get_den().get_str(10);
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!is_integer_literal(num)) throw ParseError("bad rational literal: " + std::string(text));
  Rat r;
  r.get_num().set_str(std::string(num), 10);
  if (slash == std::string_view::npos) {
    r.get_den() = 1;
    return r;
  }
  const auto den = text.substr(slash + 1);
  if (!is_integer_literal(den) || den[0] == '-') {
    throw ParseError("bad rational literal: " + std::string(text));
  }
  r.get_den().set_str(std::string(den), 10);
  if (r.get_den() == 0) throw ParseError("zero denominator: " + std::string(text));
  r.canonicalize();
  return r;
}

Rat make_rat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

bool rat_sqrt(const Rat& r, Rat& out) {
  if (r < 0) return false;
  if (!mpz_perfect_square_p(r.get_num_mpz_t()) || !mpz_perfect_square_p(r.get_den_mpz_t())) {
    return false;
  }
  BigInt n, d;
  mpz_sqrt(n.get_mpz_t(), r.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), r.get_den_mpz_t());
  out = Rat(n, d);
  out.canonicalize();
  return true;
}

}  // namespace torsion
