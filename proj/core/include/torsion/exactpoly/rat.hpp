#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace torsion {

// Exact rational. mpq_class keeps values canonical (reduced, positive
// denominator, zero as 0/1) after every arithmetic operation.
using Rat = mpq_class;
using BigInt = mpz_class;

// "p" or "p/q".
std::string to_string(const Rat& r);
std::string to_string(const BigInt& z);
Rat parse_rat(std::string_view text);

Rat make_rat(long num, long den = 1);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Exact rational square root, if one exists.
bool rat_sqrt(const Rat& r, Rat& out);

}  // namespace torsion
