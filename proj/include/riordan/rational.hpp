#pragma once

#include <gmpxx.h>

#include <string>

#include "riordan/errors.hpp"

namespace riordan {

// Exact rational scalar over arbitrary-precision integers. mpq_class keeps
// the canonical form we require: denominator > 0, gcd(|num|, den) = 1.
// All arithmetic is exact; nothing in this project ever rounds.
using Rat = mpq_class;

// Parses "p", "-p" or "p/q" (q > 0 after canonicalization).
// Throws InvalidDocument on anything else.
Rat rat_from_string(const std::string& text);

// Canonical text form, the inverse of rat_from_string.
std::string rat_to_string(const Rat& q);

// Over the rationals the only roots of unity are 1 and -1.
bool is_root_of_unity(const Rat& q);

Rat rat_pow(const Rat& base, unsigned long exp);

}  // namespace riordan
