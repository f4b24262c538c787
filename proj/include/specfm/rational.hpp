#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace specfm {

// Arbitrary-precision rational, always stored canonically (reduced, den > 0).
using Rational = mpq_class;

Rational make_rational(long num, long den);

// Accepts "n" or "n/d" with optional sign.
std::optional<Rational> rational_from_string(const std::string& s);

std::string rational_str(const Rational& q);

// Exact square root of a perfect-square rational.
std::optional<Rational> rational_sqrt(const Rational& q);

}  // namespace specfm
