#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace tsirelson {

/// Exact rational scalar. mpq_class keeps values canonical after every
/// arithmetic operation, so equality is structural.
using Scalar = mpq_class;

/// Positions index the coordinate basis e_1, e_2, ...; always >= 1.
using Pos = std::int64_t;

Scalar pow2(int exponent);
Scalar pow(const Scalar& base, int exponent);

/// Parses "p", "-p" or "p/q" (integers of any length). Throws Error{Parse}.
Scalar parse_scalar(std::string_view text);

/// Reduced fraction, e.g. "3/2", "-1", "0".
std::string to_exact_string(const Scalar& value);

/// Decimal annotation rounded half away from zero to `digits` fractional
/// digits with trailing zeros stripped. Locale independent.
std::string to_decimal_string(const Scalar& value, int digits = 12);

inline Scalar abs(const Scalar& value) { return value < 0 ? Scalar(-value) : value; }

}  // namespace tsirelson
