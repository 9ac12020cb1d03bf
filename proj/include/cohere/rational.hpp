#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cohere {

/// Exact rational in lowest terms with positive denominator.
using Rational = mpq_class;

/// Accepts `n`, `n/d`, and decimal literals such as `0.25` (converted exactly).
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Always renders as `n/d`, including `0/1` and `1/1`.
std::string to_string(const Rational& q);

}  // namespace cohere
