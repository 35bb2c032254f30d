#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lp01 {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Exact rational number. GMP keeps every arithmetic result in canonical
/// form (positive denominator, reduced), so `==` is structural equality.
using Rational = mpq_class;

using RatVector = std::vector<Rational>;
using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;

/// Builds num/den in canonical form. Throws std::invalid_argument on den == 0.
Rational make_rational(const Integer& num, const Integer& den = 1);

/// Always "p/q", including integers ("6/1"), so exact values survive text I/O.
std::string to_string(const Rational& q);

/// Accepts "p", "p/q" and "-p/q". Throws std::invalid_argument on bad input.
Rational parse_rational(std::string_view text);

inline int sign(const Rational& q) { return sgn(q); }

RatVector to_rational(const IntVector& v);

Rational dot(const RatVector& a, const RatVector& b);
Rational dot(const RatVector& a, const IntVector& b);

}  // namespace lp01
