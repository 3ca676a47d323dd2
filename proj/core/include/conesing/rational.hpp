#pragma once

// Exact scalar types and the helpers everything else is built on.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace conesing {

using Integer = mpz_class;
using Rational = mpq_class;

/// Largest integer <= q.
Integer floor(const Rational& q);

/// Smallest integer >= q.
Integer ceil(const Rational& q);

/// q - floor(q), always in [0, 1).
Rational fractional_part(const Rational& q);

inline Integer numerator(const Rational& q) { return q.get_num(); }
inline Integer denominator(const Rational& q) { return q.get_den(); }

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

Integer lcm(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);

/// Reduced "p/q" form, with "/q" omitted when q == 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "p", "p/q" or "-p/q". Throws Error(ErrorKind::parse) on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Narrowing conversion that throws on overflow.
std::int64_t to_int64(const Integer& z);

}  // namespace conesing
