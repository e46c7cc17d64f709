#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace hg {

// Exact arbitrary-precision scalar. mpq_class keeps values in lowest terms
// with a positive denominator as long as arithmetic stays inside mpq_*,
// which is exactly the canonical-form invariant we need.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// GMP's mpq arithmetic assumes canonical operands, but mpq_class(a, b)
// does not reduce. Every type and entry point that accepts rationals
// normalizes through here so the lowest-terms invariant actually holds.
inline Rational canonical(Rational q) {
  q.canonicalize();
  return q;
}

// Canonical "num/den" rendering, denominator always written ("3" -> "3/1").
std::string to_fraction_string(const Rational& q);

// Lenient fraction parsing for command-line input: "a", "a/b", optional
// sign, any representative of the value. Returns nullopt on syntax errors
// or a zero denominator.
std::optional<Rational> parse_fraction(std::string_view text);

// Strict parsing for documents: the string must be the canonical form,
// i.e. to_fraction_string(result) == text.
std::optional<Rational> parse_canonical_fraction(std::string_view text);

inline double to_double(const Rational& q) { return q.get_d(); }

bool is_perfect_square(const Integer& z);

// Exact square root if the rational is a perfect square, nullopt otherwise.
std::optional<Rational> rational_sqrt(const Rational& q);

// Best rational approximation with denominator at most max_denominator,
// by continued-fraction truncation. Recovers p/q exactly from its double
// image whenever q <= max_denominator is small enough for the rounding
// error to stay below the approximation gap.
Rational rationalize(double value, long max_denominator);

}  // namespace hg
