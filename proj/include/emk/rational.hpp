#ifndef EMK_RATIONAL_HPP
#define EMK_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace emk {

// Exact scalar of the whole library: arbitrary-precision rational.
using Rational = mpq_class;

inline double to_double(const Rational& q) { return q.get_d(); }

inline int sign(const Rational& q) { return sgn(q); }

// Canonicalized fraction (the two-argument mpq constructors are not).
inline Rational frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational rational_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// Parses "p/q", plain integers, and decimal strings ("0.25" -> 1/4), all exactly.
Rational parse_rational(const std::string& text);

// Exact square root when the rational is a perfect square of a rational.
std::optional<Rational> exact_sqrt(const Rational& q);

// Rational r with |r - sqrt(q)| <= sqrt(q) * 2^-bits, exact when possible.
// q must be >= 0.
Rational sqrt_approx(const Rational& q, unsigned bits = 110);

// Dyadic rational exactly equal to the double.
inline Rational rational_from_double(double x) { return Rational(x); }

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace emk

#endif  // EMK_RATIONAL_HPP
