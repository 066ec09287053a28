#ifndef EMK_ROOTS_HPP
#define EMK_ROOTS_HPP

#include <optional>
#include <vector>

#include "emk/polynomial.hpp"
#include "emk/rational.hpp"

namespace emk {

struct DegeneratePolynomialError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Isolated real root: exact bracket lo <= root <= hi (lo == hi for rational
// roots), multiplicity in the original polynomial, and a refined double value.
struct RootBracket {
  Rational lo;
  Rational hi;
  int multiplicity = 1;
  double value = 0.0;
};

// Exact gcd of rational polynomials (monic representative).
QuarticPoly poly_gcd(QuarticPoly a, QuarticPoly b);

// p with repeated factors collapsed: p / gcd(p, p').
QuarticPoly square_free_part(const QuarticPoly& p);

// 1 + max|c_i / c_n|: every real root lies in (-bound, bound).
Rational cauchy_root_bound(const QuarticPoly& p);

// Number of distinct real roots in the open interval (lo, hi) by Sturm's
// theorem; roots at the endpoints are not counted.
int count_roots_open(const QuarticPoly& p, const Rational& lo, const Rational& hi);

// All real roots in the open interval (lo, hi), or (lo, +inf) when hi is
// absent. Sturm isolation, exact bisection to |hi-lo| <= rel_tol * max(1,|x|),
// then a Newton polish of the double value. Sorted ascending; multiplicities
// reported. Throws DegeneratePolynomialError when p is identically zero.
std::vector<RootBracket> real_roots_in(const QuarticPoly& p, const Rational& lo,
                                       const std::optional<Rational>& hi,
                                       double rel_tol = 1e-14);

// True iff p(x) > 0 for all x in the open interval (a, b). Exact. pre: a < b.
bool is_positive_on_open_interval(const QuarticPoly& p, const Rational& a, const Rational& b);

}  // namespace emk

#endif  // EMK_ROOTS_HPP
