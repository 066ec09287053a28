#ifndef EMK_PAGE_HPP
#define EMK_PAGE_HPP

#include <string>
#include <vector>

#include "emk/compactify.hpp"
#include "emk/invariants.hpp"
#include "emk/roots.hpp"

namespace emk {

// Left side of the Einstein condition
//   2 k alpha^2 + 2 (b-a) alpha - (k+2) a^2 - (k-2) b^2,
// exactly; zero iff h is Einstein. Consistent with B - 2 A alpha = 0 up to
// the exact factor -(b-a)(a^2+4ab+b^2), which is asserted internally.
Rational einstein_residual(const CompactSolution& sol);

// The branch-wise polynomial in z = b/a whose roots > 1 are the Einstein
// points: First -> (k-2) z^4 + 2(k-1) z^3 + 2(k+1) z + (k+2),
// Second (k=1) -> z^3 + 7 z^2 + 13 z + 3.
QuarticPoly einstein_locus_polynomial(int k, Branch branch);

struct EinsteinLocusResult {
  int k = 1;
  Branch branch = Branch::First;
  std::vector<RootBracket> roots_z;       // certified roots z > 1 (may be empty)
  bool has_closed_form = false;           // Ferrari radical available (k=1, First)
  double closed_form_z = 0.0;
  std::string closed_form_digits;         // >= 50 significant digits
};

// Sturm-certified Einstein locus for the branch; empty for k >= 2 (First) and
// for the Second branch. Throws BranchError for Second with k != 1.
EinsteinLocusResult einstein_locus(int k, Branch branch);

// The Ferrari radical for the root z > 1 of z^4 - 4z - 3, evaluated in
// arbitrary precision; digits >= 50.
double ferrari_page_root(int digits = 60);
std::string ferrari_page_root_digits(int digits = 60);
// u/v at the Page point from its own radical expression.
double page_u_over_v_radical(int digits = 60);

// Rational bracket of width < 1e-32 around the root of z^4 - 4z - 3 in (1, 2).
std::pair<Rational, Rational> page_root_bracket();

struct PagePoint {
  double z = 0.0;             // b/a at the Page metric
  double u_over_v = 0.0;      // = z^2
  double alpha_over_a = 0.0;  // = -z/(1+z)
  double sV = 0.0;
  bool einstein = false;      // certified by the residual's sign change
  CompactSolution solution;   // built at a rationalization of z (error < 1e-30)
};

PagePoint page_point();

}  // namespace emk

#endif  // EMK_PAGE_HPP
