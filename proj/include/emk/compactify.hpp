#ifndef EMK_COMPACTIFY_HPP
#define EMK_COMPACTIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "emk/ansatz.hpp"

namespace emk {

// The two admissible values of alpha closing up the shell; Second exists only
// on the first Hirzebruch surface (k = 1).
enum class Branch { First, Second };

std::string to_string(Branch b);
Branch branch_from_string(const std::string& s);

// alpha for the chosen branch: First -> -ab/(a+b); Second (k = 1 only)
// -> -4 a^2 b/(a+b)^2.
Rational alpha_of(int k, const Rational& a, const Rational& b, Branch branch);

// E = (k alpha - (k+1) a - (k-1) b) / (a^2 + 4ab + b^2).
Rational E_of(int k, const Rational& a, const Rational& b, const Rational& alpha);

// A validated compact U(2)-invariant Einstein-Maxwell solution on the k-th
// Hirzebruch surface, determined by (k, a, b, branch).
struct CompactSolution {
  int k = 1;
  Rational a;
  Rational b;
  Branch branch = Branch::First;
  Rational alpha;
  Rational E;
  QuarticPoly psi;

  ReducedQuartic reduced() const { return ReducedQuartic{psi[4], psi[3], psi[1], alpha}; }
  MetricProfile profile() const { return MetricProfile{psi, alpha, a, b}; }
  Rational kappa() const { return Rational(-12) * psi[1]; }  // = s_h, exact
};

struct ValidationCheck {
  std::string name;
  bool passed = false;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool all_passed = true;
  std::string first_failure;  // empty when everything passed
};

// Exact boundary-condition and reduced-form checks of the compactification.
ValidationReport validate(const CompactSolution& sol);

// Psi = ((b-x)(x-a)/(b-a)) [ k(x+alpha) + E(b-x)(x-a) ], expanded exactly and
// validated. Throws UsageError on bad (k, a, b), BranchError for Second with
// k != 1, ValidationError naming the first failed condition otherwise.
CompactSolution build(int k, const Rational& a, const Rational& b, Branch branch);

// Symplectic areas of the holomorphic curves, in units of 2 pi.
struct KahlerClass {
  Rational area_Cminus;  // a + alpha
  Rational area_Cplus;   // b + alpha
  Rational area_F;       // (b - a)/k
  int k = 1;
  // For k = 1 only: Omega = u L - v E with L = C+, E = C-.
  std::optional<Rational> u;
  std::optional<Rational> v;
};

KahlerClass kahler_class_of(const CompactSolution& sol);

// Inverts the First-branch class map: the unique b > a > 0 with
// a^2/(a+b) = area_Cminus and (b-a)/k = area_F. The square root is taken in
// floats and certified by exact sign checks on a rationalization.
std::pair<Rational, Rational> solve_class_first(int k, const Rational& area_Cminus,
                                                const Rational& area_F);

struct EnumerationResult {
  std::vector<CompactSolution> solutions;  // First entry first, then Second pair
  bool at_bifurcation = false;             // exactly u/v = 9
};

// All U(2)-invariant solutions on Sigma_1 in the class u L - v E, with the
// overall scale fixed by v: one First solution always, plus the two Second
// solutions when u/v > 9 (which merge with the First one at u/v = 9).
// Throws DegenerateClassError when u/v <= 1.
EnumerationResult enumerate_k1(const Rational& u, const Rational& v);

}  // namespace emk

#endif  // EMK_COMPACTIFY_HPP
