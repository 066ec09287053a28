#ifndef EMK_ANSATZ_HPP
#define EMK_ANSATZ_HPP

#include <array>
#include <functional>
#include <optional>

#include "emk/errors.hpp"
#include "emk/polynomial.hpp"
#include "emk/rational.hpp"
#include "emk/roots.hpp"

namespace emk {

// Quartic of the constrained form
//   Psi(x) = A x^4 + B x^3 + x^2 + C x + C*alpha/2,
// the general profile for which h = g/x^2 has constant scalar curvature
// kappa = -12 C.
struct ReducedQuartic {
  Rational A;
  Rational B;
  Rational C;
  Rational alpha;

  QuarticPoly to_quartic() const {
    return QuarticPoly({C * alpha / 2, C, Rational(1), B, A});
  }
  Rational kappa() const { return Rational(-12) * C; }
};

// True iff psi has the reduced form above for this alpha.
bool is_reduced_form(const QuarticPoly& psi, const Rational& alpha);

// Cohomogeneity-one metric profile on the shell x in [lo, hi]:
//   g = (x+alpha) [ dx^2/(2 Psi) + 2(s1^2+s2^2) ] + (2 Psi/(x+alpha)) s3^2,
//   h = g / x^2.
// psi is a general quartic; profiles built from a ReducedQuartic satisfy the
// reduced-form identity, and ones built from a raw quartic (flat space,
// Eguchi-Hanson, perturbation controls) need not.
struct MetricProfile {
  QuarticPoly psi;
  Rational alpha;
  Rational lo;
  Rational hi;
};

// Checks lo < hi, same sign, x+alpha > 0 on [lo,hi], Psi > 0 on (lo,hi).
MetricProfile make_profile(QuarticPoly psi, Rational alpha, Rational lo, Rational hi);
MetricProfile make_profile(const ReducedQuartic& rq, Rational lo, Rational hi);

// Metric and curvature data at one point of the shell, in the coordinate
// basis (dx, s1, s2, s3).
struct FrameSample {
  double x = 0.0;
  std::array<double, 4> g_diag{};  // coefficients of dx^2, s1^2, s2^2, s3^2
  std::array<double, 4> h_diag{};  // g_diag / x^2
  double phi = 0.0;                // Psi / t^2
  double psi = 0.0;
};

FrameSample sample(const MetricProfile& m, double x);

// Scalar curvature of the Kahler metric g: s = (2/t)(2 - Psi''(x)), t = x+alpha.
double scalar_curvature_g(const MetricProfile& m, double x);

// Laplacian of a function of x: -(2/t)(Psi' phi' + Psi phi''), given the first
// two derivatives of phi at x.
double laplacian(const MetricProfile& m, double x, double dphi, double ddphi);
// Overload for a callable returning {phi, phi', phi''}.
double laplacian(const MetricProfile& m, double x,
                 const std::function<std::array<double, 3>(double)>& phi);

// kappa(x) = x^2 s_g(x) + 6 x^3 Lap(1/x); constant and equal to -12 C exactly
// when psi has the reduced form.
double conformal_kappa(const MetricProfile& m, double x);

struct ClassificationFlags {
  bool extremal = false;
  bool cscK = false;
  bool scalar_flat_kahler = false;
  // Einstein iff B = 2 A alpha; only defined when A != 0 and alpha != 0.
  std::optional<bool> einstein;
};

// Exact classification from the coefficients; never evaluates floats.
ClassificationFlags classify(const MetricProfile& m);

// Einstein flag alone; throws HypothesisError when A = 0 or alpha = 0.
bool classify_einstein(const MetricProfile& m);

// Coordinate inversion t -> 1/t: the profile with
// Psi~(t) = t^4 Psi(1/t) (as a function of t = x+alpha), alpha^ = 1/alpha, and
// the inverted domain. The induced Einstein-Maxwell metric is unchanged up to
// a constant rescaling. An exact involution.
MetricProfile invert_profile(const MetricProfile& m);

}  // namespace emk

#endif  // EMK_ANSATZ_HPP
