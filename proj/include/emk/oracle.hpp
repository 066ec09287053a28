#ifndef EMK_ORACLE_HPP
#define EMK_ORACLE_HPP

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "emk/compactify.hpp"
#include "emk/forms.hpp"

namespace emk {

// Which metric of the conformal pair the frame computation uses.
enum class MetricKind { Kahler, EinsteinMaxwell };  // g, or h = g/x^2

// Orthonormal coframe data at a point, with the Levi-Civita connection
// one-forms solved from the first structure equation. All coefficients are
// functions of x only; their radial derivatives come analytically from the
// quartic via jets.
struct CoframeConnection {
  double x = 0.0;
  std::array<double, 4> coframe_norm{};       // e0 = n0 dx, e1 = n1 s1, ...
  std::array<Eigen::Matrix4d, 4> connection;  // omega^i_j expanded over e^k
  double structure_residual = 0.0;            // max |de^i + omega^i_j ^ e^j|
};

struct CurvatureSample {
  double x = 0.0;
  Eigen::Matrix4d ricci;                 // coframe components
  double scalar = 0.0;
  double structure_residual = 0.0;
  double j_invariance_residual = 0.0;    // of the trace-free Ricci
  double ricci_asymmetry = 0.0;          // internal consistency of the contraction
};

// U(2)-invariant two-form in the orthonormal coframe basis
// {e0^e1, e0^e2, e0^e3, e1^e2, e1^e3, e2^e3}.
struct InvariantTwoForm {
  std::array<double, 6> comp{};
  double norm() const;
};

struct FReconstruction {
  InvariantTwoForm F_plus;           // omega/2 in the h-coframe
  InvariantTwoForm F_minus;          // -(1/2) (F+)^-1 r0, certified ASD
  InvariantTwoForm F;                // F+ + F-
  double antisymmetry_residual = 0;  // symmetric junk discarded from (F+)^-1 r0
  double asd_residual = 0;           // self-dual part of F- before projection
};

struct MaxwellResidual {
  double dF = 0.0;       // max-norm of dF over the sample grid
  double dstarF = 0.0;   // max-norm of d(star F)
};

// Per-point verification row for the Einstein-Maxwell metric h.
struct CurvatureReportRow {
  double x = 0.0;
  std::array<double, 4> ricci_diag{};  // coframe components
  double s_h = 0.0;
  double trace_free_norm = 0.0;
  double em_residual = 0.0;            // 0 when the point is Einstein
  double j_invariance_residual = 0.0;
  double structure_residual = 0.0;
  bool einstein_point = false;         // F reconstruction skipped here
};

struct CurvatureReport {
  std::vector<CurvatureReportRow> rows;
  double kappa_residual = 0.0;         // max relative deviation from -12C
  MaxwellResidual maxwell;             // zero when every point is Einstein
  double curvature_scale = 1.0;        // max sampled |Ricci|, for normalization
  bool einstein_mode = false;          // all sampled points Einstein
};

// Samples the full residual table on a uniform interior grid.
CurvatureReport curvature_report(const MetricProfile& m, const Rational& kappa,
                                 int n_samples, double einstein_tol = 1e-6);

// J acting on coframe indices (e0 -> e3, e1 -> e2), the complex structure of
// the shell.
Eigen::Matrix4d complex_structure_matrix();

// Coframe and connection at x; margin_frac * (hi - lo) is the excluded
// endpoint margin.
CoframeConnection coframe_connection(const MetricProfile& m, double x, MetricKind kind,
                                     double margin_frac = 0.01);

// Full Cartan curvature computation: Riemann from the second structure
// equation, Ricci by contraction.
CurvatureSample ricci(const MetricProfile& m, double x, MetricKind kind,
                      double margin_frac = 0.01);

// F+ = omega/2 (self-dual, closed); F- is determined
// pointwise by the trace-free Ricci of h. Throws EinsteinPointError when
// |r0| < einstein_tol (F- is then unconstrained).
FReconstruction reconstruct_F(const CompactSolution& sol, double x,
                              double einstein_tol = 1e-6);
FReconstruction reconstruct_F(const MetricProfile& m, double x, double einstein_tol = 1e-6);

// Frobenius norm of the trace-free part of r + F o F, with F reconstructed
// at x.
double em_residual(const CompactSolution& sol, double x, double einstein_tol = 1e-6);
double em_residual(const MetricProfile& m, double x, double einstein_tol = 1e-6);

// Max-norm residuals of dF = 0 and d(star F) = 0 over a sample grid.
MaxwellResidual maxwell_residual(const CompactSolution& sol, int n_samples = 20,
                                 double einstein_tol = 1e-6);
MaxwellResidual maxwell_residual(const MetricProfile& m, int n_samples = 20,
                                 double einstein_tol = 1e-6);

// max over samples of |trace Ricci(h) + 12 C| / |12 C| (absolute when C = 0).
double constant_scalar_residual(const CompactSolution& sol, int n_samples);

// Same checks against an arbitrary profile (perturbation controls).
double constant_scalar_residual(const MetricProfile& m, const Rational& kappa, int n_samples);

// Norm of the trace-free Ricci of h at x (Einstein detection).
double trace_free_ricci_norm(const MetricProfile& m, double x);

}  // namespace emk

#endif  // EMK_ORACLE_HPP
