#include "emk/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

namespace emk {

namespace {

constexpr double kPi = std::numbers::pi;

double simpson(double lo, double hi, int panels, const std::function<double(double)>& f) {
  if (panels % 2 != 0) ++panels;
  const double h = (hi - lo) / panels;
  double acc = f(lo) + f(hi);
  for (int i = 1; i < panels; ++i) acc += f(lo + i * h) * (i % 2 == 0 ? 2.0 : 4.0);
  return acc * h / 3.0;
}

}  // namespace

InvariantsReport report(const CompactSolution& sol) {
  InvariantsReport r;
  const Rational& a = sol.a;
  const Rational& b = sol.b;
  const Rational& alpha = sol.alpha;
  r.s_h_exact = Rational(-24) / alpha * sol.psi(Rational(0));
  r.s_h = to_double(r.s_h_exact);
  r.V_over_pi2 = frac(4, sol.k) *
                 (Rational(1) / (2 * a * a) - Rational(1) / (2 * b * b) +
                  alpha * (Rational(1) / (3 * a * a * a) - Rational(1) / (3 * b * b * b)));
  r.V_h = to_double(r.V_over_pi2) * kPi * kPi;
  r.sV = r.s_h * std::sqrt(r.V_h);
  r.area_h_Cminus_over_2pi = (a + alpha) / (a * a);
  r.area_h_Cplus_over_2pi = (b + alpha) / (b * b);
  r.area_h_Cminus = 2.0 * kPi * to_double(r.area_h_Cminus_over_2pi);
  r.area_h_Cplus = 2.0 * kPi * to_double(r.area_h_Cplus_over_2pi);
  r.einstein = classify_einstein(sol.profile());
  return r;
}

Rational s_h_closed_form(int k, const Rational& a, const Rational& b, Branch branch) {
  if (branch == Branch::First)
    return Rational(24) * a * b * (b * b - a * a + k * a * b) /
           ((b - a) * (a * a + 4 * a * b + b * b));
  if (k != 1) throw BranchError("Second branch closed form needs k = 1");
  return Rational(12) * a * b / (b - a);
}

Rational V_over_pi2_closed_form(int k, const Rational& a, const Rational& b, Branch branch) {
  if (branch == Branch::First)
    return frac(2, k) * (b - a) * (a * a + 4 * a * b + b * b) /
           (3 * a * a * b * b * (a + b));
  if (k != 1) throw BranchError("Second branch closed form needs k = 1");
  const Rational apb = a + b;
  return Rational(2) * (b - a) * (b - a) * (3 * b * b + 4 * a * b + 5 * a * a) /
         (3 * a * a * b * b * apb * apb);
}

double sv_closed_form(int k, double z, Branch branch) {
  if (branch == Branch::First)
    return 8.0 * kPi * std::sqrt(6.0) * (z * z - 1.0 + k * z) /
           std::sqrt(k * (z * z - 1.0) * (1.0 + 4.0 * z + z * z));
  if (k != 1) throw BranchError("Second branch closed form needs k = 1");
  return 4.0 * kPi * std::sqrt(6.0 * (3.0 * z * z + 4.0 * z + 5.0)) / (1.0 + z);
}

double s2v_over_64pi2(int k, double z) {
  const double num = z * z - 1.0 + k * z;
  return 6.0 * num * num / (k * (z * z - 1.0) * (1.0 + 4.0 * z + z * z));
}

double dh_area(const CompactSolution& sol, double x) {
  if (x < to_double(sol.a) || x > to_double(sol.b))
    throw DomainError("dh_area: x outside the closed domain");
  return 2.0 * kPi * (x + to_double(sol.alpha));
}

double dh_area_quadrature(const CompactSolution& sol, double x, int panels) {
  if (x < to_double(sol.a) || x > to_double(sol.b))
    throw DomainError("dh_area_quadrature: x outside the closed domain");
  // The symplectic reduction carries 2t s1^s2; s1^s2 is the area form of the
  // curvature-4 round metric on S^2, integrated here as a surface of
  // revolution of radius 1/2.
  const double area_s2 =
      2.0 * kPi * simpson(0.0, kPi, panels, [](double th) { return 0.25 * std::sin(th); });
  return 2.0 * (x + to_double(sol.alpha)) * area_s2;
}

double volume_quadrature(const CompactSolution& sol, int panels) {
  const double a = to_double(sol.a), b = to_double(sol.b), al = to_double(sol.alpha);
  const double integral =
      simpson(a, b, panels, [al](double x) { return 2.0 * (x + al) / (x * x * x * x); });
  return 2.0 * kPi * kPi / sol.k * integral;
}

Rational df_ratio(const CompactSolution& sol) {
  if (sol.branch != Branch::First)
    throw BranchError("the D/F class analysis applies to the First-branch family");
  const Rational z2 = (sol.b * sol.b) / (sol.a * sol.a);
  return Rational(1) / (z2 - 1) + Rational(sol.k / 2);
}

AreaRatioCheck area_ratio_involution_check(const Rational& u, const Rational& v) {
  if (!(u > 0) || !(v > 0)) throw UsageError("need u, v > 0");
  const Rational ratio = u / v;
  if (!(ratio > 9))
    throw ThresholdError("the Second-branch pair exists only for u/v > 9");
  const Rational sigma = (ratio - 5) / 2;
  const Rational s = sqrt_approx(sigma * sigma - 4);
  const Rational z = (sigma + s) / 2;  // the root with z > 1
  AreaRatioCheck out;
  out.z = z;
  out.ratio_z = (1 + 2 / z) / (1 + 2 * z);
  const Rational zi = 1 / z;
  out.ratio_inv = (1 + 2 / zi) / (1 + 2 * zi);
  out.sv_z = sv_closed_form(1, 1.0 + 2.0 * to_double(z), Branch::Second);
  out.sv_inv = sv_closed_form(1, 1.0 + 2.0 * to_double(zi), Branch::Second);
  return out;
}

ModuliScan moduli_scan(const Rational& omega_D, const Rational& omega_F) {
  if (!(omega_D > 0) || !(omega_F > 0)) throw UsageError("need positive Omega(D), Omega(F)");
  ModuliScan scan;
  scan.omega_D = omega_D;
  scan.omega_F = omega_F;
  const Rational rho = omega_D / omega_F;
  if (rho > 500000)
    throw UsageError("Omega(D)/Omega(F) too large: the admissible-k list would exceed 1e6 entries");
  for (int k = 1; Rational(k / 2) < rho; ++k) {
    scan.admissible_k.push_back(k);
    ModuliEntry e;
    e.k = k;
    e.z_squared = 1 + Rational(1) / (rho - Rational(k / 2));
    e.z = std::sqrt(to_double(e.z_squared));
    e.sv = sv_closed_form(k, e.z, Branch::First);
    // match the fiber area: (b - a)/k = omega_F
    e.a = k * to_double(omega_F) / (e.z - 1.0);
    e.b = e.z * e.a;
    scan.entries.push_back(e);
  }
  std::vector<double> svs;
  svs.reserve(scan.entries.size());
  for (const auto& e : scan.entries) svs.push_back(e.sv);
  std::sort(svs.begin(), svs.end());
  int distinct = svs.empty() ? 0 : 1;
  for (std::size_t i = 1; i < svs.size(); ++i)
    if (svs[i] - svs[i - 1] > 1e-9 * std::abs(svs[i])) ++distinct;
  scan.component_lower_bound = distinct;
  return scan;
}

}  // namespace emk
