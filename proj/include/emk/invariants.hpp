#ifndef EMK_INVARIANTS_HPP
#define EMK_INVARIANTS_HPP

#include <vector>

#include "emk/compactify.hpp"

namespace emk {

// Global invariants of a compact solution. Exact rationals carry the
// pi-free parts; doubles are derived from them.
struct InvariantsReport {
  Rational s_h_exact;        // scalar curvature of h = -(24/alpha) Psi(0)
  double s_h = 0.0;
  Rational V_over_pi2;       // total volume V_h = (this) * pi^2
  double V_h = 0.0;
  double sV = 0.0;           // s_h V_h^{1/2}, scale-invariant
  Rational area_h_Cminus_over_2pi;  // Hermitian areas A_h(C+-) / 2 pi
  Rational area_h_Cplus_over_2pi;
  double area_h_Cminus = 0.0;
  double area_h_Cplus = 0.0;
  bool einstein = false;
};

InvariantsReport report(const CompactSolution& sol);

// Closed forms for s_h, V_h/pi^2 and s_h V_h^{1/2}, per branch.
Rational s_h_closed_form(int k, const Rational& a, const Rational& b, Branch branch);
Rational V_over_pi2_closed_form(int k, const Rational& a, const Rational& b, Branch branch);
double sv_closed_form(int k, double ratio_b_over_a, Branch branch);

// s_h^2 V_h / (64 pi^2) for the First branch, as a function of z = b/a.
double s2v_over_64pi2(int k, double z);

// Duistermaat-Heckman area of the symplectic reduction at level x: 2 pi (x+alpha).
double dh_area(const CompactSolution& sol, double x);
// The same area from numeric quadrature of the reduced Kahler form over S^2.
double dh_area_quadrature(const CompactSolution& sol, double x, int panels = 512);

// Numeric quadrature of V_h = (2 pi^2/k) int_a^b 2(x+alpha)/x^4 dx.
double volume_quadrature(const CompactSolution& sol, int panels = 8192);

// Omega(D)/Omega(F) = 1/((b/a)^2 - 1) + floor(k/2) for First-branch solutions.
Rational df_ratio(const CompactSolution& sol);

// The two Second-branch solutions at u/v > 9 and their Hermitian area ratios
// A_h(C+)/A_h(C-) = (1 + 2/z)/(1 + 2z); exact reciprocals, equal sV.
struct AreaRatioCheck {
  Rational z;          // the root with z >= 1 (exact when u/v allows)
  Rational ratio_z;    // area ratio for z
  Rational ratio_inv;  // area ratio for 1/z
  double sv_z = 0.0;
  double sv_inv = 0.0;
};
AreaRatioCheck area_ratio_involution_check(const Rational& u, const Rational& v);

struct ModuliEntry {
  int k = 0;
  Rational z_squared;  // (b/a)^2, exact
  double z = 0.0;
  double sv = 0.0;
  double a = 0.0;      // scale matched to omega_F
  double b = 0.0;
};

struct ModuliScan {
  Rational omega_D;
  Rational omega_F;
  std::vector<int> admissible_k;  // floor(k/2) < Omega(D)/Omega(F)
  std::vector<ModuliEntry> entries;
  // Number of distinct sV values (1e-9 relative); a lower bound for the
  // number of connected components of the moduli space, never a claim of
  // connectivity.
  int component_lower_bound = 0;
};

ModuliScan moduli_scan(const Rational& omega_D, const Rational& omega_F);

}  // namespace emk

#endif  // EMK_INVARIANTS_HPP
