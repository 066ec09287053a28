#include "emk/ansatz.hpp"

#include <cmath>

namespace emk {

namespace {

void require_inside(const MetricProfile& m, double x) {
  if (!(x > to_double(m.lo) && x < to_double(m.hi)))
    throw DomainError("x outside the open profile domain");
  if (x == 0.0) throw PoleError("x = 0 is a pole of h = g/x^2");
  if (x + to_double(m.alpha) <= 0.0) throw PoleError("x + alpha <= 0");
}

}  // namespace

bool is_reduced_form(const QuarticPoly& psi, const Rational& alpha) {
  return psi[2] == Rational(1) && psi[0] == psi[1] * alpha / 2;
}

MetricProfile make_profile(QuarticPoly psi, Rational alpha, Rational lo, Rational hi) {
  if (!(lo < hi)) throw DomainError("profile needs lo < hi");
  if (sign(lo) == 0 || sign(hi) == 0 || sign(lo) != sign(hi))
    throw DomainError("profile endpoints must be nonzero and of the same sign");
  if (!(lo + alpha > 0) || !(hi + alpha > 0))
    throw DomainError("x + alpha must be positive on [lo, hi]");
  if (!is_positive_on_open_interval(psi, lo, hi))
    throw DomainError("Psi must be positive on (lo, hi)");
  return MetricProfile{std::move(psi), std::move(alpha), std::move(lo), std::move(hi)};
}

MetricProfile make_profile(const ReducedQuartic& rq, Rational lo, Rational hi) {
  return make_profile(rq.to_quartic(), rq.alpha, std::move(lo), std::move(hi));
}

FrameSample sample(const MetricProfile& m, double x) {
  require_inside(m, x);
  const double t = x + to_double(m.alpha);
  const double psi = m.psi(x);
  FrameSample s;
  s.x = x;
  s.psi = psi;
  s.phi = psi / (t * t);
  s.g_diag = {t / (2.0 * psi), 2.0 * t, 2.0 * t, 2.0 * psi / t};
  const double x2 = x * x;
  for (int i = 0; i < 4; ++i) s.h_diag[static_cast<std::size_t>(i)] = s.g_diag[static_cast<std::size_t>(i)] / x2;
  return s;
}

double scalar_curvature_g(const MetricProfile& m, double x) {
  if (!(x > to_double(m.lo) && x < to_double(m.hi)))
    throw DomainError("x outside the open profile domain");
  const double t = x + to_double(m.alpha);
  if (t <= 0.0) throw PoleError("x + alpha <= 0");
  const double psi2 = m.psi.derivative().derivative()(x);
  return (2.0 / t) * (2.0 - psi2);
}

double laplacian(const MetricProfile& m, double x, double dphi, double ddphi) {
  if (!(x > to_double(m.lo) && x < to_double(m.hi)))
    throw DomainError("x outside the open profile domain");
  const double t = x + to_double(m.alpha);
  if (t <= 0.0) throw PoleError("x + alpha <= 0");
  const double psi = m.psi(x);
  const double dpsi = m.psi.derivative()(x);
  return -(2.0 / t) * (dpsi * dphi + psi * ddphi);
}

double laplacian(const MetricProfile& m, double x,
                 const std::function<std::array<double, 3>(double)>& phi) {
  const auto v = phi(x);
  return laplacian(m, x, v[1], v[2]);
}

double conformal_kappa(const MetricProfile& m, double x) {
  if (x == 0.0) throw PoleError("x = 0 is a pole of the conformal factor");
  const double s = scalar_curvature_g(m, x);
  const double lap_inv = laplacian(m, x, -1.0 / (x * x), 2.0 / (x * x * x));
  return x * x * s + 6.0 * x * x * x * lap_inv;
}

ClassificationFlags classify(const MetricProfile& m) {
  // Expansion in t = x + alpha: Psi_t(t) = Psi_x(t - alpha).
  const QuarticPoly psi_t = m.psi.shifted(-m.alpha);
  const Rational A = psi_t[4];
  const Rational B = psi_t[3];
  ClassificationFlags f;
  // Extremal iff Psi/t^2 = A t^2 + B t + 1 + C/t + D/t^2, i.e. the t^2
  // coefficient is exactly 1.
  f.extremal = (psi_t[2] == Rational(1));
  f.cscK = f.extremal && A == 0;
  f.scalar_flat_kahler = f.cscK && B == 0;
  if (m.psi[4] != 0 && m.alpha != 0)
    f.einstein = (m.psi[3] == Rational(2) * m.psi[4] * m.alpha);
  return f;
}

bool classify_einstein(const MetricProfile& m) {
  if (m.psi[4] == 0 || m.alpha == 0)
    throw HypothesisError("einstein flag needs A != 0 and alpha != 0");
  return m.psi[3] == Rational(2) * m.psi[4] * m.alpha;
}

MetricProfile invert_profile(const MetricProfile& m) {
  if (m.alpha == 0) throw PoleError("invert_profile: alpha = 0 has no inverse");
  const Rational ta = m.lo + m.alpha;  // domain endpoints in t coordinates
  const Rational tb = m.hi + m.alpha;
  if (!(ta > 0) || !(tb > 0))
    throw DomainError("invert_profile: t-domain must be positive");
  const Rational alpha_hat = Rational(1) / m.alpha;
  // Psi as a function of t, reversed, then re-expanded around alpha^.
  const QuarticPoly psi_t = m.psi.shifted(-m.alpha);
  const QuarticPoly psi_t_inv = invert(psi_t);
  QuarticPoly psi_hat = psi_t_inv.shifted(alpha_hat);
  const Rational lo_hat = Rational(1) / tb - alpha_hat;
  const Rational hi_hat = Rational(1) / ta - alpha_hat;
  return make_profile(std::move(psi_hat), alpha_hat, lo_hat, hi_hat);
}

}  // namespace emk
