#include "emk/oracle.hpp"

#include <cmath>

namespace emk {

namespace {

struct FrameJets {
  Jet x;
  std::array<Jet, 4> norm;  // e0 = norm[0] dx, e_i = norm[i] s_i
};

// Coframe normalizations of the ansatz: g-coframe
//   (sqrt(t/2Psi), sqrt(2t), sqrt(2t), sqrt(2Psi/t)),
// h-coframe the same divided by |x|.
FrameJets frame_jets(const MetricProfile& m, double x0, MetricKind kind) {
  FrameJets f;
  f.x = Jet::variable(x0);
  const Jet t = f.x + Jet(to_double(m.alpha));
  Jet psi(0.0);
  {
    // Horner with jet argument, coefficients exact-to-double.
    const auto& c = m.psi.coeffs();
    if (!c.empty()) {
      psi = Jet(to_double(c.back()));
      for (std::size_t i = c.size() - 1; i-- > 0;) psi = psi * f.x + Jet(to_double(c[i]));
    }
  }
  f.norm[0] = sqrt(t / (2.0 * psi));
  f.norm[1] = sqrt(2.0 * t);
  f.norm[2] = f.norm[1];
  f.norm[3] = sqrt(2.0 * psi / t);
  if (kind == MetricKind::EinsteinMaxwell) {
    const Jet ax = x0 > 0 ? f.x : -f.x;
    for (auto& n : f.norm) n = n / ax;
  }
  return f;
}

void require_margin(const MetricProfile& m, double x, double margin_frac) {
  const double lo = to_double(m.lo), hi = to_double(m.hi);
  const double delta = margin_frac * (hi - lo) * (1.0 - 1e-9);  // slack for grid endpoints
  if (!(x >= lo + delta && x <= hi - delta))
    throw DomainError("sample point inside the endpoint margin where the coframe degenerates");
}

struct ConnectionForms {
  std::array<Form, 4> e;                    // coframe as invariant one-forms
  std::array<std::array<Form, 4>, 4> omega; // antisymmetric connection matrix
};

// Levi-Civita connection of the diagonal coframe e0 = w dx, e1 = p s1,
// e2 = p s2, e3 = q s3, solved in closed form from the first structure
// equation and the SU(2) structure constants:
//   omega^1_0 = (p'/wp) e1       omega^2_0 = (p'/wp) e2
//   omega^3_0 = (q'/wq) e3       omega^1_2 = (2/q - q/p^2) e3
//   omega^1_3 = -(q/p^2) e2      omega^2_3 = (q/p^2) e1.
ConnectionForms connection_forms(const FrameJets& f) {
  ConnectionForms cf;
  const Jet& w = f.norm[0];
  const Jet& p = f.norm[1];
  const Jet& q = f.norm[3];
  cf.e[0] = covector(0, w);
  cf.e[1] = covector(1, p);
  cf.e[2] = covector(2, p);
  cf.e[3] = covector(3, q);

  const Jet a = p.derivative() / (w * p);
  const Jet c = q.derivative() / (w * q);
  const Jet qp2 = q / (p * p);
  const Jet mcoef = 2.0 / q - qp2;

  auto set = [&cf](int i, int j, const Form& val) {
    cf.omega[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = val;
    cf.omega[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = Jet(-1.0) * val;
  };
  set(1, 0, a * cf.e[1]);
  set(2, 0, a * cf.e[2]);
  set(3, 0, c * cf.e[3]);
  set(1, 2, mcoef * cf.e[3]);
  set(1, 3, Jet(-1.0) * (qp2 * cf.e[2]));
  set(2, 3, qp2 * cf.e[1]);
  return cf;
}

// Largest |coefficient| of a form, measured in the orthonormal coframe basis.
double sup_norm_in_coframe(const Form& f, const FrameJets& fr) {
  double worst = 0.0;
  for (unsigned mask = 1; mask < 16; ++mask) {
    double scale = 1.0;
    for (unsigned g = 0; g < 4; ++g)
      if (mask & (1u << g)) scale *= fr.norm[g].value();
    worst = std::max(worst, std::abs(f.c[mask].value()) / scale);
  }
  return worst;
}

double first_structure_residual(const ConnectionForms& cf, const FrameJets& fr) {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) {
    Form resid = exterior_d(cf.e[static_cast<std::size_t>(i)]);
    for (int j = 0; j < 4; ++j)
      resid += wedge(cf.omega[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                     cf.e[static_cast<std::size_t>(j)]);
    worst = std::max(worst, sup_norm_in_coframe(resid, fr));
  }
  return worst;
}

using JetMat = std::array<std::array<Jet, 4>, 4>;

unsigned pair_mask(int i, int j) { return (1u << i) | (1u << j); }

// Ricci tensor with jet entries: Ric_jl = sum_k Omega^k_j(E_k, E_l).
struct CurvatureJets {
  JetMat ricci;
  Jet scalar;
  double structure_residual;
  double asymmetry;
};

CurvatureJets curvature_jets(const FrameJets& fr) {
  const ConnectionForms cf = connection_forms(fr);
  // Curvature two-forms Omega^i_j = d omega^i_j + omega^i_k ^ omega^k_j.
  std::array<std::array<Form, 4>, 4> Omega;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      Form o = exterior_d(cf.omega[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      for (int k = 0; k < 4; ++k)
        o += wedge(cf.omega[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)],
                   cf.omega[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);
      Omega[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = o;
    }
  }
  // Components R^i_{jkl} = Omega^i_j(E_k, E_l) for k < l.
  auto component = [&](int i, int j, int k, int l) -> Jet {
    // coefficient on e^k ^ e^l; generators and coframe share the ordering
    const Jet raw = Omega[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                        .c[pair_mask(k, l)];
    return raw / (fr.norm[static_cast<std::size_t>(k)] * fr.norm[static_cast<std::size_t>(l)]);
  };
  CurvatureJets out;
  out.structure_residual = first_structure_residual(cf, fr);
  // Ric_jl = sum_k Omega^k_j(E_k, E_l), antisymmetry supplying k > l.
  for (int j = 0; j < 4; ++j) {
    for (int l = 0; l < 4; ++l) {
      Jet sum(0.0);
      for (int k = 0; k < 4; ++k) {
        if (k < l)
          sum += component(k, j, k, l);
        else if (l < k)
          sum -= component(k, j, l, k);
      }
      out.ricci[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)] = sum;
    }
  }
  out.scalar = Jet(0.0);
  for (int j = 0; j < 4; ++j)
    out.scalar += out.ricci[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)];
  double asym = 0.0;
  for (int j = 0; j < 4; ++j)
    for (int l = 0; l < 4; ++l)
      asym = std::max(asym, std::abs(out.ricci[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)].value() -
                                     out.ricci[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)].value()));
  out.asymmetry = asym;
  return out;
}

Eigen::Matrix4d values_of(const JetMat& m) {
  Eigen::Matrix4d r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      r(i, j) = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].value();
  return r;
}

JetMat trace_free(const JetMat& m) {
  Jet tr(0.0);
  for (int i = 0; i < 4; ++i) tr += m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
  JetMat r = m;
  const Jet quarter = tr / 4.0;
  for (int i = 0; i < 4; ++i)
    r[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] -= quarter;
  return r;
}

double frobenius(const Eigen::Matrix4d& m) { return m.norm(); }

// Two-form component order used throughout: (0,1),(0,2),(0,3),(1,2),(1,3),(2,3).
constexpr std::array<std::pair<int, int>, 6> kPairs{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

struct TwoFormJets {
  std::array<Jet, 6> comp{};
};

// Self-dual part for the orientation e0^e1^e2^e3:
// star swaps 01<->23, 03<->12 and maps 02 -> -13, 13 -> -02.
TwoFormJets self_dual_part(const TwoFormJets& f) {
  TwoFormJets sd;
  sd.comp[0] = (f.comp[0] + f.comp[5]) / 2.0;
  sd.comp[5] = sd.comp[0];
  sd.comp[1] = (f.comp[1] - f.comp[4]) / 2.0;
  sd.comp[4] = Jet(-1.0) * sd.comp[1];
  sd.comp[2] = (f.comp[2] + f.comp[3]) / 2.0;
  sd.comp[3] = sd.comp[2];
  return sd;
}

TwoFormJets star(const TwoFormJets& f) {
  TwoFormJets s;
  s.comp[0] = f.comp[5];
  s.comp[5] = f.comp[0];
  s.comp[1] = Jet(-1.0) * f.comp[4];
  s.comp[4] = Jet(-1.0) * f.comp[1];
  s.comp[2] = f.comp[3];
  s.comp[3] = f.comp[2];
  return s;
}

TwoFormJets minus(const TwoFormJets& a, const TwoFormJets& b) {
  TwoFormJets r;
  for (int i = 0; i < 6; ++i)
    r.comp[static_cast<std::size_t>(i)] =
        a.comp[static_cast<std::size_t>(i)] - b.comp[static_cast<std::size_t>(i)];
  return r;
}

double value_norm(const TwoFormJets& f) {
  double s = 0.0;
  for (const auto& c : f.comp) s += c.value() * c.value();
  return std::sqrt(s);
}

JetMat as_matrix(const TwoFormJets& f) {
  JetMat m{};
  for (int idx = 0; idx < 6; ++idx) {
    const auto [i, j] = kPairs[static_cast<std::size_t>(idx)];
    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = f.comp[static_cast<std::size_t>(idx)];
    m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
        Jet(-1.0) * f.comp[static_cast<std::size_t>(idx)];
  }
  return m;
}

JetMat matmul(const JetMat& a, const JetMat& b) {
  JetMat r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Jet s(0.0);
      for (int k = 0; k < 4; ++k)
        s += a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
             b[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
      r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s;
    }
  return r;
}

// F-reconstruction with jet coefficients, shared by the pointwise and the
// Maxwell (derivative-consuming) paths.
struct FJets {
  TwoFormJets F_plus;
  TwoFormJets F_minus;
  JetMat ricci;
  double antisym_resid;
  double asd_resid;
  double r0_norm;
  FrameJets frame;
};

FJets reconstruct_jets(const MetricProfile& m, double x, double einstein_tol,
                       double margin_frac = 0.01) {
  require_margin(m, x, margin_frac);
  const FrameJets fr = frame_jets(m, x, MetricKind::EinsteinMaxwell);
  const CurvatureJets cj = curvature_jets(fr);
  const JetMat r0 = trace_free(cj.ricci);
  double r0n = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const double v = r0[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].value();
      r0n += v * v;
    }
  r0n = std::sqrt(r0n);
  const double scale = std::max(1.0, frobenius(values_of(cj.ricci)));
  if (r0n < einstein_tol * scale)
    throw EinsteinPointError("trace-free Ricci vanishes: F is not determined by h (Einstein point)");

  FJets out;
  out.frame = fr;
  out.ricci = cj.ricci;
  out.r0_norm = r0n;
  // F+ = omega/2; omega = x^2 (e0^e3 + e1^e2) in the h-coframe.
  const Jet u = (fr.x * fr.x) / 2.0;
  out.F_plus = TwoFormJets{};
  out.F_plus.comp[2] = u;
  out.F_plus.comp[3] = u;
  // F- = -(1/2) (F+)^-1 r0 = (1/(2u^2)) F+ r0 as endomorphisms.
  const JetMat raw = matmul(as_matrix(out.F_plus), r0);
  const Jet factor = Jet(1.0) / (2.0 * u * u);
  JetMat scaled{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      scaled[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          factor * raw[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  // Split off any symmetric junk, then certify anti-self-duality.
  TwoFormJets fm{};
  double antisym = 0.0;
  for (int idx = 0; idx < 6; ++idx) {
    const auto [i, j] = kPairs[static_cast<std::size_t>(idx)];
    const Jet& up = scaled[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    const Jet& dn = scaled[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    fm.comp[static_cast<std::size_t>(idx)] = (up - dn) / 2.0;
    antisym = std::max(antisym, std::abs((up + dn).value() / 2.0));
  }
  for (int i = 0; i < 4; ++i)
    antisym = std::max(antisym,
                       std::abs(scaled[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)].value()));
  const TwoFormJets sd = self_dual_part(fm);
  out.asd_resid = value_norm(sd);
  out.antisym_resid = antisym;
  out.F_minus = minus(fm, sd);
  return out;
}

Form to_invariant_form(const TwoFormJets& f, const FrameJets& fr) {
  Form out;
  for (int idx = 0; idx < 6; ++idx) {
    const auto [i, j] = kPairs[static_cast<std::size_t>(idx)];
    out.c[pair_mask(i, j)] = f.comp[static_cast<std::size_t>(idx)] *
                             fr.norm[static_cast<std::size_t>(i)] *
                             fr.norm[static_cast<std::size_t>(j)];
  }
  return out;
}

InvariantTwoForm values_of(const TwoFormJets& f) {
  InvariantTwoForm out;
  for (int i = 0; i < 6; ++i)
    out.comp[static_cast<std::size_t>(i)] = f.comp[static_cast<std::size_t>(i)].value();
  return out;
}

}  // namespace

double InvariantTwoForm::norm() const {
  double s = 0.0;
  for (double c : comp) s += c * c;
  return std::sqrt(s);
}

Eigen::Matrix4d complex_structure_matrix() {
  Eigen::Matrix4d J = Eigen::Matrix4d::Zero();
  J(3, 0) = 1.0;
  J(0, 3) = -1.0;
  J(2, 1) = 1.0;
  J(1, 2) = -1.0;
  return J;
}

CoframeConnection coframe_connection(const MetricProfile& m, double x, MetricKind kind,
                                     double margin_frac) {
  require_margin(m, x, margin_frac);
  const FrameJets fr = frame_jets(m, x, kind);
  const ConnectionForms cf = connection_forms(fr);
  CoframeConnection out;
  out.x = x;
  for (int i = 0; i < 4; ++i)
    out.coframe_norm[static_cast<std::size_t>(i)] = fr.norm[static_cast<std::size_t>(i)].value();
  for (int k = 0; k < 4; ++k) out.connection[static_cast<std::size_t>(k)].setZero();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const Form& o = cf.omega[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      for (int k = 0; k < 4; ++k) {
        const double coef =
            o.c[1u << k].value() / fr.norm[static_cast<std::size_t>(k)].value();
        out.connection[static_cast<std::size_t>(k)](i, j) = coef;
      }
    }
  out.structure_residual = first_structure_residual(cf, fr);
  return out;
}

CurvatureSample ricci(const MetricProfile& m, double x, MetricKind kind, double margin_frac) {
  require_margin(m, x, margin_frac);
  const FrameJets fr = frame_jets(m, x, kind);
  const CurvatureJets cj = curvature_jets(fr);
  CurvatureSample out;
  out.x = x;
  out.ricci = values_of(cj.ricci);
  out.scalar = cj.scalar.value();
  out.structure_residual = cj.structure_residual;
  out.ricci_asymmetry = cj.asymmetry;
  const Eigen::Matrix4d r0 =
      out.ricci - (out.scalar / 4.0) * Eigen::Matrix4d::Identity();
  const Eigen::Matrix4d J = complex_structure_matrix();
  out.j_invariance_residual = frobenius(J.transpose() * r0 * J - r0);
  return out;
}

FReconstruction reconstruct_F(const CompactSolution& sol, double x, double einstein_tol) {
  return reconstruct_F(sol.profile(), x, einstein_tol);
}

FReconstruction reconstruct_F(const MetricProfile& m, double x, double einstein_tol) {
  const FJets fj = reconstruct_jets(m, x, einstein_tol);
  FReconstruction out;
  out.F_plus = values_of(fj.F_plus);
  out.F_minus = values_of(fj.F_minus);
  for (int i = 0; i < 6; ++i)
    out.F.comp[static_cast<std::size_t>(i)] =
        out.F_plus.comp[static_cast<std::size_t>(i)] + out.F_minus.comp[static_cast<std::size_t>(i)];
  out.antisymmetry_residual = fj.antisym_resid;
  out.asd_residual = fj.asd_resid;
  return out;
}

double em_residual(const CompactSolution& sol, double x, double einstein_tol) {
  return em_residual(sol.profile(), x, einstein_tol);
}

double em_residual(const MetricProfile& m, double x, double einstein_tol) {
  const FJets fj = reconstruct_jets(m, x, einstein_tol);
  TwoFormJets Fj{};
  for (int i = 0; i < 6; ++i)
    Fj.comp[static_cast<std::size_t>(i)] =
        fj.F_plus.comp[static_cast<std::size_t>(i)] + fj.F_minus.comp[static_cast<std::size_t>(i)];
  const Eigen::Matrix4d r = values_of(fj.ricci);
  Eigen::Matrix4d F = Eigen::Matrix4d::Zero();
  for (int idx = 0; idx < 6; ++idx) {
    const auto [i, j] = kPairs[static_cast<std::size_t>(idx)];
    F(i, j) = Fj.comp[static_cast<std::size_t>(idx)].value();
    F(j, i) = -F(i, j);
  }
  const Eigen::Matrix4d total = r + F * F;
  const Eigen::Matrix4d tf = total - (total.trace() / 4.0) * Eigen::Matrix4d::Identity();
  return frobenius(tf);
}

MaxwellResidual maxwell_residual(const CompactSolution& sol, int n_samples, double einstein_tol) {
  return maxwell_residual(sol.profile(), n_samples, einstein_tol);
}

MaxwellResidual maxwell_residual(const MetricProfile& m, int n_samples, double einstein_tol) {
  if (n_samples < 2) throw UsageError("maxwell_residual needs at least 2 samples");
  const double lo = to_double(m.lo), hi = to_double(m.hi);
  const double delta = 0.01 * (hi - lo);
  MaxwellResidual worst;
  for (int i = 0; i < n_samples; ++i) {
    const double x = lo + delta + (hi - lo - 2 * delta) * i / (n_samples - 1);
    const FJets fj = reconstruct_jets(m, x, einstein_tol);
    TwoFormJets F{};
    for (int idx = 0; idx < 6; ++idx)
      F.comp[static_cast<std::size_t>(idx)] =
          fj.F_plus.comp[static_cast<std::size_t>(idx)] +
          fj.F_minus.comp[static_cast<std::size_t>(idx)];
    const Form dF = exterior_d(to_invariant_form(F, fj.frame));
    const Form dstarF = exterior_d(to_invariant_form(star(F), fj.frame));
    worst.dF = std::max(worst.dF, sup_norm_in_coframe(dF, fj.frame));
    worst.dstarF = std::max(worst.dstarF, sup_norm_in_coframe(dstarF, fj.frame));
  }
  return worst;
}

double constant_scalar_residual(const CompactSolution& sol, int n_samples) {
  return constant_scalar_residual(sol.profile(), sol.kappa(), n_samples);
}

double constant_scalar_residual(const MetricProfile& m, const Rational& kappa, int n_samples) {
  if (n_samples < 2) throw UsageError("constant_scalar_residual needs n_samples >= 2");
  const double lo = to_double(m.lo), hi = to_double(m.hi);
  const double delta = 0.01 * (hi - lo);
  const double target = to_double(kappa);
  const double denom = target == 0.0 ? 1.0 : std::abs(target);
  double worst = 0.0;
  for (int i = 0; i < n_samples; ++i) {
    const double x = lo + delta + (hi - lo - 2 * delta) * i / (n_samples - 1);
    const CurvatureSample cs = ricci(m, x, MetricKind::EinsteinMaxwell);
    worst = std::max(worst, std::abs(cs.scalar - target) / denom);
  }
  return worst;
}

double trace_free_ricci_norm(const MetricProfile& m, double x) {
  const CurvatureSample cs = ricci(m, x, MetricKind::EinsteinMaxwell);
  const Eigen::Matrix4d r0 =
      cs.ricci - (cs.scalar / 4.0) * Eigen::Matrix4d::Identity();
  return frobenius(r0);
}

CurvatureReport curvature_report(const MetricProfile& m, const Rational& kappa, int n_samples,
                                 double einstein_tol) {
  if (n_samples < 2) throw UsageError("curvature_report needs n_samples >= 2");
  CurvatureReport rep;
  const double lo = to_double(m.lo), hi = to_double(m.hi);
  const double delta = 0.01 * (hi - lo);
  const double target = to_double(kappa);
  const double kappa_denom = target == 0.0 ? 1.0 : std::abs(target);
  int einstein_points = 0;
  for (int i = 0; i < n_samples; ++i) {
    const double x = lo + delta + (hi - lo - 2 * delta) * i / (n_samples - 1);
    const CurvatureSample cs = ricci(m, x, MetricKind::EinsteinMaxwell);
    CurvatureReportRow row;
    row.x = x;
    for (int d = 0; d < 4; ++d) row.ricci_diag[static_cast<std::size_t>(d)] = cs.ricci(d, d);
    row.s_h = cs.scalar;
    row.structure_residual = cs.structure_residual;
    row.j_invariance_residual = cs.j_invariance_residual;
    const Eigen::Matrix4d r0 = cs.ricci - (cs.scalar / 4.0) * Eigen::Matrix4d::Identity();
    row.trace_free_norm = r0.norm();
    rep.curvature_scale = std::max(rep.curvature_scale, cs.ricci.norm());
    try {
      row.em_residual = em_residual(m, x, einstein_tol);
    } catch (const EinsteinPointError&) {
      row.einstein_point = true;
      ++einstein_points;
    }
    rep.kappa_residual = std::max(rep.kappa_residual, std::abs(cs.scalar - target) / kappa_denom);
    rep.rows.push_back(row);
  }
  rep.einstein_mode = einstein_points == n_samples;
  if (!rep.einstein_mode) {
    try {
      rep.maxwell = maxwell_residual(m, n_samples, einstein_tol);
    } catch (const EinsteinPointError&) {
      // near-Einstein stragglers on the grid: leave the zero default
    }
  }
  return rep;
}

}  // namespace emk

