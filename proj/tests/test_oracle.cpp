#include <doctest.h>

#include <cmath>
#include <random>

#include "emk/invariants.hpp"
#include "emk/oracle.hpp"
#include "emk/page.hpp"

using namespace emk;

namespace {

std::vector<double> interior_grid(const MetricProfile& m, int n) {
  const double lo = to_double(m.lo), hi = to_double(m.hi);
  const double delta = 0.02 * (hi - lo);
  std::vector<double> xs;
  for (int i = 0; i < n; ++i) xs.push_back(lo + delta + (hi - lo - 2 * delta) * i / (n - 1));
  return xs;
}

CompactSolution random_first(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(1, 40), den(1, 10), kk(1, 6);
  const Rational a = frac(num(rng), den(rng));
  const Rational b = a + frac(num(rng), den(rng));
  return build(kk(rng), a, b, Branch::First);
}

}  // namespace

TEST_CASE("flat and Eguchi-Hanson profiles are Ricci-flat") {
  // Psi = t^2, alpha = 0: flat R^4 in disguise
  const MetricProfile flat{QuarticPoly({Rational(0), Rational(0), Rational(1)}), Rational(0),
                           frac(1, 2), Rational(3)};
  for (double x : interior_grid(flat, 7)) {
    const CurvatureSample cs = ricci(flat, x, MetricKind::Kahler);
    CHECK(cs.ricci.norm() < 1e-10);
    CHECK(cs.structure_residual < 1e-10);
  }
  // Psi = t^2 + D (A = B = C = 0, D != 0)
  for (const Rational D : {Rational(-1), Rational(1)}) {
    const MetricProfile eh{QuarticPoly({D, Rational(0), Rational(1)}), Rational(0), frac(11, 10),
                           Rational(3)};
    for (double x : interior_grid(eh, 7)) {
      const CurvatureSample cs = ricci(eh, x, MetricKind::Kahler);
      CHECK(cs.ricci.norm() < 1e-10);
    }
  }
}

TEST_CASE("oracle trace matches the closed-form scalar curvature of g") {
  std::mt19937 rng(2718);
  for (int i = 0; i < 12; ++i) {
    const CompactSolution sol = random_first(rng);
    const MetricProfile m = sol.profile();
    for (double x : interior_grid(m, 9)) {
      const CurvatureSample cs = ricci(m, x, MetricKind::Kahler);
      const double expected = scalar_curvature_g(m, x);
      CHECK(std::abs(cs.scalar - expected) <
            1e-8 * std::max(1.0, std::abs(expected)));
      CHECK(cs.ricci_asymmetry < 1e-10);
    }
  }
}

TEST_CASE("first structure equation holds at all sampled points") {
  std::mt19937 rng(3141);
  for (int i = 0; i < 6; ++i) {
    const CompactSolution sol = random_first(rng);
    const MetricProfile m = sol.profile();
    for (double x : interior_grid(m, 9)) {
      CHECK(coframe_connection(m, x, MetricKind::Kahler).structure_residual < 1e-10);
      CHECK(coframe_connection(m, x, MetricKind::EinsteinMaxwell).structure_residual < 1e-10);
    }
  }
}

TEST_CASE("margin guard near the endpoints") {
  const CompactSolution sol = build(1, Rational(1), Rational(2), Branch::First);
  CHECK_THROWS_AS(ricci(sol.profile(), 1.0005, MetricKind::Kahler), DomainError);
  CHECK_THROWS_AS(ricci(sol.profile(), 1.9999, MetricKind::Kahler), DomainError);
}

TEST_CASE("trace-free Ricci of h is J-invariant") {
  std::mt19937 rng(616);
  for (int i = 0; i < 8; ++i) {
    const CompactSolution sol = random_first(rng);
    const MetricProfile m = sol.profile();
    for (double x : interior_grid(m, 7))
      CHECK(ricci(m, x, MetricKind::EinsteinMaxwell).j_invariance_residual < 1e-10);
  }
}

TEST_CASE("constant scalar curvature of h against the exact kappa") {
  const CompactSolution first = build(1, Rational(1), Rational(2), Branch::First);
  CHECK(first.kappa() == frac(240, 13));
  CHECK(constant_scalar_residual(first, 40) < 1e-8);

  const CompactSolution second = build(1, Rational(1), Rational(2), Branch::Second);
  CHECK(second.kappa() == Rational(24));
  CHECK(constant_scalar_residual(second, 40) < 1e-8);
}

TEST_CASE("F reconstruction on a non-Einstein solution") {
  const CompactSolution sol = build(1, Rational(1), Rational(2), Branch::First);
  const FReconstruction fr = reconstruct_F(sol, 1.5);
  CHECK(fr.asd_residual < 1e-10);
  CHECK(fr.antisymmetry_residual < 1e-10);
  // F+ = omega/2 = (x^2/2)(e0^e3 + e1^e2) in the h-coframe: self-dual on the
  // nose, components exactly x^2/2 on the 03 and 12 slots
  CHECK(fr.F_plus.comp[2] == doctest::Approx(1.5 * 1.5 / 2.0).epsilon(1e-14));
  CHECK(fr.F_plus.comp[3] == doctest::Approx(1.5 * 1.5 / 2.0).epsilon(1e-14));
  CHECK(fr.F_plus.comp[0] == 0.0);
  CHECK(fr.F_plus.comp[1] == 0.0);
  CHECK(fr.F_plus.comp[4] == 0.0);
  CHECK(fr.F_plus.comp[5] == 0.0);
  // F- is genuinely anti-self-dual: 03 and 12 components opposite
  CHECK(fr.F_minus.comp[2] == doctest::Approx(-fr.F_minus.comp[3]).epsilon(1e-12));
}

TEST_CASE("reconstruction fails at the Einstein point") {
  const auto [lo, hi] = page_root_bracket();
  const CompactSolution page = build(1, Rational(1), (lo + hi) / 2, Branch::First);
  const MetricProfile m = page.profile();
  for (double x : interior_grid(m, 9)) {
    CHECK(trace_free_ricci_norm(m, x) < 1e-8);
    CHECK_THROWS_AS(reconstruct_F(page, x), EinsteinPointError);
  }
  CHECK(constant_scalar_residual(page, 30) < 1e-8);
}

TEST_CASE("Einstein-Maxwell residual vanishes on constructed solutions") {
  std::mt19937 rng(999);
  for (int i = 0; i < 6; ++i) {
    const CompactSolution sol = random_first(rng);
    const MetricProfile m = sol.profile();
    for (double x : interior_grid(m, 8)) CHECK(em_residual(sol, x) < 1e-8);
  }
  const CompactSolution k2 = build(2, frac(3, 2), frac(7, 2), Branch::First);
  for (double x : interior_grid(k2.profile(), 10)) CHECK(em_residual(k2, x) < 1e-8);
}

TEST_CASE("Maxwell residuals vanish on constructed solutions") {
  std::mt19937 rng(1001);
  for (int i = 0; i < 5; ++i) {
    const CompactSolution sol = random_first(rng);
    const MaxwellResidual mw = maxwell_residual(sol);
    CHECK(mw.dF < 1e-8);
    CHECK(mw.dstarF < 1e-8);
  }
  const CompactSolution sec = build(1, Rational(2), Rational(3), Branch::Second);
  const MaxwellResidual mw = maxwell_residual(sec);
  CHECK(mw.dF < 1e-8);
  CHECK(mw.dstarF < 1e-8);
}

TEST_CASE("the Kahler form is closed symbolically") {
  // omega = dx ^ s3 + 2(x + alpha) s1 ^ s2 at an arbitrary point
  const double alpha = -2.0 / 3.0;
  Form omega;
  omega.c[(1u << 0) | (1u << 3)] = Jet(1.0);
  omega.c[(1u << 1) | (1u << 2)] = 2.0 * (Jet::variable(1.37) + Jet(alpha));
  const Form domega = exterior_d(omega);
  for (unsigned mask = 0; mask < 16; ++mask) CHECK(domega.c[mask].value() == 0.0);
}

TEST_CASE("a non-harmonic invariant two-form is caught") {
  // A(x) s1 ^ s2 with A' != 2-pattern: dF = A' dx ^ s1 ^ s2 != 0
  Form f;
  f.c[(1u << 1) | (1u << 2)] = Jet::variable(1.2);  // A(x) = x
  const Form df = exterior_d(f);
  CHECK(df.c[(1u << 0) | (1u << 1) | (1u << 2)].value() == doctest::Approx(1.0));
}

TEST_CASE("a one-percent alpha perturbation is detected") {
  const CompactSolution sol = build(1, Rational(1), Rational(2), Branch::First);
  MetricProfile tweaked = sol.profile();
  tweaked.alpha = sol.alpha * frac(101, 100);
  // kappa constancy breaks well above the 1e-3 detection margin
  CHECK(constant_scalar_residual(tweaked, sol.kappa(), 30) > 1e-3);
  // and the reconstructed F is no longer closed
  const MaxwellResidual mw = maxwell_residual(tweaked, 20);
  CHECK(std::max(mw.dF, mw.dstarF) > 1e-3);
}

TEST_CASE("F components respect the U(2) symmetry") {
  const CompactSolution sol = build(2, Rational(1), Rational(3), Branch::First);
  for (double x : {1.3, 1.9, 2.6}) {
    const FReconstruction fr = reconstruct_F(sol, x);
    // only the e0^e3 and e1^e2 slots may be populated
    for (int idx : {0, 1, 4, 5}) {
      CHECK(std::abs(fr.F_plus.comp[static_cast<std::size_t>(idx)]) < 1e-14);
      CHECK(std::abs(fr.F_minus.comp[static_cast<std::size_t>(idx)]) < 1e-12);
    }
  }
}

TEST_CASE("oracle trace matches the closed form: 50 solutions x 20 points") {
  std::mt19937 rng(123321);
  for (int i = 0; i < 50; ++i) {
    const CompactSolution sol = random_first(rng);
    const MetricProfile m = sol.profile();
    for (double x : interior_grid(m, 20)) {
      const double expected = scalar_curvature_g(m, x);
      CHECK(std::abs(ricci(m, x, MetricKind::Kahler).scalar - expected) <
            1e-8 * std::max(1.0, std::abs(expected)));
    }
  }
}

TEST_CASE("off the Page point the metric is visibly non-Einstein") {
  const auto [lo, hi] = page_root_bracket();
  for (const Rational dz : {frac(-1, 10), frac(1, 10)}) {
    const Rational b = (lo + hi) / 2 + dz;
    const CompactSolution sol = build(1, Rational(1), b, Branch::First);
    CHECK(einstein_residual(sol) != 0);
    double worst = 0.0;
    for (double x : interior_grid(sol.profile(), 9))
      worst = std::max(worst, trace_free_ricci_norm(sol.profile(), x));
    CHECK(worst > 1e-3);
  }
}

TEST_CASE("F- is anti-self-dual and closed (finite-difference route)") {
  const CompactSolution sol = build(1, Rational(1), Rational(2), Branch::First);
  const MetricProfile m = sol.profile();
  const auto star = [](const std::array<double, 6>& f) {
    return std::array<double, 6>{f[5], -f[4], f[3], f[2], -f[1], f[0]};
  };
  for (double x : {1.3, 1.5, 1.7}) {
    const FReconstruction fr = reconstruct_F(sol, x);
    const auto sf = star(fr.F_minus.comp);
    for (int i = 0; i < 6; ++i)
      CHECK(std::abs(sf[static_cast<std::size_t>(i)] +
                     fr.F_minus.comp[static_cast<std::size_t>(i)]) < 1e-10);
  }
  // closedness: writing F- = A dx^s3 + B s1^s2, dF- = (B' - 2A) dx^s1^s2;
  // check B' = 2A by a central difference, independent of the jet machinery
  const double h = 1e-6;
  const auto AB = [&](double x) {
    const FReconstruction fr = reconstruct_F(sol, x);
    const CoframeConnection cc = coframe_connection(m, x, MetricKind::EinsteinMaxwell);
    const double A = fr.F_minus.comp[2] * cc.coframe_norm[0] * cc.coframe_norm[3];
    const double B = fr.F_minus.comp[3] * cc.coframe_norm[1] * cc.coframe_norm[2];
    return std::array<double, 2>{A, B};
  };
  for (double x : {1.3, 1.5, 1.7}) {
    const double dB = (AB(x + h)[1] - AB(x - h)[1]) / (2.0 * h);
    CHECK(std::abs(dB - 2.0 * AB(x)[0]) < 1e-5);
  }
}

TEST_CASE("curvature report aggregates the per-point table") {
  const CompactSolution sol = build(1, Rational(1), Rational(2), Branch::First);
  const CurvatureReport cr = curvature_report(sol.profile(), sol.kappa(), 12);
  REQUIRE(cr.rows.size() == 12);
  CHECK_FALSE(cr.einstein_mode);
  CHECK(cr.kappa_residual < 1e-12);
  CHECK(cr.maxwell.dF < 1e-8);
  for (const auto& row : cr.rows) {
    CHECK(row.em_residual >= 0.0);
    CHECK(row.trace_free_norm > 1e-3);  // visibly non-Einstein
    CHECK(row.j_invariance_residual < 1e-10);
    CHECK(std::abs(row.s_h - 240.0 / 13.0) < 1e-10);
    CHECK(row.ricci_diag[0] == doctest::Approx(row.ricci_diag[3]).epsilon(1e-10));
    CHECK(row.ricci_diag[1] == doctest::Approx(row.ricci_diag[2]).epsilon(1e-10));
  }

  const auto [lo, hi] = page_root_bracket();
  const CompactSolution page = build(1, Rational(1), (lo + hi) / 2, Branch::First);
  const CurvatureReport pr = curvature_report(page.profile(), page.kappa(), 8);
  CHECK(pr.einstein_mode);
  for (const auto& row : pr.rows) CHECK(row.einstein_point);
}
