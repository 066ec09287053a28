#include <doctest.h>

#include <cmath>
#include <random>

#include "emk/ansatz.hpp"
#include "emk/compactify.hpp"

using namespace emk;

namespace {

MetricProfile flat_profile() {
  return make_profile(ReducedQuartic{Rational(0), Rational(0), Rational(0), Rational(0)},
                      frac(1, 2), Rational(3));
}

}  // namespace

TEST_CASE("frame sample of the cone profile") {
  const MetricProfile m = flat_profile();  // Psi = x^2, alpha = 0
  const FrameSample s = sample(m, 1.0);
  CHECK(s.g_diag[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(s.g_diag[1] == doctest::Approx(2.0));
  CHECK(s.g_diag[2] == doctest::Approx(2.0));
  CHECK(s.g_diag[3] == doctest::Approx(2.0));

  const FrameSample s2 = sample(m, 2.0);
  for (int i = 0; i < 4; ++i)
    CHECK(s2.h_diag[static_cast<std::size_t>(i)] ==
          doctest::Approx(s2.g_diag[static_cast<std::size_t>(i)] / 4.0));

  CHECK_THROWS_AS(sample(m, 0.5), DomainError);   // endpoint excluded
  CHECK_THROWS_AS(sample(m, 10.0), DomainError);
}

TEST_CASE("profile invariants are enforced") {
  // endpoints of opposite sign
  CHECK_THROWS_AS(make_profile(QuarticPoly({Rational(1)}), Rational(0), Rational(-1), Rational(1)),
                  DomainError);
  // Psi not positive inside
  CHECK_THROWS_AS(make_profile(QuarticPoly({Rational(-2), Rational(3), Rational(-1)}), Rational(0),
                               frac(1, 2), Rational(3)),
                  DomainError);
  // x + alpha <= 0 at the left endpoint
  CHECK_THROWS_AS(make_profile(QuarticPoly({Rational(1)}), Rational(-1), frac(1, 2), Rational(3)),
                  DomainError);
}

TEST_CASE("scalar curvature of g") {
  const MetricProfile flat = flat_profile();
  for (double x : {0.7, 1.0, 1.9, 2.6}) CHECK(scalar_curvature_g(flat, x) == doctest::Approx(0.0));

  // extremal family: Psi_t = A t^4 + B t^3 + t^2 + C t + D  =>  s = -12(2At + B)
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> pick(-3, 3);
  int tested = 0;
  while (tested < 20) {
    const Rational A = frac(pick(rng), 40);
    const Rational B = frac(pick(rng), 20);
    const Rational C = frac(pick(rng), 10);
    const Rational D = frac(pick(rng), 10);
    const Rational alpha = frac(pick(rng), 7);
    const QuarticPoly psi_t({D, C, Rational(1), B, A});
    const QuarticPoly psi_x = psi_t.shifted(alpha);  // Psi_x(x) = Psi_t(x + alpha)
    const Rational lo(1), hi(2);
    if (!(lo + alpha > 0)) continue;
    if (!is_positive_on_open_interval(psi_x, lo, hi)) continue;
    ++tested;
    const MetricProfile m = make_profile(psi_x, alpha, lo, hi);
    for (double x : {1.2, 1.5, 1.8}) {
      const double t = x + to_double(alpha);
      const double expected = -12.0 * (2.0 * to_double(A) * t + to_double(B));
      CHECK(scalar_curvature_g(m, x) == doctest::Approx(expected).epsilon(1e-12));
    }
  }
}

TEST_CASE("laplacian closed form") {
  const MetricProfile flat = flat_profile();
  CHECK(laplacian(flat, 1.3, 0.0, 0.0) == doctest::Approx(0.0));  // constants
  // phi = t with Psi = t^2 (alpha = 0): -(2/t)(2t) = -4
  CHECK(laplacian(flat, 1.3, 1.0, 0.0) == doctest::Approx(-4.0));

  // generic profile, phi = 1/x: compare against a finite difference of
  // -(2/t) d/dx [Psi phi']
  const CompactSolution sol = build(1, Rational(1), Rational(2), Branch::First);
  const MetricProfile m = sol.profile();
  const double x = 1.4, h = 1e-5;
  const auto flux = [&m](double y) { return to_double(m.psi(Rational(y))) * (-1.0 / (y * y)); };
  const double t = x + to_double(m.alpha);
  const double fd = -(2.0 / t) * (flux(x + h) - flux(x - h)) / (2.0 * h);
  CHECK(laplacian(m, x, -1.0 / (x * x), 2.0 / (x * x * x)) ==
        doctest::Approx(fd).epsilon(1e-6));
}

TEST_CASE("conformal kappa is constant exactly on reduced quartics") {
  // C = 0 forces kappa = 0 whatever A, B, alpha do
  const MetricProfile m0 = make_profile(
      ReducedQuartic{frac(1, 50), frac(-1, 30), Rational(0), frac(1, 5)}, Rational(1), Rational(2));
  for (double x : {1.1, 1.5, 1.9}) CHECK(conformal_kappa(m0, x) == doctest::Approx(0.0));

  const CompactSolution sol = build(1, Rational(1), Rational(2), Branch::First);
  const MetricProfile m = sol.profile();
  for (double x : {1.2, 1.5, 1.8})
    CHECK(conformal_kappa(m, x) == doctest::Approx(240.0 / 13.0).epsilon(1e-12));

  // breaking the reduced form by 1/100 makes kappa visibly non-constant
  std::vector<Rational> c(sol.psi.coeffs());
  c[0] += frac(1, 100);
  const MetricProfile broken{QuarticPoly(c), sol.alpha, sol.a, sol.b};
  double lo = 1e300, hi = -1e300;
  for (double x : {1.2, 1.5, 1.8}) {
    const double kappa = conformal_kappa(broken, x);
    lo = std::min(lo, kappa);
    hi = std::max(hi, kappa);
  }
  CHECK(hi - lo > 1e-3);
}

TEST_CASE("classification flags") {
  const CompactSolution sol = build(1, Rational(1), Rational(2), Branch::First);
  const ClassificationFlags f = classify(sol.profile());
  CHECK_FALSE(f.extremal);
  REQUIRE(f.einstein.has_value());
  CHECK_FALSE(*f.einstein);

  const MetricProfile cone = flat_profile();  // Psi = x^2
  const ClassificationFlags fc = classify(cone);
  CHECK(fc.extremal);
  CHECK(fc.cscK);
  CHECK(fc.scalar_flat_kahler);
  CHECK_FALSE(fc.einstein.has_value());  // A = 0: hypothesis fails
  CHECK_THROWS_AS(classify_einstein(cone), HypothesisError);
}

TEST_CASE("profile inversion is an exact involution") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> num(1, 12);
  for (int i = 0; i < 20; ++i) {
    const Rational a = frac(num(rng), 4);
    const Rational b = a + frac(num(rng), 3);
    const CompactSolution sol = build(1 + i % 4, a, b, Branch::First);
    const MetricProfile m = sol.profile();
    const MetricProfile m2 = invert_profile(invert_profile(m));
    CHECK(m2.psi == m.psi);
    CHECK(m2.alpha == m.alpha);
    CHECK(m2.lo == m.lo);
    CHECK(m2.hi == m.hi);
  }
}

TEST_CASE("inversion lands on the rescaled build of the same branch") {
  // First (1, 2): inverts to First (9/4, 9/2), alpha inverts to -3/2
  const CompactSolution sol = build(1, Rational(1), Rational(2), Branch::First);
  const MetricProfile inv = invert_profile(sol.profile());
  CHECK(inv.alpha == frac(-3, 2));
  const CompactSolution expected = build(1, frac(9, 4), frac(9, 2), Branch::First);
  CHECK(inv.psi == expected.psi);
  CHECK(inv.lo == expected.a);
  CHECK(inv.hi == expected.b);

  // Second (1, 2) has z = 1/2 and inverts to the z = 2 member
  const CompactSolution sec = build(1, Rational(1), Rational(2), Branch::Second);
  const MetricProfile inv2 = invert_profile(sec.profile());
  const CompactSolution expected2 = build(1, frac(81, 40), frac(81, 8), Branch::Second);
  CHECK(inv2.psi == expected2.psi);
  CHECK(inv2.alpha == expected2.alpha);
}

TEST_CASE("inverted profiles re-validate with the same k") {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> num(1, 9);
  for (int i = 0; i < 10; ++i) {
    const Rational a = frac(num(rng), 3);
    const Rational b = a + frac(num(rng), 2);
    const int k = 1 + i % 3;
    const CompactSolution sol = build(k, a, b, Branch::First);
    const MetricProfile inv = invert_profile(sol.profile());
    // the inverted profile satisfies the same compactification conditions
    CompactSolution mirrored;
    mirrored.k = k;
    mirrored.a = inv.lo;
    mirrored.b = inv.hi;
    mirrored.branch = Branch::First;
    mirrored.alpha = inv.alpha;
    mirrored.E = inv.psi[4] * (inv.hi - inv.lo);
    mirrored.psi = inv.psi;
    const ValidationReport rep = validate(mirrored);
    CHECK(rep.all_passed);
  }
}

TEST_CASE("kappa identity: exact at rational points, 1e-12 in floats") {
  // x^2 s_g + 6 x^3 Lap(1/x) == -12 C as rational functions; checked exactly
  // at 100 rational points per profile and in the floating path.
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> pick(-4, 4), num(1, 9);
  int tested = 0;
  while (tested < 10) {
    const ReducedQuartic rq{frac(pick(rng), 30), frac(pick(rng), 15), frac(pick(rng), 10),
                            frac(pick(rng), 8)};
    const Rational lo = frac(num(rng), 4);
    const Rational hi = lo + frac(num(rng), 3);
    const QuarticPoly psi = rq.to_quartic();
    if (!(lo + rq.alpha > 0) || !(hi + rq.alpha > 0)) continue;
    if (!is_positive_on_open_interval(psi, lo, hi)) continue;
    ++tested;
    const MetricProfile m = make_profile(rq, lo, hi);
    const QuarticPoly dpsi = psi.derivative();
    const QuarticPoly ddpsi = dpsi.derivative();
    const Rational kappa = rq.kappa();
    for (int i = 1; i <= 100; ++i) {
      const Rational x = lo + (hi - lo) * Rational(i) / 101;
      const Rational t = x + rq.alpha;
      // s_g = (2/t)(2 - Psi''), Lap(1/x) = -(2/t)(Psi' (-1/x^2) + Psi (2/x^3))
      const Rational s = 2 * (2 - ddpsi(x)) / t;
      const Rational lap = Rational(-2) / t * (dpsi(x) * (-1) / (x * x) + psi(x) * 2 / (x * x * x));
      CHECK(x * x * s + 6 * x * x * x * lap == kappa);  // exact
      const double kf = conformal_kappa(m, to_double(x));
      CHECK(std::abs(kf - to_double(kappa)) <=
            1e-12 * std::max(1.0, std::abs(to_double(kappa))));
    }
  }
}

TEST_CASE("laplacian callable overload") {
  const CompactSolution sol = build(1, Rational(1), Rational(2), Branch::First);
  const MetricProfile m = sol.profile();
  const auto inv_x = [](double x) {
    return std::array<double, 3>{1.0 / x, -1.0 / (x * x), 2.0 / (x * x * x)};
  };
  CHECK(laplacian(m, 1.4, inv_x) ==
        doctest::Approx(laplacian(m, 1.4, -1.0 / (1.4 * 1.4), 2.0 / (1.4 * 1.4 * 1.4))));
}
