#include <doctest.h>

#include <cmath>

#include "emk/page.hpp"

using namespace emk;

TEST_CASE("einstein residual: exact values and route consistency") {
  // First (1, 1, 2): 2 alpha^2 + 2 alpha - 3 a^2 + b^2 at alpha = -2/3 is 5/9,
  // the value of (z^4 - 4z - 3)/(1+z)^2 at z = 2.
  const CompactSolution first = build(1, Rational(1), Rational(2), Branch::First);
  CHECK(einstein_residual(first) == frac(5, 9));
  CHECK(einstein_residual(first) != 0);

  // Second (1, 1, 2): nonzero, carrying the cubic z^3 + 7z^2 + 13z + 3 at
  // z = 2: residual = (z-1)^3 (z^3+7z^2+13z+3)/(z+1)^4 = 65/81.
  const CompactSolution second = build(1, Rational(1), Rational(2), Branch::Second);
  CHECK(einstein_residual(second) == frac(65, 81));
  CHECK(einstein_residual(second) != 0);
}

TEST_CASE("einstein locus per branch") {
  const EinsteinLocusResult k1 = einstein_locus(1, Branch::First);
  REQUIRE(k1.roots_z.size() == 1);
  CHECK(k1.roots_z[0].value == doctest::Approx(1.784358).epsilon(1e-6));
  CHECK(k1.has_closed_form);
  CHECK(std::abs(k1.closed_form_z - k1.roots_z[0].value) < 1e-12);

  for (int k = 2; k <= 10; ++k) CHECK(einstein_locus(k, Branch::First).roots_z.empty());
  CHECK(einstein_locus(1, Branch::Second).roots_z.empty());
  CHECK_THROWS_AS(einstein_locus(2, Branch::Second), BranchError);
}

TEST_CASE("uniqueness argument for z^4 - 4z - 3") {
  const QuarticPoly p({Rational(-3), Rational(-4), Rational(0), Rational(0), Rational(1)});
  CHECK(p(Rational(1)) < 0);
  const QuarticPoly dp = p.derivative();
  for (int i = 0; i <= 30; ++i) {
    const Rational z = 1 + frac(i, 10);  // grid over (1, 4]
    if (z == 1) continue;
    CHECK(dp(z) > 0);
  }
}

TEST_CASE("Ferrari radical against the certified bracket") {
  const double z = ferrari_page_root();
  CHECK(z == doctest::Approx(1.784358).epsilon(1e-6));
  const auto [lo, hi] = page_root_bracket();
  CHECK(to_double(hi - lo) < 1e-32);
  // the radical lands inside the exactly-certified bracket
  CHECK(Rational(z) >= lo - frac(1, 1000000000000L));
  CHECK(Rational(z) <= hi + frac(1, 1000000000000L));
  CHECK(std::abs(z - to_double((lo + hi) / 2)) < 1e-12);

  // 50-digit evaluation is stable against a higher-precision run
  const std::string d60 = ferrari_page_root_digits(60);
  const std::string d80 = ferrari_page_root_digits(80);
  CHECK(d80.substr(0, 50) == d60.substr(0, 50));
}

TEST_CASE("page point") {
  const PagePoint pp = page_point();
  CHECK(pp.z == doctest::Approx(1.784358).epsilon(1e-6));
  CHECK(pp.u_over_v == doctest::Approx(3.1839334).epsilon(1e-6));
  CHECK(std::abs(pp.u_over_v - page_u_over_v_radical()) < 1e-12);
  CHECK(pp.alpha_over_a == doctest::Approx(-pp.z / (1.0 + pp.z)));
  CHECK(pp.einstein);
  CHECK(validate(pp.solution).all_passed);
}

TEST_CASE("einstein flag flips across the Page root") {
  const auto [lo, hi] = page_root_bracket();
  const Rational below = lo - frac(1, 100);
  const Rational above = hi + frac(1, 100);
  const Rational r_below = einstein_residual(build(1, Rational(1), below, Branch::First));
  const Rational r_mid_lo = einstein_residual(build(1, Rational(1), lo, Branch::First));
  const Rational r_mid_hi = einstein_residual(build(1, Rational(1), hi, Branch::First));
  const Rational r_above = einstein_residual(build(1, Rational(1), above, Branch::First));
  CHECK(sign(r_below) == sign(r_mid_lo));
  CHECK(sign(r_mid_lo) * sign(r_mid_hi) < 0);  // the root sits inside the bracket
  CHECK(sign(r_mid_hi) == sign(r_above));
  // classify agrees with the residual's sign structure: false on both sides
  CHECK_FALSE(classify_einstein(build(1, Rational(1), below, Branch::First).profile()));
  CHECK_FALSE(classify_einstein(build(1, Rational(1), above, Branch::First).profile()));
}
