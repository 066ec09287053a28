#include "emk/page.hpp"

#include <mpfr.h>

#include <cmath>
#include <stdexcept>

namespace emk {

Rational einstein_residual(const CompactSolution& sol) {
  const Rational& a = sol.a;
  const Rational& b = sol.b;
  const Rational& al = sol.alpha;
  const Rational quadratic = Rational(2 * sol.k) * al * al + 2 * (b - a) * al -
                             Rational(sol.k + 2) * a * a - Rational(sol.k - 2) * b * b;
  // Same locus as the extremal criterion B = 2 A alpha, up to an exact
  // nonzero factor; keep the two routes honest against each other.
  const Rational criterion = sol.psi[3] - 2 * sol.psi[4] * sol.alpha;
  const Rational factor = -(b - a) * (a * a + 4 * a * b + b * b);
  if (quadratic != factor * criterion)
    throw std::logic_error("einstein_residual: quadratic and extremal-criterion routes disagree");
  return quadratic;
}

QuarticPoly einstein_locus_polynomial(int k, Branch branch) {
  if (branch == Branch::First)
    return QuarticPoly({Rational(k + 2), Rational(2 * (k + 1)), Rational(0),
                        Rational(2 * (k - 1)), Rational(k - 2)});
  if (k != 1) throw BranchError("Second branch exists only for k = 1");
  return QuarticPoly({Rational(3), Rational(13), Rational(7), Rational(1)});
}

EinsteinLocusResult einstein_locus(int k, Branch branch) {
  if (k < 1) throw UsageError("need k >= 1");
  EinsteinLocusResult out;
  out.k = k;
  out.branch = branch;
  const QuarticPoly p = einstein_locus_polynomial(k, branch);
  out.roots_z = real_roots_in(p, Rational(1), std::nullopt);
  if (k == 1 && branch == Branch::First) {
    out.has_closed_form = true;
    out.closed_form_z = ferrari_page_root();
    out.closed_form_digits = ferrari_page_root_digits();
  }
  return out;
}

namespace {

// w = (1/2)(c - 1/c) with c = cbrt(1 + sqrt 2); the resolvent value of
// Ferrari's method for z^4 - 4z - 3.
void ferrari_w(mpfr_t w, mpfr_prec_t prec) {
  mpfr_t c, inv;
  mpfr_init2(c, prec);
  mpfr_init2(inv, prec);
  mpfr_sqrt_ui(c, 2, MPFR_RNDN);
  mpfr_add_ui(c, c, 1, MPFR_RNDN);
  mpfr_cbrt(c, c, MPFR_RNDN);
  mpfr_ui_div(inv, 1, c, MPFR_RNDN);
  mpfr_sub(w, c, inv, MPFR_RNDN);
  mpfr_div_ui(w, w, 2, MPFR_RNDN);
  mpfr_clear(c);
  mpfr_clear(inv);
}

mpfr_prec_t prec_for(int digits) {
  return static_cast<mpfr_prec_t>(digits * 3.33) + 32;
}

}  // namespace

double ferrari_page_root(int digits) {
  const mpfr_prec_t prec = prec_for(digits);
  mpfr_t w, sw, second, z;
  mpfr_init2(w, prec);
  mpfr_init2(sw, prec);
  mpfr_init2(second, prec);
  mpfr_init2(z, prec);
  ferrari_w(w, prec);
  mpfr_sqrt(sw, w, MPFR_RNDN);           // sqrt(w)
  mpfr_ui_div(second, 1, sw, MPFR_RNDN); // w^{-1/2}
  mpfr_sub(second, second, w, MPFR_RNDN);
  mpfr_sqrt(second, second, MPFR_RNDN);  // sqrt(w^{-1/2} - w)
  mpfr_add(z, sw, second, MPFR_RNDN);
  const double out = mpfr_get_d(z, MPFR_RNDN);
  mpfr_clear(w);
  mpfr_clear(sw);
  mpfr_clear(second);
  mpfr_clear(z);
  return out;
}

std::string ferrari_page_root_digits(int digits) {
  const mpfr_prec_t prec = prec_for(digits);
  mpfr_t w, sw, second, z;
  mpfr_init2(w, prec);
  mpfr_init2(sw, prec);
  mpfr_init2(second, prec);
  mpfr_init2(z, prec);
  ferrari_w(w, prec);
  mpfr_sqrt(sw, w, MPFR_RNDN);
  mpfr_ui_div(second, 1, sw, MPFR_RNDN);
  mpfr_sub(second, second, w, MPFR_RNDN);
  mpfr_sqrt(second, second, MPFR_RNDN);
  mpfr_add(z, sw, second, MPFR_RNDN);
  char* str = nullptr;
  mpfr_asprintf(&str, "%.*Rg", digits, z);
  std::string out(str);
  mpfr_free_str(str);
  mpfr_clear(w);
  mpfr_clear(sw);
  mpfr_clear(second);
  mpfr_clear(z);
  return out;
}

double page_u_over_v_radical(int digits) {
  const mpfr_prec_t prec = prec_for(digits);
  mpfr_t w, t1, t2, uv;
  mpfr_init2(w, prec);
  mpfr_init2(t1, prec);
  mpfr_init2(t2, prec);
  mpfr_init2(uv, prec);
  ferrari_w(w, prec);
  // u/v = w^{-1/2} + 2 sqrt(w^{1/2} - w^2)
  mpfr_sqrt(t1, w, MPFR_RNDN);        // w^{1/2}
  mpfr_mul(t2, w, w, MPFR_RNDN);      // w^2
  mpfr_sub(t2, t1, t2, MPFR_RNDN);
  mpfr_sqrt(t2, t2, MPFR_RNDN);
  mpfr_mul_ui(t2, t2, 2, MPFR_RNDN);
  mpfr_ui_div(uv, 1, t1, MPFR_RNDN);  // w^{-1/2}
  mpfr_add(uv, uv, t2, MPFR_RNDN);
  const double out = mpfr_get_d(uv, MPFR_RNDN);
  mpfr_clear(w);
  mpfr_clear(t1);
  mpfr_clear(t2);
  mpfr_clear(uv);
  return out;
}

std::pair<Rational, Rational> page_root_bracket() {
  // Exact bisection of z^4 - 4z - 3 on [1, 2]; negative at 1, positive at 2.
  const QuarticPoly p({Rational(-3), Rational(-4), Rational(0), Rational(0), Rational(1)});
  Rational lo(1), hi(2);
  for (int i = 0; i < 110; ++i) {  // width 2^-110 < 1e-32
    const Rational mid = (lo + hi) / 2;
    const int s = sign(p(mid));
    if (s == 0) return {mid, mid};
    if (s < 0)
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi};
}

PagePoint page_point() {
  PagePoint pp;
  const auto [lo, hi] = page_root_bracket();
  const Rational z_rat = (lo + hi) / 2;
  pp.z = ferrari_page_root();
  pp.u_over_v = pp.z * pp.z;
  pp.alpha_over_a = -pp.z / (1.0 + pp.z);
  pp.solution = build(1, Rational(1), z_rat, Branch::First);
  pp.sV = report(pp.solution).sV;
  // Exact equality at a rationalized root is impossible; certify the Einstein
  // flag by the sign change of the exact residual across the bracket.
  const Rational res_lo = einstein_residual(build(1, Rational(1), lo, Branch::First));
  const Rational res_hi = einstein_residual(build(1, Rational(1), hi, Branch::First));
  pp.einstein = sign(res_lo) * sign(res_hi) < 0 || sign(res_lo) == 0 || sign(res_hi) == 0;
  return pp;
}

}  // namespace emk
