#include "emk/compactify.hpp"

namespace emk {

std::string to_string(Branch b) { return b == Branch::First ? "first" : "second"; }

Branch branch_from_string(const std::string& s) {
  if (s == "first") return Branch::First;
  if (s == "second") return Branch::Second;
  throw UsageError("unknown branch: " + s + " (expected 'first' or 'second')");
}

namespace {

void require_ordered(const Rational& a, const Rational& b) {
  if (!(b > a && a > 0)) throw UsageError("need b > a > 0");
}

}  // namespace

Rational alpha_of(int k, const Rational& a, const Rational& b, Branch branch) {
  require_ordered(a, b);
  if (branch == Branch::First) return -a * b / (a + b);
  if (k != 1)
    throw BranchError("branch Second is admissible only for k = 1 (a + alpha > 0 fails otherwise)");
  const Rational apb = a + b;
  return Rational(-4) * a * a * b / (apb * apb);
}

Rational E_of(int k, const Rational& a, const Rational& b, const Rational& alpha) {
  const Rational den = a * a + 4 * a * b + b * b;
  return (Rational(k) * alpha - Rational(k + 1) * a - Rational(k - 1) * b) / den;
}

ValidationReport validate(const CompactSolution& sol) {
  ValidationReport rep;
  const auto add = [&rep](std::string name, bool ok) {
    rep.checks.push_back({name, ok});
    if (!ok && rep.all_passed) {
      rep.all_passed = false;
      rep.first_failure = std::move(name);
    } else if (!ok) {
      rep.all_passed = false;
    }
  };
  const Rational& a = sol.a;
  const Rational& b = sol.b;
  const Rational ta = a + sol.alpha;
  const Rational tb = b + sol.alpha;
  const QuarticPoly dpsi = sol.psi.derivative();
  add("b > a > 0", b > a && a > 0);
  add("a + alpha > 0", ta > 0);
  add("Psi(a) = 0", sol.psi(a) == 0);
  add("Psi(b) = 0", sol.psi(b) == 0);
  add("Psi'(a) = k (a + alpha)", dpsi(a) == Rational(sol.k) * ta);
  add("Psi'(b) = -k (b + alpha)", dpsi(b) == Rational(-sol.k) * tb);
  add("Psi > 0 on (a, b)", b > a && is_positive_on_open_interval(sol.psi, a, b));
  add("reduced form: x^2 coefficient = 1, constant = C alpha / 2",
      is_reduced_form(sol.psi, sol.alpha));
  return rep;
}

CompactSolution build(int k, const Rational& a, const Rational& b, Branch branch) {
  if (k < 1) throw UsageError("need k >= 1");
  require_ordered(a, b);
  const Rational alpha = alpha_of(k, a, b, branch);
  const Rational E = E_of(k, a, b, alpha);
  // (b - x)(x - a)
  const QuarticPoly u({-a * b, a + b, Rational(-1)});
  const QuarticPoly linear({alpha, Rational(1)});  // x + alpha
  const QuarticPoly psi = (Rational(k) * u * linear + E * (u * u)) / (b - a);
  CompactSolution sol{k, a, b, branch, alpha, E, psi};
  const ValidationReport rep = validate(sol);
  if (!rep.all_passed) throw ValidationError("compactification check failed: " + rep.first_failure);
  return sol;
}

KahlerClass kahler_class_of(const CompactSolution& sol) {
  KahlerClass kc;
  kc.k = sol.k;
  kc.area_Cminus = sol.a + sol.alpha;
  kc.area_Cplus = sol.b + sol.alpha;
  kc.area_F = (sol.b - sol.a) / sol.k;
  if (sol.k == 1) {
    kc.u = kc.area_Cplus;
    kc.v = kc.area_Cminus;
  }
  return kc;
}

std::pair<Rational, Rational> solve_class_first(int k, const Rational& area_Cminus,
                                                const Rational& area_F) {
  if (k < 1) throw UsageError("need k >= 1");
  if (!(area_Cminus > 0) || !(area_F > 0)) throw UsageError("areas must be positive");
  // a^2/(a+b) = A-, (b-a)/k = AF  =>  a^2 - 2 A- a - A- k AF = 0, b = a + k AF.
  const Rational am = area_Cminus;
  const Rational kf = Rational(k) * area_F;
  const Rational disc = am * am + am * kf;
  Rational a = am + sqrt_approx(disc);
  // Certify by exact signs: the quadratic must change sign across [a, a+eps].
  const auto q = [&](const Rational& y) -> Rational { return y * y - 2 * am * y - am * kf; };
  Rational eps = (a > 1 ? a : Rational(1));
  mpq_div_2exp(eps.get_mpq_t(), eps.get_mpq_t(), 100);
  while (q(a) > 0) a -= eps;  // floor-based sqrt: at most one step
  Rational hi = a + eps;
  while (!(q(hi) > 0)) {
    hi += eps;
    eps *= 2;
  }
  a = (a + hi) / 2;
  const Rational b = a + kf;
  if (b - a < frac(1, 1000000000000L) * a)
    throw DegenerateClassError("class collapses: b - a below 1e-12 a");
  return {a, b};
}

EnumerationResult enumerate_k1(const Rational& u, const Rational& v) {
  if (!(u > 0) || !(v > 0)) throw UsageError("need u, v > 0");
  const Rational ratio = u / v;
  if (!(ratio > 1)) throw DegenerateClassError("u/v <= 1 is not a Kahler class on Sigma_1");
  EnumerationResult out;
  out.at_bifurcation = (ratio == 9);

  // First branch: (b/a)^2 = u/v, scale fixed by v = a^2/(a+b) = a/(1+r).
  const Rational r = sqrt_approx(ratio);
  {
    const Rational a = v * (1 + r);
    const Rational b = r * a;
    if (b - a < frac(1, 1000000000000L) * a)
      throw DegenerateClassError("u/v too close to 1: the metric collapses as b -> a");
    out.solutions.push_back(build(1, a, b, Branch::First));
  }

  // Second branch: u/v = 5 + 2(z + 1/z) has two roots z, 1/z when u/v > 9.
  // At u/v = 9 they merge with the First solution (identical Psi), so the
  // list keeps exactly one entry.
  if (ratio > 9) {
    const Rational sigma = (ratio - 5) / 2;
    const Rational s = sqrt_approx(sigma * sigma - 4);
    const Rational z_roots[2] = {(sigma + s) / 2, (sigma - s) / 2};
    for (const Rational& z : z_roots) {
      const Rational zp1 = 1 + z;
      const Rational a = v * zp1 * zp1 / (z * z);
      const Rational b = (1 + 2 * z) * a;
      out.solutions.push_back(build(1, a, b, Branch::Second));
    }
  }
  return out;
}

}  // namespace emk
