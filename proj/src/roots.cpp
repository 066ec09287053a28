#include "emk/roots.hpp"

#include <cmath>

namespace emk {

namespace {

// Remainder of a / b, degrees strictly decreasing.
QuarticPoly poly_rem(QuarticPoly a, const QuarticPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const Rational q = a.leading() / b.leading();
    const int shift = a.degree() - b.degree();
    std::vector<Rational> sub(static_cast<std::size_t>(shift) + b.coeffs().size(), Rational(0));
    for (std::size_t i = 0; i < b.coeffs().size(); ++i) sub[i + shift] = q * b.coeffs()[i];
    a = a - QuarticPoly(std::move(sub));
  }
  return a;
}

// Exact quotient when b divides a (used for square-free part and deflation).
QuarticPoly poly_div_exact(const QuarticPoly& a, const QuarticPoly& b) {
  QuarticPoly rem = a;
  std::vector<Rational> q(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 1, Rational(0));
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const Rational c = rem.leading() / b.leading();
    const int shift = rem.degree() - b.degree();
    q[shift] = c;
    std::vector<Rational> sub(static_cast<std::size_t>(shift) + b.coeffs().size(), Rational(0));
    for (std::size_t i = 0; i < b.coeffs().size(); ++i) sub[i + shift] = c * b.coeffs()[i];
    rem = rem - QuarticPoly(std::move(sub));
  }
  if (!rem.is_zero()) throw std::domain_error("poly_div_exact: not divisible");
  return QuarticPoly(std::move(q));
}

std::vector<QuarticPoly> sturm_chain(const QuarticPoly& p) {
  std::vector<QuarticPoly> chain;
  chain.push_back(p);
  QuarticPoly d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d);
  while (true) {
    QuarticPoly r = poly_rem(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

int sign_changes(const std::vector<QuarticPoly>& chain, const Rational& x) {
  int changes = 0, prev = 0;
  for (const auto& q : chain) {
    const int s = sign(q(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

// Divides out (x - r); q(r) must be zero.
QuarticPoly deflate(const QuarticPoly& q, const Rational& r) {
  return poly_div_exact(q, QuarticPoly({-r, Rational(1)}));
}

// Distinct roots of square-free q in (lo, hi), endpoints excluded; q must not
// vanish at lo or hi.
int count_distinct_open(const std::vector<QuarticPoly>& chain, const Rational& lo,
                        const Rational& hi) {
  return sign_changes(chain, lo) - sign_changes(chain, hi);
}

struct Isolated {
  Rational lo, hi;  // q has exactly one root in (lo, hi], and q(lo) != 0
};

void isolate(const std::vector<QuarticPoly>& chain, const Rational& lo, const Rational& hi,
             int count, std::vector<Isolated>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.push_back({lo, hi});
    return;
  }
  Rational mid = (lo + hi) / 2;
  // Nudge off a root of the chain head so the two halves stay clean.
  const QuarticPoly& q = chain.front();
  while (q(mid) == 0) mid = (lo + mid) / 2;
  const int left = sign_changes(chain, lo) - sign_changes(chain, mid);
  isolate(chain, lo, mid, left, out);
  isolate(chain, mid, hi, count - left, out);
}

int multiplicity_in(const QuarticPoly& p, const Rational& lo, const Rational& hi) {
  // Root of the square-free part in (lo, hi]; repeated factors live in
  // gcd(p, p'). Degrees <= 4 keep this recursion shallow.
  QuarticPoly g = poly_gcd(p, p.derivative());
  if (g.degree() < 1) return 1;
  auto chain = sturm_chain(square_free_part(g));
  const int inside = sign_changes(chain, lo) - sign_changes(chain, hi);
  if (inside == 0) return 1;
  return 1 + multiplicity_in(g, lo, hi);
}

}  // namespace

QuarticPoly poly_gcd(QuarticPoly a, QuarticPoly b) {
  while (!b.is_zero()) {
    QuarticPoly r = poly_rem(a, b);
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  return a / a.leading();
}

QuarticPoly square_free_part(const QuarticPoly& p) {
  QuarticPoly g = poly_gcd(p, p.derivative());
  if (g.degree() < 1) return p;
  return poly_div_exact(p, g);
}

Rational cauchy_root_bound(const QuarticPoly& p) {
  if (p.is_zero()) throw DegeneratePolynomialError("root bound of zero polynomial");
  Rational m(0);
  const Rational lead = rational_abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = rational_abs(p[static_cast<std::size_t>(i)]) / lead;
    if (r > m) m = r;
  }
  return m + 1;
}

int count_roots_open(const QuarticPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw DegeneratePolynomialError("root count of zero polynomial");
  if (!(lo < hi)) return 0;
  QuarticPoly q = square_free_part(p);
  if (q(lo) == 0) q = deflate(q, lo);
  if (q(hi) == 0) q = deflate(q, hi);
  if (q.degree() < 1) return 0;
  return count_distinct_open(sturm_chain(q), lo, hi);
}

std::vector<RootBracket> real_roots_in(const QuarticPoly& p, const Rational& lo,
                                       const std::optional<Rational>& hi, double rel_tol) {
  if (p.is_zero()) throw DegeneratePolynomialError("real_roots_in: zero polynomial");
  QuarticPoly q = square_free_part(p);
  Rational upper;
  if (hi) {
    upper = *hi;
  } else {
    upper = cauchy_root_bound(p) + 1;
    if (upper <= lo) upper = lo + 1;
  }
  if (!(lo < upper)) return {};
  if (q(lo) == 0) q = deflate(q, lo);
  if (q(upper) == 0) q = deflate(q, upper);
  if (q.degree() < 1) return {};

  const auto chain = sturm_chain(q);
  const int total = count_distinct_open(chain, lo, upper);
  std::vector<Isolated> iso;
  isolate(chain, lo, upper, total, iso);

  std::vector<RootBracket> roots;
  roots.reserve(iso.size());
  const QuarticPoly dq = q.derivative();
  for (auto& bracket : iso) {
    Rational a = bracket.lo, b = bracket.hi;
    if (q(b) == 0) {
      a = b;  // exact rational root
    } else {
      // q(a) and q(b) have opposite signs: plain exact bisection.
      int sa = sign(q(a));
      while (true) {
        const Rational width = b - a;
        Rational scale = rational_abs(b);
        if (scale < 1) scale = 1;
        if (to_double(width / scale) <= rel_tol) break;
        Rational mid = (a + b) / 2;
        const int sm = sign(q(mid));
        if (sm == 0) {
          a = b = mid;
          break;
        }
        if (sm == sa)
          a = mid;
        else
          b = mid;
      }
    }
    double x = to_double((a + b) / 2);
    for (int it = 0; it < 4; ++it) {  // Newton polish of the double value
      const double f = q(x), df = dq(x);
      if (df == 0.0) break;
      const double step = f / df;
      if (!std::isfinite(step)) break;
      const double nx = x - step;
      if (nx < to_double(a) - 1e-9 || nx > to_double(b) + 1e-9) break;
      x = nx;
    }
    roots.push_back({a, b, multiplicity_in(p, bracket.lo, bracket.hi), x});
  }
  return roots;
}

bool is_positive_on_open_interval(const QuarticPoly& p, const Rational& a, const Rational& b) {
  if (!(a < b)) throw std::domain_error("is_positive_on_open_interval: need a < b");
  if (p.is_zero()) return false;
  if (count_roots_open(p, a, b) > 0) return false;
  return p((a + b) / 2) > 0;
}

}  // namespace emk
