#ifndef EMK_POLYNOMIAL_HPP
#define EMK_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "emk/rational.hpp"

namespace emk {

// Dense univariate polynomial with ascending coefficients, templated on the
// scalar. The library only ever needs degree <= 4 plus the chains derived
// from it (derivatives, Sturm remainders, Taylor shifts).
template <class Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Scalar> coeffs) : c_(coeffs) { trim(); }

  static Polynomial zero() { return Polynomial(); }
  static Polynomial constant(Scalar v) { return Polynomial({std::move(v)}); }

  bool is_zero() const { return c_.empty(); }
  // degree of the zero polynomial reported as -1
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  const Scalar& operator[](std::size_t i) const {
    static const Scalar kZero{0};
    return i < c_.size() ? c_[i] : kZero;
  }
  const std::vector<Scalar>& coeffs() const { return c_; }

  Scalar leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  // Exact Horner evaluation.
  Scalar operator()(const Scalar& x) const {
    if (c_.empty()) return Scalar(0);
    Scalar acc = c_.back();
    for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  // Floating evaluation, coefficients rounded once.
  double operator()(double x) const {
    double acc = 0.0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + to_double(c_[i]);
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<Scalar> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = Scalar(static_cast<long>(i)) * c_[i];
    return Polynomial(std::move(d));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Scalar> r(std::max(a.c_.size(), b.c_.size()), Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Scalar> r(std::max(a.c_.size(), b.c_.size()), Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator-(const Polynomial& a) {
    std::vector<Scalar> r(a.c_);
    for (auto& v : r) v = -v;
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const Scalar& s, const Polynomial& a) {
    std::vector<Scalar> r(a.c_);
    for (auto& v : r) v = s * v;
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const Polynomial& a, const Scalar& s) { return s * a; }
  friend Polynomial operator/(const Polynomial& a, const Scalar& s) {
    std::vector<Scalar> r(a.c_);
    for (auto& v : r) v = v / s;
    return Polynomial(std::move(r));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // p(x + c), exact Taylor shift via repeated synthetic division.
  Polynomial shifted(const Scalar& c) const {
    std::vector<Scalar> r(c_);
    for (std::size_t k = 0; k + 1 < r.size(); ++k)
      for (std::size_t i = r.size() - 1; i > k; --i) r[i - 1] += c * r[i];
    return Polynomial(std::move(r));
  }

  // x^deg * p(1/x) for a fixed nominal degree (coefficient reversal).
  Polynomial reversed(std::size_t deg) const {
    if (c_.size() > deg + 1) throw std::domain_error("reversed: degree exceeds nominal degree");
    std::vector<Scalar> r(deg + 1, Scalar(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[deg - i] = c_[i];
    return Polynomial(std::move(r));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == Scalar(0)) c_.pop_back();
  }
  std::vector<Scalar> c_;
};

// The central algebraic object: exact-coefficient polynomial of degree <= 4.
using QuarticPoly = Polynomial<Rational>;

// x^4 * p(1/x): coefficient reversal with the degree-4 convention, an
// involution on quartics.
inline QuarticPoly invert(const QuarticPoly& p) {
  if (p.degree() > 4) throw std::domain_error("invert: not a quartic");
  return p.reversed(4);
}

inline QuarticPoly monomial_x() { return QuarticPoly({Rational(0), Rational(1)}); }

}  // namespace emk

#endif  // EMK_POLYNOMIAL_HPP
