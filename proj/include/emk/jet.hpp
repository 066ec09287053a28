#ifndef EMK_JET_HPP
#define EMK_JET_HPP

#include <array>
#include <cmath>
#include <cstddef>

#include "emk/rational.hpp"

namespace emk {

// Truncated Taylor series in one variable: value and derivatives up to order
// kJetOrder, stored as Taylor coefficients f^(k)/k!. All radial derivatives of
// the coframe functions are propagated through this type, so curvature needs
// no numerical differentiation.
inline constexpr std::size_t kJetOrder = 6;

class Jet {
 public:
  Jet() { a_.fill(0.0); }
  explicit Jet(double v) : Jet() { a_[0] = v; }
  explicit Jet(const Rational& v) : Jet(to_double(v)) {}

  static Jet variable(double x0) {
    Jet j(x0);
    j.a_[1] = 1.0;
    return j;
  }

  double value() const { return a_[0]; }
  bool is_zero() const {
    for (double v : a_)
      if (v != 0.0) return false;
    return true;
  }
  double deriv(std::size_t k) const {
    double f = a_[k];
    for (std::size_t i = 2; i <= k; ++i) f *= static_cast<double>(i);
    return f;
  }
  double& coeff(std::size_t k) { return a_[k]; }
  double coeff(std::size_t k) const { return a_[k]; }

  // Taylor series of f'(x); the top coefficient is unknowable and set to 0,
  // so each application costs one valid order.
  Jet derivative() const {
    Jet r;
    for (std::size_t k = 0; k < kJetOrder; ++k)
      r.a_[k] = static_cast<double>(k + 1) * a_[k + 1];
    return r;
  }

  friend Jet operator+(const Jet& x, const Jet& y) {
    Jet r;
    for (std::size_t k = 0; k <= kJetOrder; ++k) r.a_[k] = x.a_[k] + y.a_[k];
    return r;
  }
  friend Jet operator-(const Jet& x, const Jet& y) {
    Jet r;
    for (std::size_t k = 0; k <= kJetOrder; ++k) r.a_[k] = x.a_[k] - y.a_[k];
    return r;
  }
  friend Jet operator-(const Jet& x) {
    Jet r;
    for (std::size_t k = 0; k <= kJetOrder; ++k) r.a_[k] = -x.a_[k];
    return r;
  }
  friend Jet operator*(const Jet& x, const Jet& y) {
    Jet r;
    for (std::size_t k = 0; k <= kJetOrder; ++k)
      for (std::size_t i = 0; i <= k; ++i) r.a_[k] += x.a_[i] * y.a_[k - i];
    return r;
  }
  friend Jet operator*(double s, const Jet& y) {
    Jet r;
    for (std::size_t k = 0; k <= kJetOrder; ++k) r.a_[k] = s * y.a_[k];
    return r;
  }
  friend Jet operator*(const Jet& x, double s) { return s * x; }
  friend Jet operator/(const Jet& x, const Jet& y) {
    Jet r;
    r.a_[0] = x.a_[0] / y.a_[0];
    for (std::size_t k = 1; k <= kJetOrder; ++k) {
      double acc = x.a_[k];
      for (std::size_t i = 1; i <= k; ++i) acc -= y.a_[i] * r.a_[k - i];
      r.a_[k] = acc / y.a_[0];
    }
    return r;
  }
  friend Jet operator/(double s, const Jet& y) { return Jet(s) / y; }
  friend Jet operator/(const Jet& x, double s) { return x * (1.0 / s); }

  Jet& operator+=(const Jet& y) { return *this = *this + y; }
  Jet& operator-=(const Jet& y) { return *this = *this - y; }

  friend Jet sqrt(const Jet& x) {
    Jet r;
    r.a_[0] = std::sqrt(x.a_[0]);
    for (std::size_t k = 1; k <= kJetOrder; ++k) {
      double acc = x.a_[k];
      for (std::size_t i = 1; i < k; ++i) acc -= r.a_[i] * r.a_[k - i];
      r.a_[k] = acc / (2.0 * r.a_[0]);
    }
    return r;
  }

 private:
  std::array<double, kJetOrder + 1> a_;
};

}  // namespace emk

#endif  // EMK_JET_HPP
