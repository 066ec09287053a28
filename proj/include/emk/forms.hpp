#ifndef EMK_FORMS_HPP
#define EMK_FORMS_HPP

#include <array>
#include <cstdint>

#include "emk/jet.hpp"

namespace emk {

// Exterior algebra of U(2)-invariant forms on the shell, over the generators
// (dx, s1, s2, s3) with x-dependent jet coefficients. Blades are indexed by
// bitmask (bit 0 = dx, bits 1..3 = s1..s3); the SU(2) structure equations
//   d s1 = 2 s2 ^ s3,  d s2 = 2 s3 ^ s1,  d s3 = 2 s1 ^ s2
// define the exterior derivative.
struct Form {
  std::array<Jet, 16> c{};

  Form& operator+=(const Form& o) {
    for (std::size_t i = 0; i < 16; ++i) c[i] += o.c[i];
    return *this;
  }
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) {
    for (std::size_t i = 0; i < 16; ++i) a.c[i] -= b.c[i];
    return a;
  }
  friend Form operator*(const Jet& s, const Form& f) {
    Form r;
    for (std::size_t i = 0; i < 16; ++i) r.c[i] = s * f.c[i];
    return r;
  }
  friend Form operator*(double s, const Form& f) { return Jet(s) * f; }
};

// Sign of e_m1 ^ e_m2 relative to the canonical ordering of m1 | m2; zero
// blades (overlapping masks) contribute nothing.
int blade_sign(unsigned m1, unsigned m2);

Form wedge(const Form& a, const Form& b);

// One-form c * generator.
Form covector(unsigned generator_bit, const Jet& coeff);

// Exterior derivative: jet coefficients differentiate in x, generators follow
// the structure equations.
Form exterior_d(const Form& f);

}  // namespace emk

#endif  // EMK_FORMS_HPP
