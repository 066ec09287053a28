#include "emk/forms.hpp"

#include <bit>

namespace emk {

int blade_sign(unsigned m1, unsigned m2) {
  if (m1 & m2) return 0;
  // Transpositions needed to merge the two ascending generator lists.
  int swaps = 0;
  for (unsigned i = 0; i < 4; ++i) {
    if (m2 & (1u << i)) swaps += std::popcount(m1 >> (i + 1));
  }
  return (swaps % 2 == 0) ? 1 : -1;
}

Form wedge(const Form& a, const Form& b) {
  Form r;
  for (unsigned m1 = 0; m1 < 16; ++m1) {
    if (a.c[m1].is_zero()) continue;
    for (unsigned m2 = 0; m2 < 16; ++m2) {
      if (b.c[m2].is_zero()) continue;
      const int s = blade_sign(m1, m2);
      if (s == 0) continue;
      const Jet term = a.c[m1] * b.c[m2];
      if (s > 0)
        r.c[m1 | m2] += term;
      else
        r.c[m1 | m2] -= term;
    }
  }
  return r;
}

Form covector(unsigned generator_bit, const Jet& coeff) {
  Form f;
  f.c[1u << generator_bit] = coeff;
  return f;
}

namespace {

Form unit_blade(unsigned mask) {
  Form f;
  f.c[mask] = Jet(1.0);
  return f;
}

// d of each generator: dx -> 0, ds1 = 2 s2^s3, ds2 = 2 s3^s1 = -2 s1^s3,
// ds3 = 2 s1^s2.
std::array<Form, 4> generator_d() {
  std::array<Form, 4> dgen{};
  dgen[1].c[(1u << 2) | (1u << 3)] = Jet(2.0);
  dgen[2].c[(1u << 1) | (1u << 3)] = Jet(-2.0);
  dgen[3].c[(1u << 1) | (1u << 2)] = Jet(2.0);
  return dgen;
}

// d of a unit blade by the graded Leibniz rule over its generators.
const std::array<Form, 16>& blade_d_table() {
  static const std::array<Form, 16> table = [] {
    const std::array<Form, 4> dgen = generator_d();
    std::array<Form, 16> t{};
    for (unsigned mask = 0; mask < 16; ++mask) {
      Form d{};
      int position = 0;
      for (unsigned g = 0; g < 4; ++g) {
        if (!(mask & (1u << g))) continue;
        const unsigned prefix = mask & ((1u << g) - 1);
        const unsigned suffix = mask & ~((1u << (g + 1)) - 1);
        Form term = wedge(unit_blade(prefix), wedge(dgen[g], unit_blade(suffix)));
        if (position % 2 == 0)
          d += term;
        else
          d += Jet(-1.0) * term;
        ++position;
      }
      t[mask] = d;
    }
    return t;
  }();
  return table;
}

}  // namespace

Form exterior_d(const Form& f) {
  const auto& table = blade_d_table();
  Form r;
  for (unsigned mask = 0; mask < 16; ++mask) {
    r += wedge(covector(0, f.c[mask].derivative()), unit_blade(mask));
    r += f.c[mask] * table[mask];
  }
  return r;
}

}  // namespace emk
