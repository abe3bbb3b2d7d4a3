#pragma once

#include <random>

#include "k2forge/algebra/bipoly.hpp"
#include "k2forge/algebra/rat.hpp"
#include "k2forge/algebra/unipoly.hpp"
#include "k2forge/curves/curve.hpp"

namespace k2test {

using k2forge::BiPoly;
using k2forge::Rat;
using k2forge::UniPoly;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline long rand_int(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

/// Random rational with |numerator| < 2^bits and a small denominator.
inline Rat rand_rat(int bits = 8, long max_den = 8) {
  long lim = (1L << bits) - 1;
  return Rat(rand_int(-lim, lim), rand_int(1, max_den));
}

inline Rat rand_nonzero(int bits = 8, long max_den = 8) {
  for (;;) {
    Rat r = rand_rat(bits, max_den);
    if (!r.is_zero()) return r;
  }
}

inline UniPoly rand_uni(int deg, int bits = 4) {
  std::vector<Rat> c;
  for (int i = 0; i < deg; ++i) c.push_back(rand_rat(bits, 3));
  c.push_back(rand_nonzero(bits, 3));
  return UniPoly(c);
}

inline BiPoly rand_bi(int total_deg, int bits = 3) {
  BiPoly p;
  for (int i = 0; i <= total_deg; ++i)
    for (int j = 0; i + j <= total_deg; ++j)
      if (rand_int(0, 2)) p += BiPoly::monomial(rand_rat(bits, 2), i, j);
  p += BiPoly::monomial(Rat(1), 0, total_deg);
  return p;
}

/// Quartic y^3 + f2 y^2 + f1 y + x^4 with the line-configuration
/// coefficients.
inline k2forge::PlaneCurve lines_quartic(const Rat& a, const Rat& b, const Rat& c) {
  BiPoly x = BiPoly::x(), y = BiPoly::y();
  BiPoly f1 = BiPoly(a.pow(6) * b.pow(6)) + BiPoly(a.pow(3) * b.pow(3) * c) * x +
              BiPoly(Rat(3) * a * a - b.pow(6) - b.pow(3) * c) * x.pow(2);
  BiPoly f2 = BiPoly(Rat(3) * a.pow(4) - a.pow(3) * c) + BiPoly(c) * x;
  return k2forge::PlaneCurve(y.pow(3) + f2 * y.pow(2) + f1 * y + x.pow(4));
}

/// Specialization at a = -1/2, b = 1, c = t.
inline k2forge::PlaneCurve ct_curve(const Rat& t) { return lines_quartic(Rat(-1, 2), Rat(1), t); }

}  // namespace k2test
