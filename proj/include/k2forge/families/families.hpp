#pragma once

#include <string>
#include <utility>
#include <vector>

#include "k2forge/families/discriminants.hpp"
#include "k2forge/families/record.hpp"

namespace k2forge {

/// Signs attached to the prescribed points of an even-degree hyperelliptic
/// model; not all entries may be -1.
class EpsilonVector {
 public:
  explicit EpsilonVector(std::vector<int> entries);
  const std::vector<int>& entries() const { return e_; }
  size_t size() const { return e_.size(); }
  int operator[](size_t i) const { return e_[i]; }

 private:
  std::vector<int> e_;
};

/// y^2 + f1(x) y + x^(2g+1) with vertical tangents at (a_i^2, a_i^(2g+1)).
CurveRecord gen_hyp_odd(int g, const std::vector<Rat>& a);

/// y^2 + f1(x) y + x^(2g+2) with vertical tangents at (a_i, eps_i a_i^(g+1)).
CurveRecord gen_hyp_even(int g, const std::vector<Rat>& a, const EpsilonVector& eps);

/// m <= g prescribed vertical tangents (a_i, eps_i); the g+1-m free
/// parameters are the coordinates along the kernel basis of the
/// interpolation system. d is 2g+1 or 2g+2.
CurveRecord gen_hyp_partial(int g, int d, const std::vector<std::pair<Rat, int>>& constraints,
                            const std::vector<Rat>& free_params);

/// y^3 + f2 y^2 + f1 y + x^4 with the flex points P = (a^3, -a^4) and
/// Q = (-a^2 b^3, -a^2 b^6).
CurveRecord gen_quartic_lines(const Rat& a, const Rat& b, const Rat& c);

/// The one-parameter subfamily C_t, the specialization (a, b, c) =
/// (-1/2, 1, t).
CurveRecord gen_quartic_ct(const Rat& t);
/// The printed equation of C_t.
PlaneCurve ct_equation(const Rat& t);

/// ((y + d1 x + d2)^2 + d3 x + d4 x^2) y + x^4.
CurveRecord gen_quartic_conic(const Rat& d1, const Rat& d2, const Rat& d3, const Rat& d4);
CurveRecord gen_quartic_conic_1tangent(const Rat& a, const Rat& d1, const Rat& d4);
CurveRecord gen_quartic_conic_2tangent(const Rat& a1, const Rat& a2);
CurveRecord gen_quartic_conic_pq(const Rat& a, const Rat& b);

/// Weierstrass cubics y^2 = x^3 + p(r) x + q(r) with G: y = 0 and
/// H: y = -x + 1/3 - r/3.
CurveRecord gen_nekovar_2tor(const Rat& r);
/// Coefficients (p, q) of the 2-torsion family at r.
std::pair<Rat, Rat> nekovar_2tor_coefficients(const Rat& r);
/// Rational r for which the 2-torsion family is singular.
std::vector<Rat> nekovar_2tor_exclusions();
/// Curve, G, H and the points Q1, Q2 of the 2-torsion family, without
/// elements; for drawing members whose 2-torsion is not rational.
CurveRecord nekovar_2tor_scene(const Rat& r);

/// y^2 + (r - (4r+1) x) y + x^3 with G: y = 0 and H: y = x - r.
CurveRecord gen_nekovar_3tor(const Rat& r);
/// y^2 + (r - x - 4r x^3) y + x^5 with G: y = 0 and H: y = x - r.
CurveRecord gen_nekovar_genus2(const Rat& r);

/// Hypotheses of the integrality statements that apply to the record's
/// family; empty for other families.
std::vector<IntegralityFlag> integrality_flags(const CurveRecord& rec);

}  // namespace k2forge
