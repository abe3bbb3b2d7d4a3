#include "k2forge/curves/smoothness.hpp"

#include "k2forge/algebra/groebner.hpp"
#include "k2forge/algebra/resultant.hpp"

namespace k2forge {

namespace {

void mark_singular(SmoothnessReport& r, const CurvePoint& p) {
  r.smooth = false;
  r.singular_point = p;
  r.witness = "singular point " + p.str();
}

void check_infinity(const PlaneCurve& c, SmoothnessReport& r) {
  BiPoly h = c.chart(Chart::Y);  // variables (X/Y, Z/Y)
  UniPoly a = h.restrict(Var::y, Rat(0));
  UniPoly b = h.diff(Var::x).restrict(Var::y, Rat(0));
  UniPoly e = h.diff(Var::y).restrict(Var::y, Rat(0));
  UniPoly g = gcd(gcd(a, b), e);
  if (g.degree() > 0) {
    auto roots = rational_roots(g);
    if (!roots.empty()) {
      mark_singular(r, CurvePoint::at_infinity(roots.front(), Rat(1)));
    } else {
      r.smooth = false;
      r.eliminant = g;
      r.witness = "singular point (u:1:0) at infinity with " + g.str('u') + " = 0";
    }
    return;
  }
  BiPoly hx = c.chart(Chart::X);  // variables (Y/X, Z/X)
  if (hx.constant_term().is_zero() && hx.diff(Var::x).constant_term().is_zero() &&
      hx.diff(Var::y).constant_term().is_zero())
    mark_singular(r, CurvePoint::at_infinity(Rat(1), Rat(0)));
}

void check_affine(const PlaneCurve& c, SmoothnessReport& r) {
  const BiPoly& f = c.poly();
  BiPoly fx = f.diff(Var::x), fy = f.diff(Var::y);
  // Shear x -> x + s y so that the equation has constant leading coefficient
  // in y; then a common zero forces a common root of both resultants.
  BiPoly top = f.homogeneous_part(c.degree());
  long s = 0;
  while (top.eval(Rat(s), Rat(1)).is_zero()) s = s <= 0 ? 1 - s : -s;
  BiPoly sx = BiPoly::x() + BiPoly::monomial(Rat(s), 0, 1), sy = BiPoly::y();
  BiPoly fs = f.substitute(sx, sy);
  UniPoly r1 = resultant(fs, fs.diff(Var::x), Var::y);
  UniPoly r2 = resultant(fs, fs.diff(Var::y), Var::y);
  if (!r1.is_zero() && !r2.is_zero() && gcd(r1, r2).degree() == 0) return;

  auto gb = groebner_lex({f, fx, fy});
  if (gb.size() == 1 && gb[0].is_constant()) return;
  r.smooth = false;
  r.affine_smooth = false;
  std::optional<UniPoly> elim;
  for (const auto& p : gb)
    if (p.degree_in(Var::y) <= 0) elim = p.restrict(Var::y, Rat(0));
  if (!elim) {
    r.witness = "singular along a repeated component";
    return;
  }
  for (const auto& x0 : rational_roots(*elim)) {
    UniPoly g = gcd(gcd(f.restrict(Var::x, x0), fx.restrict(Var::x, x0)), fy.restrict(Var::x, x0));
    for (const auto& y0 : rational_roots(g)) {
      mark_singular(r, CurvePoint::affine(x0, y0));
      r.affine_smooth = false;
      return;
    }
  }
  r.eliminant = elim;
  r.witness = "singular point with " + elim->str() + " = 0";
}

}  // namespace

SmoothnessReport affine_smoothness_check(const PlaneCurve& c) {
  SmoothnessReport r;
  check_affine(c, r);
  return r;
}

SmoothnessReport smoothness_check(const PlaneCurve& c) {
  SmoothnessReport r;
  check_affine(c, r);
  if (!r.smooth) return r;
  check_infinity(c, r);
  r.affine_smooth = true;
  return r;
}

}  // namespace k2forge
