#include "k2forge/curves/intersection.hpp"

#include <algorithm>

#include "k2forge/algebra/resultant.hpp"
#include "k2forge/error.hpp"

namespace k2forge {

int intersection_at_origin(BiPoly f, BiPoly g, int bound) {
  struct Job {
    BiPoly f, g;
  };
  std::vector<Job> stack{{std::move(f), std::move(g)}};
  int total = 0;
  while (!stack.empty()) {
    Job job = std::move(stack.back());
    stack.pop_back();
    for (;;) {
      if (!job.f.constant_term().is_zero() || !job.g.constant_term().is_zero()) break;
      UniPoly f0 = job.f.restrict(Var::y, Rat(0));
      UniPoly g0 = job.g.restrict(Var::y, Rat(0));
      if (f0.is_zero() && g0.is_zero()) throw PreconditionError("curves share a component through the point");
      if (f0.is_zero()) std::swap(job.f, job.g), std::swap(f0, g0);
      if (g0.is_zero()) {
        // y divides G: I(F, G) = I(F, y) + I(F, G/y), and I(F, y) = ord_x F(x, 0).
        total += f0.low_order();
        job.g = job.g.divide_by_y_power(1);
      } else {
        if (f0.degree() > g0.degree()) std::swap(job.f, job.g), std::swap(f0, g0);
        int shift = g0.degree() - f0.degree();
        job.g = BiPoly(f0.lead()) * job.g - BiPoly::monomial(g0.lead(), shift, 0) * job.f;
      }
      if (total > bound) throw InternalError("intersection multiplicity exceeds the Bezout bound");
    }
  }
  return total;
}

namespace {

/// Chart polynomials and local coordinates of p.
std::pair<Chart, std::pair<Rat, Rat>> chart_of(const CurvePoint& p) {
  if (p.is_affine()) return {Chart::Z, {p.x(), p.y()}};
  if (!p.y().is_zero()) return {Chart::Y, {p.x(), Rat(0)}};
  return {Chart::X, {Rat(0), Rat(0)}};
}

}  // namespace

int intersection_multiplicity(const PlaneCurve& c1, const PlaneCurve& c2, const CurvePoint& p) {
  if (!is_on_curve(c1, p) || !is_on_curve(c2, p)) throw PreconditionError("empty intersection at point");
  auto [chart, at] = chart_of(p);
  BiPoly f = c1.chart(chart).translate(at.first, at.second);
  BiPoly g = c2.chart(chart).translate(at.first, at.second);
  return intersection_at_origin(std::move(f), std::move(g), c1.degree() * c2.degree());
}

Line tangent_line(const PlaneCurve& c, const CurvePoint& p) {
  if (!p.is_affine()) throw PreconditionError("tangent line requested at a point at infinity");
  if (!is_on_curve(c, p)) throw PreconditionError("point is not on the curve");
  Rat fx = c.poly().diff(Var::x).eval(p.x(), p.y());
  Rat fy = c.poly().diff(Var::y).eval(p.x(), p.y());
  if (fx.is_zero() && fy.is_zero()) throw PreconditionError("no unique tangent");
  return Line(fx, fy, -(fx * p.x() + fy * p.y()));
}

IntersectionCycle intersect(const PlaneCurve& c1, const PlaneCurve& c2) {
  IntersectionCycle cyc;
  cyc.bezout = c1.degree() * c2.degree();
  const BiPoly& f = c1.poly();
  const BiPoly& g = c2.poly();
  Var elim = (f.degree_in(Var::y) > 0 || g.degree_in(Var::y) > 0) ? Var::y : Var::x;
  Var keep = elim == Var::y ? Var::x : Var::y;
  UniPoly res = resultant(f, g, elim);
  if (res.is_zero()) throw PreconditionError("curves share a component");
  std::vector<CurvePoint> pts;
  for (const auto& r : rational_roots(res)) {
    UniPoly a = f.restrict(keep, r), b = g.restrict(keep, r);
    if (a.is_zero() && b.is_zero()) throw PreconditionError("curves share a component");
    UniPoly common = a.is_zero() ? b : (b.is_zero() ? a : gcd(a, b));
    if (common.degree() < 1) continue;
    for (const auto& s : rational_roots(common))
      pts.push_back(keep == Var::x ? CurvePoint::affine(r, s) : CurvePoint::affine(s, r));
  }
  std::sort(pts.begin(), pts.end());
  for (const auto& p : rational_points_at_infinity(c1))
    if (is_on_curve(c2, p)) pts.push_back(p);
  for (const auto& p : pts) {
    int m = intersection_multiplicity(c1, c2, p);
    cyc.points.emplace_back(p, m);
    cyc.total += m;
  }
  if (cyc.total > cyc.bezout) throw InternalError("intersection total exceeds the Bezout number");
  return cyc;
}

}  // namespace k2forge
