#include <array>

#include "k2forge/curves/intersection.hpp"
#include "k2forge/curves/smoothness.hpp"
#include "k2forge/error.hpp"
#include "k2forge/families/families.hpp"
#include "k2forge/families/torsion_solver.hpp"

namespace k2forge {

namespace {

const BiPoly X = BiPoly::x();
const BiPoly Y = BiPoly::y();

BiPoly C(const Rat& r) { return BiPoly(r); }

PlaneCurve spq(const BiPoly& f1, const BiPoly& f2) { return PlaneCurve(Y.pow(3) + f2 * Y.pow(2) + f1 * Y + X.pow(4)); }

/// Smoothness from smoothness_check, cross-checked against a closed-form
/// discriminant. With `complete` false only the listed factors are known,
/// so only their vanishing is compared.
void check_smooth(const PlaneCurve& c, const ClosedFormDisc& cf, bool complete, const std::string& member) {
  SmoothnessReport rep = smoothness_check(c);
  auto v = cf.vanishing_factor();
  if (v && rep.smooth)
    throw InternalError("closed-form discriminant vanishes at factor " + v->name + " but " + member + " is smooth");
  if (complete && !v && !rep.smooth)
    throw InternalError("closed-form discriminant is nonzero but " + member + " is singular: " + rep.witness);
  if (v) throw PreconditionError("discriminant vanishes: factor " + v->name + " = 0 (" + member + ")");
  if (!rep.smooth) throw PreconditionError("discriminant vanishes: " + member + " is singular, " + rep.witness);
}

/// F(alpha, y) = (y - beta)^3 as polynomials in y.
void check_vertical_flex(const PlaneCurve& c, const Rat& alpha, const Rat& beta, const std::string& name) {
  UniPoly section = c.poly().restrict(Var::x, alpha);
  if (!(section == UniPoly::linear_root(beta).pow(3)))
    throw VerificationError("tangency identity F(" + alpha.str() + ", y) = (y - " + beta.str() + ")^3 fails at " +
                            name);
}

/// The line meets C with multiplicity 3 at p and 1 at q.
void check_contact(const PlaneCurve& c, const BiPoly& line, const CurvePoint& p, const CurvePoint& q,
                   const std::string& name) {
  IntersectionCycle cyc = intersect(c, PlaneCurve(line));
  bool ok = cyc.complete() && cyc.points.size() == 2;
  for (const auto& [pt, m] : cyc.points) {
    if (pt.same_place(p)) ok = ok && m == 3;
    else if (pt.same_place(q)) ok = ok && m == 1;
    else ok = false;
  }
  if (!ok) throw VerificationError("tangent line at " + name + " does not have contact 3 at " + p.str() + " and 1 at " + q.str());
}

struct Builder {
  CurveRecord rec;
  CurveRef ctx;
  CurvePoint inf, o;
  std::vector<CurvePoint> marked;
  std::vector<FnElt> fns;

  Builder(std::string family, const PlaneCurve& c, std::string model) : ctx(make_curve(c)) {
    rec.family_id = std::move(family);
    rec.curve = c;
    rec.model = std::move(model);
    auto places = ctx->places_at_infinity();
    if (places.size() != 1) throw InternalError("expected a single place at infinity");
    inf = places.front();
    o = CurvePoint::affine(Rat(0), Rat(0));
    rec.points.push_back({"inf", inf});
    rec.points.push_back({"O", o});
    rec.overlays.push_back({"L_O", Y});
    fns.emplace_back(ctx, Y);
  }

  void point(const std::string& name, const CurvePoint& p) {
    if (!is_on_curve(rec.curve, p)) throw InternalError(name + " is not on the curve");
    for (const auto& q : rec.points)
      if (q.point == p) throw PreconditionError(name + " coincides with " + q.name);
    rec.points.push_back({name, p});
    marked.push_back(p);
  }

  void function(const BiPoly& num, const BiPoly& den = BiPoly(1)) { fns.push_back(FnElt::quotient(ctx, num, den)); }

  void elements(const std::vector<std::array<std::string, 3>>& triples) {
    std::vector<CurvePoint> support = marked;
    support.push_back(o);
    TorsionSolver solver(ctx, support);
    for (const auto& f : fns) solver.add(f);
    for (const auto& t : triples) {
      std::string name = "{" + t[0] + "," + t[1] + "," + t[2] + "}";
      rec.elements.push_back(
          certified(rec.curve, name, solver.element(rec.point(t[0]), rec.point(t[1]), rec.point(t[2]))));
    }
  }
};

PlaneCurve lines_curve(const Rat& a, const Rat& b, const Rat& c) {
  BiPoly f1 = C(a.pow(6) * b.pow(6)) + C(a.pow(3) * b.pow(3) * c) * X + C(Rat(3) * a * a - b.pow(6) - b.pow(3) * c) * X.pow(2);
  BiPoly f2 = C(Rat(3) * a.pow(4) - a.pow(3) * c) + C(c) * X;
  return spq(f1, f2);
}

CurveRecord lines_record(std::string family, const Rat& a, const Rat& b, const Rat& c, const std::string& member) {
  if (a.is_zero() || b.is_zero()) throw PreconditionError("a and b must be nonzero");
  if (a == b) throw PreconditionError("a must differ from b");
  PlaneCurve curve = lines_curve(a, b, c);
  ClosedFormDisc cf = lines_disc(a, b, c);
  check_smooth(curve, cf, true, member);

  Builder bld(std::move(family), curve, "y^3 + f2(x) y^2 + f1(x) y + x^4");
  Rat b3 = b.pow(3);
  CurvePoint p = CurvePoint::affine(a.pow(3), -a.pow(4));
  CurvePoint q = CurvePoint::affine(-a * a * b3, -a * a * b.pow(6));
  bld.point("P", p);
  bld.point("Q", q);

  check_vertical_flex(curve, p.x(), p.y(), "P");
  check_contact(curve, X - C(p.x()), p, bld.inf, "P");
  check_contact(curve, Y - C(b3) * X, q, bld.o, "Q");

  // Chart D: (X : Y : Z) -> (X : a^2 b^2 Z : Y); in it Q is a vertical flex.
  Rat k = (a * a * b * b).inverse();
  BiPoly g = curve.chart(Chart::Y).substitute(X, C(k) * Y);
  if (!(g.coeff(0, 3).is_one() && g.coeff(4, 0).is_one() && g.degree_in(Var::y) == 3))
    throw VerificationError("chart D is not of the form z^3 + g2 z^2 + g1 z + w^4");
  check_vertical_flex(PlaneCurve(g), b3.inverse(), -b.pow(4).inverse(), "phi(Q)");
  bld.rec.facts["D_model"] = g.str('w', 'z');
  bld.rec.facts["phi(Q)"] = CurvePoint::affine(b3.inverse(), -b.pow(4).inverse()).str();

  bld.rec.overlays.push_back({"L_P", X - C(p.x())});
  bld.rec.overlays.push_back({"L_Q", Y - C(b3) * X});
  bld.function(X - C(p.x()));
  bld.function(Y - C(b3) * X, Y);
  std::vector<std::array<std::string, 3>> triples = {{"inf", "O", "P"}, {"inf", "O", "Q"}, {"inf", "P", "Q"}};

  if (c.is_zero()) {
    CurvePoint p2 = CurvePoint::affine(-a.pow(3), -a.pow(4));
    CurvePoint q2 = CurvePoint::affine(a * a * b3, -a * a * b.pow(6));
    bld.point("P'", p2);
    bld.point("Q'", q2);
    check_vertical_flex(curve, p2.x(), p2.y(), "P'");
    check_contact(curve, X - C(p2.x()), p2, bld.inf, "P'");
    check_contact(curve, Y + C(b3) * X, q2, bld.o, "Q'");
    bld.rec.overlays.push_back({"L_P'", X - C(p2.x())});
    bld.rec.overlays.push_back({"L_Q'", Y + C(b3) * X});
    bld.function(X - C(p2.x()));
    bld.function(Y + C(b3) * X, Y);
    for (std::array<std::string, 3> t : {std::array<std::string, 3>{"inf", "O", "P'"},
                                         {"inf", "O", "Q'"},
                                         {"inf", "P'", "Q'"},
                                         {"inf", "P", "Q'"},
                                         {"inf", "P'", "Q"}})
      triples.push_back(t);
    bld.rec.facts["symmetric_points"] = "c = 0 adds P' and Q' with flex tangents x = -a^3 and y = -b^3 x";
  }
  bld.elements(triples);

  bld.rec.facts["disc_closed_form"] = cf.value().str();
  bld.rec.facts["disc_factors"] = cf.str();
  // Image under (x, y) -> (x, a^6 y).
  Rat s = a.pow(-6);
  bld.rec.facts["integral_model"] =
      (C(s.pow(3)) * Y.pow(3) + C(s * s) * (C(Rat(3) * a.pow(4) - a.pow(3) * c) + C(c) * X) * Y.pow(2) +
       C(s) * (C(a.pow(6) * b.pow(6)) + C(a.pow(3) * b3 * c) * X + C(Rat(3) * a * a - b.pow(6) - b3 * c) * X.pow(2)) * Y +
       X.pow(4))
          .str();
  return bld.rec;
}

PlaneCurve conic_curve(const Conic& d) { return PlaneCurve(d.poly() * Y + X.pow(4)); }

/// Common part of the conic families: R = (0, -d2) with I_R(C, D) = 8.
Builder conic_builder(std::string family, const Conic& d, const PlaneCurve& curve) {
  Builder bld(std::move(family), curve, "((y + d1 x + d2)^2 + d3 x + d4 x^2) y + x^4");
  CurvePoint r = CurvePoint::affine(Rat(0), -d.d2);
  bld.point("R", r);
  int mult = intersection_multiplicity(curve, d.curve(), r);
  if (mult != 8) throw VerificationError("I_R(C, D) = " + std::to_string(mult) + ", expected 8");
  IntersectionCycle cyc = intersect(curve, d.curve());
  if (!cyc.complete() || cyc.points.size() != 1) throw VerificationError("the conic meets C outside R");
  bld.rec.facts["I_R(C,D)"] = std::to_string(mult);
  bld.rec.overlays.push_back({"D", d.poly()});
  bld.function(d.poly());
  return bld;
}

void set_conic_params(CurveRecord& rec, const Conic& d) {
  rec.facts["d1"] = d.d1.str();
  rec.facts["d2"] = d.d2.str();
  rec.facts["d3"] = d.d3.str();
  rec.facts["d4"] = d.d4.str();
}

void add_vertical_flex(Builder& bld, const Rat& a, const std::string& name) {
  CurvePoint p = CurvePoint::affine(a.pow(3), -a.pow(4));
  bld.point(name, p);
  check_vertical_flex(bld.rec.curve, p.x(), p.y(), name);
  check_contact(bld.rec.curve, X - C(p.x()), p, bld.inf, name);
  bld.rec.overlays.push_back({"L_" + name, X - C(p.x())});
  bld.function(X - C(p.x()));
}

}  // namespace

CurveRecord gen_quartic_lines(const Rat& a, const Rat& b, const Rat& c) {
  CurveRecord rec = lines_record("quartic-lines", a, b, c, "(a, b, c) = (" + a.str() + ", " + b.str() + ", " + c.str() + ")");
  rec.params = {{"a", {a}}, {"b", {b}}, {"c", {c}}};
  rec.integrality_flags = integrality_flags(rec);
  return rec;
}

PlaneCurve ct_equation(const Rat& t) {
  return PlaneCurve(Y.pow(3) + C(t) * X * Y.pow(2) + C(t / Rat(8) + Rat(3, 16)) * Y.pow(2) -
                    C(t + Rat(1, 4)) * X.pow(2) * Y - C(t / Rat(8)) * X * Y + C(Rat(1, 64)) * Y + X.pow(4));
}

CurveRecord gen_quartic_ct(const Rat& t) {
  for (const Rat& e : {Rat(1), Rat(-3), Rat(-5, 2), Rat(-7, 2)})
    if (t == e) throw PreconditionError("singular member: t = " + t.str());
  PlaneCurve printed = ct_equation(t);
  if (!(printed == lines_curve(Rat(-1, 2), Rat(1), t)))
    throw InternalError("C_t differs from the specialization (a, b, c) = (-1/2, 1, t)");
  CurveRecord rec = lines_record("quartic-ct", Rat(-1, 2), Rat(1), t, "t = " + t.str());
  if (!(rec.point("P") == CurvePoint::affine(Rat(-1, 8), Rat(-1, 16))) ||
      !(rec.point("Q") == CurvePoint::affine(Rat(-1, 4), Rat(-1, 4))))
    throw InternalError("marked points of C_t moved");
  rec.params = {{"t", {t}}};
  ClosedFormDisc d = ct_disc(t);
  rec.facts["disc"] = d.value().str();
  rec.facts["disc_factors"] = d.str();
  rec.facts["I3"] = ct_i3(t).str();
  rec.integrality_flags = integrality_flags(rec);
  return rec;
}

CurveRecord gen_quartic_conic(const Rat& d1, const Rat& d2, const Rat& d3, const Rat& d4) {
  if (d2.is_zero()) throw PreconditionError("singular: d2 = 0");
  if (d3.is_zero()) throw PreconditionError("singular: d3 = 0");
  Conic d{d1, d2, d3, d4};
  PlaneCurve curve = conic_curve(d);
  SmoothnessReport rep = smoothness_check(curve);
  if (!rep.smooth) throw PreconditionError("discriminant vanishes: " + rep.witness);
  Builder bld = conic_builder("quartic-conic", d, curve);
  bld.elements({{"inf", "O", "R"}});
  bld.rec.params = {{"d1", {d1}}, {"d2", {d2}}, {"d3", {d3}}, {"d4", {d4}}};
  return bld.rec;
}

CurveRecord gen_quartic_conic_1tangent(const Rat& a, const Rat& d1, const Rat& d4) {
  Conic d{d1, Rat(3, 2) * a.pow(4) - a.pow(3) * d1, Rat(3, 4) * a.pow(5) - d4 * a.pow(3), d4};
  PlaneCurve curve = conic_curve(d);
  check_smooth(curve, conic_1t_factors(a, d1, d4), false,
               "(a, d1, d4) = (" + a.str() + ", " + d1.str() + ", " + d4.str() + ")");
  Builder bld = conic_builder("quartic-conic-1t", d, curve);
  add_vertical_flex(bld, a, "P");
  bld.elements({{"inf", "O", "P"}, {"inf", "O", "R"}, {"inf", "P", "R"}});
  bld.rec.params = {{"a", {a}}, {"d1", {d1}}, {"d4", {d4}}};
  set_conic_params(bld.rec, d);
  return bld.rec;
}

CurveRecord gen_quartic_conic_2tangent(const Rat& a1, const Rat& a2) {
  if (a1.is_zero() && a2.is_zero()) throw PreconditionError("discriminant vanishes: factor a1 = 0");
  ClosedFormDisc cf = conic_2t_disc(a1, a2);
  Rat s = a1 * a1 + a1 * a2 + a2 * a2;
  Rat q = Rat(3, 4) / s;
  Conic d{Rat(2) * q * (a1.pow(3) + a1 * a1 * a2 + a1 * a2 * a2 + a2.pow(3)), Rat(-2) * q * a1.pow(3) * a2.pow(3),
          -q * a1.pow(3) * a2.pow(3) * (a1 + a2),
          q * (a1.pow(4) + a1.pow(3) * a2 + a1 * a1 * a2 * a2 + a1 * a2.pow(3) + a2.pow(4))};
  PlaneCurve curve = conic_curve(d);
  check_smooth(curve, cf, true, "(a1, a2) = (" + a1.str() + ", " + a2.str() + ")");
  Builder bld = conic_builder("quartic-conic-2t", d, curve);
  add_vertical_flex(bld, a1, "P1");
  add_vertical_flex(bld, a2, "P2");
  bld.elements({{"inf", "O", "P1"}, {"inf", "O", "R"}, {"inf", "R", "P1"}, {"inf", "O", "P2"}, {"inf", "R", "P2"}});
  bld.rec.params = {{"a1", {a1}}, {"a2", {a2}}};
  set_conic_params(bld.rec, d);
  bld.rec.facts["disc_closed_form"] = cf.value().str();
  return bld.rec;
}

CurveRecord gen_quartic_conic_pq(const Rat& a, const Rat& b) {
  Rat b3 = b.pow(3);
  Conic d{b3 + Rat(3, 2) * a, -a.pow(3) * b3, Rat(2) * a.pow(3) * (Rat(2) * b3 + Rat(3) * a) * b3,
          Rat(-4) * b.pow(6) - Rat(6) * a * b3 + Rat(3, 4) * a * a};
  ClosedFormDisc cf = conic_pq_disc(a, b);
  PlaneCurve curve = conic_curve(d);
  check_smooth(curve, cf, true, "(a, b) = (" + a.str() + ", " + b.str() + ")");
  Builder bld = conic_builder("quartic-conic-pq", d, curve);
  add_vertical_flex(bld, a, "P");
  CurvePoint q = CurvePoint::affine(-a * a * b3, -a * a * b.pow(6));
  bld.point("Q", q);
  check_contact(curve, Y - C(b3) * X, q, bld.o, "Q");
  bld.rec.overlays.push_back({"L_Q", Y - C(b3) * X});
  bld.function(Y - C(b3) * X, Y);
  bld.elements({{"inf", "O", "P"}, {"inf", "O", "R"}, {"inf", "R", "P"}, {"inf", "O", "Q"}, {"inf", "R", "Q"},
                {"inf", "P", "Q"}});
  bld.rec.params = {{"a", {a}}, {"b", {b}}};
  set_conic_params(bld.rec, d);
  bld.rec.facts["disc_closed_form"] = cf.value().str();
  return bld.rec;
}

}  // namespace k2forge
