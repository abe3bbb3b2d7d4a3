#include <algorithm>
#include <sstream>

#include "k2forge/algebra/resultant.hpp"
#include "k2forge/curves/intersection.hpp"
#include "k2forge/curves/smoothness.hpp"
#include "k2forge/error.hpp"
#include "k2forge/families/families.hpp"

namespace k2forge {

namespace {

const BiPoly X = BiPoly::x();
const BiPoly Y = BiPoly::y();

BiPoly C(const Rat& r) { return BiPoly(r); }

std::string multiplicities(const std::vector<std::pair<CurvePoint, int>>& pts) {
  std::ostringstream os;
  for (size_t i = 0; i < pts.size(); ++i) os << (i ? "," : "") << pts[i].second;
  return os.str();
}

/// Record for m {g/kappa, h} - sum (m/m_i) {kappa_i, g_i}, with Q1 and Q2
/// the expected points of H on C.
CurveRecord nekovar_record(std::string family, const PlaneCurve& c, const BiPoly& g, const BiPoly& h,
                           const std::vector<TorsionFunction>& tors, const Rat& kappa,
                           const std::vector<std::pair<CurvePoint, int>>& expected_h) {
  NekovarElement ne = nekovar_element(c, C(1), g, h, tors, kappa);
  auto got = ne.h_points, want = expected_h;
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  if (got != want) {
    std::ostringstream os;
    os << "H meets the curve in";
    for (const auto& [p, m] : ne.h_points) os << " " << p.str() << " (mult " << m << ")";
    throw VerificationError(os.str());
  }
  CurveRecord rec;
  rec.family_id = std::move(family);
  rec.curve = c;
  CurveRef ctx = tors.empty() ? make_curve(c) : tors.front().fn.context();
  auto places = ctx->places_at_infinity();
  for (size_t i = 0; i < places.size(); ++i)
    rec.points.push_back({places.size() == 1 ? "inf" : "inf" + std::to_string(i + 1), places[i]});
  for (size_t i = 0; i < ne.g_points.size(); ++i)
    rec.points.push_back({ne.g_points.size() == 1 ? "O" : "P" + std::to_string(i + 1), ne.g_points[i].first});
  for (size_t i = 0; i < expected_h.size(); ++i) rec.points.push_back({"Q" + std::to_string(i + 1), expected_h[i].first});
  rec.elements.push_back(certified(c, "nekovar", ne.element));
  rec.overlays.push_back({"G", g});
  rec.overlays.push_back({"H", h});
  rec.facts["m"] = std::to_string(ne.m);
  rec.facts["kappa"] = ne.kappa.str();
  rec.facts["squared"] = ne.squared ? "true" : "false";
  rec.facts["H_multiplicities"] = multiplicities(expected_h);
  rec.facts["G_multiplicities"] = multiplicities(ne.g_points);
  std::ostringstream ks;
  for (size_t i = 0; i < ne.kappas.size(); ++i) ks << (i ? "," : "") << ne.kappas[i].str();
  rec.facts["kappa_i"] = ks.str();
  rec.facts["places_at_infinity"] = std::to_string(places.size());
  return rec;
}

UniPoly p_of_r() { return UniPoly({Rat(-1, 3), Rat(2, 3), Rat(-4, 3)}); }
UniPoly q_of_r() { return UniPoly({Rat(2, 27), Rat(-2, 9), Rat(5, 9), Rat(16, 27)}); }

}  // namespace

std::pair<Rat, Rat> nekovar_2tor_coefficients(const Rat& r) { return {p_of_r().eval(r), q_of_r().eval(r)}; }

std::vector<Rat> nekovar_2tor_exclusions() {
  UniPoly p = p_of_r(), q = q_of_r();
  UniPoly disc = Rat(-4) * p.pow(3) - Rat(27) * q.pow(2);
  return rational_roots(disc);
}

CurveRecord gen_nekovar_2tor(const Rat& r) {
  if (r.is_zero()) throw PreconditionError("H degenerates: Q1 = Q2 for r = 0");
  auto excl = nekovar_2tor_exclusions();
  if (std::find(excl.begin(), excl.end(), r) != excl.end())
    throw PreconditionError("singular member: r = " + r.str());
  auto [p, q] = nekovar_2tor_coefficients(r);
  PlaneCurve c(Y.pow(2) - X.pow(3) - C(p) * X - C(q));
  UniPoly cubic({q, p, Rat(0), Rat(1)});
  auto roots = rational_roots(cubic);
  if (roots.size() != 3)
    throw RationalSupportError("rational support required: the 2-torsion points of C_r are not all rational (" +
                               std::to_string(roots.size()) + " rational x-roots of " + cubic.str() + ")");
  CurveRef ctx = make_curve(c);
  std::vector<TorsionFunction> tors;
  for (const auto& x0 : roots)
    tors.push_back({FnElt(ctx, X - C(x0)), CurvePoint::affine(x0, Rat(0)), ctx->places_at_infinity().front(), 2});
  BiPoly h = Y + X - C(Rat(1, 3) - r / Rat(3));
  std::vector<std::pair<CurvePoint, int>> expect = {
      {CurvePoint::affine(Rat(-4, 3) * r + Rat(1, 3), r), 1}, {CurvePoint::affine(Rat(2, 3) * r + Rat(1, 3), -r), 2}};
  CurveRecord rec = nekovar_record("nekovar-2tor", c, Y, h, tors, r, expect);
  rec.model = "y^2 = x^3 + p(r) x + q(r)";
  rec.params = {{"r", {r}}};
  std::ostringstream ex;
  for (size_t i = 0; i < excl.size(); ++i) ex << (i ? "," : "") << excl[i].str();
  rec.facts["excluded_r"] = ex.str();
  return rec;
}

CurveRecord nekovar_2tor_scene(const Rat& r) {
  if (r.is_zero()) throw PreconditionError("H degenerates: Q1 = Q2 for r = 0");
  auto [p, q] = nekovar_2tor_coefficients(r);
  CurveRecord rec;
  rec.family_id = "nekovar-2tor";
  rec.params = {{"r", {r}}};
  rec.curve = PlaneCurve(Y.pow(2) - X.pow(3) - C(p) * X - C(q));
  if (!smoothness_check(rec.curve).smooth) throw PreconditionError("singular member: r = " + r.str());
  rec.model = "y^2 = x^3 + p(r) x + q(r)";
  rec.points = {{"Q1", CurvePoint::affine(Rat(-4, 3) * r + Rat(1, 3), r)},
                {"Q2", CurvePoint::affine(Rat(2, 3) * r + Rat(1, 3), -r)}};
  for (const auto& x0 : rational_roots(UniPoly({q, p, Rat(0), Rat(1)})))
    rec.points.push_back({"T" + std::to_string(rec.points.size() - 1), CurvePoint::affine(x0, Rat(0))});
  rec.overlays = {{"G", Y}, {"H", Y + X - C(Rat(1, 3) - r / Rat(3))}};
  rec.facts["elements"] = "none: the 2-torsion points are not all rational";
  return rec;
}

CurveRecord gen_nekovar_3tor(const Rat& r) {
  for (const Rat& e : {Rat(0), Rat(-1), Rat(1, 8)})
    if (r == e) throw PreconditionError("excluded parameter: r = " + r.str());
  PlaneCurve c(Y.pow(2) + (C(r) - C(Rat(4) * r + Rat(1)) * X) * Y + X.pow(3));
  SmoothnessReport rep = smoothness_check(c);
  if (!rep.smooth) throw PreconditionError("singular member: r = " + r.str() + ", " + rep.witness);
  IntersectionCycle gc = intersect(c, PlaneCurve(Y));
  CurvePoint o = CurvePoint::affine(Rat(0), Rat(0));
  int affine = 0;
  for (const auto& [p, m] : gc.points)
    if (p.is_affine()) {
      ++affine;
      if (!(p == o) || m != 3) throw VerificationError("G: y = 0 meets the curve away from the origin");
    }
  if (affine != 1) throw VerificationError("G: y = 0 does not meet the curve at the origin");
  CurveRef ctx = make_curve(c);
  std::vector<TorsionFunction> tors = {{FnElt(ctx, Y), o, ctx->places_at_infinity().front(), 3}};
  std::vector<std::pair<CurvePoint, int>> expect = {{CurvePoint::affine(Rat(0), -r), 1},
                                                    {CurvePoint::affine(Rat(2) * r, r), 2}};
  CurveRecord rec = nekovar_record("nekovar-3tor", c, Y, Y - X + C(r), tors, r, expect);
  rec.model = "y^2 + f1(x) y + x^3";
  rec.params = {{"r", {r}}};
  rec.facts["f1"] = (C(r) - C(Rat(4) * r + Rat(1)) * X).str();
  return rec;
}

CurveRecord gen_nekovar_genus2(const Rat& r) {
  for (const Rat& e : {Rat(0), Rat(1, 3)})
    if (r == e) throw PreconditionError("excluded parameter: r = " + r.str());
  UniPoly f1({r, Rat(-1), Rat(0), Rat(-4) * r});
  PlaneCurve c(Y.pow(2) + BiPoly::from_uni(f1, Var::x) * Y + X.pow(5));
  UniPoly t = f1 * f1 - Rat(4) * UniPoly::monomial(Rat(1), 5);
  if (discriminant(t).is_zero() || !affine_smoothness_check(c).smooth)
    throw PreconditionError("singular member: r = " + r.str());
  CurveRef ctx = make_curve(c);
  auto places = ctx->places_at_infinity();
  if (places.size() != 2)
    throw InternalError("expected two places at infinity, found " + std::to_string(places.size()));
  CurvePoint o = CurvePoint::affine(Rat(0), Rat(0));
  int ord = local_data(FnElt(ctx, Y), o).ord;
  if (ord != 5) throw VerificationError("ord_O(y) = " + std::to_string(ord) + ", expected 5");
  std::vector<TorsionFunction> tors = {{FnElt(ctx, Y), o, places.front(), 5}};
  BiPoly h = C(r.inverse()) * (Y - X + C(r));
  std::vector<std::pair<CurvePoint, int>> expect = {{CurvePoint::affine(Rat(0), -r), 3},
                                                    {CurvePoint::affine(Rat(2) * r, r), 2}};
  CurveRecord rec = nekovar_record("nekovar-g2", c, Y, h, tors, r, expect);
  rec.model = "y^2 + f1(x) y + x^5";
  rec.params = {{"r", {r}}};
  rec.facts["f1"] = f1.str();
  rec.facts["ord_O(y)"] = std::to_string(ord);
  for (const auto& e : rec.elements.front().certificate.entries)
    if (!e.point.is_affine() && !e.tame_value.is_one())
      throw VerificationError("tame symbol at " + e.point.str() + " is " + e.tame_value.str());
  return rec;
}

}  // namespace k2forge
