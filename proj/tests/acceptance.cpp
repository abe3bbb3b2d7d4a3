// Acceptance suite: one line per criterion with its measured runtime and
// budget. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <unistd.h>

#include "k2forge/algebra/resultant.hpp"
#include "k2forge/catalog/cli.hpp"
#include "k2forge/catalog/plot.hpp"
#include "k2forge/curves/intersection.hpp"
#include "k2forge/curves/smoothness.hpp"
#include "k2forge/error.hpp"
#include "k2forge/families/families.hpp"
#include "test_support.hpp"

using namespace k2forge;
using k2test::lines_quartic;
using k2test::rand_int;
using k2test::rand_nonzero;
using k2test::rand_rat;

namespace {

BiPoly X() { return BiPoly::x(); }
BiPoly Y() { return BiPoly::y(); }
BiPoly C(const Rat& r) { return BiPoly(r); }

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail.clear();
    pass = false;
    detail += (detail.empty() ? "" : "; ") + why;
  }
};

struct Criterion {
  int id;
  std::string name;
  double budget_s;
  std::function<Outcome()> run;
};

std::string secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

// ---------------------------------------------------------------------------
// 1. genus 2 hyperelliptic family with three vertical tangents

std::vector<Rat> hyp_g2_closed_form(const Rat& a1, const Rat& a2, const Rat& a3) {
  Rat k = Rat(2) / ((a1 + a2) * (a1 + a3) * (a2 + a3));
  auto m = [&](int i, int j, int l) { return a1.pow(i) * a2.pow(j) * a3.pow(l); };
  Rat b0 = -k * (a1 * a2 + a1 * a3 + a2 * a3) * m(2, 2, 2);
  Rat b1 = k * (m(3, 3, 0) + m(3, 2, 1) + m(3, 1, 2) + m(3, 0, 3) + m(2, 3, 1) + m(2, 2, 2) + m(2, 1, 3) + m(1, 3, 2) +
                m(1, 2, 3) + m(0, 3, 3));
  Rat b2 = -k * (m(3, 1, 0) + m(3, 0, 1) + m(2, 2, 0) + Rat(2) * m(2, 1, 1) + m(2, 0, 2) + m(1, 3, 0) +
                 Rat(2) * m(1, 2, 1) + Rat(2) * m(1, 1, 2) + m(1, 0, 3) + m(0, 3, 1) + m(0, 2, 2) + m(0, 1, 3));
  return {b0, b1, b2};
}

Outcome criterion_hyp_closed_form() {
  Outcome o;
  CurveRecord rec = gen_hyp_odd(2, {Rat(1), Rat(1, 2), Rat(1, 4)});
  auto b = hyp_g2_closed_form(Rat(1), Rat(1, 2), Rat(1, 4));
  int exact = 0;
  for (int i = 0; i < 3; ++i)
    if (rec.curve.poly().coeff(i, 1) == b[i]) ++exact;
  if (exact != 3) o.fail(std::to_string(exact) + "/3 coefficients exact");
  if (!(b[0] == Rat(-7, 360))) o.fail("b0 = " + b[0].str());
  if (!(rec.curve.poly().coeff(5, 0) == Rat(1)) || !(rec.curve.poly().coeff(0, 2) == Rat(1)))
    o.fail("model is not y^2 + f1 y + x^5");
  int passing = 0;
  for (const auto& e : rec.elements)
    if (verify_k2t(rec.curve, e.element).pass) ++passing;
  if (passing != 3 || rec.elements.size() != 3) o.fail(std::to_string(passing) + " elements PASS");
  if (o.pass) o.detail = "b0,b1,b2 = " + b[0].str() + ", " + b[1].str() + ", " + b[2].str() + "; 3 elements PASS";
  return o;
}

// ---------------------------------------------------------------------------
// 2. tangency identities

/// Checks F(alpha, y) = (y - beta)^k for every vertical overlay through a
/// marked point; returns the number of identities checked.
int vertical_identities(const CurveRecord& rec, int k, Outcome& o) {
  int n = 0;
  for (const auto& ov : rec.overlays) {
    const BiPoly& l = ov.poly;
    if (!(l.coeff(1, 0) == Rat(1)) || l.terms().size() > 2 || !l.coeff(0, 1).is_zero()) continue;
    Rat alpha = -l.coeff(0, 0);
    for (const auto& p : rec.points) {
      if (!p.point.is_affine() || !(p.point.x() == alpha) || ov.label != "L_" + p.name) continue;
      std::vector<Rat> coeffs;
      for (int j = 0; j <= rec.curve.degree(); ++j) {
        Rat c = 0;
        for (const auto& [m, v] : rec.curve.poly().terms())
          if (m.j == j) c += v * alpha.pow(m.i);
        coeffs.push_back(c);
      }
      UniPoly got(coeffs), want = UniPoly::linear_root(p.point.y()).pow(k);
      if (!(got == want)) o.fail(rec.family_id + " " + p.name + ": F(alpha, y) != (y - beta)^" + std::to_string(k));
      ++n;
    }
  }
  return n;
}

Outcome criterion_tangency() {
  Outcome o;
  int hyp_tuples = 0, quartic_tuples = 0, identities = 0, mixed = 0;
  while (hyp_tuples < 100) {
    bool odd = hyp_tuples % 2 == 0;
    int g = static_cast<int>(rand_int(1, 3));
    std::vector<Rat> a;
    for (int i = 0; i <= g; ++i) a.push_back(rand_nonzero(3, 4));
    try {
      CurveRecord rec;
      if (odd) {
        rec = gen_hyp_odd(g, a);
      } else {
        std::vector<int> eps;
        for (int i = 0; i <= g; ++i) eps.push_back(rand_int(0, 1) ? 1 : -1);
        if (std::all_of(eps.begin(), eps.end(), [](int e) { return e == -1; })) eps[0] = 1;
        rec = gen_hyp_even(g, a, EpsilonVector(eps));
        if (std::set<int>(eps.begin(), eps.end()).size() == 2) ++mixed;
      }
      int n = vertical_identities(rec, 2, o);
      if (n != g + 1) o.fail(rec.family_id + ": " + std::to_string(n) + " identities for g = " + std::to_string(g));
      identities += n;
      ++hyp_tuples;
    } catch (const PreconditionError&) {
    }
  }
  while (quartic_tuples < 40) {
    try {
      CurveRecord rec;
      switch (quartic_tuples % 5) {
        case 0: rec = gen_quartic_lines(rand_nonzero(3, 3), rand_nonzero(3, 3), rand_rat(3, 3)); break;
        case 1: rec = gen_quartic_ct(rand_rat(4, 4)); break;
        case 2: rec = gen_quartic_conic_1tangent(rand_nonzero(3, 3), rand_rat(3, 3), rand_rat(3, 3)); break;
        case 3: rec = gen_quartic_conic_2tangent(rand_nonzero(3, 3), rand_nonzero(3, 3)); break;
        default: rec = gen_quartic_conic_pq(rand_nonzero(3, 3), rand_nonzero(3, 3)); break;
      }
      int n = vertical_identities(rec, 3, o);
      if (n == 0) o.fail(rec.family_id + ": no vertical flex checked");
      identities += n;
      ++quartic_tuples;
    } catch (const PreconditionError&) {
    }
  }
  if (mixed == 0) o.fail("no mixed-sign even tuple drawn");
  if (o.pass)
    o.detail = std::to_string(hyp_tuples) + " hyperelliptic tuples (" + std::to_string(mixed) + " mixed-sign), " +
               std::to_string(quartic_tuples) + " quartic tuples, " + std::to_string(identities) +
               " exact identities";
  return o;
}

// ---------------------------------------------------------------------------
// 3. C_t family

Rat printed_ct_disc(const Rat& t) {
  return Rat(mpz_class(1), mpz_class(1) << 52) * (t - 1).pow(2) * (t + 3).pow(6) * (Rat(2) * t + 5) *
         (Rat(2) * t + 7) * (Rat(32) * t.pow(3) + Rat(96) * t * t - Rat(12) * t + 5);
}

Outcome criterion_ct() {
  Outcome o;
  std::vector<Rat> ts;
  for (int t = -5; t <= 5; ++t) ts.push_back(Rat(t));
  ts.push_back(Rat(-5, 2));
  ts.push_back(Rat(-7, 2));
  std::set<Rat> printed_zero, singular;
  for (const Rat& t : ts) {
    BiPoly printed = Y().pow(3) + C(t) * X() * Y().pow(2) + C(t / 8 + Rat(3, 16)) * Y().pow(2) -
                     C(t + Rat(1, 4)) * X().pow(2) * Y() - C(t / 8) * X() * Y() + C(Rat(1, 64)) * Y() + X().pow(4);
    if (!(ct_equation(t).poly() == printed)) o.fail("stored equation differs at t = " + t.str());
    if (!smoothness_check(PlaneCurve(printed)).smooth) singular.insert(t);
    Rat d = printed_ct_disc(t);
    if (d.is_zero()) printed_zero.insert(t);
    if (!(ct_disc(t).value() == d)) o.fail("closed form differs at t = " + t.str());
    try {
      CurveRecord rec = gen_quartic_ct(t);
      if (rec.facts.at("disc") != d.str()) o.fail("stored disc differs at t = " + t.str());
      if (d.is_zero()) o.fail("record generated at singular t = " + t.str());
    } catch (const PreconditionError&) {
      if (!d.is_zero()) o.fail("generator rejects smooth t = " + t.str());
    }
  }
  std::set<Rat> expect{Rat(1), Rat(-3), Rat(-5, 2), Rat(-7, 2)};
  if (singular != expect) o.fail("singular set differs from {1, -3, -5/2, -7/2}");
  if (printed_zero != singular) o.fail("printed factorization and smoothness_check disagree");
  CurveRecord c0 = gen_quartic_ct(Rat(0));
  int passing = 0;
  for (const char* e : {"{inf,O,P}", "{inf,O,Q}", "{inf,P,Q}"})
    if (verify_k2t(c0.curve, c0.element(e).element).pass) ++passing;
  if (passing != 3) o.fail("t = 0: " + std::to_string(passing) + "/3 elements PASS");
  if (o.pass)
    o.detail = std::to_string(ts.size()) + " values of t; singular exactly at {1, -3, -5/2, -7/2}; t = 0 elements PASS";
  return o;
}

// ---------------------------------------------------------------------------
// 4. maximal contact of the conic

Outcome criterion_conic_contact() {
  Outcome o;
  int done = 0, tries = 0;
  while (done < 20 && tries < 400) {
    ++tries;
    Rat d1 = rand_rat(3, 3), d2 = rand_nonzero(3, 3), d3 = rand_nonzero(3, 3), d4 = rand_rat(3, 3);
    BiPoly conic = (Y() + C(d1) * X() + C(d2)).pow(2) + C(d3) * X() + C(d4) * X().pow(2);
    PlaneCurve c(conic * Y() + X().pow(4));
    if (!smoothness_check(c).smooth) continue;
    CurvePoint r = CurvePoint::affine(Rat(0), -d2);
    PlaneCurve d(conic);
    int m = intersection_multiplicity(c, d, r);
    if (m != 8) o.fail("I_R = " + std::to_string(m) + " at d = (" + d1.str() + "," + d2.str() + "," + d3.str() + "," +
                       d4.str() + ")");
    IntersectionCycle cyc = intersect(c, d);
    int total = 0;
    for (const auto& [p, k] : cyc.points) {
      if (p.is_affine() && !(p == r)) o.fail("extra affine intersection " + p.str());
      total += k;
    }
    if (total != 8 || !cyc.complete()) o.fail("Bezout total " + std::to_string(total));
    ++done;
  }
  if (done < 20) o.fail("only " + std::to_string(done) + " smooth tuples");
  if (o.pass) o.detail = "20 smooth members: I_R(C, D) = 8 and total over {R, inf} = 8";
  return o;
}

// ---------------------------------------------------------------------------
// 5. Nekovar elements

std::vector<int> h_pattern(const PlaneCurve& c, const BiPoly& h, const std::vector<CurvePoint>& order) {
  IntersectionCycle cyc = intersect(c, PlaneCurve(h));
  std::vector<int> out;
  for (const auto& q : order) {
    int m = 0;
    for (const auto& [p, k] : cyc.points)
      if (p == q) m = k;
    out.push_back(m);
  }
  return out;
}

void check_nekovar(const CurveRecord& rec, const BiPoly& h, const std::vector<int>& pattern, Outcome& o,
                   std::string& summary) {
  const auto& el = rec.element("nekovar");
  Certificate cert = verify_k2t(rec.curve, el.element);
  int infinite = 0;
  for (const auto& e : cert.entries) {
    if (!e.tame_value.is_one()) o.fail(rec.family_id + ": tame value " + e.tame_value.str() + " at " + e.point.str());
    if (!e.point.is_affine()) ++infinite;
  }
  CurveRef ctx = make_curve(rec.curve);
  if (infinite != static_cast<int>(ctx->places_at_infinity().size()))
    o.fail(rec.family_id + ": support misses a place at infinity");
  auto got = h_pattern(rec.curve, h, {rec.point("Q1"), rec.point("Q2")});
  if (got != pattern)
    o.fail(rec.family_id + ": H multiplicities (" + std::to_string(got[0]) + "," + std::to_string(got[1]) + ")");
  summary += rec.family_id + " (" + std::to_string(got[0]) + "," + std::to_string(got[1]) + ") " + cert.verdict() + "; ";
}

Outcome criterion_nekovar() {
  Outcome o;
  std::string summary;
  try {
    CurveRecord rec = gen_nekovar_2tor(Rat(3, 4));
    Rat r(3, 4);
    check_nekovar(rec, Y() + X() - C(Rat(1, 3) - r / 3), {1, 2}, o, summary);
  } catch (const Error& e) {
    o.fail(std::string("nekovar-2tor r = 3/4: ") + e.what());
  }
  try {
    Rat r(2);
    check_nekovar(gen_nekovar_3tor(r), Y() - X() + C(r), {1, 2}, o, summary);
  } catch (const Error& e) {
    o.fail(std::string("nekovar-3tor r = 2: ") + e.what());
  }
  try {
    Rat r(1, 2);
    check_nekovar(gen_nekovar_genus2(r), Y() - X() + C(r), {3, 2}, o, summary);
  } catch (const Error& e) {
    o.fail(std::string("nekovar-g2 r = 1/2: ") + e.what());
  }
  if (o.pass) o.detail = summary;
  else o.detail += " [" + summary + "]";
  return o;
}

// ---------------------------------------------------------------------------
// 6. symbol properties

struct Pool {
  CurveRecord rec;
  CurveRef ctx;
  std::vector<CurvePoint> points;
  std::vector<BiPoly> fns;
};

Pool make_pool(CurveRecord rec) {
  Pool p{std::move(rec), nullptr, {}, {}};
  p.ctx = make_curve(p.rec.curve);
  for (const auto& np : p.rec.points) p.points.push_back(np.point);
  std::vector<CurvePoint> aff;
  for (const auto& q : p.points)
    if (q.is_affine()) aff.push_back(q);
  auto keep = [&](const BiPoly& l) {
    for (const auto& f : p.fns)
      if (f == l) return;
    try {
      if (rational_support(FnElt(p.ctx, l))) p.fns.push_back(l);
    } catch (const Error&) {
    }
  };
  for (const auto& ov : p.rec.overlays) keep(ov.poly);
  for (size_t i = 0; i < aff.size(); ++i) {
    keep(X() - C(aff[i].x()));
    keep(tangent_line(p.rec.curve, aff[i]).poly());
    for (size_t j = i + 1; j < aff.size(); ++j) {
      Rat dx = aff[j].x() - aff[i].x(), dy = aff[j].y() - aff[i].y();
      keep(Line(dy, -dx, dx * aff[i].y() - dy * aff[i].x()).poly());
    }
  }
  return p;
}

FnElt random_fn(const Pool& p) {
  FnElt f(p.ctx, rand_nonzero(4, 4));
  int n = static_cast<int>(rand_int(1, 3));
  for (int k = 0; k < n; ++k) {
    int e = static_cast<int>(rand_int(-2, 2));
    f = f * FnElt(p.ctx, p.fns[static_cast<size_t>(rand_int(0, static_cast<long>(p.fns.size()) - 1))]).pow(e ? e : 1);
  }
  return f;
}

Outcome criterion_properties() {
  Outcome o;
  std::vector<Pool> pools;
  pools.push_back(make_pool(gen_quartic_lines(Rat(1, 2), Rat(-1), Rat(0))));
  pools.push_back(make_pool(gen_quartic_ct(Rat(2))));
  pools.push_back(make_pool(gen_hyp_odd(2, {Rat(1), Rat(1, 2), Rat(1, 4)})));
  pools.push_back(make_pool(gen_quartic_conic_pq(Rat(1, 2), Rat(-1))));
  pools.push_back(make_pool(gen_nekovar_genus2(Rat(1, 2))));
  for (const auto& p : pools)
    if (p.fns.size() < 3) o.fail(p.rec.family_id + ": pool of " + std::to_string(p.fns.size()) + " functions");
  if (!o.pass) return o;

  int instances = 0, steinberg = 0, valuation = 0;
  for (int n = 0; n < 200; ++n) {
    const Pool& p = pools[n % pools.size()];
    FnElt f1 = random_fn(p), f2 = random_fn(p), h = random_fn(p);
    const CurvePoint& pt = p.points[static_cast<size_t>(rand_int(0, static_cast<long>(p.points.size()) - 1))];
    Rat a = tame_symbol(p.rec.curve, {f1, h, 1}, pt), b = tame_symbol(p.rec.curve, {h, f1, 1}, pt);
    if (!(a * b == Rat(1))) o.fail("antisymmetry at " + pt.str());
    if (!(tame_symbol(p.rec.curve, {f1 * f2, h, 1}, pt) == a * tame_symbol(p.rec.curve, {f2, h, 1}, pt)))
      o.fail("bilinearity at " + pt.str());
    K2Element e;
    e.terms.push_back({f1, h, 1});
    for (const FnElt* g : {&f1, &h}) {
      auto s = rational_support(*g);
      if (!s) o.fail("irrational support in the pool");
      else e.declared_support.insert(e.declared_support.end(), s->begin(), s->end());
    }
    if (!(verify_k2t(p.rec.curve, e).product == Rat(1))) o.fail("product formula");
    FnElt g = f1.one_minus();
    if (!f1.is_constant() && !g.is_zero()) {
      for (const auto& q : p.points) {
        if (!tame_symbol(p.rec.curve, {f1, g, 1}, q).is_one()) o.fail("Steinberg at " + q.str());
        ++steinberg;
      }
    }
    ++instances;
  }
  for (int n = 0; n < 100; ++n) {
    const Pool& p = pools[n % pools.size()];
    FnElt f = random_fn(p), g = random_fn(p);
    const CurvePoint& pt = p.points[static_cast<size_t>(rand_int(0, static_cast<long>(p.points.size()) - 1))];
    int of = ord_at(p.rec.curve, f, pt), og = ord_at(p.rec.curve, g, pt);
    if (ord_at(p.rec.curve, f * g, pt) != of + og) o.fail("ord(fg) at " + pt.str());
    if (ord_at(p.rec.curve, f.inverse(), pt) != -of) o.fail("ord(1/f) at " + pt.str());
    FnElt s = f + g;
    if (!s.is_zero() && ord_at(p.rec.curve, s, pt) < std::min(of, og)) o.fail("ord(f+g) at " + pt.str());
    if (ord_at(p.rec.curve, FnElt(p.ctx, rand_nonzero(4, 4)), pt) != 0) o.fail("ord of a constant");
    ++valuation;
  }
  if (o.pass)
    o.detail = std::to_string(instances) + " symbol instances on 5 family curves (" + std::to_string(steinberg) +
               " Steinberg evaluations), " + std::to_string(valuation) + " valuation pairs";
  return o;
}

// ---------------------------------------------------------------------------
// 7. intersection multiplicity against a branch expansion

/// Truncated power series in t.
using Series = std::vector<Rat>;

Series smul(const Series& a, const Series& b, size_t n) {
  Series c(n, Rat(0));
  for (size_t i = 0; i < a.size() && i < n; ++i)
    if (!a[i].is_zero())
      for (size_t j = 0; j < b.size() && i + j < n; ++j) c[i + j] += a[i] * b[j];
  return c;
}

Series seval(const BiPoly& f, const Series& x, const Series& y, size_t n) {
  Series acc(n, Rat(0));
  for (const auto& [m, c] : f.terms()) {
    Series t(n, Rat(0));
    t[0] = c;
    for (int i = 0; i < m.i; ++i) t = smul(t, x, n);
    for (int j = 0; j < m.j; ++j) t = smul(t, y, n);
    for (size_t k = 0; k < n; ++k) acc[k] += t[k];
  }
  return acc;
}

/// Valuation of g along the branch of f through the smooth point p, by
/// solving f(x(t), y(t)) = 0 coefficient by coefficient. -1 when g vanishes
/// to the working order.
int branch_valuation(const BiPoly& f, const BiPoly& g, const CurvePoint& p, size_t n) {
  Rat fx = f.diff(Var::x).eval(p.x(), p.y()), fy = f.diff(Var::y).eval(p.x(), p.y());
  bool y_of_x = !fy.is_zero();
  Series x(n, Rat(0)), y(n, Rat(0));
  x[0] = p.x();
  y[0] = p.y();
  Series& param = y_of_x ? x : y;
  Series& dep = y_of_x ? y : x;
  Rat slope = y_of_x ? fy : fx;
  param[1] = Rat(1);
  for (size_t k = 1; k < n; ++k) {
    Series r = seval(f, x, y, k + 1);
    dep[k] = -r[k] / slope;
  }
  Series gv = seval(g, x, y, n);
  for (size_t k = 0; k < n; ++k)
    if (!gv[k].is_zero()) return static_cast<int>(k);
  return -1;
}

Outcome criterion_oracle() {
  Outcome o;
  struct Case {
    PlaneCurve c;
    BiPoly g;
    CurvePoint p;
  };
  std::vector<Case> cases;
  std::vector<CurveRecord> recs = {gen_quartic_lines(Rat(1, 2), Rat(-1), Rat(0)), gen_quartic_ct(Rat(3)),
                                   gen_hyp_odd(2, {Rat(1), Rat(1, 2), Rat(1, 4)}),
                                   gen_quartic_conic(Rat(1), Rat(2), Rat(1), Rat(1)),
                                   gen_quartic_conic_pq(Rat(1, 2), Rat(-1)), gen_nekovar_genus2(Rat(1, 2))};
  // auxiliary curves of the records: tangents, conics, G and H
  for (const auto& rec : recs)
    for (const auto& ov : rec.overlays)
      for (const auto& np : rec.points)
        if (np.point.is_affine() && ov.poly.eval(np.point.x(), np.point.y()).is_zero())
          cases.push_back({rec.curve, ov.poly, np.point});
  // random curves through the marked points
  while (cases.size() < 50) {
    const auto& rec = recs[static_cast<size_t>(rand_int(0, static_cast<long>(recs.size()) - 1))];
    const auto& np = rec.points[static_cast<size_t>(rand_int(0, static_cast<long>(rec.points.size()) - 1))];
    if (!np.point.is_affine()) continue;
    BiPoly g = k2test::rand_bi(static_cast<int>(rand_int(1, 3)));
    g = g - C(g.eval(np.point.x(), np.point.y()));
    if (g.is_constant()) continue;
    cases.push_back({rec.curve, g, np.point});
  }
  int agree = 0, max_m = 0;
  for (const auto& cs : cases) {
    int m;
    try {
      m = intersection_multiplicity(cs.c, PlaneCurve(cs.g), cs.p);
    } catch (const PreconditionError&) {
      m = -1;  // common component
    }
    int v = branch_valuation(cs.c.poly(), cs.g, cs.p, 24);
    if (m == v) {
      ++agree;
      max_m = std::max(max_m, m);
    } else {
      o.fail("at " + cs.p.str() + " with g = " + cs.g.str() + ": " + std::to_string(m) + " vs " + std::to_string(v));
    }
  }
  if (o.pass)
    o.detail = std::to_string(agree) + "/" + std::to_string(cases.size()) + " instances agree (max multiplicity " +
               std::to_string(max_m) + ")";
  return o;
}

// ---------------------------------------------------------------------------
// 8. closed-form discriminants

PlaneCurve conic_quartic(const Rat& d1, const Rat& d2, const Rat& d3, const Rat& d4) {
  return PlaneCurve(((Y() + C(d1) * X() + C(d2)).pow(2) + C(d3) * X() + C(d4) * X().pow(2)) * Y() + X().pow(4));
}

PlaneCurve two_tangent_quartic(const Rat& a1, const Rat& a2) {
  Rat d = a1 * a1 + a1 * a2 + a2 * a2;
  Rat q = Rat(3) / (Rat(4) * d);
  Rat d1 = Rat(2) * q * (a1.pow(3) + a1 * a1 * a2 + a1 * a2 * a2 + a2.pow(3));
  Rat d2 = Rat(-2) * q * a1.pow(3) * a2.pow(3);
  Rat d3 = -q * a1.pow(3) * a2.pow(3) * (a1 + a2);
  Rat d4 = q * (a1.pow(4) + a1.pow(3) * a2 + a1 * a1 * a2 * a2 + a1 * a2.pow(3) + a2.pow(4));
  return conic_quartic(d1, d2, d3, d4);
}

PlaneCurve pq_quartic(const Rat& a, const Rat& b) {
  Rat b3 = b.pow(3);
  return conic_quartic(b3 + Rat(3, 2) * a, -a.pow(3) * b3, Rat(2) * a.pow(3) * (Rat(2) * b3 + Rat(3) * a) * b3,
                       Rat(-4) * b3 * b3 - Rat(6) * a * b3 + Rat(3, 4) * a * a);
}

Outcome criterion_closed_forms() {
  Outcome o;
  struct Tuple {
    std::string family;
    std::vector<Rat> v;
  };
  std::vector<Tuple> tuples;
  // generic members
  for (int i = 0; i < 5; ++i) {
    tuples.push_back({"lines", {rand_nonzero(3, 3), rand_nonzero(3, 3), rand_rat(3, 3)}});
    Rat a1 = rand_nonzero(3, 3), a2 = rand_nonzero(3, 3);
    tuples.push_back({"2t", {a1, a2}});
    tuples.push_back({"pq", {rand_nonzero(3, 3), rand_nonzero(3, 3)}});
  }
  // members on linear factors of the closed forms
  {
    Rat a = rand_nonzero(3, 3), b = rand_nonzero(3, 3), b3 = b.pow(3);
    tuples.push_back({"lines", {a, b, Rat(3) * a - b3}});
    tuples.push_back({"lines", {a, b, Rat(3) * a - Rat(2) * b3}});
    tuples.push_back({"lines", {a, b, Rat(2) * a - Rat(2) * b3}});
    tuples.push_back({"lines", {a, b, Rat(-6) * a - Rat(2) * b3}});
    tuples.push_back({"lines", {-b3, b, rand_rat(3, 3)}});
    Rat a1 = rand_nonzero(3, 3);
    tuples.push_back({"2t", {a1, a1}});
    tuples.push_back({"2t", {a1, -a1}});
    tuples.push_back({"2t", {a1, Rat(2) * a1}});
    tuples.push_back({"pq", {Rat(-2, 3) * b3, b}});
    tuples.push_back({"pq", {Rat(2, 3), Rat(-1)}});
    tuples.push_back({"lines", {Rat(0), b, rand_rat(3, 3)}});
    tuples.push_back({"lines", {a, b, Rat(0)}});
    tuples.push_back({"2t", {Rat(0), a1}});
    tuples.push_back({"pq", {Rat(0), b}});
    tuples.push_back({"pq", {a, Rat(0)}});
  }
  int agree = 0, zero = 0;
  for (const auto& t : tuples) {
    ClosedFormDisc d;
    PlaneCurve c;
    if (t.family == "lines") {
      d = lines_disc_as_printed(t.v[0], t.v[1], t.v[2]);
      c = lines_quartic(t.v[0], t.v[1], t.v[2]);
    } else if (t.family == "2t") {
      if ((t.v[0] * t.v[0] + t.v[0] * t.v[1] + t.v[1] * t.v[1]).is_zero()) continue;
      d = conic_2t_disc(t.v[0], t.v[1]);
      c = two_tangent_quartic(t.v[0], t.v[1]);
    } else {
      d = conic_pq_disc(t.v[0], t.v[1]);
      c = pq_quartic(t.v[0], t.v[1]);
    }
    bool singular = !smoothness_check(c).smooth;
    if (d.vanishes()) ++zero;
    if (d.vanishes() == singular) {
      ++agree;
    } else {
      std::string vals;
      for (const auto& x : t.v) vals += (vals.empty() ? "" : ",") + x.str();
      o.fail(t.family + " (" + vals + "): closed form " + (d.vanishes() ? "zero" : "nonzero") + ", curve " +
             (singular ? "singular" : "smooth"));
    }
  }
  if (tuples.size() != 30) o.fail(std::to_string(tuples.size()) + " tuples");
  if (o.pass)
    o.detail = std::to_string(agree) + "/30 tuples agree (" + std::to_string(zero) + " on the vanishing locus)";
  return o;
}

// ---------------------------------------------------------------------------
// 9. CLI round trip and reference figures

int cli(std::vector<std::string> args, std::string* out_text = nullptr) {
  args.insert(args.begin(), "k2forge");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  if (out_text) *out_text = out.str() + err.str();
  return code;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Outcome criterion_cli() {
  Outcome o;
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / ("k2forge-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::vector<std::pair<std::string, std::vector<std::string>>> smoke = {
      {"hyp-odd", {"--genus", "2", "--a", "1,1/2,1/4"}},
      {"hyp-even", {"--genus", "2", "--a", "1,2,3", "--eps", "1,-1,-1"}},
      {"hyp-partial", {"--genus", "2", "--d", "6", "--a", "1,1/2", "--eps", "-1,-1", "--free", "1"}},
      {"quartic-lines", {"--a", "1/2", "--b", "-1", "--c", "0"}},
      {"quartic-ct", {"--t", "0"}},
      {"quartic-conic", {"--d1", "1", "--d2", "2", "--d3", "1", "--d4", "1"}},
      {"quartic-conic-1t", {"--a", "1", "--d1", "0", "--d4", "0"}},
      {"quartic-conic-2t", {"--a1", "1", "--a2", "2"}},
      {"quartic-conic-pq", {"--a", "1/2", "--b", "-1"}},
      {"nekovar-2tor", {"--r", "3/4"}},
      {"nekovar-3tor", {"--r", "2"}},
      {"nekovar-g2", {"--r", "1/2"}},
  };
  int round_trips = 0;
  for (const auto& [fam, params] : smoke) {
    std::string path = (dir / (fam + ".json")).string();
    std::vector<std::string> args = {"gen", fam};
    args.insert(args.end(), params.begin(), params.end());
    args.insert(args.end(), {"--out", path});
    std::string msg;
    int g = cli(args, &msg);
    if (g != 0) {
      while (!msg.empty() && msg.back() == '\n') msg.pop_back();
      o.fail(fam + ": gen exit " + std::to_string(g) + " (" + msg + ")");
      continue;
    }
    int v = cli({"verify", path});
    if (v != 0) o.fail(fam + ": verify exit " + std::to_string(v));
    else ++round_trips;
  }
  int figures = 0;
  for (const auto& f : reference_figures()) {
    std::string name = f.id;
    std::replace(name.begin(), name.end(), '/', '_');
    std::string a = (dir / (name + "-a.svg")).string(), b = (dir / (name + "-b.svg")).string();
    if (cli({"plot", "--figure", f.id, "--out", a}) != 0 || cli({"plot", "--figure", f.id, "--out", b}) != 0) {
      o.fail("plot " + f.id + " failed");
      continue;
    }
    std::string sa = slurp(a);
    if (sa != slurp(b)) o.fail("plot " + f.id + " is not deterministic");
    CurveRecord scene = plot_scene(f.family, f.params);
    for (const auto& p : scene.points)
      if (p.point.is_affine() && sa.find(">" + p.name + "</text>") == std::string::npos)
        o.fail("plot " + f.id + " lacks label " + p.name);
    if (sa.find("<path id=\"curve\"") == std::string::npos) o.fail("plot " + f.id + " lacks the curve");
    ++figures;
  }
  fs::remove_all(dir);
  std::string summary = std::to_string(round_trips) + "/" + std::to_string(smoke.size()) +
                        " gen -> verify round trips, " + std::to_string(figures) + "/5 reference figures";
  if (o.pass) o.detail = summary;
  else o.detail += " [" + summary + "]";
  return o;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "hyp-odd-genus2-closed-form", 1, criterion_hyp_closed_form},
      {2, "tangency-identities", 30, criterion_tangency},
      {3, "ct-family-discriminant", 10, criterion_ct},
      {4, "conic-maximal-contact", 10, criterion_conic_contact},
      {5, "nekovar-elements", 5, criterion_nekovar},
      {6, "symbol-properties", 60, criterion_properties},
      {7, "intersection-oracle", 60, criterion_oracle},
      {8, "closed-form-discriminants", 60, criterion_closed_forms},
      {9, "cli-round-trip-and-figures", 10, criterion_cli},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > c.budget_s) o.fail("runtime " + secs(s) + " over budget");
    if (!o.pass) ++failed;
    std::printf("[%s] %d %-28s %s / %s  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), secs(s).c_str(),
                secs(c.budget_s).c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
