#include <functional>
#include <string>

#include "doctest.h"
#include "k2forge/curves/intersection.hpp"
#include "k2forge/error.hpp"
#include "k2forge/k2/symbols.hpp"
#include "test_support.hpp"

using namespace k2forge;
using k2test::lines_quartic;
using k2test::rand_int;
using k2test::rand_nonzero;

namespace {

BiPoly X() { return BiPoly::x(); }
BiPoly Y() { return BiPoly::y(); }
BiPoly C(const Rat& r) { return BiPoly(r); }

const Rat kA(1, 2), kB(-1);

struct Quartic {
  PlaneCurve c = lines_quartic(kA, kB, Rat(0));
  CurveRef ctx = make_curve(c);
  CurvePoint O = CurvePoint::affine(0, 0);
  CurvePoint P = CurvePoint::affine(kA.pow(3), -kA.pow(4));
  CurvePoint Q = CurvePoint::affine(-kA * kA * kB.pow(3), -kA * kA * kB.pow(6));
  CurvePoint P2 = CurvePoint::affine(-kA.pow(3), -kA.pow(4));
  CurvePoint Q2 = CurvePoint::affine(kA * kA * kB.pow(3), -kA * kA * kB.pow(6));
  CurvePoint inf = CurvePoint::at_infinity(0, 1);
  FnElt fn(const BiPoly& p) const { return FnElt(ctx, p); }
  std::vector<CurvePoint> points() const { return {O, P, Q, P2, Q2}; }
};

bool throws_with(const std::function<void()>& f, const std::string& needle) {
  try {
    f();
  } catch (const Error& e) {
    return std::string(e.what()).find(needle) != std::string::npos;
  }
  return false;
}

/// Lines through pairs of the known points, and tangents there, whose
/// intersection with the curve is entirely rational.
std::vector<BiPoly> rational_pool(const Quartic& q) {
  std::vector<BiPoly> pool;
  auto pts = q.points();
  auto keep = [&](const BiPoly& l) {
    for (const auto& p : pool)
      if (p == l) return;
    if (rational_support(q.fn(l))) pool.push_back(l);
  };
  for (size_t i = 0; i < pts.size(); ++i) {
    keep(tangent_line(q.c, pts[i]).poly());
    keep(X() - C(pts[i].x()));
    for (size_t j = i + 1; j < pts.size(); ++j) {
      Rat dx = pts[j].x() - pts[i].x(), dy = pts[j].y() - pts[i].y();
      keep(Line(dy, -dx, dx * pts[i].y() - dy * pts[i].x()).poly());
    }
  }
  return pool;
}

FnElt random_function(const Quartic& q, const std::vector<BiPoly>& pool) {
  FnElt f(q.ctx, rand_nonzero(4, 4));
  int n = static_cast<int>(rand_int(1, 3));
  for (int k = 0; k < n; ++k) {
    int e = static_cast<int>(rand_int(-2, 2));
    f = f * FnElt(q.ctx, pool[static_cast<size_t>(rand_int(0, static_cast<long>(pool.size()) - 1))]).pow(e == 0 ? 1 : e);
  }
  return f;
}

std::vector<CurvePoint> support_of(const std::vector<FnElt>& fs) {
  std::vector<CurvePoint> out;
  for (const auto& f : fs) {
    auto s = rational_support(f);
    REQUIRE(s);
    out.insert(out.end(), s->begin(), s->end());
  }
  return out;
}

}  // namespace

TEST_CASE("ord_at examples") {
  Quartic q;
  CHECK(ord_at(q.c, q.fn(Y()), q.O) == 4);
  CHECK(ord_at(q.c, q.fn(Y()), q.inf) == -4);
  CHECK(ord_at(q.c, FnElt(q.ctx, Rat(7, 3)), q.P) == 0);
  CHECK(ord_at(q.c, FnElt(q.ctx, Rat(7, 3)), q.inf) == 0);
  CHECK(throws_with([&] { ord_at(q.c, q.fn(q.c.poly()), q.O); }, "zero function"));
  CHECK(throws_with([&] { ord_at(q.c, q.fn(q.c.poly() * (X() + C(1))), q.inf); }, "zero function"));
}

TEST_CASE("divisor_of examples") {
  Quartic q;
  Divisor d = divisor_of(q.c, q.fn(X() - C(kA.pow(3))), {q.P, q.inf});
  CHECK(d[q.P] == 3);
  CHECK(d[q.inf] == -3);
  CHECK(d.entries.size() == 2);
  FnElt g = FnElt::quotient(q.ctx, Y() - C(kB.pow(3)) * X(), Y());
  Divisor e = divisor_of(q.c, g, {q.Q, q.O});
  CHECK(e[q.Q] == 3);
  CHECK(e[q.O] == -3);
  CHECK(e.entries.size() == 2);
  CHECK(divisor_of(q.c, FnElt(q.ctx, Rat(1)), {q.O, q.P, q.inf}).entries.empty());
  CHECK(throws_with([&] { divisor_of(q.c, q.fn(X() - C(kA.pow(3))), {q.P}); }, "support incomplete"));
}

TEST_CASE("tame symbol examples") {
  Quartic q;
  Rat t = tame_symbol(q.c, {q.fn(Y()), q.fn(X()), 1}, q.O);
  CHECK(t == Rat(-64));
  // y / x^4 = -1 / (y^2 + f2 y + f1) on the curve.
  BiPoly rest = (q.c.poly() - X().pow(4)).divide_by_y_power(1);
  FnElt oracle = FnElt::quotient(q.ctx, C(-1), rest);
  CHECK(q.fn(Y()).equals(oracle * q.fn(X()).pow(4)));
  CHECK(t == oracle.eval(Rat(0), Rat(0)));
  // Units on both sides.
  CHECK(tame_symbol(q.c, {q.fn(X() + C(3)), q.fn(Y() - C(5)), 1}, q.P) == Rat(1));
  CHECK(tame_symbol(q.c, {q.fn(Y()), q.fn(X()), 3}, q.O) == Rat(-64).pow(3));
}

TEST_CASE("corrupted element fails at P") {
  Quartic q;
  K2Element e;
  e.terms.push_back({q.fn(X() - C(kA.pow(3))), q.fn(Y()), 1});
  e.declared_support = {q.inf, q.O, q.P};
  Certificate cert = verify_k2t(q.c, e);
  CHECK(!cert.pass);
  CHECK(cert.product == Rat(1));
  REQUIRE(cert.offending_point());
  // T_P = 1 / y(P)^3 since x - a^3 vanishes to order 3 at P and y is a unit.
  for (const auto& en : cert.entries)
    if (en.point == q.P) CHECK(en.tame_value == q.P.y().pow(-3));
  CHECK(cert.entries.size() == 3);
}

TEST_CASE("torsion construction on the line quartic") {
  Quartic q;
  FnElt hx = q.fn(X() - C(kA.pow(3)));
  FnElt hy = q.fn(Y());
  TorsionFunction t1{hy.pow(3) / hx.pow(4), q.O, q.P, 12};
  TorsionFunction t2{hx, q.P, q.inf, 3};
  TorsionFunction t3{hy.inverse(), q.inf, q.O, 4};
  auto els = construction_torsion(q.c, t1, t2, t3);
  REQUIRE(els.size() == 3);
  for (const auto& e : els) {
    Certificate cert = verify_k2t(q.c, e);
    CHECK(cert.pass);
    CHECK(cert.product == Rat(1));
    CHECK(cert.entries.size() == 3);
  }
  // S_2 = {h_3 / h_3(P_3), h_1 / h_1(P_1)} with (P_1, P_2, P_3) = (inf, O, P).
  FnElt expect_f = t3.fn / FnElt(q.ctx, t3.fn.eval(q.P.x(), q.P.y()));
  CHECK(els[1].terms[0].f.equals(expect_f));

  TorsionFunction bad{hx, q.P, q.inf, 4};
  CHECK(throws_with([&] { construction_torsion(q.c, t1, bad, t3); }, "not a torsion triple"));
  TorsionFunction swapped{hx, q.P, q.O, 3};
  CHECK(throws_with([&] { check_torsion_function(q.c, swapped); }, ""));
}

TEST_CASE("scaled torsion elements share certificates") {
  Quartic q;
  FnElt hx = q.fn(X() - C(kA.pow(3)));
  FnElt hy = q.fn(Y());
  TorsionFunction ts[3] = {{hy.pow(3) / hx.pow(4), q.O, q.P, 12}, {hx, q.P, q.inf, 3}, {hy.inverse(), q.inf, q.O, 4}};
  auto els = construction_torsion(q.c, ts[0], ts[1], ts[2]);
  std::vector<std::vector<Rat>> vals;
  for (int i = 0; i < 3; ++i) {
    K2Element e = els[static_cast<size_t>(i)];
    e.terms[0].coefficient = 12 / ts[i].order * ts[i].order;
    std::vector<Rat> v;
    for (const auto& en : verify_k2t(q.c, e).entries) v.push_back(en.tame_value);
    vals.push_back(v);
  }
  CHECK(vals[0] == vals[1]);
  CHECK(vals[1] == vals[2]);
}

TEST_CASE("antisymmetry, bilinearity and product formula") {
  Quartic q;
  auto pool = rational_pool(q);
  REQUIRE(pool.size() >= 4);
  std::vector<CurvePoint> pts = q.points();
  pts.push_back(q.inf);
  for (int n = 0; n < 50; ++n) {
    FnElt f1 = random_function(q, pool), f2 = random_function(q, pool), h = random_function(q, pool);
    const CurvePoint& p = pts[static_cast<size_t>(rand_int(0, static_cast<long>(pts.size()) - 1))];
    Rat a = tame_symbol(q.c, {f1, h, 1}, p), b = tame_symbol(q.c, {h, f1, 1}, p);
    CHECK(a * b == Rat(1));
    CHECK(tame_symbol(q.c, {f1 * f2, h, 1}, p) == a * tame_symbol(q.c, {f2, h, 1}, p));
    K2Element e;
    e.terms.push_back({f1, h, 1});
    e.declared_support = support_of({f1, h});
    CHECK(verify_k2t(q.c, e).product == Rat(1));
  }
}

TEST_CASE("Steinberg relation") {
  Quartic q;
  auto pool = rational_pool(q);
  std::vector<CurvePoint> pts = q.points();
  pts.push_back(q.inf);
  int checked = 0;
  for (int n = 0; n < 40; ++n) {
    FnElt f = random_function(q, pool);
    FnElt g = f.one_minus();
    if (f.is_constant() || g.is_zero()) continue;
    for (const auto& p : pts) {
      CHECK(tame_symbol(q.c, {f, g, 1}, p) == Rat(1));
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("ord_at is a valuation") {
  Quartic q;
  auto pool = rational_pool(q);
  std::vector<CurvePoint> pts = q.points();
  pts.push_back(q.inf);
  for (int n = 0; n < 40; ++n) {
    FnElt f = random_function(q, pool), g = random_function(q, pool);
    const CurvePoint& p = pts[static_cast<size_t>(rand_int(0, static_cast<long>(pts.size()) - 1))];
    int of = ord_at(q.c, f, p), og = ord_at(q.c, g, p);
    FnElt prod = FnElt::quotient(q.ctx, f.numerator() * g.numerator(), f.denominator() * g.denominator());
    CHECK(ord_at(q.c, prod, p) == of + og);
    FnElt sum = f + g;
    if (!sum.is_zero()) CHECK(ord_at(q.c, sum, p) >= std::min(of, og));
  }
}

TEST_CASE("function field arithmetic") {
  Quartic q;
  FnElt f = FnElt::quotient(q.ctx, X() + C(1), Y() - C(2));
  CHECK((f * f.inverse()).equals(FnElt(q.ctx, Rat(1))));
  CHECK((f + f).equals(Rat(2) * f));
  CHECK((f - f).is_zero());
  CHECK(f.one_minus().equals(FnElt(q.ctx, Rat(1)) - f));
  CHECK(q.fn(q.c.poly()).is_zero());
  CHECK(!q.fn(X()).is_zero());
  CHECK(f.eval(Rat(1), Rat(3)) == Rat(2));
  CHECK(f.str() == "(x + 1)/(y - 2)");
}

TEST_CASE("Nekovar element, 3-torsion family") {
  Rat r(2);
  BiPoly f1 = C(r) - C(Rat(4) * r + Rat(1)) * X();
  PlaneCurve c(Y().pow(2) + f1 * Y() + X().pow(3));
  CurveRef ctx = make_curve(c);
  TorsionFunction g1{FnElt(ctx, Y()), CurvePoint::affine(0, 0), CurvePoint::at_infinity(0, 1), 3};
  NekovarElement ne = nekovar_element(c, C(1), Y(), Y() - X() + C(r), {g1}, r);
  CHECK(ne.squared);
  CHECK(ne.m == 3);
  REQUIRE(ne.h_points.size() == 2);
  CHECK(ne.h_points[0].first == CurvePoint::affine(0, -r));
  CHECK(ne.h_points[1].first == CurvePoint::affine(Rat(2) * r, r));
  Certificate cert = verify_k2t(c, ne.element);
  CHECK(cert.pass);
  CHECK(cert.product == Rat(1));
  CHECK(throws_with([&] { nekovar_element(c, C(1), Y(), Y() - X() + C(r), {}, r); }, "torsion condition"));
  CHECK(throws_with([&] { nekovar_element(c, C(1), Y(), Y() - X() + C(r), {g1}, Rat(5)); }, "constant value"));
}

TEST_CASE("Nekovar element, genus 2 family with two places at infinity") {
  Rat r(1, 2);
  BiPoly f1 = C(r) - X() - C(Rat(4) * r) * X().pow(3);
  PlaneCurve c(Y().pow(2) + f1 * Y() + X().pow(5));
  CurveRef ctx = make_curve(c);
  CHECK(ctx->places_at_infinity().size() == 2);
  TorsionFunction g1{FnElt(ctx, Y()), CurvePoint::affine(0, 0), CurvePoint::at_infinity(0, 1), 5};
  BiPoly h = C(r.inverse()) * (Y() - X() + C(r));
  NekovarElement ne = nekovar_element(c, C(1), Y(), h, {g1}, r);
  REQUIRE(ne.h_points.size() == 2);
  CHECK(ne.h_points[0].second == 3);
  CHECK(ne.h_points[1].second == 2);
  Certificate cert = verify_k2t(c, ne.element);
  CHECK(cert.pass);
  int at_inf = 0;
  for (const auto& en : cert.entries)
    if (!en.point.is_affine()) {
      ++at_inf;
      CHECK(en.tame_value == Rat(1));
    }
  CHECK(at_inf == 2);
}

TEST_CASE("Nekovar element needs rational 2-torsion") {
  Rat r(3, 4);
  BiPoly rhs = X().pow(3) + C(Rat(-1, 3) + Rat(2, 3) * r - Rat(4, 3) * r * r) * X() +
               C(Rat(2, 27) - Rat(2, 9) * r + Rat(5, 9) * r * r + Rat(16, 27) * r.pow(3));
  PlaneCurve c(Y().pow(2) - rhs);
  BiPoly h = Y() + X() - C(Rat(1, 3) - r / Rat(3));
  bool rational_error = false;
  try {
    nekovar_element(c, C(1), Y(), h, {}, r);
  } catch (const RationalSupportError&) {
    rational_error = true;
  }
  CHECK(rational_error);
}
