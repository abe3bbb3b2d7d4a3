#include "doctest.h"
#include "k2forge/algebra/resultant.hpp"
#include "k2forge/curves/branches.hpp"
#include "k2forge/curves/curve.hpp"
#include "k2forge/curves/intersection.hpp"
#include "k2forge/curves/smoothness.hpp"
#include "k2forge/error.hpp"
#include "test_support.hpp"

using namespace k2forge;
using k2test::rand_int;
using k2test::rand_nonzero;
using k2test::rand_rat;
using k2test::lines_quartic;
using k2test::ct_curve;

namespace {

BiPoly X() { return BiPoly::x(); }
BiPoly Y() { return BiPoly::y(); }
BiPoly C(const Rat& r) { return BiPoly(r); }

}  // namespace

TEST_CASE("is_on_curve") {
  Rat a(1, 2), b(-1);
  PlaneCurve c = lines_quartic(a, b, Rat(0));
  CHECK(is_on_curve(c, CurvePoint::affine(a.pow(3), -a.pow(4))));
  CHECK(is_on_curve(c, CurvePoint::affine(0, 0)));
  CHECK(is_on_curve(c, CurvePoint::at_infinity(0, 1)));
  CHECK_FALSE(is_on_curve(PlaneCurve(parse_bipoly("y^2 + y + x^3")), CurvePoint::affine(1, 1)));
}

TEST_CASE("points print and parse") {
  for (auto p : {CurvePoint::affine(Rat(-1, 8), Rat(3)), CurvePoint::at_infinity(0, 1),
                 CurvePoint::at_infinity(Rat(2), Rat(3), 1), CurvePoint::at_infinity(5, 0)}) {
    CHECK(CurvePoint::parse(p.str()) == p);
  }
  CHECK(CurvePoint::at_infinity(Rat(2), Rat(4)).str() == "(1/2:1:0)");
  CHECK_THROWS_AS(CurvePoint::parse("(1,"), PreconditionError);
}

TEST_CASE("homogenization and charts") {
  PlaneCurve c(parse_bipoly("y^2 + y + x^3"));
  CHECK(c.homogeneous_str() == "X^3 + Y^2*Z + Y*Z^2");
  CHECK(c.chart(Chart::Y) == parse_bipoly("x^3 + y + y^2"));
  CHECK(c.chart(Chart::X) == parse_bipoly("x^2*y + x*y^2 + 1"));
  CHECK(c.is_squarefree());
  CHECK_FALSE(PlaneCurve(parse_bipoly("(y - x^2)^2*(x+1)")).is_squarefree());
}

TEST_CASE("smoothness_check") {
  CHECK_FALSE(smoothness_check(ct_curve(Rat(1))).smooth);
  CHECK(smoothness_check(ct_curve(Rat(0))).smooth);
  CHECK(smoothness_check(PlaneCurve(parse_bipoly("y^2 + y + x^3"))).smooth);
  auto node = smoothness_check(PlaneCurve(parse_bipoly("y^2 - x^2*(x+1)")));
  CHECK_FALSE(node.smooth);
  REQUIRE(node.singular_point);
  CHECK(*node.singular_point == CurvePoint::affine(0, 0));
  // Irrational singular points: (y^2 - 2)^2 + (x^2-2)... use a conjugate pair of nodes.
  auto pair = smoothness_check(PlaneCurve(parse_bipoly("y^2 - (x^2 - 2)^2*(x + 3)")));
  CHECK_FALSE(pair.smooth);
  CHECK_FALSE(pair.singular_point);
  REQUIRE(pair.eliminant);
  CHECK(pair.eliminant->degree() == 2);
  // Odd hyperelliptic models are singular at infinity but smooth affinely.
  PlaneCurve hyp(parse_bipoly("y^2 + (x^2 + 1)*y + x^5"));
  auto hr = smoothness_check(hyp);
  CHECK_FALSE(hr.smooth);
  CHECK(hr.affine_smooth);
  CHECK(*hr.singular_point == CurvePoint::at_infinity(0, 1));
}

TEST_CASE("intersection_multiplicity examples") {
  PlaneCurve parabola(parse_bipoly("y - x^2")), axis(parse_bipoly("y"));
  CHECK(intersection_multiplicity(parabola, axis, CurvePoint::affine(0, 0)) == 2);
  CHECK_THROWS_WITH_AS(intersection_multiplicity(parabola, axis, CurvePoint::affine(1, 0)),
                       "empty intersection at point", PreconditionError);

  Rat a(1, 2), b(-1);
  PlaneCurve q = lines_quartic(a, b, Rat(0));
  CurvePoint p = CurvePoint::affine(a.pow(3), -a.pow(4));
  CHECK(intersection_multiplicity(q, Line::vertical(a.pow(3)).curve(), p) == 3);

  // Quartic with contact 8 against its conic at R = (0, -d2).
  Conic d{Rat(1), Rat(2), Rat(1), Rat(1)};
  PlaneCurve quartic(d.poly() * Y() + X().pow(4));
  CHECK(intersection_multiplicity(quartic, d.curve(), CurvePoint::affine(0, -2)) == 8);
  auto cyc = intersect(quartic, d.curve());
  CHECK(cyc.complete());
  CHECK(cyc.points.size() == 1);
}

TEST_CASE("tangent_line") {
  PlaneCurve parabola(parse_bipoly("y - x^2"));
  CHECK(tangent_line(parabola, CurvePoint::affine(0, 0)) == Line(Rat(0), Rat(1), Rat(0)));
  Rat a(1, 2), b(-1);
  PlaneCurve q = lines_quartic(a, b, Rat(0));
  CurvePoint qp = CurvePoint::affine(-a * a * b.pow(3), -a * a * b.pow(6));
  CHECK(tangent_line(q, qp) == Line::through(b.pow(3), Rat(0)));
  CHECK(tangent_line(q, CurvePoint::affine(a.pow(3), -a.pow(4))) == Line::vertical(a.pow(3)));
  CHECK_THROWS_WITH_AS(tangent_line(PlaneCurve(parse_bipoly("y^2 - x^3")), CurvePoint::affine(0, 0)),
                       "no unique tangent", PreconditionError);
}

TEST_CASE("intersection multiplicity is symmetric and invariant") {
  for (int trial = 0; trial < 100; ++trial) {
    // Random curves through the origin.
    BiPoly f = k2test::rand_bi(static_cast<int>(rand_int(1, 3)));
    BiPoly g = k2test::rand_bi(static_cast<int>(rand_int(1, 3)));
    f -= C(f.constant_term());
    g -= C(g.constant_term());
    if (f.is_constant() || g.is_constant()) continue;
    PlaneCurve cf(f), cg(g);
    CurvePoint o = CurvePoint::affine(0, 0);
    int a = 0, b = 0;
    try {
      a = intersection_multiplicity(cf, cg, o);
    } catch (const PreconditionError&) {
      continue;  // common component
    }
    b = intersection_multiplicity(cg, cf, o);
    CHECK(a == b);
    if (trial < 20) {
      // Unimodular affine change x -> x + k y + s, y -> y + r, moving o.
      Rat k = Rat(rand_int(-3, 3)), s = rand_rat(3, 2), r = rand_rat(3, 2);
      BiPoly nx = X() + C(k) * Y() + C(s), ny = Y() + C(r);
      PlaneCurve tf(f.substitute(nx, ny)), tg(g.substitute(nx, ny));
      // The preimage of the origin.
      Rat py = -r, px = -s - k * py;
      CHECK(intersection_multiplicity(tf, tg, CurvePoint::affine(px, py)) == a);
    }
  }
}

TEST_CASE("branches at infinity") {
  // Odd hyperelliptic, genus 2.
  PlaneCurve hyp(parse_bipoly("y^2 + (-7/360 + 1/3*x - 2*x^2)*y + x^5"));
  auto br = branches_at_infinity(hyp);
  REQUIRE(br.size() == 1);
  CHECK(br[0].x.val() == -2);
  CHECK(br[0].y.val() == -5);
  CHECK(br[0].point == CurvePoint::at_infinity(0, 1));
  auto res = substitute(hyp.poly(), br[0].x, br[0].y);
  CHECK(res.is_zero());
  CHECK(res.prec() > 0);

  PlaneCurve quartic = ct_curve(Rat(0));
  auto bq = branches_at_infinity(quartic);
  REQUIRE(bq.size() == 1);
  CHECK(bq[0].point == CurvePoint::at_infinity(0, 1));
  CHECK(substitute(quartic.poly(), bq[0].x, bq[0].y).is_zero());

  PlaneCurve weier(parse_bipoly("y^2 - x^3 - x - 1"));
  auto bw = branches_at_infinity(weier);
  REQUIRE(bw.size() == 1);
  CHECK(bw[0].x.val() == -2);
  CHECK(bw[0].y.val() == -3);

  // Genus 2 model with two unramified branches.
  PlaneCurve g2(parse_bipoly("y^2 + (1/2 - x + 2*x^3)*y + x^5"));
  auto b2 = branches_at_infinity(g2);
  REQUIRE(b2.size() == 2);
  for (const auto& b : b2) {
    CHECK(b.ramification == 1);
    CHECK(substitute(g2.poly(), b.x, b.y).is_zero());
  }
  CHECK(b2[0].point.branch_index() == 0);
  CHECK(b2[1].point.branch_index() == 1);

  // Even models: the edge polynomial has a double root, and the branches
  // split according to the parity of deg(f1^2 - 4 x^6).
  PlaneCurve even(parse_bipoly("y^2 + (2*x^3 + x^2 + 1)*y + x^6"));
  auto be = branches_at_infinity(even);
  REQUIRE(be.size() == 1);
  CHECK(be[0].ramification == 2);
  CHECK(substitute(even.poly(), be[0].x, be[0].y).is_zero());
  PlaneCurve split(parse_bipoly("y^2 + (2*x^3 + x + 1)*y + x^6"));
  auto bs = branches_at_infinity(split);
  REQUIRE(bs.size() == 2);
  for (const auto& b : bs) CHECK(substitute(split.poly(), b.x, b.y).is_zero());

  // Irrational branch: y^2 = 2 x^2 + 1.
  CHECK_THROWS_AS(branches_at_infinity(PlaneCurve(parse_bipoly("y^2 - 2*x^2 - 1"))), RationalSupportError);
  // Conic with two rational points at infinity.
  auto bh = branches_at_infinity(PlaneCurve(parse_bipoly("x*y - 1")));
  CHECK(bh.size() == 2);
}

TEST_CASE("local parametrization satisfies the equation") {
  PlaneCurve c = ct_curve(Rat(2));
  auto b = local_parametrization(c, CurvePoint::affine(0, 0), 12);
  auto r = substitute(c.poly(), b.x, b.y);
  CHECK(r.is_zero());
  CHECK(r.prec() >= 12);
}
