#include "k2forge/curves/branches.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

#include "k2forge/error.hpp"

namespace k2forge {

int default_series_order(int max_pole_order) {
  if (const char* env = std::getenv("K2FORGE_SERIES_ORDER")) {
    try {
      int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return 2 * max_pole_order + 4;
}

PowerSeries hensel_lift(const BiPoly& h, int order) {
  if (!h.constant_term().is_zero()) throw InternalError("Hensel lift from a non-root");
  BiPoly hy = h.diff(Var::y);
  if (hy.constant_term().is_zero()) throw InternalError("Hensel lift from a multiple root");
  PowerSeries t = PowerSeries::monomial(Rat(1), 1);
  PowerSeries y = PowerSeries::zero(1);
  int k = 1;
  while (k < order) {
    k = std::min(2 * k, order);
    PowerSeries yk = y.extend(k);
    PowerSeries r = substitute(h, t, yk).truncate(k);
    PowerSeries d = substitute(hy, t, yk).truncate(k);
    y = (yk - r * invert(d)).truncate(k);
  }
  return y.truncate(order);
}

namespace {

/// Piece of a Newton-Puiseux expansion of H(s, y) = 0: s = lambda t^q and
/// y = Y(t).
struct Piece {
  Rat lambda;
  int q;
  PowerSeries y;
};

long floor_mod(long a, long m) { return ((a % m) + m) % m; }

/// Roots of H(s, y) over the Puiseux field, restricted to val(y) > 0 when
/// positive_only is set. `rel` is the number of coefficients of Y wanted.
std::vector<Piece> expand(BiPoly h, bool positive_only, int rel) {
  std::vector<Piece> out;
  // Coefficients of y^j as polynomials in s.
  auto cs = h.coeffs_in(Var::y);
  size_t zero_roots = 0;
  while (zero_roots < cs.size() && cs[zero_roots].is_zero()) ++zero_roots;
  if (zero_roots > 1) throw PreconditionError("curve has a repeated component");
  if (zero_roots == 1) {
    out.push_back({Rat(1), 1, PowerSeries::zero()});
    h = h.divide_by_y_power(1);
    cs.erase(cs.begin());
  }
  struct Pt {
    int j;
    int v;
  };
  std::vector<Pt> pts;
  for (size_t j = 0; j < cs.size(); ++j)
    if (!cs[j].is_zero()) pts.push_back({static_cast<int>(j), cs[j].low_order()});
  // Lower convex hull (points already sorted by j).
  std::vector<Pt> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const Pt& a = hull[hull.size() - 2];
      const Pt& b = hull.back();
      // Drop b if it lies on or above segment a-p.
      long cross = static_cast<long>(b.j - a.j) * (p.v - a.v) - static_cast<long>(b.v - a.v) * (p.j - a.j);
      if (cross <= 0) hull.pop_back();
      else break;
    }
    hull.push_back(p);
  }
  for (size_t e = 0; e + 1 < hull.size(); ++e) {
    const Pt a = hull[e], b = hull[e + 1];
    long dj = b.j - a.j, dv = b.v - a.v;
    // Roots on this edge have valuation mu = -dv/dj = p/q.
    long g = std::gcd(std::labs(dv), dj);
    long p = -dv / g, q = dj / g;
    if (positive_only && p <= 0) continue;
    std::vector<Rat> psi;
    for (long j = a.j; j <= b.j; j += q) {
      long v = a.v + (j - a.j) / q * (-p);
      psi.push_back(cs[static_cast<size_t>(j)].coeff(static_cast<int>(v)));
    }
    UniPoly psi_poly(psi);
    int rational_mult = 0;
    auto roots = rational_roots(psi_poly);
    for (const auto& z : roots) rational_mult += root_multiplicity(psi_poly, z);
    if (rational_mult != psi_poly.degree()) throw RationalSupportError("non-rational branch");
    long u = 0;
    while (floor_mod(1 + p * u, q) != 0) ++u;
    long v = (1 + p * u) / q;
    for (const auto& zeta : roots) {
      Rat lambda = zeta.pow(u), c = zeta.pow(v);
      // H1(t, y1) = t^-N H(lambda t^q, t^p (c + y1)).
      long n_min = 0;
      bool first = true;
      for (const auto& [m, coef] : h.terms()) {
        long ex = q * m.i + p * m.j;
        if (first || ex < n_min) n_min = ex;
        first = false;
      }
      std::vector<BiPoly> cpow{BiPoly(1)};
      BiPoly cy = BiPoly(c) + BiPoly::y();
      for (int j = 1; j <= h.degree_in(Var::y); ++j) cpow.push_back(cpow.back() * cy);
      BiPoly h1;
      for (const auto& [m, coef] : h.terms()) {
        long ex = q * m.i + p * m.j - n_min;
        h1 += BiPoly::monomial(coef * lambda.pow(m.i), static_cast<int>(ex), 0) * cpow[static_cast<size_t>(m.j)];
      }
      int mult = root_multiplicity(psi_poly, zeta);
      if (mult == 1) {
        PowerSeries y1 = hensel_lift(h1, rel);
        PowerSeries y = PowerSeries::monomial(Rat(1), static_cast<int>(p)) * (PowerSeries::constant(c) + y1);
        out.push_back({lambda, static_cast<int>(q), y});
        continue;
      }
      for (auto& sub : expand(h1, true, rel)) {
        // t = lambda1 tau^q1, y1 = Y1(tau).
        Rat lam = lambda * sub.lambda.pow(q);
        PowerSeries y = PowerSeries::monomial(sub.lambda.pow(p), static_cast<int>(p * sub.q)) *
                        (PowerSeries::constant(c) + sub.y);
        out.push_back({lam, static_cast<int>(q) * sub.q, y});
      }
    }
  }
  return out;
}

bool series_less(const PowerSeries& a, const PowerSeries& b) {
  if (a.val() != b.val()) return a.val() < b.val();
  size_t n = std::min(a.coeffs().size(), b.coeffs().size());
  for (size_t k = 0; k < n; ++k)
    if (a.coeffs()[k] != b.coeffs()[k]) return a.coeffs()[k] < b.coeffs()[k];
  return a.coeffs().size() < b.coeffs().size();
}

std::vector<Branch> compute_branches(const PlaneCurve& c, int rel) {
  const BiPoly& f = c.poly();
  // Shear x = x' + s0 y so that the equation has constant leading
  // coefficient in y; every branch at infinity then has x' -> infinity.
  long s0 = 0;
  auto constant_lead = [](const BiPoly& g) {
    auto cs = g.coeffs_in(Var::y);
    return !cs.empty() && cs.back().is_constant();
  };
  BiPoly top = f.homogeneous_part(c.degree());
  BiPoly fs = f;
  if (!constant_lead(f)) {
    s0 = 0;
    while (top.eval(Rat(s0), Rat(1)).is_zero()) s0 = s0 <= 0 ? 1 - s0 : -s0;
    fs = f.substitute(BiPoly::x() + BiPoly::monomial(Rat(s0), 0, 1), BiPoly::y());
  }
  int dx = fs.degree_in(Var::x);
  if (fs.degree_in(Var::y) < 1) throw PreconditionError("curve is a union of vertical lines");
  // G(s, y) = s^dx F'(1/s, y).
  BiPoly g;
  for (const auto& [m, coef] : fs.terms()) g += BiPoly::monomial(coef, dx - m.i, m.j);
  std::vector<Branch> out;
  for (auto& piece : expand(g, false, rel)) {
    Branch b;
    b.ramification = piece.q;
    PowerSeries xs = PowerSeries::monomial(piece.lambda.inverse(), -piece.q);
    b.y = piece.y;
    b.x = s0 == 0 ? xs : xs + Rat(s0) * piece.y;
    int vx = b.x.val(), vy = b.y.is_zero() ? PowerSeries::kExact : b.y.val();
    if (vx < vy) b.point = CurvePoint::at_infinity(Rat(1), Rat(0));
    else if (vx > vy) b.point = CurvePoint::at_infinity(Rat(0), Rat(1));
    else b.point = CurvePoint::at_infinity(b.x.lead() / b.y.lead(), Rat(1));
    out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end(), [](const Branch& a, const Branch& b) {
    if (!a.point.same_place(b.point)) return a.point < b.point;
    if (series_less(a.x, b.x)) return true;
    if (series_less(b.x, a.x)) return false;
    return series_less(a.y, b.y);
  });
  for (size_t k = 0; k < out.size(); ++k) {
    int idx = 0;
    for (size_t j = 0; j < k; ++j)
      if (out[j].point.same_place(out[k].point)) ++idx;
    auto pr = out[k].point.projective();
    out[k].point = CurvePoint::at_infinity(pr[0], pr[1], idx);
  }
  return out;
}

}  // namespace

std::vector<Branch> branches_at_infinity(const PlaneCurve& c, int order) {
  if (order > 0) return compute_branches(c, order);
  int pole = 0;
  for (const auto& b : compute_branches(c, 1)) {
    pole = std::max(pole, -b.x.val());
    if (!b.y.is_zero()) pole = std::max(pole, -b.y.val());
  }
  return compute_branches(c, default_series_order(pole));
}

Branch local_parametrization(const PlaneCurve& c, const CurvePoint& p, int order) {
  if (!p.is_affine()) throw PreconditionError("local parametrization needs an affine point");
  if (!is_on_curve(c, p)) throw PreconditionError("point is not on the curve");
  BiPoly h = c.poly().translate(p.x(), p.y());
  Branch b;
  b.point = p;
  PowerSeries t = PowerSeries::monomial(Rat(1), 1);
  if (!h.diff(Var::y).constant_term().is_zero()) {
    b.x = PowerSeries::constant(p.x()) + t;
    b.y = PowerSeries::constant(p.y()) + hensel_lift(h, order);
  } else if (!h.diff(Var::x).constant_term().is_zero()) {
    b.x = PowerSeries::constant(p.x()) + hensel_lift(h.swap_vars(), order);
    b.y = PowerSeries::constant(p.y()) + t;
  } else {
    throw PreconditionError("point is singular");
  }
  return b;
}

}  // namespace k2forge
