#include "k2forge/k2/symbols.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "k2forge/curves/intersection.hpp"
#include "k2forge/error.hpp"

namespace k2forge {

long Divisor::degree() const {
  long d = 0;
  for (const auto& [p, n] : entries) d += n;
  return d;
}

int Divisor::operator[](const CurvePoint& p) const {
  auto it = entries.find(p);
  return it == entries.end() ? 0 : it->second;
}

std::string Divisor::str() const {
  if (entries.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, n] : entries) {
    int a = n < 0 ? -n : n;
    if (first) os << (n < 0 ? "-" : "");
    else os << (n < 0 ? " - " : " + ");
    if (a != 1) os << a;
    os << "(" << p.str() << ")";
    first = false;
  }
  return os.str();
}

std::optional<CurvePoint> Certificate::offending_point() const {
  for (const auto& e : entries)
    if (!e.tame_value.is_one()) return e.point;
  return std::nullopt;
}

namespace {

void check_curve(const PlaneCurve& c, const FnElt& f) {
  if (!f.context() || !(f.curve() == c)) throw PreconditionError("function is not defined on this curve");
}

TermValue term_value(const SymbolPair& s, const CurvePoint& p) {
  LocalData lf = local_data(s.f, p), lh = local_data(s.h, p);
  TermValue v;
  v.ord_f = lf.ord;
  v.ord_h = lh.ord;
  Rat t = lf.lead.pow(lh.ord) / lh.lead.pow(lf.ord);
  if ((static_cast<long>(lf.ord) * lh.ord) % 2 != 0) t = -t;
  if (t.is_zero()) throw InternalError("tame symbol evaluated to zero");
  v.tame_value = t.pow(s.coefficient);
  return v;
}

std::vector<CurvePoint> sorted_unique(std::vector<CurvePoint> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

int ord_at(const PlaneCurve& c, const FnElt& f, const CurvePoint& p) {
  check_curve(c, f);
  return local_data(f, p).ord;
}

Divisor divisor_of(const PlaneCurve& c, const FnElt& f, const std::vector<CurvePoint>& candidates) {
  check_curve(c, f);
  Divisor d;
  for (const auto& p : sorted_unique(candidates)) {
    int n = local_data(f, p).ord;
    if (n != 0) d.entries[p] = n;
  }
  if (d.degree() != 0)
    throw PreconditionError("support incomplete: divisor " + d.str() + " of " + f.str() + " has degree " +
                            std::to_string(d.degree()));
  return d;
}

Rat tame_symbol(const PlaneCurve& c, const SymbolPair& s, const CurvePoint& p) {
  check_curve(c, s.f);
  check_curve(c, s.h);
  return term_value(s, p).tame_value;
}

Certificate verify_k2t(const PlaneCurve& c, const K2Element& e) {
  std::vector<CurvePoint> support = sorted_unique(e.declared_support);
  for (const auto& t : e.terms) {
    divisor_of(c, t.f, support);
    divisor_of(c, t.h, support);
  }
  Certificate cert;
  cert.pass = true;
  for (const auto& p : support) {
    CertificateEntry entry;
    entry.point = p;
    for (const auto& t : e.terms) {
      entry.terms.push_back(term_value(t, p));
      entry.tame_value *= entry.terms.back().tame_value;
    }
    cert.product *= entry.tame_value;
    if (!entry.tame_value.is_one()) cert.pass = false;
    cert.entries.push_back(std::move(entry));
  }
  if (!cert.product.is_one()) cert.pass = false;
  return cert;
}

void check_torsion_function(const PlaneCurve& c, const TorsionFunction& t) {
  if (t.order <= 0 || t.plus_point == t.minus_point) throw PreconditionError("not a torsion triple: degenerate data");
  std::vector<CurvePoint> cand{t.plus_point, t.minus_point};
  if (auto s = rational_support(t.fn)) cand.insert(cand.end(), s->begin(), s->end());
  Divisor d = divisor_of(c, t.fn, cand);
  Divisor want;
  want.entries[t.plus_point] = t.order;
  want.entries[t.minus_point] = -t.order;
  if (!(d == want))
    throw PreconditionError("not a torsion triple: div(" + t.fn.str() + ") = " + d.str() + ", expected " +
                            want.str());
}

std::vector<K2Element> construction_torsion(const PlaneCurve& c, const TorsionFunction& t1,
                                            const TorsionFunction& t2, const TorsionFunction& t3) {
  const TorsionFunction* t[3] = {&t1, &t2, &t3};
  // t_i has plus point P_{i+1} and minus point P_{i-1}.
  CurvePoint pts[3] = {t3.plus_point, t1.plus_point, t2.plus_point};
  for (int i = 0; i < 3; ++i) {
    if (!(t[i]->minus_point == pts[(i + 2) % 3])) throw PreconditionError("not a torsion triple: points do not match");
    check_curve(c, t[i]->fn);
    check_torsion_function(c, *t[i]);
  }
  if (pts[0] == pts[1] || pts[1] == pts[2] || pts[0] == pts[2])
    throw PreconditionError("not a torsion triple: points are not distinct");
  // Normalized functions h_j / h_j(P_j).
  std::vector<FnElt> hn;
  for (int j = 0; j < 3; ++j) {
    LocalData d = local_data(t[j]->fn, pts[j]);
    if (d.ord != 0) throw InternalError("torsion function is not a unit at its own point");
    hn.push_back(d.lead.inverse() * t[j]->fn);
  }
  std::vector<CurvePoint> support(pts, pts + 3);
  std::vector<K2Element> out;
  for (int i = 0; i < 3; ++i) {
    K2Element e;
    e.terms.push_back({hn[(i + 1) % 3], hn[(i + 2) % 3], 1});
    e.declared_support = sorted_unique(support);
    out.push_back(std::move(e));
  }
  return out;
}

namespace {

/// Point at infinity where the curve defined by e meets c with maximal
/// contact; a constant e stands for the line at infinity.
CurvePoint maximal_contact_point(const PlaneCurve& c, const BiPoly& e) {
  if (e.is_constant()) {
    auto pts = rational_points_at_infinity(c);
    if (pts.size() == 1) {
      const CurvePoint& p0 = pts.front();
      BiPoly l = p0.y().is_zero() ? BiPoly::y() : BiPoly::x() - BiPoly::monomial(p0.x(), 0, 1);
      BiPoly top = c.poly().homogeneous_part(c.degree());
      BiPoly ld = l.pow(static_cast<unsigned>(c.degree()));
      Rat lambda = top.terms().rbegin()->second / ld.terms().rbegin()->second;
      if (top == BiPoly(lambda) * ld) return p0;
    }
    throw PreconditionError("maximal contact condition fails: the line at infinity meets the curve in several points");
  }
  IntersectionCycle cyc = intersect(c, PlaneCurve(e));
  if (cyc.points.size() == 1 && !cyc.points.front().first.is_affine() && cyc.complete())
    return cyc.points.front().first;
  throw PreconditionError("maximal contact condition fails for E = " + e.str());
}

}  // namespace

NekovarElement nekovar_element(const PlaneCurve& c, const BiPoly& e, const BiPoly& g, const BiPoly& h,
                               const std::vector<TorsionFunction>& torsion_data, const Rat& kappa) {
  if (kappa.is_zero()) throw PreconditionError("kappa must be nonzero");
  if (e.is_zero() || g.is_constant() || h.is_constant()) throw PreconditionError("E, G, H must define curves");
  if (!e.is_constant() && (e.total_degree() != g.total_degree() || e.total_degree() != h.total_degree()))
    throw PreconditionError("E, G and H must have the same degree");
  CurvePoint inf = maximal_contact_point(c, e);
  CurveRef ctx = make_curve(c);
  NekovarElement out;

  IntersectionCycle cg = intersect(c, PlaneCurve(g));
  if (!cg.complete()) throw RationalSupportError("rational support required: G meets the curve in non-rational points");
  IntersectionCycle ch = intersect(c, PlaneCurve(h));
  if (!ch.complete()) throw RationalSupportError("rational support required: H meets the curve in non-rational points");
  for (const auto& [p, m] : cg.points)
    if (p.is_affine()) out.g_points.emplace_back(p, m);
  for (const auto& [p, m] : ch.points) {
    if (!p.is_affine()) throw PreconditionError("H meets the curve at infinity");
    out.h_points.emplace_back(p, m);
  }
  for (const auto& [p, m] : out.g_points)
    for (const auto& [q, n] : out.h_points)
      if (p == q) throw PreconditionError("G and H meet the curve in a common point " + p.str());

  // Torsion condition at every affine point of G cap C.
  std::vector<CurvePoint> places = ctx->places_at_infinity();
  std::vector<const TorsionFunction*> tors;
  long m = 1;
  for (const auto& [p, mult] : out.g_points) {
    auto it = std::find_if(torsion_data.begin(), torsion_data.end(),
                           [&](const TorsionFunction& t) { return t.plus_point == p; });
    if (it == torsion_data.end()) throw PreconditionError("torsion condition fails: no torsion function at " + p.str());
    check_curve(c, it->fn);
    std::vector<CurvePoint> cand = places;
    cand.push_back(p);
    if (auto s = rational_support(it->fn)) cand.insert(cand.end(), s->begin(), s->end());
    Divisor d = divisor_of(c, it->fn, cand);
    for (const auto& [q, n] : d.entries) {
      bool ok = (q == p && n == it->order) || (n < 0 && !q.is_affine() && q.same_place(inf));
      if (!ok) throw PreconditionError("torsion condition fails: div(" + it->fn.str() + ") = " + d.str());
    }
    if (d[p] != it->order) throw PreconditionError("torsion condition fails at " + p.str());
    tors.push_back(&*it);
    m = std::lcm(m, static_cast<long>(it->order));
  }

  // Constant value of g = G/E on H cap C, squaring g when the values only
  // agree up to sign.
  std::vector<Rat> vals;
  for (const auto& [q, n] : out.h_points) {
    Rat ev = e.eval(q.x(), q.y());
    if (ev.is_zero()) throw PreconditionError("E passes through an intersection point of H");
    vals.push_back(g.eval(q.x(), q.y()) / ev);
  }
  int power = 1;
  if (!std::all_of(vals.begin(), vals.end(), [&](const Rat& v) { return v == kappa; })) {
    if (!std::all_of(vals.begin(), vals.end(), [&](const Rat& v) { return v * v == kappa * kappa; }))
      throw PreconditionError("constant value condition fails: g is not constant on H cap C");
    power = 2;
  }
  out.squared = power == 2;
  out.kappa = kappa.pow(power);
  out.m = static_cast<int>(m);

  FnElt gt = out.kappa.inverse() * FnElt::quotient(ctx, g, e).pow(power);
  FnElt hf = FnElt::quotient(ctx, h, e);
  K2Element& el = out.element;
  el.terms.push_back({gt, hf, m});
  std::vector<CurvePoint> support = places;
  for (size_t i = 0; i < tors.size(); ++i) {
    const CurvePoint& p = out.g_points[i].first;
    Rat ki = tame_symbol(c, {gt, hf, 1}, p);
    out.kappas.push_back(ki);
    el.terms.push_back({FnElt(tors[i]->fn.context(), ki), tors[i]->fn, -(m / tors[i]->order)});
    support.push_back(p);
  }
  for (const auto& [q, n] : out.h_points) support.push_back(q);
  el.declared_support = sorted_unique(support);
  return out;
}

}  // namespace k2forge
