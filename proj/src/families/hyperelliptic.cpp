#include <algorithm>
#include <set>

#include "k2forge/algebra/linalg.hpp"
#include "k2forge/algebra/resultant.hpp"
#include "k2forge/error.hpp"
#include "k2forge/families/families.hpp"
#include "k2forge/families/torsion_solver.hpp"

namespace k2forge {

EpsilonVector::EpsilonVector(std::vector<int> entries) : e_(std::move(entries)) {
  for (int e : e_)
    if (e != 1 && e != -1) throw PreconditionError("epsilon entries must be +1 or -1");
  if (!e_.empty() && std::all_of(e_.begin(), e_.end(), [](int e) { return e == -1; }))
    throw PreconditionError("f1 would be zero: all epsilon entries are -1");
}

namespace {

struct Prescribed {
  Rat alpha, beta;
};

std::vector<Rat> to_rats(const std::vector<int>& v) { return {v.begin(), v.end()}; }

CurveRecord hyp_record(std::string family, int d, const UniPoly& f1, const std::vector<Prescribed>& pts) {
  BiPoly y = BiPoly::y();
  PlaneCurve c(y.pow(2) + BiPoly::from_uni(f1, Var::x) * y + BiPoly::x().pow(static_cast<unsigned>(d)));
  UniPoly t = f1 * f1 - Rat(4) * UniPoly::monomial(Rat(1), d);
  if (t.degree() < 1 || discriminant(t).is_zero())
    throw PreconditionError("discriminant vanishes: disc(f1^2 - 4x^" + std::to_string(d) + ") = 0");

  CurveRef ctx = make_curve(c);
  auto inf = ctx->places_at_infinity();
  if (inf.size() != 1)
    throw PreconditionError("the model has " + std::to_string(inf.size()) +
                            " places at infinity; the construction needs exactly one");

  CurveRecord rec;
  rec.family_id = std::move(family);
  rec.curve = c;
  rec.model = "y^2 + f1(x) y + x^d";
  rec.points.push_back({"inf", inf.front()});
  CurvePoint o = CurvePoint::affine(Rat(0), Rat(0));
  rec.points.push_back({"O", o});
  rec.overlays.push_back({"L_O", y});

  std::vector<CurvePoint> marked{o};
  for (size_t i = 0; i < pts.size(); ++i) {
    const auto& [alpha, beta] = pts[i];
    std::string name = "P" + std::to_string(i + 1);
    UniPoly section = c.poly().restrict(Var::x, alpha);
    if (!(section == UniPoly::linear_root(beta).pow(2)) || root_multiplicity(section, beta) != 2)
      throw VerificationError("tangency identity F(" + alpha.str() + ", y) = (y - " + beta.str() +
                              ")^2 fails at " + name);
    CurvePoint p = CurvePoint::affine(alpha, beta);
    if (p == o) throw PreconditionError(name + " coincides with O");
    rec.points.push_back({name, p});
    rec.overlays.push_back({"L_" + name, BiPoly::x() - BiPoly(alpha)});
    marked.push_back(p);
  }

  TorsionSolver solver(ctx, marked);
  solver.add(FnElt(ctx, y));
  for (size_t i = 0; i < pts.size(); ++i) solver.add(FnElt(ctx, BiPoly::x() - BiPoly(pts[i].alpha)));
  for (size_t i = 0; i < pts.size(); ++i) {
    std::string name = "P" + std::to_string(i + 1);
    rec.elements.push_back(
        certified(c, "{inf,O," + name + "}", solver.element(inf.front(), o, rec.point(name))));
  }

  rec.facts["f1"] = f1.str();
  rec.facts["disc(f1^2 - 4x^d)"] = discriminant(t).str();
  // Rescaling (x, y) -> (x, s y) with s clearing the denominators of f1.
  mpz_class s = 1;
  for (const auto& b : f1.coeffs()) s = lcm(s, b.denominator());
  Rat sr(s);
  rec.facts["integral_model"] =
      (y.pow(2) + BiPoly::from_uni(sr * f1, Var::x) * y + BiPoly(sr * sr) * BiPoly::x().pow(static_cast<unsigned>(d)))
          .str();
  rec.facts["integral_model_scale"] = sr.str();
  return rec;
}

void check_nonzero(const std::vector<Rat>& a) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].is_zero()) throw PreconditionError("a" + std::to_string(i + 1) + " must be nonzero");
}

void check_distinct(const std::vector<Rat>& nodes, const char* what) {
  for (size_t i = 0; i < nodes.size(); ++i)
    for (size_t j = i + 1; j < nodes.size(); ++j)
      if (nodes[i] == nodes[j])
        throw PreconditionError(std::string("repeated ") + what + ": a" + std::to_string(i + 1) + " and a" +
                                std::to_string(j + 1));
}

}  // namespace

CurveRecord gen_hyp_odd(int g, const std::vector<Rat>& a) {
  if (g < 1) throw PreconditionError("genus must be at least 1");
  if (a.size() != static_cast<size_t>(g + 1)) throw PreconditionError("need g+1 values a_i");
  check_nonzero(a);
  std::vector<Rat> nodes, values;
  for (const auto& ai : a) {
    nodes.push_back(ai * ai);
    values.push_back(Rat(-2) * ai.pow(2 * g + 1));
  }
  check_distinct(nodes, "a_i^2");
  UniPoly f1(vandermonde_solve(nodes, values));
  for (size_t i = 0; i < a.size(); ++i)
    if (!(f1.eval(nodes[i]) == values[i])) throw InternalError("interpolation failed");
  std::vector<Prescribed> pts;
  for (const auto& ai : a) pts.push_back({ai * ai, ai.pow(2 * g + 1)});
  CurveRecord rec = hyp_record("hyp-odd", 2 * g + 1, f1, pts);
  rec.params = {{"g", {Rat(g)}}, {"a", a}};
  rec.integrality_flags = integrality_flags(rec);
  return rec;
}

CurveRecord gen_hyp_even(int g, const std::vector<Rat>& a, const EpsilonVector& eps) {
  if (g < 1) throw PreconditionError("genus must be at least 1");
  if (a.size() != static_cast<size_t>(g + 1) || eps.size() != a.size())
    throw PreconditionError("need g+1 values a_i and g+1 signs");
  check_nonzero(a);
  check_distinct(a, "nodes");
  std::vector<Rat> w;
  for (size_t i = 0; i < a.size(); ++i) {
    Rat p = a[i].pow(g + 1);
    w.push_back(Rat(-2) * p - Rat(2 * eps[i]) * p);
  }
  UniPoly f1 = UniPoly(vandermonde_solve(a, w)) + UniPoly::monomial(Rat(2), g + 1);
  std::vector<Prescribed> pts;
  for (size_t i = 0; i < a.size(); ++i) {
    Rat beta = Rat(eps[i]) * a[i].pow(g + 1);
    if (!(f1.eval(a[i]) == Rat(-2) * beta)) throw InternalError("f1(a_i) differs from -2 eps_i a_i^(g+1)");
    pts.push_back({a[i], beta});
  }
  CurveRecord rec = hyp_record("hyp-even", 2 * g + 2, f1, pts);
  rec.params = {{"g", {Rat(g)}}, {"a", a}, {"eps", to_rats(eps.entries())}};
  rec.facts["universal_relation"] = "the classes of the elements {inf,O,P_i} satisfy a universal relation";
  rec.integrality_flags = integrality_flags(rec);
  return rec;
}

CurveRecord gen_hyp_partial(int g, int d, const std::vector<std::pair<Rat, int>>& constraints,
                            const std::vector<Rat>& free_params) {
  if (g < 1) throw PreconditionError("genus must be at least 1");
  if (d != 2 * g + 1 && d != 2 * g + 2)
    throw PreconditionError("degree must be 2g+1 or 2g+2, got d = " + std::to_string(d) + " for g = " +
                            std::to_string(g));
  bool odd = d == 2 * g + 1;
  size_t m = constraints.size();
  if (m > static_cast<size_t>(g + 1)) throw PreconditionError("at most g+1 constraints");
  std::vector<Rat> a;
  std::vector<int> eps;
  for (const auto& [ai, ei] : constraints) {
    if (ei != 1 && ei != -1) throw PreconditionError("epsilon entries must be +1 or -1");
    a.push_back(ai);
    eps.push_back(ei);
  }
  check_nonzero(a);
  if (m == static_cast<size_t>(g + 1)) {
    if (!free_params.empty()) throw PreconditionError("no free parameters when m = g+1");
    if (odd) {
      std::vector<Rat> s;
      for (size_t i = 0; i < m; ++i) s.push_back(Rat(eps[i]) * a[i]);
      return gen_hyp_odd(g, s);
    }
    return gen_hyp_even(g, a, EpsilonVector(eps));
  }
  if (free_params.size() != g + 1 - m)
    throw PreconditionError("need " + std::to_string(g + 1 - m) + " free parameters");

  std::vector<Rat> nodes;
  std::vector<Prescribed> pts;
  Matrix sys;
  for (size_t i = 0; i < m; ++i) {
    Rat node = odd ? a[i] * a[i] : a[i];
    Rat beta = Rat(eps[i]) * (odd ? a[i].pow(2 * g + 1) : a[i].pow(g + 1));
    Rat rhs = Rat(-2) * beta - (odd ? Rat(0) : Rat(2) * node.pow(g + 1));
    std::vector<Rat> row;
    for (int j = 0; j <= g; ++j) row.push_back(node.pow(j));
    row.push_back(rhs);
    sys.push_back(std::move(row));
    nodes.push_back(node);
    pts.push_back({node, beta});
  }
  check_distinct(nodes, odd ? "a_i^2" : "nodes");

  std::vector<Rat> b(g + 1);
  if (m == 0) {
    b = free_params;
  } else {
    Matrix coeffs = sys;
    for (auto& row : coeffs) row.pop_back();
    Matrix aug = sys;
    std::vector<int> piv = rref(aug);
    if (piv.size() != m || piv.back() == g + 1) throw PreconditionError("inconsistent or degenerate system");
    for (size_t r = 0; r < piv.size(); ++r) b[piv[r]] = aug[r][g + 1];
    auto ker = kernel(coeffs);
    if (ker.size() != free_params.size()) throw InternalError("kernel dimension mismatch");
    for (size_t k = 0; k < ker.size(); ++k)
      for (int j = 0; j <= g; ++j) b[j] += free_params[k] * ker[k][j];
  }
  UniPoly f1(b);
  if (!odd) f1 = f1 + UniPoly::monomial(Rat(2), g + 1);
  if (f1.is_zero()) throw PreconditionError("f1 would be zero");
  for (const auto& p : pts)
    if (!(f1.eval(p.alpha) == Rat(-2) * p.beta)) throw InternalError("constraint not satisfied");
  CurveRecord rec = hyp_record("hyp-partial", d, f1, pts);
  rec.params = {{"g", {Rat(g)}}, {"d", {Rat(d)}}, {"a", a}, {"eps", to_rats(eps)}, {"free", free_params}};
  rec.integrality_flags = integrality_flags(rec);
  return rec;
}

}  // namespace k2forge
