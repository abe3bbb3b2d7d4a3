#include "k2forge/curves/curve.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

#include "k2forge/algebra/resultant.hpp"
#include "k2forge/error.hpp"

namespace k2forge {

CurvePoint CurvePoint::affine(const Rat& x, const Rat& y) {
  CurvePoint p;
  p.kind_ = Kind::Affine;
  p.a_ = x;
  p.b_ = y;
  return p;
}

CurvePoint CurvePoint::at_infinity(const Rat& X, const Rat& Y, int branch_index) {
  if (X.is_zero() && Y.is_zero()) throw PreconditionError("(0:0:0) is not a projective point");
  CurvePoint p;
  p.kind_ = Kind::AtInfinity;
  if (!Y.is_zero()) {
    p.a_ = X / Y;
    p.b_ = Rat(1);
  } else {
    p.a_ = Rat(1);
    p.b_ = Rat(0);
  }
  p.branch_ = branch_index;
  return p;
}

std::array<Rat, 3> CurvePoint::projective() const {
  if (is_affine()) return {a_, b_, Rat(1)};
  return {a_, b_, Rat(0)};
}

bool CurvePoint::same_place(const CurvePoint& o) const {
  return kind_ == o.kind_ && a_ == o.a_ && b_ == o.b_;
}

std::string CurvePoint::str() const {
  std::ostringstream os;
  if (is_affine()) {
    os << "(" << a_ << ", " << b_ << ")";
  } else {
    os << "(" << a_ << ":" << b_ << ":0)";
    if (branch_ > 0) os << "#" << branch_;
  }
  return os.str();
}

CurvePoint CurvePoint::parse(const std::string& text) {
  static const std::regex affine_re(R"(\s*\(\s*([^,():]+?)\s*,\s*([^,():]+?)\s*\)\s*)");
  static const std::regex inf_re(R"(\s*\(\s*([^,():]+?)\s*:\s*([^,():]+?)\s*:\s*0\s*\)\s*(?:#(\d+))?\s*)");
  std::smatch m;
  if (std::regex_match(text, m, affine_re)) return affine(Rat::parse(m[1].str()), Rat::parse(m[2].str()));
  if (std::regex_match(text, m, inf_re))
    return at_infinity(Rat::parse(m[1].str()), Rat::parse(m[2].str()), m[3].matched ? std::stoi(m[3].str()) : 0);
  throw PreconditionError("malformed point '" + text + "'");
}

PlaneCurve::PlaneCurve(BiPoly affine) : f_(std::move(affine)), d_(f_.total_degree()) {
  if (d_ < 1) throw PreconditionError("a plane curve needs a nonconstant equation");
}

std::map<std::array<int, 3>, Rat> PlaneCurve::homogeneous() const {
  std::map<std::array<int, 3>, Rat> out;
  for (const auto& [m, c] : f_.terms()) out[{m.i, m.j, d_ - m.i - m.j}] = c;
  return out;
}

BiPoly PlaneCurve::chart(Chart c) const {
  if (c == Chart::Z) return f_;
  BiPoly out;
  for (const auto& [m, coef] : f_.terms()) {
    int k = d_ - m.i - m.j;
    if (c == Chart::Y) out += BiPoly::monomial(coef, m.i, k);
    else out += BiPoly::monomial(coef, m.j, k);
  }
  return out;
}

std::string PlaneCurve::homogeneous_str() const {
  std::ostringstream os;
  std::vector<std::pair<std::array<int, 3>, Rat>> terms;
  for (const auto& kv : homogeneous()) terms.push_back(kv);
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first[2] != b.first[2]) return a.first[2] < b.first[2];
    return a.first[1] > b.first[1];
  });
  bool first = true;
  for (const auto& [e, c] : terms) {
    Rat a = c.abs();
    os << (first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + "));
    first = false;
    bool wrote = false;
    if (!a.is_one()) {
      if (a.is_integer()) os << a;
      else os << "(" << a << ")";
      wrote = true;
    }
    const char* names = "XYZ";
    for (int k = 0; k < 3; ++k) {
      if (e[static_cast<size_t>(k)] == 0) continue;
      if (wrote) os << "*";
      os << names[k];
      if (e[static_cast<size_t>(k)] > 1) os << "^" << e[static_cast<size_t>(k)];
      wrote = true;
    }
  }
  return os.str();
}

bool PlaneCurve::is_squarefree() const {
  BiPoly x = BiPoly::x();
  int tries = 2 * d_ * d_ + (d_ - 1) * (d_ - 2) + 2;
  for (int k = 1; k <= tries; ++k) {
    Rat kk(k);
    UniPoly section = f_.substitute(x, BiPoly(kk) * x + BiPoly(kk * kk + Rat(1))).restrict(Var::y, Rat(0));
    if (section.degree() != d_) continue;
    if (d_ == 1 || !discriminant(section).is_zero()) return true;
  }
  return false;
}

Line::Line(Rat u_, Rat v_, Rat w_) : u(std::move(u_)), v(std::move(v_)), w(std::move(w_)) {
  if (u.is_zero() && v.is_zero()) throw PreconditionError("degenerate line");
  Rat s = !v.is_zero() ? v : u;
  u /= s;
  v /= s;
  w /= s;
}

std::string Line::str() const {
  // Printed as an equation solved for y (or x when vertical).
  if (v.is_zero()) return "x = " + (-w).str();
  BiPoly rhs = BiPoly::monomial(-u, 1, 0) + BiPoly(-w);
  return "y = " + rhs.str();
}

BiPoly Conic::poly() const {
  BiPoly l = BiPoly::y() + BiPoly::monomial(d1, 1, 0) + BiPoly(d2);
  return l * l + BiPoly::monomial(d3, 1, 0) + BiPoly::monomial(d4, 2, 0);
}

bool is_on_curve(const PlaneCurve& c, const CurvePoint& p) {
  if (p.is_affine()) return c.poly().eval(p.x(), p.y()).is_zero();
  if (!p.y().is_zero()) return c.chart(Chart::Y).eval(p.x(), Rat(0)).is_zero();
  return c.chart(Chart::X).eval(Rat(0), Rat(0)).is_zero();
}

std::vector<CurvePoint> rational_points_at_infinity(const PlaneCurve& c) {
  std::vector<CurvePoint> out;
  // Points (u:1:0): roots of the top form at Y = 1.
  UniPoly top = c.chart(Chart::Y).restrict(Var::y, Rat(0));
  if (top.is_zero()) throw PreconditionError("curve contains the line at infinity");
  for (const auto& u : rational_roots(top)) out.push_back(CurvePoint::at_infinity(u, Rat(1)));
  if (c.chart(Chart::X).eval(Rat(0), Rat(0)).is_zero()) out.push_back(CurvePoint::at_infinity(Rat(1), Rat(0)));
  return out;
}

}  // namespace k2forge
