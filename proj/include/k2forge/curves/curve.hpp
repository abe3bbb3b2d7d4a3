#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "k2forge/algebra/bipoly.hpp"
#include "k2forge/algebra/rat.hpp"
#include "k2forge/algebra/unipoly.hpp"

namespace k2forge {

/// Affine chart of P^2 obtained by setting one coordinate to 1. The chart
/// variables are (x, y) = (X/Z, Y/Z), (X/Y, Z/Y) or (Y/X, Z/X).
enum class Chart { Z, Y, X };

/// Rational point of a plane curve: an affine point, or a point (X:Y:0) on
/// the line at infinity together with the index of a branch of the curve
/// through it.
class CurvePoint {
 public:
  enum class Kind { Affine, AtInfinity };

  static CurvePoint affine(const Rat& x, const Rat& y);
  /// Coordinates are normalized so that Y = 1 when Y != 0, else X = 1.
  static CurvePoint at_infinity(const Rat& X, const Rat& Y, int branch_index = 0);

  Kind kind() const { return kind_; }
  bool is_affine() const { return kind_ == Kind::Affine; }
  const Rat& x() const { return a_; }
  const Rat& y() const { return b_; }
  /// Projective coordinates; Z is 0 at infinity and 1 otherwise.
  std::array<Rat, 3> projective() const;
  int branch_index() const { return branch_; }
  /// Same projective point, ignoring the branch.
  bool same_place(const CurvePoint& o) const;

  /// "(x, y)" or "(X:Y:0)" with a "#k" suffix for branch k > 0.
  std::string str() const;
  static CurvePoint parse(const std::string& text);

  friend bool operator==(const CurvePoint& a, const CurvePoint& b) = default;
  friend auto operator<=>(const CurvePoint& a, const CurvePoint& b) {
    if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
    if (auto c = a.a_ <=> b.a_; c != 0) return c;
    if (auto c = a.b_ <=> b.b_; c != 0) return c;
    return a.branch_ <=> b.branch_;
  }

 private:
  Kind kind_ = Kind::Affine;
  Rat a_, b_;
  int branch_ = 0;
};

/// Projective plane curve given by an affine equation F(x, y) = 0 of total
/// degree d; the projective form is Z^d F(X/Z, Y/Z).
class PlaneCurve {
 public:
  PlaneCurve() = default;
  /// Throws PreconditionError for a constant polynomial. The squarefree
  /// check is performed on request (is_squarefree) since it costs a few
  /// discriminants.
  explicit PlaneCurve(BiPoly affine);

  const BiPoly& poly() const { return f_; }
  int degree() const { return d_; }

  /// Coefficients of X^i Y^j Z^k.
  std::map<std::array<int, 3>, Rat> homogeneous() const;
  /// Dehomogenization in the given chart.
  BiPoly chart(Chart c) const;
  /// Canonical text in X, Y, Z.
  std::string homogeneous_str() const;
  std::string str() const { return f_.str(); }

  /// No repeated factor: some line section y = kx + k^2 + 1 has full degree
  /// and nonzero discriminant.
  bool is_squarefree() const;

  friend bool operator==(const PlaneCurve& a, const PlaneCurve& b) { return a.f_ == b.f_; }

 private:
  BiPoly f_;
  int d_ = 0;
};

/// The line u x + v y + w = 0, normalized so that v = 1, or u = 1 if v = 0.
struct Line {
  Rat u, v, w;
  Line() = default;
  Line(Rat u_, Rat v_, Rat w_);
  static Line vertical(const Rat& x0) { return Line(Rat(1), Rat(0), -x0); }
  static Line through(const Rat& slope, const Rat& intercept) { return Line(-slope, Rat(1), -intercept); }
  BiPoly poly() const { return BiPoly::monomial(u, 1, 0) + BiPoly::monomial(v, 0, 1) + BiPoly(w); }
  PlaneCurve curve() const { return PlaneCurve(poly()); }
  std::string str() const;
  friend bool operator==(const Line&, const Line&) = default;
};

/// The conic (y + d1 x + d2)^2 + d3 x + d4 x^2 = 0; it is reducible exactly
/// when d3 = 0.
struct Conic {
  Rat d1, d2, d3, d4;
  BiPoly poly() const;
  PlaneCurve curve() const { return PlaneCurve(poly()); }
  bool reducible() const { return d3.is_zero(); }
};

/// Exact membership test in the chart of the point.
bool is_on_curve(const PlaneCurve& c, const CurvePoint& p);

/// Projective points of c on Z = 0 with rational coordinates.
std::vector<CurvePoint> rational_points_at_infinity(const PlaneCurve& c);

}  // namespace k2forge
